/*
 * Copyright 2026 The Trisym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end checks of the installed binary: flag handling, exit codes,
// file output. The heavier functional coverage lives in the unit suites.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const char* kSuiteConfig = R"({
  "model": {"m": 1, "metric": "identity", "lattice": "standard"},
  "cycles": [
    {"id": "line-01", "kind": "linear", "vectors": [[1,0,0,0],[0,1,0,0]]},
    {"id": "line-02", "kind": "linear", "vectors": [[1,0,0,0],[0,0,1,0]]},
    {"id": "line-03", "kind": "linear", "vectors": [[1,0,0,0],[0,0,0,1]]}
  ],
  "scan": {"grid_points": 6}
})";

struct Workspace {
  fs::path root;

  Workspace() {
    root = fs::temp_directory_path() /
           ("trisym-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(root);
  }
  ~Workspace() { fs::remove_all(root); }

  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path path = root / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
  }

  std::string read(const fs::path& path) const {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
};

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string cli() { return TRISYM_CLI_PATH; }

}  // namespace

TEST_CASE("verify/analyze/scan/genericity succeed on a valid config") {
  Workspace ws;
  const fs::path config = ws.write("suite.json", kSuiteConfig);
  const fs::path sink = ws.root / "out.txt";

  CHECK(run(cli() + " verify --config " + config.string() + " --out " +
            sink.string()) == 0);
  CHECK(ws.read(sink).find("result: PASS") != std::string::npos);

  CHECK(run(cli() + " analyze --config " + config.string() +
            " --cycle line-01 --out " + sink.string()) == 0);
  CHECK(ws.read(sink).find("verdict: ComplexOnlyAt [(1,0,0)]") !=
        std::string::npos);

  const fs::path csv = ws.root / "scan.csv";
  CHECK(run(cli() + " scan-sphere --config " + config.string() +
            " --cycle line-01 --grid 4 --out " + csv.string()) == 0);
  const std::string scan = ws.read(csv);
  CHECK(scan.rfind("index,a,b,c,V\n", 0) == 0);
  CHECK(std::count(scan.begin(), scan.end(), '\n') == 5);

  // Without --grid the config's grid_points applies.
  CHECK(run(cli() + " scan-sphere --config " + config.string() +
            " --cycle line-01 --out " + csv.string()) == 0);
  const std::string config_scan = ws.read(csv);
  CHECK(std::count(config_scan.begin(), config_scan.end(), '\n') == 7);

  CHECK(run(cli() + " genericity --config " + config.string() + " --out " +
            sink.string()) == 0);
  const std::string report = ws.read(sink);
  CHECK(report.find("witness line-01") != std::string::npos);
  CHECK(report.find("suite-relative") != std::string::npos);
}

TEST_CASE("configuration problems exit with code 2") {
  Workspace ws;
  const fs::path sink = ws.root / "out.txt";

  const fs::path duplicate = ws.write("dup.json", R"({
    "model": {"m": 1},
    "cycles": [
      {"id": "same", "kind": "linear", "vectors": [[1,0,0,0],[0,1,0,0]]},
      {"id": "same", "kind": "linear", "vectors": [[1,0,0,0],[0,0,1,0]]}
    ]
  })");
  CHECK(run(cli() + " verify --config " + duplicate.string() +
            " 2>/dev/null") == 2);

  const fs::path bad_rotation = ws.write("rot.json", R"({
    "model": {"m": 1, "rotation": [[2,0,0],[0,1,0],[0,0,1]]},
    "cycles": [
      {"id": "line", "kind": "linear", "vectors": [[1,0,0,0],[0,1,0,0]]}
    ]
  })");
  CHECK(run(cli() + " verify --config " + bad_rotation.string() +
            " 2>/dev/null") == 2);

  const fs::path config = ws.write("suite.json", kSuiteConfig);
  CHECK(run(cli() + " analyze --config " + config.string() +
            " --cycle ghost 2>/dev/null") == 2);
  CHECK(run(cli() + " scan-sphere --config " + config.string() +
            " --cycle line-01 --grid 1 2>/dev/null") == 2);
  CHECK(run(cli() + " verify --config " + (ws.root / "missing.json").string() +
            " 2>/dev/null") == 2);
  CHECK(run(cli() + " analyze --config " + config.string() +
            " 2>/dev/null") == 2);  // missing required --cycle
  CHECK(run(cli() + " 2>/dev/null") == 2);  // missing subcommand

  const fs::path not_json = ws.write("broken.json", "{ not json");
  CHECK(run(cli() + " verify --config " + not_json.string() +
            " 2>/dev/null") == 2);
}

TEST_CASE("byte-identical output across runs") {
  Workspace ws;
  const fs::path config = ws.write("suite.json", kSuiteConfig);
  const fs::path first = ws.root / "a.csv";
  const fs::path second = ws.root / "b.csv";
  REQUIRE(run(cli() + " scan-sphere --config " + config.string() +
              " --cycle line-02 --grid 64 --out " + first.string()) == 0);
  REQUIRE(run(cli() + " scan-sphere --config " + config.string() +
              " --cycle line-02 --grid 64 --out " + second.string()) == 0);
  CHECK(ws.read(first) == ws.read(second));

  const fs::path report_a = ws.root / "ra.txt";
  const fs::path report_b = ws.root / "rb.txt";
  REQUIRE(run(cli() + " genericity --config " + config.string() + " --out " +
              report_a.string()) == 0);
  REQUIRE(run(cli() + " genericity --config " + config.string() + " --out " +
              report_b.string()) == 0);
  CHECK(ws.read(report_a) == ws.read(report_b));
}
