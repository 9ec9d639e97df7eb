// Golden CLI runs. golden/<name>.args holds the expected exit status on its
// first line and then one argument per line; golden/<name>.out is the
// expected stdout. Arguments starting with "data/" resolve to the sample
// documents. Set NIELSEN_UPDATE_GOLDEN=1 to rewrite the .out files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nielsen/cli.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("golden command lines") {
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(NIELSEN_GOLDEN_DIR))
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());
  REQUIRE(!cases.empty());
  const bool update = std::getenv("NIELSEN_UPDATE_GOLDEN") != nullptr;

  for (const fs::path& args_file : cases) {
    CAPTURE(args_file.stem().string());
    std::ifstream in(args_file);
    std::string line;
    std::getline(in, line);
    const int expected_code = std::stoi(line);
    std::vector<std::string> args;
    while (std::getline(in, line)) {
      if (line.rfind("data/", 0) == 0) line = std::string(NIELSEN_DATA_DIR) + line.substr(4);
      args.push_back(line);
    }

    std::ostringstream out, err;
    const int code = nielsen::run(args, out, err);
    CHECK(code == expected_code);
    fs::path out_file = args_file;
    out_file.replace_extension(".out");
    if (update) {
      std::ofstream(out_file, std::ios::binary) << out.str();
      continue;
    }
    REQUIRE(fs::exists(out_file));
    CHECK(out.str() == slurp(out_file));
  }
}
