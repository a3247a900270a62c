// Runs the full suite and prints one line per acceptance criterion.
// Usage: acceptance <path-to-ybe_lab> [workdir]

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ybe/suite.hpp"

namespace fs = std::filesystem;

namespace {

struct Tally {
  int passed = 0;
  int total = 0;
  std::string first_failure;
};

std::string slurp(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::map<std::string, std::string> tree(fs::path const& root) {
  std::map<std::string, std::string> files;
  if (!fs::exists(root)) return files;
  for (auto const& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) files[fs::relative(e.path(), root).generic_string()] = slurp(e.path());
  }
  return files;
}

int run(std::string const& cmd) { return std::system(cmd.c_str()); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <ybe_lab> [workdir]\n";
    return 2;
  }
  std::string lab = argv[1];
  fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "ybe_acceptance";

  const char* names[] = {"",
                         "axiom suites",
                         "round trips",
                         "lemma battery",
                         "solution properties",
                         "brace solutions",
                         "exact counts",
                         "semibrace structure",
                         "determinism"};

  auto report = ybe::run_suite({.full = true, .seed = 7, .out = std::nullopt, .live = nullptr});
  std::map<int, Tally> by;
  for (auto const& s : report.steps) {
    if (s.criterion < 1 || s.criterion > 7) continue;
    auto& t = by[s.criterion];
    ++t.total;
    if (s.passed) {
      ++t.passed;
    } else if (t.first_failure.empty()) {
      t.first_failure = s.name + (s.witness.empty() ? "" : " " + s.witness);
    }
  }

  bool all = true;
  for (int c = 1; c <= 7; ++c) {
    auto const& t = by[c];
    bool ok = t.total > 0 && t.passed == t.total;
    all = all && ok;
    std::cout << "CRITERION " << c << ' ' << (ok ? "PASS" : "FAIL") << ' ' << names[c] << " ("
              << t.passed << '/' << t.total << " steps)";
    if (!t.first_failure.empty()) std::cout << " first failure: " << t.first_failure;
    std::cout << '\n';
  }

  fs::remove_all(work);
  fs::create_directories(work);
  fs::path a = work / "a", b = work / "b";
  int ra = run("\"" + lab + "\" suite full --seed 7 --out \"" + a.string() + "\" > \"" +
               (work / "a.log").string() + "\" 2>&1");
  int rb = run("\"" + lab + "\" suite full --seed 7 --out \"" + b.string() + "\" > \"" +
               (work / "b.log").string() + "\" 2>&1");
  auto ta = tree(a), tb = tree(b);
  bool det = ra == 0 && rb == 0 && !ta.empty() && ta == tb && ta.count("report.txt");
  all = all && det;
  std::cout << "CRITERION 8 " << (det ? "PASS" : "FAIL") << ' ' << names[8] << " (" << ta.size()
            << " files compared, exit codes " << ra << ' ' << rb << ")\n";

  auto t0 = std::chrono::steady_clock::now();
  auto quick = ybe::run_suite({.full = false, .seed = 7, .out = std::nullopt, .live = nullptr});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool quick_ok = quick.passed() && secs < 30.0;
  all = all && quick_ok;
  std::cout << "CHECK quick-suite " << (quick_ok ? "PASS" : "FAIL") << " (" << secs << " s)\n";

  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return all ? 0 : 1;
}
