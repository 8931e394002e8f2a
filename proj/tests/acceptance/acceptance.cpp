// One PASS/FAIL line per acceptance criterion; the sub-checks behind each
// line are listed underneath. Exit status is non-zero when any line fails.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "lorentz/cli.hpp"
#include "lorentz/suites.hpp"

namespace fs = std::filesystem;
using lorentz::Check;

namespace {

const std::map<int, std::string> kTitles = {
    {1, "fundamental matrix: hyperspherical sum = explicit 2x2 = Euler product, 100 points, 1e-12"},
    {2, "z_series = z_factorized, l <= 4, 5x5 grid, 1e-10"},
    {3, "rotation/boost group laws 1e-10 and rotation unitarity 1e-12, l <= 3"},
    {4, "commutator tables 1e-12: Waerden, helicity, GN"},
    {5, "CG orthogonality, coupled vectors 1e-12, dimensions exact, closed form constant"},
    {6, "Clifford exact anticommutators n <= 10, Schur signs m = 4..8, odd direct sum"},
    {7, "Gel'fand-Yaglom: AL+BL 1e-12, LY/LX random tables, gamma similarity 1e-8, blocks, classification"},
    {8, "radial: residual 1e-7, order >= 4, envelope exponent -0.5 +- 0.1 on [0.5, 60]"},
    {9, "every CLI command byte-reproducible across two runs"},
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Output of one CLI run: the stream plus every file left in `dir`.
std::string capture(const std::vector<std::string>& args, const fs::path& dir, int& code) {
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ostringstream out, err;
  code = lorentz::cli::run(args, out, err);
  std::string all = out.str() + "\n--stderr--\n" + err.str();
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) all += "\n--" + f.filename().string() + "--\n" + slurp(f);
  return all;
}

std::vector<Check> determinism_checks() {
  const fs::path dir = fs::temp_directory_path() / "lorentz_acceptance";
  const std::string d = dir.string();
  const std::vector<std::vector<std::string>> commands = {
      {"zfun", "--l", "2", "--grid", "0:3.14:9", "--tau", "0.7", "--phi", "0.3", "--eps", "-0.2"},
      {"zfun", "--l", "3/2", "--m", "1/2", "--grid", "0:3:20", "--tau-grid", "-1:1:5", "--format", "csv", "--out",
       d + "/z.csv"},
      {"ops", "--set", "waerden", "--l", "1", "--ldot", "1/2"},
      {"ops", "--set", "helicity-tilde", "--l", "3/2", "--op", "Bt2"},
      {"ops", "--set", "gn", "--l0", "1", "--p", "2", "--out", d + "/ops.json"},
      {"verify", "--suite", "commutators"},
      {"verify", "--suite", "addition"},
      {"verify", "--suite", "grouplaw"},
      {"verify", "--suite", "cg"},
      {"verify", "--suite", "clifford"},
      {"verify", "--suite", "schur"},
      {"verify", "--suite", "gy"},
      {"verify", "--suite", "radial"},
      {"gy-build", "--chain", "dirac", "--out", d},
      {"radial", "--out", d + "/radial.csv"},
      {"radial", "--dotted", "--alt-signs", "--r1", "20", "--steps", "2000", "--format", "json", "--out",
       d + "/radial.json"},
      {"zfun", "--l", "7/3"},
  };
  std::vector<Check> checks;
  for (const auto& args : commands) {
    std::string name;
    for (const auto& a : args) name += (name.empty() ? "" : " ") + (a.rfind(d, 0) == 0 ? "<tmp>" + a.substr(d.size()) : a);
    int c1 = 0, c2 = 0;
    const std::string first = capture(args, dir, c1);
    const std::string second = capture(args, dir, c2);
    const bool same = first == second && c1 == c2;
    checks.push_back({name, same, same ? 0.0 : 1.0, 0.0, "exit " + std::to_string(c1), 9, false});
  }
  fs::remove_all(dir);
  return checks;
}

}  // namespace

int main() {
  std::map<int, std::vector<Check>> by_criterion;
  for (const auto& suite : lorentz::suite_names()) {
    const lorentz::SuiteReport rep = lorentz::run_suite(suite);
    for (const auto& c : rep.checks)
      if (c.criterion > 0 && !c.informational) by_criterion[c.criterion].push_back(c);
  }
  by_criterion[9] = determinism_checks();

  bool all = true;
  for (const auto& [n, title] : kTitles) {
    const auto& checks = by_criterion[n];
    int passed = 0;
    for (const auto& c : checks) passed += c.passed;
    const bool ok = !checks.empty() && passed == static_cast<int>(checks.size());
    all = all && ok;
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << title << "  (" << passed << "/"
              << checks.size() << " checks)\n";
    for (const auto& c : checks) {
      std::cout << "    " << (c.passed ? "  " : "x ") << c.name << ": " << std::setprecision(3) << c.value
                << " vs " << c.tolerance;
      if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
      std::cout << "\n";
    }
  }
  return all ? 0 : 1;
}
