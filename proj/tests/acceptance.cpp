// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "locc/repro.hpp"
#include "test_support.hpp"

using namespace locc;
using locc::testing::Rng;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << detail << std::endl;
}

void guarded(int id, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double e2_closed_form(double a) {
  const double a2 = a * a;
  return -(2.0 / 3.0) * (1 + a2) * std::log2((1 + a2) / 3) - (2.0 / 3.0) * (2 - a2) * std::log2((2 - a2) / 3);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + LOCC_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<double>> parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

void criterion1() {
  const auto t0 = Clock::now();
  const BoundReport r = locc_bound(build_e3());
  const double dt = seconds_since(t0);
  const bool ok = std::abs(r.bound_bits - 3.0) <= 1e-9 && std::abs(r.chi_bits - std::log2(9.0)) <= 1e-9 &&
                  r.verdict == Verdict::ProvablyIndistinguishable && dt < 1.0;
  report(1, "E3 reproduction", ok,
         "bound=" + fmt12(r.bound_bits) + " chi=" + fmt12(r.chi_bits) + " verdict=" + to_string(r.verdict) +
             " time=" + fmt(dt) + "s");
}

void criterion2() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double a = i / 1000.0;
    worst = std::max(worst, std::abs(locc_bound(build_e2(a)).bound_bits - e2_closed_form(a)));
  }
  const double dt = seconds_since(t0);
  report(2, "E2 closed form on 1001 points", worst < 1e-9 && dt < 10.0,
         "max |diff|=" + fmt(worst) + " time=" + fmt(dt) + "s");
}

void criterion3() {
  const Crossings c = find_e2_crossings();
  const bool ok = std::abs(c.low.root - 0.222) <= 0.005 && std::abs(c.high.root - 0.975) <= 0.005;
  report(3, "E2 thresholds", ok, "a_low=" + fmt12(c.low.root) + " a_high=" + fmt12(c.high.root));
}

void criterion4() {
  Rng rng(locc::testing::suite_seed(1004));
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const SystemLayout layout({rng.uniform_int(2, 4), rng.uniform_int(2, 4)});
    const Ensemble e = locc::testing::random_ensemble(layout, static_cast<std::size_t>(rng.uniform_int(1, 5)), rng);
    worst = std::max(worst, std::abs(bipartite_bound(e) - locc_bound(e).bound_bits));
  }
  report(4, "Bipartite collapse on 200 ensembles", worst <= 1e-12, "max |diff|=" + fmt(worst));
}

void criterion5() {
  Rng rng(locc::testing::suite_seed(1005));
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const SystemLayout layout({rng.uniform_int(2, 6)});
    const Ensemble e = locc::testing::random_ensemble(layout, static_cast<std::size_t>(rng.uniform_int(1, 5)), rng);
    worst = std::max(worst, std::abs(locc_bound(e).bound_bits - holevo_chi(e)));
  }
  report(5, "Single-party collapse on 200 ensembles", worst <= 1e-12, "max |diff|=" + fmt(worst));
}

void criterion6() {
  Rng rng(locc::testing::suite_seed(1006));
  int violations = 0;
  double worst = 1.0;
  const int n = 1000;
  for (int trial = 0; trial < n; ++trial) {
    const SystemLayout layout = locc::testing::random_layout(2, 3, 2, 3, rng);
    const Ensemble e = locc::testing::random_ensemble(layout, static_cast<std::size_t>(rng.uniform_int(2, 4)), rng);
    const Lemma1Report r = lemma1_check(e, locc::testing::random_local_measurement(layout, rng));
    worst = std::min(worst, r.slack);
    if (r.slack < -1e-9) ++violations;
  }
  report(6, "Single-step information inequality on 1000 instances", violations == 0,
         std::to_string(violations) + " violations, min slack=" + fmt(worst));
}

void criterion7() {
  const auto t0 = Clock::now();
  Rng rng(locc::testing::suite_seed(1007));
  int violations = 0;
  double worst = -1.0;
  for (int trial = 0; trial < 200; ++trial) {
    const SystemLayout layout = locc::testing::random_layout(2, 3, 2, 3, rng);
    const Ensemble e = locc::testing::random_ensemble(layout, static_cast<std::size_t>(rng.uniform_int(2, 4)), rng);
    const ProtocolTree tree = locc::testing::random_protocol(layout, rng.uniform_int(1, 4), rng);
    const double margin = run_protocol(e, tree).extracted_info - locc_bound(e).bound_bits;
    worst = std::max(worst, margin);
    if (margin > 1e-9) ++violations;
  }
  const double dt = seconds_since(t0);
  report(7, "Protocols stay under the bound on 200 instances", violations == 0 && dt < 60.0,
         std::to_string(violations) + " violations, max(info - bound)=" + fmt(worst) + " time=" + fmt(dt) + "s");
}

void criterion8() {
  const BoundReport r = locc_bound(locc::testing::bell_ensemble());
  const bool ok = std::abs(r.bound_bits - 1.0) <= 1e-9 && std::abs(r.chi_bits - 2.0) <= 1e-9 &&
                  r.bound_bits < r.chi_bits;
  report(8, "Bell ensemble certificate", ok, "bound=" + fmt12(r.bound_bits) + " chi=" + fmt12(r.chi_bits));
}

void criterion9() {
  std::vector<Ensemble> fixtures;
  for (double a : {0.0, 1.0})
    for (double c : {0.0, 1.0}) fixtures.push_back(build_e1(a, c));
  for (int i = 0; i <= 1000; ++i) fixtures.push_back(build_e2(i / 1000.0));
  fixtures.push_back(build_e3());
  for (int n = 2; n <= 5; ++n) fixtures.push_back(uniform_ensemble({locc::testing::ghz(n)}));

  int violations = 0;
  double worst = -1e9;
  for (const Ensemble& e : fixtures) {
    const ComplementarityReport r = complementarity_check(e);
    worst = std::max(worst, r.lhs - r.capacity_D);
    if (r.lhs > r.capacity_D + 1e-9) ++violations;
  }
  report(9, "Complementarity on pure fixtures", violations == 0,
         std::to_string(fixtures.size()) + " fixtures, " + std::to_string(violations) +
             " violations, max(lhs - D)=" + fmt(worst));
}

void criterion10() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto e1a = dir / "locc_acceptance_e1_a.csv", e1b = dir / "locc_acceptance_e1_b.csv";
  const auto e2a = dir / "locc_acceptance_e2_a.csv", e2b = dir / "locc_acceptance_e2_b.csv";
  bool ok = run_cli("sweep e1 --grid 101 --out \"" + e1a.string() + "\"") == 0 &&
            run_cli("sweep e1 --grid 101 --out \"" + e1b.string() + "\"") == 0 &&
            run_cli("sweep e2 --grid 1001 --out \"" + e2a.string() + "\"") == 0 &&
            run_cli("sweep e2 --grid 1001 --out \"" + e2b.string() + "\"") == 0;
  std::string detail = "cli failed";
  if (ok) {
    const std::string e1 = slurp(e1a), e2 = slurp(e2a);
    const bool deterministic = e1 == slurp(e1b) && e2 == slurp(e2b);
    const auto rows1 = parse_csv(e1);
    const auto rows2 = parse_csv(e2);

    // bound < chi must hold on exactly one interior interval
    int changes = 0;
    bool first_below = false, last_below = false;
    for (std::size_t i = 0; i < rows2.size(); ++i) {
      const bool below = rows2[i][1] < rows2[i][2];
      if (i == 0) first_below = below;
      if (i + 1 == rows2.size()) last_below = below;
      if (i > 0 && below != (rows2[i - 1][1] < rows2[i - 1][2])) ++changes;
    }
    ok = deterministic && rows1.size() == 101 * 101 && rows2.size() == 1001 && changes == 2 && !first_below &&
         !last_below;
    detail = std::string(deterministic ? "deterministic" : "NOT deterministic") + ", e1 rows=" +
             std::to_string(rows1.size()) + ", e2 rows=" + std::to_string(rows2.size()) +
             ", e2 sign changes=" + std::to_string(changes);
  }
  for (const auto& p : {e1a, e1b, e2a, e2b}) std::filesystem::remove(p);
  report(10, "Sweep regeneration", ok, detail);
}

void criterion11() {
  Rng rng(locc::testing::suite_seed(1011));
  double worst_recon = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int d = rng.uniform_int(2, 16);
    const ComplexMatrix m = locc::testing::random_hermitian(d, rng);
    const HermitianEigen<double> eig = hermitian_eigen(m);
    const ComplexMatrix back = eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    worst_recon = std::max(worst_recon, (back - m).norm());
  }

  double worst_trace = 0.0, worst_linear = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const SystemLayout layout = locc::testing::random_layout(2, 4, 2, 3, rng);
    const Index n = layout.total_dim();
    const ComplexMatrix x = locc::testing::random_gaussian(n, n, rng);
    const ComplexMatrix y = locc::testing::random_gaussian(n, n, rng);
    const Complex alpha = rng.complex_normal(), beta = rng.complex_normal();
    std::vector<int> keep;
    for (int p = 1; p <= layout.parties(); ++p)
      if (rng.uniform() < 0.5) keep.push_back(p);
    if (keep.empty()) keep.push_back(1);
    const ComplexMatrix tx = partial_trace(x, layout, keep);
    worst_trace = std::max(worst_trace, std::abs(tx.trace() - x.trace()));
    const ComplexMatrix combo = partial_trace(ComplexMatrix(alpha * x + beta * y), layout, keep);
    worst_linear = std::max(worst_linear, (combo - alpha * tx - beta * partial_trace(y, layout, keep)).cwiseAbs().maxCoeff());
  }
  const bool ok = worst_recon <= 1e-9 && worst_trace <= 1e-12 && worst_linear <= 1e-12;
  report(11, "Numerical core", ok,
         "max reconstruction error=" + fmt(worst_recon) + " (500 matrices), max trace error=" + fmt(worst_trace) +
             ", max linearity error=" + fmt(worst_linear));
}

}  // namespace

int main() {
  guarded(1, "E3 reproduction", criterion1);
  guarded(2, "E2 closed form on 1001 points", criterion2);
  guarded(3, "E2 thresholds", criterion3);
  guarded(4, "Bipartite collapse on 200 ensembles", criterion4);
  guarded(5, "Single-party collapse on 200 ensembles", criterion5);
  guarded(6, "Single-step information inequality on 1000 instances", criterion6);
  guarded(7, "Protocols stay under the bound on 200 instances", criterion7);
  guarded(8, "Bell ensemble certificate", criterion8);
  guarded(9, "Complementarity on pure fixtures", criterion9);
  guarded(10, "Sweep regeneration", criterion10);
  guarded(11, "Numerical core", criterion11);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
