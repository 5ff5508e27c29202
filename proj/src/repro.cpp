#include "locc/repro.hpp"

#include <cmath>

#include "locc/report.hpp"

namespace locc {

namespace {

const SystemLayout kThreeQubits({2, 2, 2});
const SystemLayout kFourQubits({2, 2, 2, 2});

void check_unit_interval(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0)
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
}

double complement(double v) { return std::sqrt(std::max(0.0, 1.0 - v * v)); }

// Basis vector for a bit string such as "0110" (party 1 leftmost).
ComplexVector ket(const char* bits, const SystemLayout& layout) {
  ComplexVector v = ComplexVector::Zero(layout.total_dim());
  v(std::stol(bits, nullptr, 2)) = 1.0;
  return v;
}

QuantumState superpose(const SystemLayout& layout, double a, const char* first, double b,
                       const char* second) {
  return QuantumState::pure(layout, a * ket(first, layout) + b * ket(second, layout));
}

Crossing bisect(double lo, double hi, double tolerance) {
  double f_lo = e2_gap(lo);
  double f_hi = e2_gap(hi);
  if (!(f_lo * f_hi < 0.0))
    throw RootFindingError("no sign change of the E2 gap on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  for (int iter = 0; iter < 200 && hi - lo > tolerance; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = e2_gap(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
      break;
    }
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  Crossing out;
  out.root = 0.5 * (lo + hi);
  out.residual = e2_gap(out.root);
  const double slope = hi > lo ? std::abs(f_hi - f_lo) / (hi - lo) : 0.0;
  out.residual_tol = slope * tolerance;
  return out;
}

}  // namespace

Ensemble build_e1(double a, double c) {
  check_unit_interval(a, "a");
  check_unit_interval(c, "c");
  const double b = complement(a);
  const double d = complement(c);
  return uniform_ensemble({superpose(kThreeQubits, a, "000", b, "111"),
                           superpose(kThreeQubits, a, "000", -b, "111"),
                           superpose(kThreeQubits, c, "001", d, "110")});
}

Ensemble build_e2(double a) {
  check_unit_interval(a, "a");
  const double b = complement(a);
  return uniform_ensemble({superpose(kThreeQubits, a, "000", b, "111"),
                           superpose(kThreeQubits, a, "000", -b, "111"),
                           superpose(kThreeQubits, a, "001", b, "110"),
                           superpose(kThreeQubits, a, "001", -b, "110"),
                           superpose(kThreeQubits, a, "010", b, "101"),
                           superpose(kThreeQubits, a, "010", -b, "101")});
}

Ensemble build_e3() {
  struct Row {
    const char* kets[4];
    int signs[4];
  };
  static constexpr Row rows[9] = {
      {{"0000", "0011", "1100", "1111"}, {1, 1, 1, -1}},
      {{"0000", "0011", "1100", "1111"}, {1, -1, 1, 1}},
      {{"0001", "0010", "1101", "1110"}, {1, 1, 1, -1}},
      {{"0001", "0010", "1101", "1110"}, {1, -1, 1, 1}},
      {{"0101", "0110", "1001", "1010"}, {1, 1, 1, -1}},
      {{"0101", "0110", "1001", "1010"}, {1, -1, 1, 1}},
      {{"0111", "0100", "1011", "1000"}, {1, 1, 1, -1}},
      {{"0111", "0100", "1011", "1000"}, {1, -1, 1, 1}},
      {{"0000", "0011", "1100", "1111"}, {1, 1, -1, 1}},
  };
  std::vector<QuantumState> states;
  std::vector<ComplexVector> vectors;
  for (const auto& row : rows) {
    ComplexVector v = ComplexVector::Zero(kFourQubits.total_dim());
    for (int k = 0; k < 4; ++k) v += 0.5 * row.signs[k] * ket(row.kets[k], kFourQubits);
    vectors.push_back(v);
    states.push_back(QuantumState::pure(kFourQubits, std::move(v)));
  }
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (std::abs(vectors[i].dot(vectors[j])) >= 1e-12)
        throw ValidationError("E3 members " + std::to_string(i) + " and " + std::to_string(j) +
                              " are not orthogonal");
  return uniform_ensemble(std::move(states));
}

SweepExample parse_sweep_example(const std::string& name) {
  if (name == "e1" || name == "E1") return SweepExample::E1;
  if (name == "e2" || name == "E2") return SweepExample::E2;
  throw ValidationError("unknown sweep example \"" + name + "\" (expected e1 or e2)");
}

std::vector<SweepRow> sweep(SweepExample example, int grid_points) {
  if (grid_points < 2) throw ValidationError("grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(grid_points));
  for (int i = 0; i < grid_points; ++i)
    grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / static_cast<double>(grid_points - 1);

  std::vector<SweepRow> rows;
  auto push = [&rows](double a, std::optional<double> c, const Ensemble& e) {
    const BoundReport r = locc_bound(e);
    rows.push_back({a, c, r.bound_bits, r.chi_bits});
  };
  if (example == SweepExample::E2) {
    for (double a : grid) push(a, std::nullopt, build_e2(a));
  } else {
    for (double a : grid)
      for (double c : grid) push(a, c, build_e1(a, c));
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, SweepExample example, std::span<const SweepRow> rows) {
  out << (example == SweepExample::E1 ? "a,c,bound_bits,chi_bits\n" : "a,bound_bits,chi_bits\n");
  for (const auto& row : rows) {
    out << format_sig12(row.a) << ',';
    if (example == SweepExample::E1) out << format_sig12(row.c.value_or(0.0)) << ',';
    out << format_sig12(row.bound_bits) << ',' << format_sig12(row.chi_bits) << '\n';
  }
}

double e2_gap(double a) {
  const BoundReport r = locc_bound(build_e2(a));
  return r.bound_bits - r.chi_bits;
}

Crossings find_e2_crossings(double tolerance) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  return {bisect(0.1, 0.5, tolerance), bisect(0.9, 1.0, tolerance)};
}

}  // namespace locc
