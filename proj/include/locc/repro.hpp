#pragma once

// Reference ensembles and parameter sweeps.
//
//   E1 (three qubits, 3 members):  a|000> +/- b|111>,  c|001> + d|110>
//   E2 (three qubits, 6 members):  a|000> +/- b|111>,  a|001> +/- b|110>,  a|010> +/- b|101>
//   E3 (four qubits, 9 orthogonal members)
//
// with b = sqrt(1 - a^2), d = sqrt(1 - c^2) and equal probabilities.

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "locc/bounds.hpp"

namespace locc {

Ensemble build_e1(double a, double c);
Ensemble build_e2(double a);
Ensemble build_e3();

enum class SweepExample { E1, E2 };

SweepExample parse_sweep_example(const std::string& name);

struct SweepRow {
  double a = 0.0;
  std::optional<double> c;  // E1 only
  Bits bound_bits = 0.0;
  Bits chi_bits = 0.0;
};

// Uniform grid over [0, 1] (E1: full 2-D grid, a outer and c inner).
std::vector<SweepRow> sweep(SweepExample example, int grid_points);

// Header `a[,c],bound_bits,chi_bits`, 12 significant digits, LF endings.
void write_sweep_csv(std::ostream& out, SweepExample example, std::span<const SweepRow> rows);

// bound(a) - chi(a) for E2; negative where the ensemble is certified LOCC-indistinguishable.
double e2_gap(double a);

struct Crossing {
  double root = 0.0;
  double residual = 0.0;      // e2_gap(root)
  double residual_tol = 0.0;  // |secant slope of final bracket| * tolerance
};

struct Crossings {
  Crossing low;
  Crossing high;
};

// Bisection on e2_gap over [0.1, 0.5] and [0.9, 1.0] until brackets are narrower than tolerance.
Crossings find_e2_crossings(double tolerance = 1e-6);

}  // namespace locc
