#pragma once

// Dense complex linear algebra for small multipartite systems: Kronecker
// products, partial traces over arbitrary party subsets, operator embedding
// and a cyclic Jacobi eigensolver for Hermitian matrices.
//
// Basis ordering is big-endian: party 1 is the most significant digit of a
// basis index, so |001> on three qubits is index 1 and party 3 is the last
// tensor factor. Party indices are 1-based throughout the public API.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "locc/errors.hpp"

namespace locc {

template <typename T>
using CMatrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using CVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using Eigen::Index;

inline constexpr Index kMaxTotalDim = 4096;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenConvergenceTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

// Ordered subsystem dimensions d_1..d_N of a tensor-product space.
class SystemLayout {
 public:
  explicit SystemLayout(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw LayoutError("layout must have at least one party");
    total_ = 1;
    for (int d : dims_) {
      if (d < 2) throw LayoutError("party dimension must be >= 2, got " + std::to_string(d));
      total_ *= d;
      if (total_ > kMaxTotalDim)
        throw SizeError("total dimension exceeds " + std::to_string(kMaxTotalDim));
    }
  }

  int parties() const { return static_cast<int>(dims_.size()); }
  Index total_dim() const { return total_; }
  const std::vector<int>& dims() const { return dims_; }

  int dim(int party) const {
    check_party(party);
    return dims_[static_cast<std::size_t>(party - 1)];
  }

  void check_party(int party) const {
    if (party < 1 || party > parties())
      throw LayoutError("party index " + std::to_string(party) + " out of range 1.." +
                        std::to_string(parties()));
  }

  // Sorted, range-checked copy of a party set; duplicates are rejected.
  std::vector<int> normalize(std::span<const int> parties, bool allow_empty = false) const {
    if (parties.empty() && !allow_empty) throw LayoutError("party set must be nonempty");
    std::vector<int> out(parties.begin(), parties.end());
    for (int p : out) check_party(p);
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
      throw LayoutError("party set contains duplicates");
    return out;
  }

  Index dim_of(std::span<const int> parties) const {
    Index d = 1;
    for (int p : normalize(parties)) d *= dim(p);
    return d;
  }

  bool operator==(const SystemLayout&) const = default;

 private:
  std::vector<int> dims_;
  Index total_ = 1;
};

namespace detail {

// Splits the full space into (kept parties) x (remaining parties). full[k * rest + r]
// is the full-space index whose kept digits spell k and remaining digits spell r,
// both big-endian in original party order.
struct Bipartition {
  Index keep_dim = 1;
  Index rest_dim = 1;
  std::vector<Index> full;

  Index at(Index k, Index r) const { return full[static_cast<std::size_t>(k * rest_dim + r)]; }
};

inline Bipartition bipartition(const SystemLayout& layout, std::span<const int> keep,
                               bool allow_empty = false) {
  const std::vector<int> kept = layout.normalize(keep, allow_empty);
  std::vector<bool> is_kept(static_cast<std::size_t>(layout.parties()), false);
  for (int p : kept) is_kept[static_cast<std::size_t>(p - 1)] = true;

  Bipartition bp;
  for (int p = 1; p <= layout.parties(); ++p)
    (is_kept[static_cast<std::size_t>(p - 1)] ? bp.keep_dim : bp.rest_dim) *= layout.dim(p);
  bp.full.resize(static_cast<std::size_t>(layout.total_dim()));

  const auto& dims = layout.dims();
  std::vector<int> digits(dims.size(), 0);
  for (Index f = 0; f < layout.total_dim(); ++f) {
    Index k = 0;
    Index r = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (is_kept[i]) k = k * dims[i] + digits[i];
      else r = r * dims[i] + digits[i];
    }
    bp.full[static_cast<std::size_t>(k * bp.rest_dim + r)] = f;
    // big-endian odometer increment
    for (std::size_t i = dims.size(); i-- > 0;) {
      if (++digits[i] < dims[i]) break;
      digits[i] = 0;
    }
  }
  return bp;
}

}  // namespace detail

template <typename DA, typename DB>
Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b, Index max_dim = kMaxTotalDim) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>,
                "kron operands must share a scalar type");
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (rows > max_dim || cols > max_dim)
    throw SizeError("kron result " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " exceeds maximum dimension " + std::to_string(max_dim));
  Eigen::Matrix<typename DA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Derived>
void check_layout_square(const Eigen::MatrixBase<Derived>& m, const SystemLayout& layout) {
  if (m.rows() != m.cols())
    throw ShapeError("matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                     ", expected square");
  if (m.rows() != layout.total_dim())
    throw ShapeError("matrix dimension " + std::to_string(m.rows()) +
                     " does not match layout total dimension " +
                     std::to_string(layout.total_dim()));
}

// Reduction of m onto the kept parties, returned in their original order.
// An empty keep set traces out everything and yields the 1x1 trace.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace(
    const Eigen::MatrixBase<Derived>& m, const SystemLayout& layout, std::span<const int> keep) {
  check_layout_square(m, layout);
  const detail::Bipartition bp = detail::bipartition(layout, keep, true);
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(bp.keep_dim, bp.keep_dim);
  for (Index i = 0; i < bp.keep_dim; ++i) {
    for (Index j = 0; j < bp.keep_dim; ++j) {
      Scalar acc(0);
      for (Index r = 0; r < bp.rest_dim; ++r) acc += m(bp.at(i, r), bp.at(j, r));
      out(i, j) = acc;
    }
  }
  return out;
}

// Reduction of |psi><psi| onto the kept parties without forming the full projector.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> partial_trace_pure(
    const Eigen::MatrixBase<Derived>& psi, const SystemLayout& layout, std::span<const int> keep) {
  if (psi.cols() != 1 || psi.rows() != layout.total_dim())
    throw ShapeError("amplitude vector length " + std::to_string(psi.size()) +
                     " does not match layout total dimension " +
                     std::to_string(layout.total_dim()));
  const detail::Bipartition bp = detail::bipartition(layout, keep, true);
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> folded(bp.keep_dim,
                                                                                 bp.rest_dim);
  for (Index k = 0; k < bp.keep_dim; ++k)
    for (Index r = 0; r < bp.rest_dim; ++r) folded(k, r) = psi(bp.at(k, r));
  return folded * folded.adjoint();
}

// Lifts an operator acting on `parties` (tensor order = ascending party index)
// to the full space, acting as identity on every other party.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> embed_operator(
    const Eigen::MatrixBase<Derived>& op, const SystemLayout& layout, std::span<const int> parties) {
  const detail::Bipartition bp = detail::bipartition(layout, parties);
  if (op.rows() != bp.keep_dim || op.cols() != bp.keep_dim)
    throw ShapeError("operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                     ", expected " + std::to_string(bp.keep_dim) + "x" +
                     std::to_string(bp.keep_dim));
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(layout.total_dim(),
                                                                   layout.total_dim());
  for (Index r = 0; r < bp.rest_dim; ++r)
    for (Index i = 0; i < bp.keep_dim; ++i)
      for (Index j = 0; j < bp.keep_dim; ++j) out(bp.at(i, r), bp.at(j, r)) = op(i, j);
  return out;
}

// max |m(i,j) - conj(m(j,i))|
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermiticity_error(
    const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw ShapeError("hermiticity check needs a square matrix");
  if (m.size() == 0) return 0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename T>
struct HermitianEigen {
  Eigen::Matrix<T, Eigen::Dynamic, 1> values;  // ascending
  CMatrix<T> vectors;                          // column k belongs to values(k)
  int sweeps = 0;
};

// Cyclic complex Jacobi. Each (p,q) rotation first removes the phase of
// m(p,q) and then applies the real symmetric Jacobi rotation.
template <typename Derived>
HermitianEigen<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_eigen(
    const Eigen::MatrixBase<Derived>& m,
    typename Eigen::NumTraits<typename Derived::Scalar>::Real tol = kEigenConvergenceTol,
    int max_sweeps = kMaxJacobiSweeps) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Scalar = std::complex<Real>;
  if (m.rows() != m.cols()) throw ShapeError("eigensolver needs a square matrix");
  if (m.rows() == 0) throw ShapeError("eigensolver needs a nonempty matrix");
  if (hermiticity_error(m) > Real(kHermitianTol))
    throw SymmetryError("matrix is not Hermitian within " + std::to_string(kHermitianTol));

  const Index n = m.rows();
  CMatrix<Real> a = m.template cast<Scalar>();
  for (Index i = 0; i < n; ++i) a(i, i) = Scalar(std::real(a(i, i)), 0);
  CMatrix<Real> v = CMatrix<Real>::Identity(n, n);

  // Absolute threshold for density-matrix scale inputs, relative above unit norm.
  const Real threshold = tol * std::max(Real(1), a.norm());
  auto off_norm = [&] {
    Real s = 0;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= threshold) {
    if (sweep == max_sweeps)
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(max_sweeps) + " sweeps");
    ++sweep;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const Real r = std::abs(a(p, q));
        if (r == Real(0)) continue;
        const Scalar phase_conj = std::conj(a(p, q)) / r;
        const Real theta = (std::real(a(q, q)) - std::real(a(p, p))) / (2 * r);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;

        const Scalar vpp(c), vpq(s);
        const Scalar vqp = -s * phase_conj;
        const Scalar vqq = c * phase_conj;

        const CVector<Real> col_p = a.col(p);
        const CVector<Real> col_q = a.col(q);
        a.col(p) = col_p * vpp + col_q * vqp;
        a.col(q) = col_p * vpq + col_q * vqq;

        const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> row_p = a.row(p);
        const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> row_q = a.row(q);
        a.row(p) = std::conj(vpp) * row_p + std::conj(vqp) * row_q;
        a.row(q) = std::conj(vpq) * row_p + std::conj(vqq) * row_q;

        a(p, q) = a(q, p) = Scalar(0);
        a(p, p) = Scalar(std::real(a(p, p)), 0);
        a(q, q) = Scalar(std::real(a(q, q)), 0);

        const CVector<Real> vcol_p = v.col(p);
        const CVector<Real> vcol_q = v.col(q);
        v.col(p) = vcol_p * vpp + vcol_q * vqp;
        v.col(q) = vcol_p * vpq + vcol_q * vqq;
      }
    }
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
    return std::real(a(i, i)) < std::real(a(j, j));
  });

  HermitianEigen<Real> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  out.sweeps = sweep;
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = std::real(a(src, src));
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

template <typename Derived>
Eigen::Matrix<typename Eigen::NumTraits<typename Derived::Scalar>::Real, Eigen::Dynamic, 1>
hermitian_eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  return hermitian_eigen(m).values;
}

}  // namespace locc
