#pragma once

// Dense states over composite finite-dimensional Hilbert spaces.
//
// Subsystem ordering follows the Kronecker convention: the first entry of a
// DimsSpec is the most significant digit of a flat basis index.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irreality/errors.hpp"
#include "irreality/tolerance.hpp"

namespace irreality {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kLn2 = std::numbers::ln2;

// ---------------------------------------------------------------- DimsSpec

class DimsSpec {
 public:
  static constexpr std::size_t kDefaultMaxTotal = 4096;

  DimsSpec(std::initializer_list<std::size_t> dims)
      : DimsSpec(std::vector<std::size_t>(dims)) {}

  explicit DimsSpec(std::vector<std::size_t> dims, std::size_t max_total = kDefaultMaxTotal)
      : dims_(std::move(dims)), max_total_(max_total) {
    if (dims_.empty()) throw Error(ErrorCode::InvalidDims, "dimension list is empty");
    total_ = 1;
    for (std::size_t d : dims_) {
      if (d < 2) throw Error(ErrorCode::InvalidDims, "every subsystem needs dimension >= 2");
      if (total_ > max_total_ / d) {
        throw Error(ErrorCode::DimensionOverflow,
                    "total dimension exceeds the maximum " + std::to_string(max_total_));
      }
      total_ *= d;
    }
  }

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t operator[](std::size_t k) const { return dims_.at(k); }
  std::size_t total() const noexcept { return total_; }
  std::size_t max_total() const noexcept { return max_total_; }

  DimsSpec concat(const DimsSpec& other) const {
    std::vector<std::size_t> joined = dims_;
    joined.insert(joined.end(), other.dims_.begin(), other.dims_.end());
    return DimsSpec(std::move(joined), std::max(max_total_, other.max_total_));
  }

  DimsSpec select(std::span<const std::size_t> keep) const {
    std::vector<std::size_t> sub;
    sub.reserve(keep.size());
    for (std::size_t k : keep) sub.push_back(dims_.at(k));
    return DimsSpec(std::move(sub), max_total_);
  }

  friend bool operator==(const DimsSpec& a, const DimsSpec& b) { return a.dims_ == b.dims_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < dims_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(dims_[k]);
    }
    return s + "]";
  }

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
  std::size_t max_total_ = kDefaultMaxTotal;
};

// ------------------------------------------------------------- index maths

namespace detail {

inline std::vector<std::size_t> strides(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
  return s;
}

// Flat-index offsets of every multi-index over `subset` (first entry most
// significant), with all other digits zero.
inline std::vector<std::size_t> subset_offsets(const std::vector<std::size_t>& dims,
                                               std::span<const std::size_t> subset) {
  const auto st = strides(dims);
  std::vector<std::size_t> out{0};
  for (std::size_t k : subset) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * dims[k]);
    for (std::size_t base : out)
      for (std::size_t digit = 0; digit < dims[k]; ++digit) next.push_back(base + digit * st[k]);
    out = std::move(next);
  }
  return out;
}

inline std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> subset) {
  std::vector<bool> used(n, false);
  for (std::size_t k : subset) used[k] = true;
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < n; ++k)
    if (!used[k]) rest.push_back(k);
  return rest;
}

inline void check_subset(const DimsSpec& dims, std::span<const std::size_t> subset) {
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t k : subset) {
    if (k >= dims.size()) {
      throw Error(ErrorCode::InvalidSubsystemIndex,
                  "subsystem " + std::to_string(k) + " outside " + dims.to_string());
    }
    if (seen[k]) throw Error(ErrorCode::InvalidSubsystemIndex, "repeated subsystem index");
    seen[k] = true;
  }
}

struct FactorLayout {
  std::size_t outer = 1;
  std::size_t dim = 1;
  std::size_t inner = 1;
};

inline FactorLayout factor_layout(const DimsSpec& dims, std::size_t target) {
  if (target >= dims.size()) {
    throw Error(ErrorCode::InvalidSubsystemIndex,
                "subsystem " + std::to_string(target) + " outside " + dims.to_string());
  }
  FactorLayout f;
  for (std::size_t k = 0; k < target; ++k) f.outer *= dims[k];
  f.dim = dims[target];
  for (std::size_t k = target + 1; k < dims.size(); ++k) f.inner *= dims[k];
  return f;
}

inline bool is_exact_identity(const Matrix& u) {
  for (Index j = 0; j < u.cols(); ++j)
    for (Index i = 0; i < u.rows(); ++i)
      if (u(i, j) != (i == j ? Complex(1.0) : Complex(0.0))) return false;
  return true;
}

}  // namespace detail

/// (1 ⊗ U ⊗ 1) m, with U acting on subsystem `target`.
inline Matrix left_multiply_factor(const Matrix& m, const DimsSpec& dims, std::size_t target,
                                   const Matrix& u) {
  const auto f = detail::factor_layout(dims, target);
  if (static_cast<std::size_t>(u.rows()) != f.dim || u.rows() != u.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "local operator does not match subsystem dimension");
  }
  Matrix out(m.rows(), m.cols());
  Vector x(static_cast<Index>(f.dim));
  for (Index j = 0; j < m.cols(); ++j) {
    for (std::size_t o = 0; o < f.outer; ++o) {
      for (std::size_t i = 0; i < f.inner; ++i) {
        const std::size_t base = o * f.dim * f.inner + i;
        for (std::size_t t = 0; t < f.dim; ++t) x(static_cast<Index>(t)) = m(static_cast<Index>(base + t * f.inner), j);
        const Vector y = u * x;
        for (std::size_t t = 0; t < f.dim; ++t) out(static_cast<Index>(base + t * f.inner), j) = y(static_cast<Index>(t));
      }
    }
  }
  return out;
}

/// (1 ⊗ U ⊗ 1) m (1 ⊗ U† ⊗ 1).
inline Matrix conjugate_factor(const Matrix& m, const DimsSpec& dims, std::size_t target,
                               const Matrix& u) {
  if (detail::is_exact_identity(u)) return m;
  const Matrix left = left_multiply_factor(m, dims, target, u);
  const Matrix both = left_multiply_factor(left.adjoint(), dims, target, u);
  return both.adjoint();
}

/// Full matrix of `op` acting on the ordered subsystems `targets`, identity elsewhere.
inline Matrix embed_operator(const Matrix& op, const DimsSpec& dims,
                             std::span<const std::size_t> targets) {
  detail::check_subset(dims, targets);
  std::size_t sub = 1;
  for (std::size_t k : targets) sub *= dims[k];
  if (static_cast<std::size_t>(op.rows()) != sub || op.rows() != op.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operator size does not match target subsystems");
  }
  const auto target_off = detail::subset_offsets(dims.dims(), targets);
  const auto rest = detail::complement(dims.size(), targets);
  const auto rest_off = detail::subset_offsets(dims.dims(), rest);
  const auto n = static_cast<Index>(dims.total());
  Matrix out = Matrix::Zero(n, n);
  for (std::size_t r : rest_off)
    for (std::size_t a = 0; a < target_off.size(); ++a)
      for (std::size_t b = 0; b < target_off.size(); ++b)
        out(static_cast<Index>(r + target_off[a]), static_cast<Index>(r + target_off[b])) =
            op(static_cast<Index>(a), static_cast<Index>(b));
  return out;
}

// ------------------------------------------------------------- eigenvalues

/// Eigenvalues (ascending) of a Hermitian matrix, read from its lower
/// triangle. The matrix is split into the connected components of its exact
/// nonzero pattern and each block is diagonalized separately; zero rows and
/// block-diagonal structure cost nothing beyond one O(n^2) scan.
inline std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  const Index n = m.rows();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  };
  for (Index j = 0; j < n; ++j)
    for (Index i = j + 1; i < n; ++i)
      if (m(i, j) != Complex(0.0)) {
        const Index a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  std::vector<std::vector<Index>> blocks;
  std::vector<Index> block_of(static_cast<std::size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    const Index root = find(i);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(i);
  }

  std::vector<double> eig;
  eig.reserve(static_cast<std::size_t>(n));
  for (const auto& idx : blocks) {
    if (idx.size() == 1) {
      eig.push_back(m(idx[0], idx[0]).real());
      continue;
    }
    const auto k = static_cast<Index>(idx.size());
    Matrix sub(k, k);
    for (Index a = 0; a < k; ++a)
      for (Index b = 0; b < k; ++b) sub(a, b) = m(idx[a], idx[b]);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sub, Eigen::EigenvaluesOnly);
    for (Index a = 0; a < k; ++a) eig.push_back(solver.eigenvalues()(a));
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

// ----------------------------------------------------------- DensityMatrix

class DensityMatrix;

DensityMatrix validate_state(const Matrix& m, const DimsSpec& dims,
                             const ToleranceConfig& tol = {});

/// Hermitian, unit-trace, positive semidefinite matrix over a DimsSpec.
/// Only obtainable through validate_state, so every instance satisfies its
/// invariants.
class DensityMatrix {
 public:
  const Matrix& matrix() const noexcept { return matrix_; }
  const DimsSpec& dims() const noexcept { return dims_; }
  std::size_t total() const noexcept { return dims_.total(); }

 private:
  DensityMatrix(Matrix m, DimsSpec dims) : matrix_(std::move(m)), dims_(std::move(dims)) {}
  friend DensityMatrix validate_state(const Matrix&, const DimsSpec&, const ToleranceConfig&);

  Matrix matrix_;
  DimsSpec dims_;
};

inline DensityMatrix validate_state(const Matrix& m, const DimsSpec& dims,
                                    const ToleranceConfig& tol) {
  const auto n = static_cast<Index>(dims.total());
  if (m.rows() != n || m.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "matrix side " + std::to_string(m.rows()) +
                                                  " does not match dims " + dims.to_string());
  }
  // Tiled so that the transposed reads stay in cache at large n.
  constexpr Index kTile = 32;
  Matrix sym(n, n);
  double herm_dev2 = 0.0;
  for (Index j0 = 0; j0 < n; j0 += kTile)
    for (Index i0 = j0; i0 < n; i0 += kTile)
      for (Index j = j0; j < std::min(j0 + kTile, n); ++j)
        for (Index i = std::max(i0, j); i < std::min(i0 + kTile, n); ++i) {
          const Complex lower = m(i, j), upper = std::conj(m(j, i));
          herm_dev2 = std::max(herm_dev2, std::norm(lower - upper));
          sym(i, j) = 0.5 * (lower + upper);
          sym(j, i) = std::conj(sym(i, j));
        }
  const double herm_dev = std::sqrt(herm_dev2);
  if (!(herm_dev <= tol.tol_herm)) {
    throw Error(ErrorCode::NotHermitian, "max |m - m^dagger| = " + std::to_string(herm_dev), herm_dev);
  }
  const double trace_dev = std::abs(sym.trace().real() - 1.0);
  if (!(trace_dev <= tol.tol_trace)) {
    throw Error(ErrorCode::TraceNotOne, "|tr - 1| = " + std::to_string(trace_dev), trace_dev);
  }
  const double min_eig = hermitian_eigenvalues(sym).front();
  if (min_eig < -tol.tol_psd) {
    throw Error(ErrorCode::NotPositive, "minimum eigenvalue " + std::to_string(min_eig), -min_eig);
  }
  return DensityMatrix(std::move(sym), dims);
}

// --------------------------------------------------------------- PureState

class PureState {
 public:
  PureState(Vector v, DimsSpec dims, const ToleranceConfig& tol = {})
      : vector_(std::move(v)), dims_(std::move(dims)) {
    if (static_cast<std::size_t>(vector_.size()) != dims_.total()) {
      throw Error(ErrorCode::DimensionMismatch, "vector length does not match dims " + dims_.to_string());
    }
    const double dev = std::abs(vector_.norm() - 1.0);
    if (!(dev <= tol.tol_norm)) {
      throw Error(ErrorCode::NotNormalized, "|norm - 1| = " + std::to_string(dev), dev);
    }
  }

  const Vector& vector() const noexcept { return vector_; }
  const DimsSpec& dims() const noexcept { return dims_; }

  DensityMatrix density(const ToleranceConfig& tol = {}) const {
    return validate_state(vector_ * vector_.adjoint(), dims_, tol);
  }

 private:
  Vector vector_;
  DimsSpec dims_;
};

// ----------------------------------------------------------- ObservableSpec

/// A = Σ_a a |a⟩⟨a| on one subsystem, stored as rank-1 eigenprojectors.
class ObservableSpec {
 public:
  ObservableSpec(std::size_t target, std::vector<double> eigenvalues, Matrix eigenbasis,
                 const ToleranceConfig& tol = {})
      : target_(target), eigenvalues_(std::move(eigenvalues)), basis_(std::move(eigenbasis)) {
    if (basis_.rows() != basis_.cols() || basis_.rows() < 2) {
      throw Error(ErrorCode::DimensionMismatch, "eigenbasis must be a square matrix of side >= 2");
    }
    if (eigenvalues_.size() != static_cast<std::size_t>(basis_.cols())) {
      throw Error(ErrorCode::DimensionMismatch, "one eigenvalue per basis vector required");
    }
    const Matrix gram = basis_.adjoint() * basis_;
    const double dev = (gram - Matrix::Identity(basis_.rows(), basis_.cols())).cwiseAbs().maxCoeff();
    if (!(dev <= tol.tol_ortho)) {
      throw Error(ErrorCode::NotOrthonormal, "max |B^dagger B - 1| = " + std::to_string(dev), dev);
    }
  }

  std::size_t target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(basis_.rows()); }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  /// Columns are the eigenvectors |a⟩.
  const Matrix& eigenbasis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t a) const { return basis_.col(static_cast<Index>(a)); }
  Matrix projector(std::size_t a) const {
    const Vector v = basis_vector(a);
    return v * v.adjoint();
  }

  ObservableSpec on_target(std::size_t target) const {
    ObservableSpec copy = *this;
    copy.target_ = target;
    return copy;
  }

  /// Throws unless the observable fits subsystem `target` of `dims`.
  void check_against(const DimsSpec& dims) const {
    if (target_ >= dims.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "observable targets subsystem " + std::to_string(target_) + " outside " + dims.to_string());
    }
    if (dims[target_] != dim()) {
      throw Error(ErrorCode::DimensionMismatch, "observable dimension " + std::to_string(dim()) +
                                                    " does not match subsystem " + std::to_string(target_));
    }
  }

 private:
  std::size_t target_;
  std::vector<double> eigenvalues_;
  Matrix basis_;
};

inline ObservableSpec computational_observable(std::size_t d, std::size_t target = 0) {
  std::vector<double> values(d);
  std::iota(values.begin(), values.end(), 0.0);
  return ObservableSpec(target, std::move(values),
                        Matrix::Identity(static_cast<Index>(d), static_cast<Index>(d)));
}

inline ObservableSpec pauli_z(std::size_t target = 0) {
  return ObservableSpec(target, {1.0, -1.0}, Matrix::Identity(2, 2));
}

inline ObservableSpec pauli_x(std::size_t target = 0) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix b(2, 2);
  b << r, r, r, -r;
  return ObservableSpec(target, {1.0, -1.0}, b);
}

/// Discrete Fourier basis v_k[j] = exp(2πi jk/d)/√d, eigenvalues 0..d-1.
/// Mutually unbiased with the computational basis.
inline ObservableSpec fourier_basis(std::size_t d, std::size_t target = 0) {
  if (d < 2) throw Error(ErrorCode::InvalidDims, "Fourier basis needs d >= 2");
  const auto n = static_cast<Index>(d);
  Matrix b(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      // reduce jk mod d first so large d keeps full phase accuracy
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(d);
      b(j, k) = std::polar(norm, phase);
    }
  std::vector<double> values(d);
  std::iota(values.begin(), values.end(), 0.0);
  return ObservableSpec(target, std::move(values), std::move(b));
}

// ------------------------------------------------------------ constructors

inline Vector basis_ket(std::size_t d, std::size_t k) {
  Vector v = Vector::Zero(static_cast<Index>(d));
  v(static_cast<Index>(k)) = 1.0;
  return v;
}

inline Vector plus_ket() { return Vector::Constant(2, 1.0 / std::sqrt(2.0)); }

inline Vector minus_ket() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  return v;
}

/// (|00⟩ + |11⟩)/√2
inline PureState bell_state() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState(std::move(v), DimsSpec{2, 2});
}

inline DensityMatrix pure_density(const Vector& v, const DimsSpec& dims, const ToleranceConfig& tol = {}) {
  return PureState(v, dims, tol).density(tol);
}

inline DensityMatrix maximally_mixed(const DimsSpec& dims) {
  const auto n = static_cast<Index>(dims.total());
  return validate_state(Matrix::Identity(n, n) / static_cast<double>(n), dims);
}

// --------------------------------------------------------------- products

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b, const ToleranceConfig& tol = {}) {
  DimsSpec dims = a.dims().concat(b.dims());
  Matrix k = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  return validate_state(k, dims, tol);
}

inline PureState tensor(const PureState& a, const PureState& b, const ToleranceConfig& tol = {}) {
  DimsSpec dims = a.dims().concat(b.dims());
  Vector k = Eigen::kroneckerProduct(a.vector(), b.vector()).eval();
  return PureState(std::move(k), std::move(dims), tol);
}

/// Reduced state on `keep`; surviving subsystems stay in their original order.
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep,
                                   const ToleranceConfig& tol = {}) {
  if (keep.empty()) throw Error(ErrorCode::InvalidSubsystemIndex, "keep set is empty");
  detail::check_subset(rho.dims(), keep);
  std::sort(keep.begin(), keep.end());
  const auto traced = detail::complement(rho.dims().size(), keep);
  const auto keep_off = detail::subset_offsets(rho.dims().dims(), keep);
  const auto trace_off = detail::subset_offsets(rho.dims().dims(), traced);
  const auto k = static_cast<Index>(keep_off.size());
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(k, k);
  for (Index c = 0; c < k; ++c)
    for (Index r = 0; r < k; ++r) {
      Complex acc = 0.0;
      for (std::size_t t : trace_off)
        acc += m(static_cast<Index>(keep_off[r] + t), static_cast<Index>(keep_off[c] + t));
      out(r, c) = acc;
    }
  return validate_state(out, rho.dims().select(keep), tol);
}

/// Reduced state of a pure state without forming the full projector.
inline DensityMatrix partial_trace(const PureState& psi, std::vector<std::size_t> keep,
                                   const ToleranceConfig& tol = {}) {
  if (keep.empty()) throw Error(ErrorCode::InvalidSubsystemIndex, "keep set is empty");
  detail::check_subset(psi.dims(), keep);
  std::sort(keep.begin(), keep.end());
  const auto traced = detail::complement(psi.dims().size(), keep);
  const auto keep_off = detail::subset_offsets(psi.dims().dims(), keep);
  const auto trace_off = detail::subset_offsets(psi.dims().dims(), traced);
  Matrix amp(static_cast<Index>(keep_off.size()), static_cast<Index>(trace_off.size()));
  for (std::size_t r = 0; r < keep_off.size(); ++r)
    for (std::size_t t = 0; t < trace_off.size(); ++t)
      amp(static_cast<Index>(r), static_cast<Index>(t)) = psi.vector()(static_cast<Index>(keep_off[r] + trace_off[t]));
  return validate_state(amp * amp.adjoint(), psi.dims().select(keep), tol);
}

inline DensityMatrix apply_unitary(const DensityMatrix& rho, const Matrix& u, const ToleranceConfig& tol = {}) {
  if (u.rows() != rho.matrix().rows() || u.cols() != u.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "unitary does not match state dimension");
  }
  return validate_state(u * rho.matrix() * u.adjoint(), rho.dims(), tol);
}

// ---------------------------------------------------------------- entropies

/// S(ρ) = -Tr ρ ln ρ in nats.
inline double von_neumann_entropy(const DensityMatrix& rho, const ToleranceConfig& tol = {}) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix())) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > tol.eig_zero_floor) s -= lambda * std::log(lambda);
  }
  return s;
}

/// H(x) = -x ln x - (1-x) ln(1-x), x clamped to [0,1].
inline double binary_entropy(double x) {
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
  return h;
}

inline double shannon_entropy(std::span<const double> p, const ToleranceConfig& tol = {}) {
  if (p.empty()) throw Error(ErrorCode::NotADistribution, "empty distribution");
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= -tol.tol_psd)) throw Error(ErrorCode::NotADistribution, "negative entry", -x);
    sum += x;
  }
  if (!(std::abs(sum - 1.0) <= tol.tol_trace)) {
    throw Error(ErrorCode::NotADistribution, "entries sum to " + std::to_string(sum), std::abs(sum - 1.0));
  }
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

inline double shannon_entropy(std::initializer_list<double> p, const ToleranceConfig& tol = {}) {
  return shannon_entropy(std::span<const double>(p.begin(), p.size()), tol);
}

/// T(a, b) = ½ Tr |a - b|.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.dims() == b.dims())) {
    throw Error(ErrorCode::DimensionMismatch, a.dims().to_string() + " vs " + b.dims().to_string());
  }
  const Matrix diff = a.matrix() - b.matrix();
  double sum = 0.0;
  for (double lambda : hermitian_eigenvalues(diff)) sum += std::abs(lambda);
  return 0.5 * sum;
}

// ------------------------------------------------------------------ random

/// Either a Haar-random pure state or the reduction of one from dims ⊗ [rank].
struct Purity {
  std::size_t rank = 1;  // 1 means pure

  static Purity pure() { return Purity{1}; }
  static Purity mixed(std::size_t rank) { return Purity{rank}; }
};

inline Vector random_gaussian_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Index>(n));
  for (Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

inline Vector random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v = random_gaussian_vector(n, rng);
  return v / v.norm();
}

/// Haar-random unitary: QR of a complex Ginibre matrix with R's diagonal
/// phases folded back into Q.
inline Matrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  const auto k = static_cast<Index>(n);
  Matrix g(k, k);
  for (Index j = 0; j < k; ++j) g.col(j) = random_gaussian_vector(n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < k; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0);
  }
  return q;
}

inline PureState random_pure_state(const DimsSpec& dims, std::mt19937_64& rng) {
  return PureState(random_unit_vector(dims.total(), rng), dims);
}

inline DensityMatrix random_state(const DimsSpec& dims, std::mt19937_64& rng, Purity purity = Purity::pure(),
                                  const ToleranceConfig& tol = {}) {
  if (purity.rank == 0 || purity.rank > dims.total()) {
    throw Error(ErrorCode::InvalidRank, "rank " + std::to_string(purity.rank) + " outside [1, " +
                                            std::to_string(dims.total()) + "]");
  }
  const Vector v = random_unit_vector(dims.total() * purity.rank, rng);
  // row-major reshape: index s * rank + r
  const Matrix amp = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      v.data(), static_cast<Index>(dims.total()), static_cast<Index>(purity.rank));
  return validate_state(amp * amp.adjoint(), dims, tol);
}

inline DensityMatrix random_state(const DimsSpec& dims, std::uint64_t seed, Purity purity = Purity::pure(),
                                  const ToleranceConfig& tol = {}) {
  std::mt19937_64 rng(seed);
  return random_state(dims, rng, purity, tol);
}

/// Observable with a Haar-random eigenbasis on `target`.
inline ObservableSpec random_observable(std::size_t d, std::size_t target, std::mt19937_64& rng) {
  std::vector<double> values(d);
  std::iota(values.begin(), values.end(), 0.0);
  return ObservableSpec(target, std::move(values), random_unitary(d, rng));
}

/// Stateless 64-bit mixer for deriving per-sample seeds from a root seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(root ^ splitmix64(stream)) + index);
}

}  // namespace irreality
