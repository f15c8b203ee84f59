#pragma once

// Measurement maps as descriptor objects: dephasing Φ_A, projective collapse
// C_{a|A}, interpolated collapse C^ε_{a|A} and monitoring M^ε_A.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "irreality/qstate.hpp"

namespace irreality {

namespace detail {

inline double checked_intensity(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::InvalidIntensity, "intensity " + std::to_string(eps) + " outside [0, 1]");
  }
  return eps;
}

// Φ_A on a raw matrix: rotate the target factor into A's eigenbasis, drop
// every element whose target digits differ, rotate back.
inline Matrix dephase_matrix(const Matrix& m, const DimsSpec& dims, const ObservableSpec& obs) {
  obs.check_against(dims);
  const auto f = factor_layout(dims, obs.target());
  const Matrix& w = obs.eigenbasis();
  Matrix rotated = conjugate_factor(m, dims, obs.target(), w.adjoint());
  const std::size_t block = f.dim * f.inner;
  for (Index j = 0; j < rotated.cols(); ++j) {
    const std::size_t tj = (static_cast<std::size_t>(j) % block) / f.inner;
    for (Index i = 0; i < rotated.rows(); ++i) {
      const std::size_t ti = (static_cast<std::size_t>(i) % block) / f.inner;
      if (ti != tj) rotated(i, j) = 0.0;
    }
  }
  return conjugate_factor(rotated, dims, obs.target(), w);
}

// (A_a ⊗ 1) m (A_a ⊗ 1) without normalization.
inline Matrix project_matrix(const Matrix& m, const DimsSpec& dims, const ObservableSpec& obs, std::size_t a) {
  obs.check_against(dims);
  if (a >= obs.dim()) {
    throw Error(ErrorCode::InvalidOutcome, "outcome " + std::to_string(a) + " outside observable spectrum");
  }
  const auto f = factor_layout(dims, obs.target());
  const Vector v = obs.basis_vector(a);
  const auto rest = static_cast<Index>(f.outer * f.inner);
  auto full = [&](std::size_t t, Index r) {
    const auto o = static_cast<std::size_t>(r) / f.inner;
    const auto i = static_cast<std::size_t>(r) % f.inner;
    return static_cast<Index>((o * f.dim + t) * f.inner + i);
  };
  // half[r, j] = Σ_t conj(v_t) m[(t, r), j]
  Matrix half = Matrix::Zero(rest, m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index r = 0; r < rest; ++r) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < f.dim; ++t) acc += std::conj(v(static_cast<Index>(t))) * m(full(t, r), j);
      half(r, j) = acc;
    }
  // block[r, c] = Σ_t half[r, (t, c)] v_t
  Matrix block = Matrix::Zero(rest, rest);
  for (Index c = 0; c < rest; ++c)
    for (Index r = 0; r < rest; ++r) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < f.dim; ++t) acc += half(r, full(t, c)) * v(static_cast<Index>(t));
      block(r, c) = acc;
    }
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (std::size_t tc = 0; tc < f.dim; ++tc) {
    const Complex vc = std::conj(v(static_cast<Index>(tc)));
    if (vc == Complex(0.0)) continue;
    for (std::size_t tr = 0; tr < f.dim; ++tr) {
      const Complex coeff = v(static_cast<Index>(tr)) * vc;
      if (coeff == Complex(0.0)) continue;
      for (Index c = 0; c < rest; ++c)
        for (Index r = 0; r < rest; ++r) out(full(tr, r), full(tc, c)) = coeff * block(r, c);
    }
  }
  return out;
}

}  // namespace detail

// ------------------------------------------------------------- descriptors

struct DephasingMap {
  ObservableSpec observable;
};

/// Measurement of A with known outcome `outcome` at intensity ε ∈ [0, 1].
class RevealedMeasurement {
 public:
  RevealedMeasurement(ObservableSpec observable, std::size_t outcome, double intensity)
      : observable_(std::move(observable)), outcome_(outcome), intensity_(detail::checked_intensity(intensity)) {
    if (outcome_ >= observable_.dim()) {
      throw Error(ErrorCode::InvalidOutcome, "outcome " + std::to_string(outcome_) + " outside observable spectrum");
    }
  }

  const ObservableSpec& observable() const noexcept { return observable_; }
  std::size_t outcome() const noexcept { return outcome_; }
  double intensity() const noexcept { return intensity_; }

 private:
  ObservableSpec observable_;
  std::size_t outcome_;
  double intensity_;
};

/// Unrevealed measurement of A at intensity ε ∈ [0, 1].
class MonitoringMap {
 public:
  MonitoringMap(ObservableSpec observable, double intensity)
      : observable_(std::move(observable)), intensity_(detail::checked_intensity(intensity)) {}

  const ObservableSpec& observable() const noexcept { return observable_; }
  double intensity() const noexcept { return intensity_; }

 private:
  ObservableSpec observable_;
  double intensity_;
};

// ---------------------------------------------------------------- dephasing

inline DensityMatrix apply_dephasing(const DephasingMap& phi, const DensityMatrix& rho,
                                     const ToleranceConfig& tol = {}) {
  return validate_state(detail::dephase_matrix(rho.matrix(), rho.dims(), phi.observable), rho.dims(), tol);
}

inline DensityMatrix apply_dephasing(const ObservableSpec& obs, const DensityMatrix& rho,
                                     const ToleranceConfig& tol = {}) {
  return apply_dephasing(DephasingMap{obs}, rho, tol);
}

// ----------------------------------------------------------------- collapse

/// p_a = Tr[(A_a ⊗ 1) ρ]
inline double outcome_probability(const ObservableSpec& obs, std::size_t a, const DensityMatrix& rho) {
  return detail::project_matrix(rho.matrix(), rho.dims(), obs, a).trace().real();
}

struct CollapseResult {
  DensityMatrix state;
  double probability;
};

/// C_{a|A}(ρ) = (A_a⊗1) ρ (A_a⊗1) / p_a
inline CollapseResult apply_collapse(const ObservableSpec& obs, std::size_t a, const DensityMatrix& rho,
                                     const ToleranceConfig& tol = {}) {
  const Matrix projected = detail::project_matrix(rho.matrix(), rho.dims(), obs, a);
  const double p = projected.trace().real();
  if (!(p > tol.tol_trace)) {
    throw Error(ErrorCode::ZeroProbabilityOutcome,
                "outcome " + std::to_string(a) + " has probability " + std::to_string(p), p);
  }
  return CollapseResult{validate_state(projected / p, rho.dims(), tol), p};
}

/// C^ε_{a|A}(ρ) = (1-ε) ρ + ε C_{a|A}(ρ)
inline DensityMatrix apply_weak_collapse(const RevealedMeasurement& m, const DensityMatrix& rho,
                                         const ToleranceConfig& tol = {}) {
  const auto collapsed = apply_collapse(m.observable(), m.outcome(), rho, tol);
  const double eps = m.intensity();
  return validate_state((1.0 - eps) * rho.matrix() + eps * collapsed.state.matrix(), rho.dims(), tol);
}

/// Intensity of C^ε C^δ: ε + δ - εδ.
inline double compose_weak_collapses(double eps, double delta) {
  detail::checked_intensity(eps);
  detail::checked_intensity(delta);
  return eps + delta - eps * delta;
}

/// Two routes to the same matrix, kept side by side for comparison.
struct DifferenceCheck {
  Matrix direct;
  Matrix predicted;

  double max_gap() const { return direct.size() == 0 ? 0.0 : (direct - predicted).cwiseAbs().maxCoeff(); }
};

/// C^ε(ρ) - C^δ(ρ) against (ε - δ)[C(ρ) - ρ].
inline DifferenceCheck weak_collapse_difference(double eps, double delta, const ObservableSpec& obs,
                                                std::size_t a, const DensityMatrix& rho,
                                                const ToleranceConfig& tol = {}) {
  const auto ce = apply_weak_collapse(RevealedMeasurement(obs, a, eps), rho, tol);
  const auto cd = apply_weak_collapse(RevealedMeasurement(obs, a, delta), rho, tol);
  const auto c = apply_collapse(obs, a, rho, tol);
  return DifferenceCheck{ce.matrix() - cd.matrix(), (eps - delta) * (c.state.matrix() - rho.matrix())};
}

// --------------------------------------------------------------- monitoring

/// M^ε_A(ρ) = (1-ε) ρ + ε Φ_A(ρ)
inline DensityMatrix apply_monitoring(const MonitoringMap& m, const DensityMatrix& rho,
                                      const ToleranceConfig& tol = {}) {
  m.observable().check_against(rho.dims());
  const double eps = m.intensity();
  if (eps == 0.0) return rho;
  const Matrix dephased = detail::dephase_matrix(rho.matrix(), rho.dims(), m.observable());
  return validate_state((1.0 - eps) * rho.matrix() + eps * dephased, rho.dims(), tol);
}

/// Kraus set on the full space of `dims`: √(1-ε) 1 and √ε (A_a ⊗ 1).
/// Zero-weight operators are omitted, so ε = 0 gives {1} and ε = 1 gives
/// the bare projectors.
inline std::vector<Matrix> monitoring_kraus(const MonitoringMap& m, const DimsSpec& dims) {
  m.observable().check_against(dims);
  const double eps = m.intensity();
  const auto n = static_cast<Index>(dims.total());
  std::vector<Matrix> ops;
  if (eps < 1.0) ops.push_back(std::sqrt(1.0 - eps) * Matrix::Identity(n, n));
  if (eps > 0.0) {
    const std::size_t target[] = {m.observable().target()};
    for (std::size_t a = 0; a < m.observable().dim(); ++a)
      ops.push_back(std::sqrt(eps) * embed_operator(m.observable().projector(a), dims, target));
  }
  return ops;
}

inline DensityMatrix apply_kraus(const std::vector<Matrix>& kraus, const DensityMatrix& rho,
                                 const ToleranceConfig& tol = {}) {
  Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const Matrix& k : kraus) {
    if (k.cols() != rho.matrix().rows()) throw Error(ErrorCode::DimensionMismatch, "Kraus operator size");
    out += k * rho.matrix() * k.adjoint();
  }
  return validate_state(out, rho.dims(), tol);
}

/// Σ_a p_a C^ε_{a|A}(ρ), the best prediction without the outcome.
/// Outcomes with p_a at or below tol_trace enter through the unnormalized
/// form p_a (1-ε) ρ + ε (A_a⊗1) ρ (A_a⊗1), which needs no division.
inline DensityMatrix unrevealed_average(const ObservableSpec& obs, double eps, const DensityMatrix& rho,
                                        const ToleranceConfig& tol = {}) {
  detail::checked_intensity(eps);
  obs.check_against(rho.dims());
  Matrix out = Matrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (std::size_t a = 0; a < obs.dim(); ++a) {
    const Matrix projected = detail::project_matrix(rho.matrix(), rho.dims(), obs, a);
    const double p = projected.trace().real();
    if (p > tol.tol_trace) {
      out += p * apply_weak_collapse(RevealedMeasurement(obs, a, eps), rho, tol).matrix();
    } else {
      out += p * (1.0 - eps) * rho.matrix() + eps * projected;
    }
  }
  return validate_state(out, rho.dims(), tol);
}

/// [M^ε]^n = M^{1-(1-ε)^n}
inline MonitoringMap iterate_monitoring(const MonitoringMap& m, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "iteration count must be >= 1");
  const double eff = 1.0 - std::pow(1.0 - m.intensity(), static_cast<double>(n));
  return MonitoringMap(m.observable(), std::clamp(eff, 0.0, 1.0));
}

/// Intensity of M^δ M^ε: δ + ε - δε.
inline double compose_monitorings(double delta, double eps) {
  detail::checked_intensity(delta);
  detail::checked_intensity(eps);
  return delta + eps - delta * eps;
}

/// Effective intensity of n monitorings at ε/n each.
inline double split_monitoring_intensity(double eps, std::size_t n) {
  detail::checked_intensity(eps);
  if (n < 1) throw Error(ErrorCode::InvalidParameter, "split count must be >= 1");
  return 1.0 - std::pow(1.0 - eps / static_cast<double>(n), static_cast<double>(n));
}

/// n → ∞ limit of split_monitoring_intensity: 1 - e^{-ε}.
inline double split_monitoring_limit(double eps) {
  detail::checked_intensity(eps);
  return -std::expm1(-eps);
}

/// M^ε(ρ) - M^δ(ρ) against (ε - δ)[Φ_A(ρ) - ρ].
inline DifferenceCheck monitoring_difference(double eps, double delta, const ObservableSpec& obs,
                                             const DensityMatrix& rho, const ToleranceConfig& tol = {}) {
  const auto me = apply_monitoring(MonitoringMap(obs, eps), rho, tol);
  const auto md = apply_monitoring(MonitoringMap(obs, delta), rho, tol);
  const auto phi = apply_dephasing(obs, rho, tol);
  return DifferenceCheck{me.matrix() - md.matrix(), (eps - delta) * (phi.matrix() - rho.matrix())};
}

}  // namespace irreality
