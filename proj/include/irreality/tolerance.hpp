#pragma once

#include "irreality/errors.hpp"

namespace irreality {

/// Numerical tolerances shared by every module. Defaults suit dense
/// double-precision work at dimensions up to a few thousand.
struct ToleranceConfig {
  double tol_herm = 1e-10;
  double tol_trace = 1e-10;
  double tol_psd = 1e-9;
  double tol_norm = 1e-10;
  double tol_ortho = 1e-10;
  double tol_identity = 1e-10;
  double tol_ineq_slack = 1e-9;
  // eigenvalues at or below this contribute nothing to entropies
  double eig_zero_floor = 1e-12;

  void validate() const {
    const double all[] = {tol_herm,     tol_trace,      tol_psd,       tol_norm,
                          tol_ortho,    tol_identity,   tol_ineq_slack, eig_zero_floor};
    for (double t : all) {
      if (!(t >= 0.0)) throw Error(ErrorCode::InvalidTolerance, "tolerances must be nonnegative", t);
    }
    if (eig_zero_floor > tol_psd) {
      throw Error(ErrorCode::InvalidTolerance, "eig_zero_floor must not exceed tol_psd",
                  eig_zero_floor - tol_psd);
    }
  }
};

}  // namespace irreality
