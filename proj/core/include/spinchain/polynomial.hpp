#pragma once

#include <functional>
#include <vector>

#include "spinchain/linop.hpp"

namespace spinchain {

/// Polynomial stored in the scaled variable u = (z - center) / radius.
struct CirclePolynomial {
  cplx center{0.0, 0.0};
  double radius = 1.0;
  std::vector<cplx> coeffs;  ///< coeffs[j] multiplies u^j

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  cplx operator()(cplx z) const;
  /// Roots in the z plane (companion-matrix eigenvalues).
  std::vector<cplx> roots() const;
};

/// Sample f at `points` roots of unity on the circle and recover coefficients by DFT.
/// Trailing coefficients below `rel_cut` times the largest are dropped.
CirclePolynomial fit_on_circle(const std::function<cplx(cplx)>& f, int points, cplx center, double radius,
                               double rel_cut = 1e-10);

/// Same for matrix-valued samples; returns one coefficient matrix per power.
struct MatrixPolynomial {
  cplx center{0.0, 0.0};
  double radius = 1.0;
  std::vector<CMatrix> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  CMatrix operator()(cplx z) const;
};

MatrixPolynomial fit_matrix_on_circle(const std::vector<CMatrix>& samples, cplx center, double radius,
                                      double rel_cut = 1e-10);

/// z_k = center + radius * exp(2 pi i k / points).
std::vector<cplx> circle_points(int points, cplx center, double radius);

}  // namespace spinchain
