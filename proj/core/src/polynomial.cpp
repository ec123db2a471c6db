#include "spinchain/polynomial.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace spinchain {

std::vector<cplx> circle_points(int points, cplx center, double radius) {
  std::vector<cplx> z(points);
  for (int k = 0; k < points; ++k) z[k] = center + radius * std::polar(1.0, 2 * M_PI * k / points);
  return z;
}

cplx CirclePolynomial::operator()(cplx z) const {
  const cplx u = (z - center) / radius;
  cplx acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

std::vector<cplx> CirclePolynomial::roots() const {
  const int m = degree();
  if (m <= 0) return {};
  CMatrix C = CMatrix::Zero(m, m);
  for (int i = 1; i < m; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) C(i, m - 1) = -coeffs[i] / coeffs[m];
  Eigen::ComplexEigenSolver<CMatrix> es(C, false);
  std::vector<cplx> out(m);
  for (int i = 0; i < m; ++i) out[i] = center + radius * es.eigenvalues()[i];
  return out;
}

CirclePolynomial fit_on_circle(const std::function<cplx(cplx)>& f, int points, cplx center, double radius,
                               double rel_cut) {
  std::vector<cplx> vals;
  for (cplx z : circle_points(points, center, radius)) vals.push_back(f(z));
  CirclePolynomial p{center, radius, std::vector<cplx>(points)};
  double big = 0;
  for (int j = 0; j < points; ++j) {
    cplx acc = 0.0;
    for (int k = 0; k < points; ++k) acc += vals[k] * std::polar(1.0, -2 * M_PI * j * k / points);
    p.coeffs[j] = acc / static_cast<double>(points);
    big = std::max(big, std::abs(p.coeffs[j]));
  }
  while (p.coeffs.size() > 1 && std::abs(p.coeffs.back()) <= rel_cut * big) p.coeffs.pop_back();
  return p;
}

CMatrix MatrixPolynomial::operator()(cplx z) const {
  const cplx u = (z - center) / radius;
  CMatrix acc = CMatrix::Zero(coeffs.front().rows(), coeffs.front().cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

MatrixPolynomial fit_matrix_on_circle(const std::vector<CMatrix>& samples, cplx center, double radius,
                                      double rel_cut) {
  const int points = static_cast<int>(samples.size());
  MatrixPolynomial p{center, radius, {}};
  double big = 0;
  for (int j = 0; j < points; ++j) {
    CMatrix acc = CMatrix::Zero(samples[0].rows(), samples[0].cols());
    for (int k = 0; k < points; ++k) acc += samples[k] * std::polar(1.0, -2 * M_PI * j * k / points);
    acc /= static_cast<double>(points);
    big = std::max(big, max_abs(acc));
    p.coeffs.push_back(std::move(acc));
  }
  while (p.coeffs.size() > 1 && max_abs(p.coeffs.back()) <= rel_cut * big) p.coeffs.pop_back();
  return p;
}

}  // namespace spinchain
