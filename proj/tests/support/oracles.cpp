#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/digamma.hpp>

#include "spinchain/laxfactory.hpp"

namespace spinchain::oracle {

long hook_content_dimension(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  std::vector<int> row(lambda);
  for (int& x : row) x -= lambda.back();
  double num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < row[i]; ++j) {
      int below = 0;
      for (int k = i + 1; k < n; ++k)
        if (row[k] > j) ++below;
      num *= n + j - i;
      den *= (row[i] - j - 1) + below + 1;
    }
  return std::lround(num / den);
}

namespace {

CMatrix exp_series(const CMatrix& v, const CMatrix& f, double sign) {
  // sum_k sign^k v^k (x) f^k / k!, v nilpotent
  CMatrix total = CMatrix::Zero(v.rows() * f.rows(), v.cols() * f.cols());
  CMatrix pv = CMatrix::Identity(v.rows(), v.cols());
  CMatrix pf = CMatrix::Identity(f.rows(), f.cols());
  double fact = 1;
  for (int k = 0; k <= v.rows(); ++k) {
    if (k > 0) fact *= k;
    total += std::pow(sign, k) / fact * kron(pv, pf);
    pv = pv * v;
    pf = pf * f;
  }
  return total;
}

}  // namespace

CMatrix fock_cutoff_q(cplx z, const IndexSet& I, const Representation& rep, int L, const TwistConfig& twist, int N) {
  const IndexSet Ibar = I.complement();
  if (I.size() != 1 || Ibar.size() != 1) throw std::invalid_argument("single-mode oracle");
  const int c = I.members()[0], cd = Ibar.members()[0];
  const Index d = rep.dim();
  CMatrix x = CMatrix::Zero(N, N), dx = CMatrix::Zero(N, N);
  for (int m = 0; m + 1 < N; ++m) {
    x(m + 1, m) = 1.0;
    dx(m, m + 1) = static_cast<double>(m + 1);
  }
  // R on V (x) F
  const CMatrix R = exp_series(rep.J(c, cd), x, 1.0) * kron(r0(z, I, rep).matrix(), CMatrix::Identity(N, N)) *
                    exp_series(rep.J(cd, c), dx, -1.0);

  Index D = 1;
  for (int j = 0; j < L; ++j) D *= d;
  // site operators on V^{(x)L} (x) F
  CMatrix M = CMatrix::Identity(D * N, D * N);
  for (int j = 0; j < L; ++j) {
    Index left = 1, right = 1;
    for (int k = 0; k < j; ++k) left *= d;
    for (int k = j + 1; k < L; ++k) right *= d;
    CMatrix S = CMatrix::Zero(D * N, D * N);
    for (Index l = 0; l < left; ++l)
      for (Index r = 0; r < right; ++r)
        for (Index a = 0; a < d; ++a)
          for (Index b = 0; b < d; ++b)
            for (int m = 0; m < N; ++m)
              for (int k = 0; k < N; ++k) {
                const cplx v = R(a * N + m, b * N + k);
                if (v == 0.0) continue;
                S(((l * d + a) * right + r) * N + m, ((l * d + b) * right + r) * N + k) = v;
              }
    M = M * S;
  }
  const cplx t = twist.trace_weight(c, cd);
  CMatrix Q = CMatrix::Zero(D, D);
  cplx norm = 0.0;
  for (int m = 0; m < N; ++m) {
    const cplx w = std::pow(t, m);
    norm += w;
    for (Index i = 0; i < D; ++i)
      for (Index j = 0; j < D; ++j) Q(i, j) += w * M(i * N + m, j * N + m);
  }
  return std::exp(cplx(0.0, 1.0) * z * twist(c)) * Q / norm;
}

std::vector<cplx> hypergeometric_diagonal(cplx z, int a, const Representation& rep, const TwistConfig& twist) {
  const int ad = 3 - a;
  const double l1 = rep.weight().shifted(1), l2 = rep.weight().shifted(2);
  const cplx x = 1.0 / (1.0 - std::exp(cplx(0.0, 1.0) * (twist(a) - twist(ad))));
  const CMatrix& Jd = rep.J(ad, ad);
  const double nu0 = Jd(0, 0).real();
  std::vector<cplx> out;
  for (Index i = 0; i < rep.dim(); ++i) {
    const double nu = Jd(i, i).real();
    // Gamma(z - nu + 1/2) / Gamma(z - nu0 + 1/2)
    cplx g = 1.0;
    const int shift = static_cast<int>(std::lround(nu0 - nu));
    const cplx base = z - nu0 + 0.5;
    for (int j = 0; j < shift; ++j) g *= base + static_cast<double>(j);
    for (int j = 0; j < -shift; ++j) g /= base - 1.0 - static_cast<double>(j);
    // terminating 2F1(nu - l1, nu - l2; 1/2 - z + nu; x)
    const double A = nu - l1, B = nu - l2;
    const cplx C = 0.5 - z + nu;
    cplx sum = 0.0, term = 1.0;
    for (int k = 0; k < 64; ++k) {
      sum += term;
      if (std::abs(A + k) < 1e-12 || std::abs(B + k) < 1e-12) break;
      term *= (A + k) * (B + k) / ((C + static_cast<double>(k)) * (k + 1.0)) * x;
    }
    out.push_back(g * sum);
  }
  return out;
}

cplx truncated_trace_sum(int k, cplx t, int M) {
  cplx s = 0.0;
  for (int m = 0; m < M; ++m) s += std::pow(static_cast<double>(m), k) * std::pow(t, m);
  return (1.0 - t) * s;
}

CMatrix yang_r_matrix(cplx z, int n) {
  CMatrix P = CMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) P(i * n + j, j * n + i) = 1.0;
  return (z * CMatrix::Identity(n * n, n * n) + P) / (z + 1.0);
}

double harmonic(int m) {
  double h = 0;
  for (int j = 1; j <= m; ++j) h += 1.0 / j;
  return h;
}

double digamma_density(const std::vector<int>& Ahat, int a) {
  using boost::math::digamma;
  double h = 0;
  for (int k = 1; k <= a; ++k) {
    const int kb = 2 * a - k + 1;
    const double x = 0.5 * (Ahat[k - 1] - Ahat[kb - 1] + 1);
    const double y = 0.5 * (Ahat[kb - 1] + Ahat[k - 1] + 1) + 2 * a - k;
    h += -2.0 * (digamma(x) - digamma(y));
  }
  return h;
}

std::vector<cplx> one_magnon_roots(cplx dphi, double A, double B, int L) {
  // (z - A)/(z - B) = w, w^L = exp(-i dphi)
  std::vector<cplx> out;
  for (int k = 0; k < L; ++k) {
    const cplx w = std::exp(cplx(0.0, 1.0) * (-dphi + 2.0 * std::numbers::pi * k) / static_cast<double>(L));
    if (std::abs(1.0 - w) < 1e-12) continue;
    out.push_back((A - w * B) / (1.0 - w));
  }
  return out;
}

}  // namespace spinchain::oracle
