#include "spinchain/qfactory.hpp"

#include <algorithm>
#include <numeric>

#include "spinchain/errors.hpp"
#include "spinchain/parallel.hpp"

namespace spinchain {

cplx trace_rule(int k, cplx t) {
  if (k < 0) throw InputError("trace_rule needs k >= 0");
  if (std::abs(1.0 - t) < 1e-14) throw PoleError("trace_rule evaluated at t = 1");
  std::vector<double> P{1.0};  // coefficients in t
  for (int kk = 1; kk <= k; ++kk) {
    std::vector<double> next(P.size() + 1, 0.0);
    for (std::size_t j = 0; j < P.size(); ++j) {
      // t (1 - t) d/dt t^j = j t^j - j t^{j+1};  k t * t^j = k t^{j+1}
      next[j] += static_cast<double>(j) * P[j];
      next[j + 1] += (kk - static_cast<double>(j)) * P[j];
    }
    P = std::move(next);
  }
  cplx num = 0.0;
  for (auto it = P.rbegin(); it != P.rend(); ++it) num = num * t + *it;
  return num / std::pow(1.0 - t, k);
}

namespace {

using ScalarPoly = std::map<Exponent, double>;

// prod_m prod_{r < f_m} (n_m + s_m - r)
ScalarPoly falling_factorial(const Exponent& s, const Exponent& f) {
  const std::size_t m = s.size();
  ScalarPoly p{{Exponent(m, 0), 1.0}};
  for (std::size_t i = 0; i < m; ++i)
    for (int r = 0; r < f[i]; ++r) {
      ScalarPoly next;
      for (const auto& [e, c] : p) {
        next[e] += c * (s[i] - r);
        Exponent e2 = e;
        e2[i] += 1;
        next[e2] += c;
      }
      p = std::move(next);
    }
  return p;
}

CMatrix kron_power(const CMatrix& m, int L) {
  CMatrix out = m;
  for (int i = 1; i < L; ++i) out = kron(out, m);
  return out;
}

}  // namespace

TracePolynomial build_trace_polynomial(cplx z, const DegenerateLax& lax, int L) {
  if (L < 1) throw InputError("chain length must be >= 1");
  const auto& modes = lax.modes();
  const std::size_t m = modes.size();
  const auto coeffs = lax.coefficients(z);

  Exponent maxe(m, 0), maxf(m, 0);
  for (const auto& [key, C] : coeffs)
    for (std::size_t i = 0; i < m; ++i) {
      maxe[i] = std::max(maxe[i], key.first[i]);
      maxf[i] = std::max(maxf[i], key.second[i]);
    }

  using Poly = std::map<Exponent, CMatrix>;
  const Exponent zero(m, 0);
  std::map<Exponent, Poly> state;
  state[zero][zero] = CMatrix::Identity(1, 1);

  for (int site = 0; site < L; ++site) {
    const int remaining = L - site - 1;
    std::map<Exponent, Poly> next;
    for (const auto& [s, poly] : state)
      for (const auto& [key, C] : coeffs) {
        const auto& [e, f] = key;
        Exponent s2(m);
        bool reachable = true;
        for (std::size_t i = 0; i < m; ++i) {
          s2[i] = s[i] - f[i] + e[i];
          if (s2[i] > remaining * maxf[i] || s2[i] < -remaining * maxe[i]) reachable = false;
        }
        if (!reachable) continue;
        const ScalarPoly ff = falling_factorial(s, f);
        Poly& target = next[s2];
        for (const auto& [pe, M] : poly) {
          const CMatrix K = kron(C, M);
          for (const auto& [fe, c] : ff) {
            if (c == 0.0) continue;
            Exponent k(m);
            for (std::size_t i = 0; i < m; ++i) k[i] = pe[i] + fe[i];
            auto it = target.find(k);
            if (it == target.end()) target.emplace(k, c * K);
            else it->second += c * K;
          }
        }
      }
    state = std::move(next);
  }
  TracePolynomial out{modes, {}};
  if (auto it = state.find(zero); it != state.end()) out.terms = std::move(it->second);
  return out;
}

CMatrix contract_trace(const TracePolynomial& poly, const TwistConfig& twist, cplx z, const IndexSet& I) {
  if (poly.terms.empty()) throw Error("empty trace polynomial");
  const auto& any = poly.terms.begin()->second;
  CMatrix Q = CMatrix::Zero(any.rows(), any.cols());
  std::vector<cplx> t;
  for (const auto& md : poly.modes) t.push_back(twist.trace_weight(md.c, md.cdot));
  for (const auto& [e, M] : poly.terms) {
    cplx c = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i) c *= trace_rule(e[i], t[i]);
    Q += c * M;
  }
  return std::exp(cplx(0.0, 1.0) * z * twist.total(I)) * Q;
}

QFamily::QFamily(const Representation& rep, int L, TwistConfig twist) : rep_(&rep), L_(L), twist_(std::move(twist)) {
  if (L < 1) throw InputError("chain length must be >= 1");
  twist_.validate(rep.n());
}

std::shared_ptr<const DegenerateLax> QFamily::lax(const IndexSet& I) const {
  {
    std::lock_guard<std::mutex> g(mutex_);
    if (auto it = lax_cache_.find(I); it != lax_cache_.end()) return it->second;
  }
  auto built = std::make_shared<const DegenerateLax>(I, *rep_);
  std::lock_guard<std::mutex> g(mutex_);
  return lax_cache_.emplace(I, std::move(built)).first->second;
}

TracePolynomial QFamily::trace_polynomial(const IndexSet& I, cplx z) const {
  twist_.validate(rep_->n(), I);
  return build_trace_polynomial(z, *lax(I), L_);
}

CMatrix QFamily::q_matrix(const IndexSet& I, cplx z) const {
  if (I.n() != rep_->n()) throw InputError("index set rank differs from representation rank");
  twist_.validate(rep_->n(), I);
  const cplx pref = std::exp(cplx(0.0, 1.0) * z * twist_.total(I));
  auto l = lax(I);
  if (l->modes().empty()) return pref * kron_power(l->r0(z), L_);
  return contract_trace(build_trace_polynomial(z, *l, L_), twist_, z, I);
}

LinOp QFamily::q(const IndexSet& I, cplx z) const { return LinOp(q_matrix(I, z), basis()); }

int QFamily::degree_bound() const {
  const auto& lam = rep_->weight().lambda();
  int s = 0;
  for (int x : lam) s += x - lam.back();
  return L_ * s;
}

const MatrixPolynomial& QFamily::polynomial(const IndexSet& I) const {
  {
    std::lock_guard<std::mutex> g(mutex_);
    if (auto it = poly_cache_.find(I); it != poly_cache_.end()) return *it->second;
  }
  const cplx center(0.1, 0.05);
  const double radius = 2.7;
  const auto zs = circle_points(degree_bound() + 2, center, radius);
  std::vector<CMatrix> samples(zs.size());
  parallel_for(zs.size(), [&](std::size_t k) {
    samples[k] = q_matrix(I, zs[k]) * std::exp(-cplx(0.0, 1.0) * zs[k] * twist_.total(I));
  });
  auto p = std::make_shared<const MatrixPolynomial>(fit_matrix_on_circle(samples, center, radius));
  std::lock_guard<std::mutex> g(mutex_);
  return *poly_cache_.emplace(I, std::move(p)).first->second;
}

LinOp q_operator(cplx z, const IndexSet& I, const Representation& rep, int L, const TwistConfig& twist) {
  return QFamily(rep, L, twist).q(I, z);
}

double commutation_residual(const QFamily& fam, const IndexSet& I, const IndexSet& J, cplx z1, cplx z2) {
  const CMatrix A = fam.q_matrix(I, z1), B = fam.q_matrix(J, z2);
  return commutator(A, B).norm() / (A.norm() * B.norm());
}

cplx delta_pair(const TwistConfig& twist, int a, int b) {
  return cplx(0.0, 2.0) * std::sin((twist(a) - twist(b)) / 2.0);
}

Residual qq_residual(const QFamily& fam, const IndexSet& I, int a, int b, cplx z) {
  if (a == b || I.contains(a) || I.contains(b)) throw InputError("qq_residual needs distinct a, b outside I");
  const cplx delta = delta_pair(fam.twist(), a, b);
  if (std::abs(delta) < 1e-12) throw InputError("degenerate twist: phi_a = phi_b");
  const IndexSet Ia = I.with(a), Ib = I.with(b), Iab = Ia.with(b);
  const CMatrix lhs = delta * fam.q_matrix(Iab, z) * fam.q_matrix(I, z);
  const CMatrix r1 = fam.q_matrix(Ia, z + 0.5) * fam.q_matrix(Ib, z - 0.5);
  const CMatrix r2 = fam.q_matrix(Ia, z - 0.5) * fam.q_matrix(Ib, z + 0.5);
  Residual r;
  r.absolute = (lhs - r1 + r2).norm();
  r.relative = r.absolute / std::max({lhs.norm(), r1.norm(), r2.norm()});
  return r;
}

cplx delta_set(const TwistConfig& twist, const IndexSet& I) {
  const auto& a = I.members();
  cplx d = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) d *= delta_pair(twist, a[i], a[j]);
  return d;
}

Residual det_formula_residual(const QFamily& fam, const IndexSet& I, cplx z) {
  const int p = I.size();
  if (p < 1) throw InputError("determinant formula needs |I| >= 1");
  const cplx delta = delta_set(fam.twist(), I);
  if (std::abs(delta) < 1e-12) throw InputError("degenerate twist in determinant formula");
  const int n = fam.rep().n();
  std::vector<std::vector<CMatrix>> M(p, std::vector<CMatrix>(p));
  for (int i = 0; i < p; ++i)
    for (int j = 1; j <= p; ++j)
      M[i][j - 1] = fam.q_matrix(IndexSet(n, {I.members()[i]}), z - static_cast<double>(j) + 0.5 * (p + 1));

  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  const Index D = M[0][0].rows();
  CMatrix det = CMatrix::Zero(D, D);
  do {
    int inversions = 0;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        if (perm[i] > perm[j]) ++inversions;
    CMatrix term = CMatrix::Identity(D, D);
    for (int i = 0; i < p; ++i) term = term * M[i][perm[i]];
    det += (inversions % 2 ? -1.0 : 1.0) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  const CMatrix lhs = delta * fam.q_matrix(I, z);
  Residual r;
  r.absolute = (lhs - det).norm();
  r.relative = r.absolute / std::max(lhs.norm(), det.norm());
  return r;
}

CMatrix total_site_sum(const CMatrix& m, int L) {
  const Index d = m.rows();
  CMatrix out = embed_site(m, 0, L, d);
  for (int j = 1; j < L; ++j) out += embed_site(m, j, L, d);
  return out;
}

double cartan_residual(const QFamily& fam, const IndexSet& I, cplx z) {
  const CMatrix Q = fam.q_matrix(I, z);
  double res = 0;
  for (int a = 1; a <= fam.rep().n(); ++a)
    res = std::max(res, max_abs(commutator(Q, total_site_sum(fam.rep().J(a, a), fam.length()))));
  return res;
}

}  // namespace spinchain
