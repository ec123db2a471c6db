#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "spinchain/gtbasis.hpp"
#include "spinchain/index_set.hpp"
#include "spinchain/laxfactory.hpp"
#include "spinchain/linop.hpp"
#include "spinchain/polynomial.hpp"
#include "spinchain/twist.hpp"

namespace spinchain {

/// Normalized single-mode trace T_k(t) = (1 - t) sum_m m^k t^m = P_k(t) / (1 - t)^k,
/// P_0 = 1, P_k = t (1 - t) P_{k-1}' + k t P_{k-1}.
cplx trace_rule(int k, cplx t);

/// Diagonal Fock elements of the L-site monodromy as a polynomial in occupation numbers
/// n_{c,cdot}; terms[e] multiplies prod n^e and acts on V^{(x)L} (site 1 leftmost).
struct TracePolynomial {
  std::vector<LaxMode> modes;
  std::map<Exponent, CMatrix> terms;
};

TracePolynomial build_trace_polynomial(cplx z, const DegenerateLax& lax, int L);

/// Substitute n^k -> T_k(t) per mode and multiply by exp(i z sum_{a in I} phi_a).
CMatrix contract_trace(const TracePolynomial& poly, const TwistConfig& twist, cplx z, const IndexSet& I);

struct Residual {
  double absolute = 0;
  double relative = 0;
};

/// Q-operators of one chain (rep, L, twist). Lax data per index set is built once and cached;
/// evaluation is safe from concurrent threads.
class QFamily {
 public:
  QFamily(const Representation& rep, int L, TwistConfig twist);

  const Representation& rep() const { return *rep_; }
  int length() const { return L_; }
  const TwistConfig& twist() const { return twist_; }
  BasisTag basis() const { return rep_->basis().power(L_); }

  LinOp q(const IndexSet& I, cplx z) const;
  CMatrix q_matrix(const IndexSet& I, cplx z) const;
  TracePolynomial trace_polynomial(const IndexSet& I, cplx z) const;

  /// Q_I / exp(i z Phi_I) as a matrix polynomial, degree discovered by coefficient thresholding.
  const MatrixPolynomial& polynomial(const IndexSet& I) const;
  /// Degree bound used for sampling: L * sum_i (lambda_i - lambda_n).
  int degree_bound() const;

 private:
  std::shared_ptr<const DegenerateLax> lax(const IndexSet& I) const;

  const Representation* rep_;
  int L_;
  TwistConfig twist_;
  mutable std::mutex mutex_;
  mutable std::map<IndexSet, std::shared_ptr<const DegenerateLax>> lax_cache_;
  mutable std::map<IndexSet, std::shared_ptr<const MatrixPolynomial>> poly_cache_;
};

LinOp q_operator(cplx z, const IndexSet& I, const Representation& rep, int L, const TwistConfig& twist);

/// ||[Q_I(z1), Q_J(z2)]|| / (||Q_I|| ||Q_J||), Frobenius norms.
double commutation_residual(const QFamily& fam, const IndexSet& I, const IndexSet& J, cplx z1, cplx z2);

/// Delta_ab = 2 i sin((phi_a - phi_b) / 2).
cplx delta_pair(const TwistConfig& twist, int a, int b);

/// Delta_ab Q_{I+a+b}(z) Q_I(z) - Q_{I+a}(z+1/2) Q_{I+b}(z-1/2) + Q_{I+a}(z-1/2) Q_{I+b}(z+1/2).
Residual qq_residual(const QFamily& fam, const IndexSet& I, int a, int b, cplx z);

/// Delta_I = prod_{i<j} 2 i sin((phi_{a_i} - phi_{a_j}) / 2).
cplx delta_set(const TwistConfig& twist, const IndexSet& I);

/// Delta_I Q_I(z) - det[Q_{a_i}(z - j + (p+1)/2)]_{i,j=1..p}.
Residual det_formula_residual(const QFamily& fam, const IndexSet& I, cplx z);

/// max over a of ||[Q_I(z), sum_sites J^a_a]||.
double cartan_residual(const QFamily& fam, const IndexSet& I, cplx z);

/// Sum over sites of a single-site operator on V^{(x)L}.
CMatrix total_site_sum(const CMatrix& m, int L);

}  // namespace spinchain
