#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spinchain/gtbasis.hpp"
#include "spinchain/index_set.hpp"
#include "spinchain/linop.hpp"
#include "spinchain/weights.hpp"

namespace spinchain {

enum class Normalization {
  Polynomial,  ///< rho_I chosen so that all Q-operators are polynomial up to the twist exponential
  Raw,         ///< rho_I = 1: block values prod_k Gamma(z - q/2 - ell_k + 1)
};

/// Rising factorial (x)_m, m >= 0.
cplx pochhammer(cplx x, int m);

/// Gamma function on the complex plane (Lanczos). Throws PoleError at non-positive integers.
cplx complex_gamma(cplx x);

/// Scalar prod_{i=q+1}^{n} (z - q/2 + 1 - L_i)_{lambda_i - lambda_n}, L_i = lambda_i - i + 1.
cplx r0_tail(cplx z, int q, const HighestWeight& hw);

/// Value of R0 on a shifted-weight block (ell has length q).
cplx r0_block_value(cplx z, const std::vector<int>& ell, const HighestWeight& hw,
                    Normalization norm = Normalization::Polynomial);

LinOp r0(cplx z, const IndexSet& I, const Representation& rep, Normalization norm = Normalization::Polynomial);

/// Oscillator pair (x_{c,cdot}, d/dx_{c,cdot}) with c in I, cdot in Ibar.
struct LaxMode {
  int c;
  int cdot;
};

using Exponent = std::vector<int>;
using NormalTerm = std::pair<Exponent, Exponent>;  ///< (e, f) for x^e d^f

/// Degenerate Lax operator R_I(z) = exp(x.J) R0(z) exp(-d.J) in normal order,
/// R_I = sum_{e,f} x^e d^f (x) A_e R0 B_f, where A_e = prod (J^c_cdot)^e / e! and
/// B_f = (-1)^{|f|} prod (J^cdot_c)^f / f!. z-independent data is built once.
class DegenerateLax {
 public:
  DegenerateLax(IndexSet I, const Representation& rep);

  const IndexSet& I() const { return I_; }
  const std::vector<LaxMode>& modes() const { return modes_; }
  int degree_bound() const { return D_; }
  /// Empty when Ibar is empty.
  const std::optional<ShiftedWeightTable>& table() const { return table_; }

  CMatrix r0(cplx z, Normalization norm = Normalization::Polynomial) const;
  std::map<NormalTerm, CMatrix> coefficients(cplx z, Normalization norm = Normalization::Polynomial) const;

 private:
  IndexSet I_;
  const Representation* rep_;
  std::vector<LaxMode> modes_;
  int D_ = 0;
  std::optional<ShiftedWeightTable> table_;
  std::vector<std::pair<Exponent, CMatrix>> raise_;  // A_e, nonzero only
  std::vector<std::pair<Exponent, CMatrix>> lower_;  // B_f, nonzero only
};

struct LaxExpansion {
  std::vector<LaxMode> modes;
  std::map<NormalTerm, LinOp> terms;
};

LaxExpansion r_I(cplx z, const IndexSet& I, const Representation& rep);

/// L(z) = z + sum_{A,B} e_{AB} (x) J^B_A on C^n (x) V.
LinOp lax_fundamental(cplx z, const Representation& rep);

/// Max-entry residuals of the four intertwining block equations for R0 (minimal representation).
std::array<double, 4> verify_block_equations(cplx z, const IndexSet& I, const Representation& rep);

/// All exponent vectors of given length with total degree exactly `degree`.
std::vector<Exponent> monomials_of_degree(int vars, int degree);

}  // namespace spinchain
