#pragma once

#include <map>
#include <utility>
#include <vector>

#include "spinchain/gtbasis.hpp"
#include "spinchain/index_set.hpp"
#include "spinchain/linop.hpp"

namespace spinchain {

/// One gl(Ibar) isotypic block: shifted weights ell_1 > ... > ell_q and the spectral projector.
struct WeightBlock {
  std::vector<int> ell;
  CMatrix projector;
  Index multiplicity = 0;
};

struct ShiftedWeightTable {
  IndexSet subalgebra;  ///< Ibar
  int q = 0;
  std::vector<WeightBlock> blocks;

  /// Operator ell_i (1-based) as sum over blocks of ell_i * P.
  CMatrix ell_operator(int i) const;
};

enum class WeightRoute {
  Branching,            ///< match Casimir spectra against all candidate gl(Ibar) highest weights
  HarishChandraNewton,  ///< solve the Harish-Chandra system per joint eigenvalue tuple
};

/// C_i = sum_k prod_{j != k} (1 + 1/(ell_k - ell_j)) ell_k^i.
double harish_chandra_casimir(const std::vector<double>& ell, int i);

/// Newton solve of the Harish-Chandra system for integer ell (strictly decreasing).
/// `center` supplies lattice seeds ell_k = center_k + shift. Throws ConvergenceError.
std::vector<int> solve_harish_chandra(const std::vector<double>& casimirs, const std::vector<int>& center, int spread);

/// Shifted weights of all dominant weights of length q with entries in [lo, hi].
std::vector<std::vector<int>> candidate_ells(int q, int lo, int hi);

/// Joint eigenspaces of commuting Casimirs C_1..C_q, labelled by the candidate whose
/// Harish-Chandra values match. Throws VerificationError when a block matches nothing.
std::vector<WeightBlock> decompose_by_casimirs(const std::vector<CMatrix>& casimirs,
                                               const std::vector<std::vector<int>>& candidates);

/// Blocks of V under gl(Ibar), Ibar = complement of I. Requires Ibar nonempty.
ShiftedWeightTable shifted_weights(const IndexSet& I, const Representation& rep,
                                   WeightRoute route = WeightRoute::Branching);

/// a_k = (-1)^{q+k} e_{q-k+1}(ell), k = 1..q.
template <class T>
std::vector<T> capelli_coefficients(const std::vector<T>& ell) {
  const std::size_t q = ell.size();
  std::vector<T> e(q + 1, T(0));
  e[0] = T(1);
  for (const T& x : ell)
    for (std::size_t r = q; r >= 1; --r) e[r] += e[r - 1] * x;
  std::vector<T> a(q);
  for (std::size_t k = 1; k <= q; ++k) a[k - 1] = ((q + k) % 2 ? T(-1) : T(1)) * e[q - k + 1];
  return a;
}

/// (J^k)^{adot}_a = sum_c J^c_a (J^{k-1})^{adot}_c with the inner power over Ibar.
/// Returns entries for k = 1..kmax, keyed by (a, adot).
std::map<std::pair<int, int>, std::vector<CMatrix>> mixed_powers(const IndexSet& I, const Representation& rep,
                                                                 int kmax);

/// Max-entry residual of (J^{q+1}) - sum_k (J^k) a_k(ell) over all (a in I, adot in Ibar).
double verify_cayley_hamilton(const IndexSet& I, const Representation& rep);

struct XBasis {
  IndexSet I;
  int q = 0;
  /// X[(a, adot)][k-1] = (X^k)^{adot}_a.
  std::map<std::pair<int, int>, std::vector<CMatrix>> X;
  double reconstruction_residual = 0;  ///< J^i = sum_k X^k Delta_k ell_k^{i-1}, i = 1..q+1
  double exchange_residual = 0;        ///< ell_i X^k = X^k (delta_ik + ell_i)
  double casimir_exchange_residual = 0;  ///< C_2 X^k = X^k (C_2 + q + 2 ell_k)
};

XBasis x_basis(const IndexSet& I, const Representation& rep);

}  // namespace spinchain
