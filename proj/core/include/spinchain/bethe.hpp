#pragma once

#include <cstdint>
#include <vector>

#include "spinchain/gtbasis.hpp"
#include "spinchain/index_set.hpp"
#include "spinchain/linop.hpp"
#include "spinchain/polynomial.hpp"
#include "spinchain/qfactory.hpp"
#include "spinchain/twist.hpp"

namespace spinchain {

/// Joint eigenvector of H and the Q-operators on V^{(x)L}.
struct EigenState {
  CVector vector;
  std::vector<int> charges;  ///< eigenvalues of sum_sites J^a_a, a = 1..n
  cplx energy_H{0.0, 0.0};
  double residual = 0;  ///< max relative ||O v - <O> v|| over H and the Q probes
};

/// Eigenvectors of H plus a random combination of Q_I(z0) for the given sets.
/// Throws VerificationError if some vector is not a joint eigenvector within 1e-8.
std::vector<EigenState> find_eigenstates(const QFamily& fam, const CMatrix& H, const std::vector<IndexSet>& probes,
                                         std::uint64_t seed = 7);

/// Index sets I_0 = {} ⊂ I_1 ⊂ ... ⊂ I_n of a Hasse path; `path` lists the added indices in order.
std::vector<IndexSet> path_sets(const std::vector<int>& path);

/// Polynomial part of <v|Q_I(z)|v> / <v|v>, after removing exp(i z Phi_I) and r0_tail(z, q)^L.
CirclePolynomial q_eigenvalue_polynomial(const QFamily& fam, const IndexSet& I, const EigenState& state);

std::vector<cplx> q_eigenvalue_roots(const QFamily& fam, const IndexSet& I, const EigenState& state);

struct BetheRootSet {
  std::vector<int> path;                  ///< permutation of 1..n
  std::vector<std::vector<cplx>> levels;  ///< levels[i] = roots of Q_{I_i}, i = 0..n
};

BetheRootSet extract_roots(const QFamily& fam, const std::vector<int>& path, const EigenState& state);

struct BetheCheck {
  double residual = 0;  ///< max |lhs/rhs - 1|
  bool collision = false;
};

/// Level i = 1..n-1, q = n - i, root z of level i:
///   exp(i(phi_{path_{i+1}} - phi_{path_i})) ((z - (q-1)/2 - L_{q+1} - 1/2) / (z - (q-1)/2 - L_q + 1/2))^L
///     = prod_{y in i-1} (z-y-1/2)/(z-y+1/2) prod_{z' in i, z' != z} (z-z'+1)/(z-z'-1) prod_{w in i+1} (z-w-1/2)/(z-w+1/2)
/// with path 1-based and L_k = lambda_k - k + 1.
BetheCheck bethe_residual(const BetheRootSet& roots, const HighestWeight& hw, int L, const TwistConfig& twist);

struct NewtonOptions {
  int max_iterations = 200;
  double tolerance = 1e-12;
  double perturbation = 0.0;  ///< random displacement applied to the seed roots
  std::uint64_t seed = 1;
};

/// Damped Newton on the logarithmic Bethe equations, starting from `start`
/// (whose level sizes fix the magnon numbers). Throws ConvergenceError.
BetheRootSet solve_bethe_newton(const HighestWeight& hw, int L, const TwistConfig& twist, const BetheRootSet& start,
                                const NewtonOptions& options = {});

/// sum over levels i and roots z of 1/(z - (q-1)/2 - L_{q+1} - 1/2) - 1/(z - (q-1)/2 - L_q + 1/2).
cplx energy_from_roots(const BetheRootSet& roots, const HighestWeight& hw);

}  // namespace spinchain
