#pragma once

#include <vector>

#include "spinchain/gtbasis.hpp"
#include "spinchain/linop.hpp"
#include "spinchain/twist.hpp"

namespace spinchain {

/// a x s rectangle after shifting lambda_n to 0.
struct RectangularShape {
  int a = 0;
  int s = 0;
  int alpha = 0;  ///< s - a
  int beta = 0;   ///< s * a
  int shift = 0;  ///< lambda_n
  double residual = 0;
};

/// Checks J^c_b J^a_c = alpha J^a_b + beta delta^a_b on generators shifted by lambda_n.
/// Throws InputError naming the worst (a,b) entry when the weight is not rectangular.
RectangularShape check_rectangular(const Representation& rep);

struct TensorBlock {
  std::vector<int> Lambda;  ///< highest weight of the block, lambda_n shifted to 0
  std::vector<int> Ahat;    ///< Lambda_k - k + 1, zero-padded to length max(n, 2a)
  CMatrix projector;
  Index multiplicity = 0;
  int parity = 1;  ///< eigenvalue of the flip operator on the block
};

struct TensorWeightTable {
  RectangularShape shape;
  std::vector<TensorBlock> blocks;  ///< ordered by Lambda descending
};

TensorWeightTable tensor_shifted_weights(const Representation& rep);

/// prod_k Gamma-ratio of the R-matrix merged into prod_{j=0}^{D_k-d_k-1} (z+1-D_k+j)/(z+d_k+j),
/// d_k = (A_k - A_kbar + 1)/2, D_k = s + a - k + 1, kbar = 2a - k + 1.
cplx r_block_value(cplx z, const TensorBlock& block, const RectangularShape& shape);

/// -d/dz log of the block value at 0: 2 sum_k sum_{m=d_k}^{D_k-1} 1/m.
double h_block_value(const TensorBlock& block, const RectangularShape& shape);

/// Flip-operator sign (-1)^{sum_k (D_k - d_k)}.
int block_parity(const TensorBlock& block, const RectangularShape& shape);

LinOp r_lambda_lambda(cplx z, const Representation& rep, const TensorWeightTable& table);
LinOp r_lambda_lambda(cplx z, const Representation& rep);

LinOp hamiltonian_density(const Representation& rep, const TensorWeightTable& table);
LinOp hamiltonian_density(const Representation& rep);

/// sum_{i<L} h_{i,i+1} + U h_{L,1} U^{-1}, U = exp(i sum_a phi_a J^a_a) on site L.
LinOp hamiltonian_total(const Representation& rep, int L, const TwistConfig& twist);
LinOp hamiltonian_total(const Representation& rep, const TensorWeightTable& table, int L, const TwistConfig& twist);

/// Tensor-product-graph R-check: coefficients from the quadratic-Casimir recursion, compared with
/// P R(z) after matching one overall scalar. Returns the relative residual.
double tpg_crosscheck(cplx z, const Representation& rep);

}  // namespace spinchain
