#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace spinchain {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Ordered basis description. `factors` lists tensor-factor dimensions, leftmost first.
struct BasisTag {
  std::string label;
  std::vector<Index> factors;

  Index dim() const;
  static BasisTag single(std::string label, Index d);
  BasisTag tensor(const BasisTag& right) const;
  BasisTag power(int L) const;
};

/// Square dense complex operator with its basis metadata.
class LinOp {
 public:
  LinOp(CMatrix m, BasisTag tag);

  const CMatrix& matrix() const { return m_; }
  const BasisTag& basis() const { return tag_; }
  Index dim() const { return m_.rows(); }

 private:
  CMatrix m_;
  BasisTag tag_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix commutator(const CMatrix& a, const CMatrix& b);
double max_abs(const CMatrix& m);

/// Operator `m` placed on site `j` (0-based) of an L-fold tensor power of dimension d.
CMatrix embed_site(const CMatrix& m, int j, int L, Index d);

/// Cyclic shift S with S(v_1 ⊗ … ⊗ v_L) = v_2 ⊗ … ⊗ v_L ⊗ v_1.
CMatrix cyclic_shift(Index d, int L);

/// Flip operator on C^d ⊗ C^d.
CMatrix permutation(Index d);

}  // namespace spinchain
