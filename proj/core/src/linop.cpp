#include "spinchain/linop.hpp"

#include <numeric>

#include "spinchain/errors.hpp"

namespace spinchain {

Index BasisTag::dim() const {
  return std::accumulate(factors.begin(), factors.end(), Index{1}, std::multiplies<>());
}

BasisTag BasisTag::single(std::string label, Index d) { return {std::move(label), {d}}; }

BasisTag BasisTag::tensor(const BasisTag& right) const {
  BasisTag out{label + "*" + right.label, factors};
  out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
  return out;
}

BasisTag BasisTag::power(int L) const {
  BasisTag out{label + "^" + std::to_string(L), {}};
  for (int i = 0; i < L; ++i) out.factors.insert(out.factors.end(), factors.begin(), factors.end());
  return out;
}

LinOp::LinOp(CMatrix m, BasisTag tag) : m_(std::move(m)), tag_(std::move(tag)) {
  if (m_.rows() != m_.cols()) throw Error("LinOp must be square");
  if (m_.rows() != tag_.dim()) throw Error("LinOp dimension does not match basis tag " + tag_.label);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

CMatrix embed_site(const CMatrix& m, int j, int L, Index d) {
  Index left = 1, right = 1;
  for (int i = 0; i < j; ++i) left *= d;
  for (int i = j + 1; i < L; ++i) right *= d;
  CMatrix out = kron(CMatrix::Identity(left, left), m);
  return kron(out, CMatrix::Identity(right, right));
}

CMatrix cyclic_shift(Index d, int L) {
  Index total = 1;
  for (int i = 0; i < L; ++i) total *= d;
  CMatrix S = CMatrix::Zero(total, total);
  std::vector<Index> digits(L);
  for (Index src = 0; src < total; ++src) {
    Index r = src;
    for (int i = L - 1; i >= 0; --i) {
      digits[i] = r % d;
      r /= d;
    }
    Index dst = 0;
    for (int i = 1; i <= L; ++i) dst = dst * d + digits[i % L];
    S(dst, src) = 1.0;
  }
  return S;
}

CMatrix permutation(Index d) {
  CMatrix P = CMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) P(j * d + i, i * d + j) = 1.0;
  return P;
}

}  // namespace spinchain
