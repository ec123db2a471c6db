#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "spinchain/index_set.hpp"
#include "spinchain/linop.hpp"

namespace spinchain {

/// Dominant integral gl(n) weight, taken as given (no shift to lambda_n = 0).
class HighestWeight {
 public:
  explicit HighestWeight(std::vector<int> lambda);
  static HighestWeight parse(std::string_view text);

  int n() const { return static_cast<int>(lambda_.size()); }
  const std::vector<int>& lambda() const { return lambda_; }
  /// 1-based component lambda_i.
  int operator()(int i) const { return lambda_.at(i - 1); }
  /// Shifted weight lambda_i - i + 1 (1-based i).
  int shifted(int i) const { return lambda_.at(i - 1) - i + 1; }
  std::string str() const;

  bool operator==(const HighestWeight&) const = default;

 private:
  std::vector<int> lambda_;
};

/// rows[0] is the top row (length n, equal to lambda), rows[n-k] has length k.
struct GTPattern {
  std::vector<std::vector<int>> rows;

  /// m_{k,i} with 1 <= i <= k <= n.
  int m(int k, int i) const { return rows[rows.size() - k][i - 1]; }
  std::vector<int> flattened() const;
  bool interlaces() const;
};

/// All patterns of hw, sorted lexicographically descending on the flattened rows.
std::vector<GTPattern> enumerate_patterns(const HighestWeight& hw);

using Rational = boost::rational<std::int64_t>;

/// Sparse square matrix over the rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(Index dim) : rows_(dim) {}
  static ExactMatrix identity(Index dim);

  Index dim() const { return static_cast<Index>(rows_.size()); }
  void add(Index r, Index c, Rational v);
  Rational at(Index r, Index c) const;
  bool is_zero() const;
  const std::map<Index, Rational>& row(Index r) const { return rows_[r]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(Rational s) const;
  CMatrix to_complex() const;

 private:
  std::vector<std::map<Index, Rational>> rows_;
};

ExactMatrix exact_commutator(const ExactMatrix& a, const ExactMatrix& b);

/// Irreducible gl(n) module in the GT basis, with all generators J^a_b = E_ab
/// (upper index labels the row). Immutable after construction.
class Representation {
 public:
  explicit Representation(HighestWeight hw);

  const HighestWeight& weight() const { return hw_; }
  int n() const { return hw_.n(); }
  Index dim() const { return static_cast<Index>(patterns_.size()); }
  const std::vector<GTPattern>& patterns() const { return patterns_; }
  BasisTag basis() const { return BasisTag::single("gt" + hw_.str(), dim()); }

  /// J^a_b, 1-based.
  const CMatrix& J(int a, int b) const { return complex_[idx(a, b)]; }
  const ExactMatrix& exact(int a, int b) const { return exact_[idx(a, b)]; }

 private:
  std::size_t idx(int a, int b) const;

  HighestWeight hw_;
  std::vector<GTPattern> patterns_;
  std::vector<ExactMatrix> exact_;
  std::vector<CMatrix> complex_;
};

LinOp generator_matrix(int a, int b, const Representation& rep);

/// Generator accessor (a, b) -> J^a_b, 1-based.
using GeneratorTable = std::function<const CMatrix&(int, int)>;

/// Table of (J^k)^A_B for A,B in `set` for arbitrary generator matrices of size dim.
std::vector<std::vector<CMatrix>> power_table(const GeneratorTable& J, Index dim, const std::vector<int>& set, int k);

/// Weyl dimension of the gl(n) irrep with highest weight lambda.
long weyl_dimension(const std::vector<int>& lambda);

/// Table of (J^k)^A_B for A,B in `set`, built by (J^k)^A_B = sum_C (J^{k-1})^C_B J^A_C.
/// Entry [i][j] holds (J^k)^{set_i}_{set_j}.
std::vector<std::vector<CMatrix>> power_table(const Representation& rep, const std::vector<int>& set, int k);

/// C_k = sum_A (J^k)^A_A of the gl(I) subalgebra.
LinOp casimir(int k, const IndexSet& I, const Representation& rep);
ExactMatrix exact_casimir(int k, const IndexSet& I, const Representation& rep);

}  // namespace spinchain
