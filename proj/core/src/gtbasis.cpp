#include "spinchain/gtbasis.hpp"

#include <algorithm>
#include <functional>

#include "spinchain/errors.hpp"
#include "spinchain/parse.hpp"

namespace spinchain {

HighestWeight::HighestWeight(std::vector<int> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) throw InputError("highest weight needs at least one component");
  for (std::size_t i = 0; i + 1 < lambda_.size(); ++i)
    if (lambda_[i] < lambda_[i + 1])
      throw InputError("highest weight " + str() + " is not weakly decreasing at position " + std::to_string(i + 1));
}

HighestWeight HighestWeight::parse(std::string_view text) { return HighestWeight(parse_int_list(text)); }

std::string HighestWeight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lambda_.size(); ++i) s += (i ? "," : "") + std::to_string(lambda_[i]);
  return s + ")";
}

std::vector<int> GTPattern::flattened() const {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

bool GTPattern::interlaces() const {
  int n = static_cast<int>(rows.size());
  for (int k = 1; k < n; ++k)
    for (int i = 1; i <= k; ++i)
      if (!(m(k + 1, i) >= m(k, i) && m(k, i) >= m(k + 1, i + 1))) return false;
  return true;
}

std::vector<GTPattern> enumerate_patterns(const HighestWeight& hw) {
  std::vector<GTPattern> out;
  GTPattern p;
  p.rows.push_back(hw.lambda());
  std::function<void()> rec = [&]() {
    const std::vector<int> top = p.rows.back();
    if (top.size() == 1) {
      out.push_back(p);
      return;
    }
    std::vector<int> next(top.size() - 1);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == next.size()) {
        p.rows.push_back(next);
        rec();
        p.rows.pop_back();
        return;
      }
      for (int v = top[i + 1]; v <= top[i]; ++v) {
        next[i] = v;
        fill(i + 1);
      }
    };
    fill(0);
  };
  rec();
  std::sort(out.begin(), out.end(),
            [](const GTPattern& a, const GTPattern& b) { return a.flattened() > b.flattened(); });
  return out;
}

ExactMatrix ExactMatrix::identity(Index dim) {
  ExactMatrix m(dim);
  for (Index i = 0; i < dim; ++i) m.add(i, i, 1);
  return m;
}

void ExactMatrix::add(Index r, Index c, Rational v) {
  if (v.numerator() == 0) return;
  auto& row = rows_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second.numerator() == 0) row.erase(it);
  }
}

Rational ExactMatrix::at(Index r, Index c) const {
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  ExactMatrix out(dim());
  for (Index r = 0; r < dim(); ++r)
    for (const auto& [k, v] : rows_[r])
      for (const auto& [c, w] : o.rows_[k]) out.add(r, c, v * w);
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix out = *this;
  for (Index r = 0; r < dim(); ++r)
    for (const auto& [c, v] : o.rows_[r]) out.add(r, c, v);
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(-1); }

ExactMatrix ExactMatrix::scaled(Rational s) const {
  ExactMatrix out(dim());
  if (s.numerator() == 0) return out;
  for (Index r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[r]) out.rows_[r].emplace(c, v * s);
  return out;
}

CMatrix ExactMatrix::to_complex() const {
  CMatrix m = CMatrix::Zero(dim(), dim());
  for (Index r = 0; r < dim(); ++r)
    for (const auto& [c, v] : rows_[r]) m(r, c) = boost::rational_cast<double>(v);
  return m;
}

ExactMatrix exact_commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

Representation::Representation(HighestWeight hw) : hw_(std::move(hw)), patterns_(enumerate_patterns(hw_)) {
  const int n = hw_.n();
  const Index d = dim();
  std::map<std::vector<int>, Index> lookup;
  for (Index i = 0; i < d; ++i) lookup.emplace(patterns_[i].flattened(), i);

  exact_.assign(static_cast<std::size_t>(n * n), ExactMatrix(d));
  std::vector<bool> done(static_cast<std::size_t>(n * n), false);

  for (int k = 1; k <= n; ++k) {
    ExactMatrix& E = exact_[idx(k, k)];
    for (Index p = 0; p < d; ++p) {
      int v = 0;
      for (int i = 1; i <= k; ++i) v += patterns_[p].m(k, i);
      for (int i = 1; i < k; ++i) v -= patterns_[p].m(k - 1, i);
      E.add(p, p, v);
    }
    done[idx(k, k)] = true;
  }

  for (int k = 1; k < n; ++k) {
    ExactMatrix& up = exact_[idx(k, k + 1)];
    ExactMatrix& down = exact_[idx(k + 1, k)];
    for (Index p = 0; p < d; ++p) {
      const GTPattern& pat = patterns_[p];
      auto l = [&](int row, int i) { return std::int64_t{pat.m(row, i)} - i + 1; };
      for (int i = 1; i <= k; ++i) {
        Rational den = 1;
        for (int j = 1; j <= k; ++j)
          if (j != i) den *= l(k, i) - l(k, j);

        Rational num = 1;
        for (int j = 1; j <= k + 1; ++j) num *= l(k, i) - l(k + 1, j);
        GTPattern t = pat;
        t.rows[n - k][i - 1] += 1;
        if (auto it = lookup.find(t.flattened()); it != lookup.end()) up.add(it->second, p, -num / den);

        num = 1;
        for (int j = 1; j <= k - 1; ++j) num *= l(k, i) - l(k - 1, j);
        t = pat;
        t.rows[n - k][i - 1] -= 1;
        if (auto it = lookup.find(t.flattened()); it != lookup.end()) down.add(it->second, p, num / den);
      }
    }
    done[idx(k, k + 1)] = done[idx(k + 1, k)] = true;
  }

  std::function<const ExactMatrix&(int, int)> get = [&](int a, int b) -> const ExactMatrix& {
    if (!done[idx(a, b)]) {
      int c = b > a ? a + 1 : a - 1;
      exact_[idx(a, b)] = exact_commutator(get(a, c), get(c, b));
      done[idx(a, b)] = true;
    }
    return exact_[idx(a, b)];
  };
  complex_.resize(exact_.size());
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) complex_[idx(a, b)] = get(a, b).to_complex();
}

std::size_t Representation::idx(int a, int b) const {
  const int n = hw_.n();
  if (a < 1 || a > n || b < 1 || b > n)
    throw InputError("generator index (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  return static_cast<std::size_t>((a - 1) * n + (b - 1));
}

LinOp generator_matrix(int a, int b, const Representation& rep) { return LinOp(rep.J(a, b), rep.basis()); }

namespace {

template <class M, class Get, class Ident>
std::vector<std::vector<M>> powers(const std::vector<int>& set, int k, Get get, Ident ident) {
  const std::size_t q = set.size();
  const M zero = ident() - ident();
  std::vector<std::vector<M>> P(q, std::vector<M>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) P[i][j] = i == j ? ident() : zero;
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<M>> next(q, std::vector<M>(q));
    for (std::size_t A = 0; A < q; ++A)
      for (std::size_t B = 0; B < q; ++B) {
        M acc = zero;
        for (std::size_t C = 0; C < q; ++C) acc = acc + P[C][B] * get(set[A], set[C]);
        next[A][B] = acc;
      }
    P = std::move(next);
  }
  return P;
}

}  // namespace

std::vector<std::vector<CMatrix>> power_table(const GeneratorTable& J, Index dim, const std::vector<int>& set, int k) {
  return powers<CMatrix>(set, k, J, [dim]() -> CMatrix { return CMatrix::Identity(dim, dim); });
}

std::vector<std::vector<CMatrix>> power_table(const Representation& rep, const std::vector<int>& set, int k) {
  return power_table([&](int a, int b) -> const CMatrix& { return rep.J(a, b); }, rep.dim(), set, k);
}

long weyl_dimension(const std::vector<int>& lambda) {
  const int n = static_cast<int>(lambda.size());
  // prod_{i<j} (l_i - l_j + j - i) / (j - i), accumulated exactly
  Rational v = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v *= Rational(lambda[i] - lambda[j] + j - i, j - i);
  return static_cast<long>(boost::rational_cast<std::int64_t>(v));
}

LinOp casimir(int k, const IndexSet& I, const Representation& rep) {
  if (I.empty()) throw InputError("casimir needs a nonempty index set");
  if (k < 1) throw InputError("casimir order must be >= 1");
  auto P = power_table(rep, I.members(), k);
  CMatrix C = CMatrix::Zero(rep.dim(), rep.dim());
  for (std::size_t a = 0; a < P.size(); ++a) C += P[a][a];
  return LinOp(std::move(C), rep.basis());
}

ExactMatrix exact_casimir(int k, const IndexSet& I, const Representation& rep) {
  if (I.empty()) throw InputError("casimir needs a nonempty index set");
  if (k < 1) throw InputError("casimir order must be >= 1");
  const Index d = rep.dim();
  auto P = powers<ExactMatrix>(
      I.members(), k, [&](int a, int b) -> const ExactMatrix& { return rep.exact(a, b); },
      [d]() { return ExactMatrix::identity(d); });
  ExactMatrix C(d);
  for (std::size_t a = 0; a < P.size(); ++a) C = C + P[a][a];
  return C;
}

}  // namespace spinchain
