#include "spinchain/laxfactory.hpp"

#include <cmath>

#include "spinchain/errors.hpp"

namespace spinchain {

cplx pochhammer(cplx x, int m) {
  if (m < 0) throw Error("negative Pochhammer length");
  cplx r = 1.0;
  for (int j = 0; j < m; ++j) r *= x + static_cast<double>(j);
  return r;
}

cplx complex_gamma(cplx x) {
  static const double g = 7.0;
  static const double c[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                             771.32342877765313,   -176.61502916214059,   12.507343278686905,
                             -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  const double rx = std::round(x.real());
  if (x.imag() == 0.0 && x.real() == rx && rx <= 0)
    throw PoleError("Gamma pole at " + std::to_string(static_cast<long>(rx)));
  if (x.real() < 0.5) return M_PI / (std::sin(M_PI * x) * complex_gamma(1.0 - x));
  x -= 1.0;
  cplx a = c[0];
  const cplx t = x + g + 0.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + static_cast<double>(i));
  return std::sqrt(2 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

cplx r0_tail(cplx z, int q, const HighestWeight& hw) {
  const cplx w = z - 0.5 * q + 1.0;
  cplx v = 1.0;
  for (int i = q + 1; i <= hw.n(); ++i) v *= pochhammer(w - static_cast<double>(hw.shifted(i)), hw(i) - hw(hw.n()));
  return v;
}

cplx r0_block_value(cplx z, const std::vector<int>& ell, const HighestWeight& hw, Normalization norm) {
  const int q = static_cast<int>(ell.size());
  const cplx w = z - 0.5 * q + 1.0;
  cplx v = 1.0;
  if (norm == Normalization::Raw) {
    for (int k = 0; k < q; ++k) v *= complex_gamma(w - static_cast<double>(ell[k]));
    return v;
  }
  v = r0_tail(z, q, hw);
  for (int k = 1; k <= q; ++k) {
    const int len = hw.shifted(k) - ell[k - 1];
    if (len < 0) throw VerificationError("shifted weight exceeds the highest-weight value");
    v *= pochhammer(w - static_cast<double>(hw.shifted(k)), len);
  }
  return v;
}

std::vector<Exponent> monomials_of_degree(int vars, int degree) {
  std::vector<Exponent> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(vars, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == vars - 1) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      self(self, k + 1, left - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

DegenerateLax::DegenerateLax(IndexSet I, const Representation& rep) : I_(std::move(I)), rep_(&rep) {
  if (I_.n() != rep.n()) throw InputError("index set rank differs from representation rank");
  const IndexSet bar = I_.complement();
  for (int c : I_.members())
    for (int cd : bar.members()) modes_.push_back({c, cd});
  const auto& lam = rep.weight().lambda();
  D_ = (lam.front() - lam.back()) * std::min(I_.size(), bar.size());
  if (!bar.empty()) table_ = shifted_weights(I_, rep);

  const Index d = rep.dim();
  const int m = static_cast<int>(modes_.size());
  // powers[mode][k] = J^k / k!
  std::vector<std::vector<CMatrix>> up(m), down(m);
  for (int i = 0; i < m; ++i) {
    up[i].push_back(CMatrix::Identity(d, d));
    down[i].push_back(CMatrix::Identity(d, d));
    for (int k = 1; k <= D_ + 1; ++k) {
      up[i].push_back(up[i].back() * rep.J(modes_[i].c, modes_[i].cdot) / static_cast<double>(k));
      down[i].push_back(down[i].back() * rep.J(modes_[i].cdot, modes_[i].c) / static_cast<double>(-k));
    }
  }
  const double scale = 1.0 + max_abs(rep.J(1, 1)) + (lam.front() - lam.back());
  for (int deg = 0; deg <= D_ + 1; ++deg) {
    for (const auto& e : monomials_of_degree(m, deg)) {
      CMatrix A = CMatrix::Identity(d, d), B = CMatrix::Identity(d, d);
      for (int i = 0; i < m; ++i) {
        A = A * up[i][e[i]];
        B = B * down[i][e[i]];
      }
      const bool zeroA = max_abs(A) < 1e-12 * scale, zeroB = max_abs(B) < 1e-12 * scale;
      if (deg == D_ + 1) {
        if (!zeroA || !zeroB) throw VerificationError("Lax truncation degree overflow");
        continue;
      }
      if (!zeroA) raise_.emplace_back(e, std::move(A));
      if (!zeroB) lower_.emplace_back(e, std::move(B));
    }
  }
}

CMatrix DegenerateLax::r0(cplx z, Normalization norm) const {
  const Index d = rep_->dim();
  if (!table_) {
    if (norm == Normalization::Raw) return CMatrix::Identity(d, d);
    return r0_tail(z, 0, rep_->weight()) * CMatrix::Identity(d, d);
  }
  CMatrix R = CMatrix::Zero(d, d);
  for (const auto& b : table_->blocks) R += r0_block_value(z, b.ell, rep_->weight(), norm) * b.projector;
  return R;
}

std::map<NormalTerm, CMatrix> DegenerateLax::coefficients(cplx z, Normalization norm) const {
  const CMatrix R = r0(z, norm);
  std::map<NormalTerm, CMatrix> out;
  for (const auto& [e, A] : raise_) {
    const CMatrix AR = A * R;
    for (const auto& [f, B] : lower_) {
      CMatrix X = AR * B;
      if (max_abs(X) == 0.0) continue;
      out.emplace(NormalTerm{e, f}, std::move(X));
    }
  }
  return out;
}

LinOp r0(cplx z, const IndexSet& I, const Representation& rep, Normalization norm) {
  if (I.n() != rep.n()) throw InputError("index set rank differs from representation rank");
  const IndexSet bar = I.complement();
  if (bar.empty()) {
    cplx v = norm == Normalization::Raw ? cplx(1.0) : r0_tail(z, 0, rep.weight());
    return LinOp(v * CMatrix::Identity(rep.dim(), rep.dim()), rep.basis());
  }
  const auto table = shifted_weights(I, rep);
  CMatrix R = CMatrix::Zero(rep.dim(), rep.dim());
  for (const auto& b : table.blocks) R += r0_block_value(z, b.ell, rep.weight(), norm) * b.projector;
  return LinOp(std::move(R), rep.basis());
}

LaxExpansion r_I(cplx z, const IndexSet& I, const Representation& rep) {
  DegenerateLax lax(I, rep);
  LaxExpansion out{lax.modes(), {}};
  for (auto& [key, m] : lax.coefficients(z)) out.terms.emplace(key, LinOp(std::move(m), rep.basis()));
  return out;
}

LinOp lax_fundamental(cplx z, const Representation& rep) {
  const int n = rep.n();
  const Index d = rep.dim();
  CMatrix L = z * CMatrix::Identity(n * d, n * d);
  for (int A = 1; A <= n; ++A)
    for (int B = 1; B <= n; ++B) L.block((A - 1) * d, (B - 1) * d, d, d) += rep.J(B, A);
  return LinOp(std::move(L), BasisTag::single("fund", n).tensor(rep.basis()));
}

std::array<double, 4> verify_block_equations(cplx z, const IndexSet& I, const Representation& rep) {
  const IndexSet barset = I.complement();
  const auto& bar = barset.members();
  const auto& in = I.members();
  const double q = static_cast<double>(bar.size());
  const CMatrix R = r0(z, I, rep).matrix();
  std::array<double, 4> res{0, 0, 0, 0};
  auto contracted = [&](int upper, int lower) {
    // (z - q/2) J^upper_lower - sum_cdot J^cdot_lower J^upper_cdot
    CMatrix X = (z - 0.5 * q) * rep.J(upper, lower);
    for (int cd : bar) X -= rep.J(cd, lower) * rep.J(upper, cd);
    return X;
  };
  for (int ad : bar)
    for (int bd : bar) res[0] = std::max(res[0], max_abs(commutator(R, rep.J(ad, bd))));
  for (int ad : bar)
    for (int b : in) {
      res[1] = std::max(res[1], max_abs(R * contracted(ad, b) - rep.J(ad, b) * R));
      res[2] = std::max(res[2], max_abs(R * rep.J(b, ad) - contracted(b, ad) * R));
    }
  for (int a : in)
    for (int b : in) res[3] = std::max(res[3], max_abs(commutator(R, contracted(a, b))));
  return res;
}

}  // namespace spinchain
