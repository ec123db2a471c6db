#include "spinchain/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include <Eigen/Eigenvalues>

#include "spinchain/errors.hpp"

namespace spinchain {

CMatrix ShiftedWeightTable::ell_operator(int i) const {
  const Index d = blocks.empty() ? 0 : blocks.front().projector.rows();
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& b : blocks) out += static_cast<double>(b.ell.at(i - 1)) * b.projector;
  return out;
}

double harish_chandra_casimir(const std::vector<double>& ell, int i) {
  const std::size_t q = ell.size();
  double s = 0;
  for (std::size_t k = 0; k < q; ++k) {
    double p = 1;
    for (std::size_t j = 0; j < q; ++j)
      if (j != k) p *= 1.0 + 1.0 / (ell[k] - ell[j]);
    s += p * std::pow(ell[k], i);
  }
  return s;
}

namespace {

std::vector<double> to_double(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::vector<double> hc_vector(const std::vector<double>& ell) {
  std::vector<double> c(ell.size());
  for (std::size_t i = 0; i < ell.size(); ++i) c[i] = harish_chandra_casimir(ell, static_cast<int>(i) + 1);
  return c;
}

}  // namespace

std::vector<std::vector<int>> candidate_ells(int q, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> mu(q);
  auto rec = [&](auto&& self, int k, int upper) -> void {
    if (k == q) {
      std::vector<int> ell(q);
      for (int j = 0; j < q; ++j) ell[j] = mu[j] - j;
      out.push_back(ell);
      return;
    }
    for (int v = upper; v >= lo; --v) {
      mu[k] = v;
      self(self, k + 1, v);
    }
  };
  rec(rec, 0, hi);
  return out;
}

namespace {

double combine(const std::vector<double>& w, const std::vector<double>& c) {
  return std::inner_product(w.begin(), w.end(), c.begin(), 0.0);
}

// Weight vector whose combination separates all candidate Casimir tuples.
std::vector<double> separating_weights(const std::vector<std::vector<double>>& tuples, int q, double& gap) {
  static const double base[] = {1.0, 0.37, 0.0123, 0.000571, 2.9e-5, 1.3e-6, 7.1e-8};
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<double> w(q);
    for (int i = 0; i < q; ++i) w[i] = base[i] * (1.0 + 0.113 * attempt * (i + 1));
    std::vector<double> vals;
    for (const auto& t : tuples) vals.push_back(combine(w, t));
    std::sort(vals.begin(), vals.end());
    gap = INFINITY;
    for (std::size_t i = 1; i < vals.size(); ++i) gap = std::min(gap, vals[i] - vals[i - 1]);
    if (vals.size() < 2 || gap > 1e-6 * (1.0 + std::abs(vals.back()))) return w;
  }
  throw VerificationError("distinct gl(Ibar) weights share all Casimir values");
}

CMatrix lagrange_projector(const CMatrix& C, const std::vector<double>& values, std::size_t which) {
  const Index d = C.rows();
  CMatrix P = CMatrix::Identity(d, d);
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j == which) continue;
    P = P * (C - values[j] * CMatrix::Identity(d, d)) / (values[which] - values[j]);
  }
  return P;
}

void check_blocks(const std::vector<WeightBlock>& blocks, const std::vector<CMatrix>& Cs) {
  const Index d = Cs.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& b : blocks) {
    sum += b.projector;
    auto c = hc_vector(to_double(b.ell));
    for (std::size_t i = 0; i < Cs.size(); ++i) {
      double scale = 1.0 + std::abs(c[i]);
      if (max_abs(Cs[i] * b.projector - c[i] * b.projector) > 1e-8 * scale)
        throw VerificationError("Casimir eigenvalue check failed for shifted-weight block");
    }
  }
  if (max_abs(sum - CMatrix::Identity(d, d)) > 1e-8) throw VerificationError("shifted-weight projectors do not resolve V");
}

}  // namespace

std::vector<int> solve_harish_chandra(const std::vector<double>& casimirs, const std::vector<int>& center, int spread) {
  const int q = static_cast<int>(casimirs.size());
  if (static_cast<int>(center.size()) != q) throw InputError("seed length mismatch");
  auto residual = [&](const Eigen::VectorXd& x) {
    std::vector<double> ell(x.data(), x.data() + q);
    Eigen::VectorXd r(q);
    for (int i = 0; i < q; ++i) r[i] = (harish_chandra_casimir(ell, i + 1) - casimirs[i]) / (1.0 + std::abs(casimirs[i]));
    return r;
  };
  auto attempt = [&](const std::vector<int>& shift) -> std::optional<std::vector<int>> {
    Eigen::VectorXd x(q);
    for (int k = 0; k < q; ++k) x[k] = center[k] + shift[k] + 0.03 * (k + 1);
    for (int iter = 0; iter < 60; ++iter) {
      Eigen::VectorXd r = residual(x);
      if (!r.allFinite()) return std::nullopt;
      if (r.norm() < 1e-12) break;
      Eigen::MatrixXd Jac(q, q);
      for (int k = 0; k < q; ++k) {
        Eigen::VectorXd xp = x, xm = x;
        xp[k] += 1e-6;
        xm[k] -= 1e-6;
        Jac.col(k) = (residual(xp) - residual(xm)) / 2e-6;
      }
      Eigen::VectorXd step = Jac.fullPivLu().solve(r);
      if (!step.allFinite()) return std::nullopt;
      x -= step;
    }
    std::vector<int> ell(q);
    for (int k = 0; k < q; ++k) ell[k] = static_cast<int>(std::lround(x[k]));
    std::sort(ell.rbegin(), ell.rend());
    if (std::adjacent_find(ell.begin(), ell.end()) != ell.end()) return std::nullopt;
    Eigen::VectorXd xr(q);
    for (int k = 0; k < q; ++k) xr[k] = ell[k];
    if (residual(xr).norm() > 1e-9) return std::nullopt;
    return ell;
  };

  // lattice shifts ordered by total displacement
  std::vector<std::vector<int>> shifts;
  std::vector<int> s(q);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == q) {
      shifts.push_back(s);
      return;
    }
    for (int v = -spread; v <= spread; ++v) {
      s[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::stable_sort(shifts.begin(), shifts.end(), [](const auto& a, const auto& b) {
    auto l1 = [](const auto& v) { return std::accumulate(v.begin(), v.end(), 0, [](int t, int x) { return t + std::abs(x); }); };
    return l1(a) < l1(b);
  });
  for (const auto& sh : shifts)
    if (auto ell = attempt(sh)) return *ell;
  throw ConvergenceError("Harish-Chandra Newton solve did not converge to integer shifted weights");
}

std::vector<WeightBlock> decompose_by_casimirs(const std::vector<CMatrix>& casimirs,
                                               const std::vector<std::vector<int>>& candidates) {
  const int q = static_cast<int>(casimirs.size());
  const Index d = casimirs.front().rows();
  std::vector<std::vector<double>> tuples;
  for (const auto& ell : candidates) tuples.push_back(hc_vector(to_double(ell)));
  double gap = 0;
  auto w = separating_weights(tuples, q, gap);

  CMatrix C = CMatrix::Zero(d, d);
  for (int i = 0; i < q; ++i) C += w[i] * casimirs[i];
  Eigen::ComplexEigenSolver<CMatrix> es(C, false);
  const CVector ev = es.eigenvalues();

  std::vector<bool> present(candidates.size(), false);
  for (Index e = 0; e < ev.size(); ++e) {
    std::size_t best = 0;
    double bestd = INFINITY;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      double dist = std::abs(ev[e] - combine(w, tuples[c]));
      if (dist < bestd) bestd = dist, best = c;
    }
    if (bestd > 0.25 * gap) throw VerificationError("Casimir eigenvalue matches no candidate highest weight");
    present[best] = true;
  }
  std::vector<double> values;
  std::vector<std::vector<int>> ells;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (present[c]) {
      values.push_back(combine(w, tuples[c]));
      ells.push_back(candidates[c]);
    }
  std::vector<WeightBlock> blocks;
  for (std::size_t b = 0; b < values.size(); ++b) {
    WeightBlock blk;
    blk.ell = ells[b];
    blk.projector = lagrange_projector(C, values, b);
    blk.multiplicity = static_cast<Index>(std::lround(blk.projector.trace().real()));
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.ell > y.ell; });
  check_blocks(blocks, casimirs);
  return blocks;
}

ShiftedWeightTable shifted_weights(const IndexSet& I, const Representation& rep, WeightRoute route) {
  const IndexSet Ibar = I.complement();
  if (Ibar.empty()) throw InputError("shifted weights need a nonempty complement of I");
  const int q = Ibar.size();
  const auto& lam = rep.weight().lambda();

  std::vector<CMatrix> Cs;
  for (int i = 1; i <= q; ++i) Cs.push_back(casimir(i, Ibar, rep).matrix());
  const auto cands = candidate_ells(q, lam.back(), lam.front());
  if (route == WeightRoute::Branching) return {Ibar, q, decompose_by_casimirs(Cs, cands)};

  std::vector<std::vector<double>> tuples;
  for (const auto& ell : cands) tuples.push_back(hc_vector(to_double(ell)));
  double gap = 0;
  auto w = separating_weights(tuples, q, gap);
  const Index d = rep.dim();
  CMatrix C = CMatrix::Zero(d, d);
  for (int i = 0; i < q; ++i) C += w[i] * Cs[i];
  Eigen::ComplexEigenSolver<CMatrix> es(C, false);
  std::vector<double> re;
  for (Index e = 0; e < es.eigenvalues().size(); ++e) re.push_back(es.eigenvalues()[e].real());
  std::sort(re.begin(), re.end());
  std::vector<std::vector<double>> clusters;
  for (double v : re) {
    if (clusters.empty() || v - clusters.back().back() > 0.25 * gap) clusters.push_back({});
    clusters.back().push_back(v);
  }
  std::vector<double> values;
  for (const auto& cl : clusters) values.push_back(std::accumulate(cl.begin(), cl.end(), 0.0) / cl.size());

  std::vector<int> center(q);
  for (int k = 0; k < q; ++k) center[k] = lam[k] - k;
  ShiftedWeightTable table{Ibar, q, {}};
  for (std::size_t b = 0; b < values.size(); ++b) {
    WeightBlock blk;
    blk.projector = lagrange_projector(C, values, b);
    const double tr = blk.projector.trace().real();
    std::vector<double> cas(q);
    for (int i = 0; i < q; ++i) cas[i] = (Cs[i] * blk.projector).trace().real() / tr;
    blk.ell = solve_harish_chandra(cas, center, lam.front() - lam.back() + 1);
    blk.multiplicity = static_cast<Index>(std::lround(tr));
    table.blocks.push_back(std::move(blk));
  }
  std::sort(table.blocks.begin(), table.blocks.end(), [](const auto& x, const auto& y) { return x.ell > y.ell; });
  check_blocks(table.blocks, Cs);
  return table;
}

std::map<std::pair<int, int>, std::vector<CMatrix>> mixed_powers(const IndexSet& I, const Representation& rep,
                                                                 int kmax) {
  const auto bar = I.complement().members();
  std::vector<std::vector<std::vector<CMatrix>>> tables;
  for (int k = 0; k < kmax; ++k) tables.push_back(power_table(rep, bar, k));
  std::map<std::pair<int, int>, std::vector<CMatrix>> out;
  for (int a : I.members())
    for (std::size_t ad = 0; ad < bar.size(); ++ad) {
      auto& v = out[{a, bar[ad]}];
      for (int k = 1; k <= kmax; ++k) {
        CMatrix acc = CMatrix::Zero(rep.dim(), rep.dim());
        for (std::size_t c = 0; c < bar.size(); ++c) acc += rep.J(bar[c], a) * tables[k - 1][ad][c];
        v.push_back(std::move(acc));
      }
    }
  return out;
}

double verify_cayley_hamilton(const IndexSet& I, const Representation& rep) {
  const auto table = shifted_weights(I, rep);
  const int q = table.q;
  const Index d = rep.dim();
  std::vector<CMatrix> coeff(q, CMatrix::Zero(d, d));
  for (const auto& b : table.blocks) {
    auto a = capelli_coefficients(to_double(b.ell));
    for (int k = 0; k < q; ++k) coeff[k] += a[k] * b.projector;
  }
  double res = 0;
  for (const auto& [key, Jk] : mixed_powers(I, rep, q + 1)) {
    CMatrix rhs = CMatrix::Zero(d, d);
    for (int k = 0; k < q; ++k) rhs += Jk[k] * coeff[k];
    res = std::max(res, max_abs(Jk[q] - rhs));
  }
  return res;
}

XBasis x_basis(const IndexSet& I, const Representation& rep) {
  const auto table = shifted_weights(I, rep);
  const int q = table.q;
  const Index d = rep.dim();
  XBasis out{I, q, {}, 0, 0, 0};
  const auto powers = mixed_powers(I, rep, q + 1);

  std::vector<CMatrix> ellop;
  for (int i = 1; i <= q; ++i) ellop.push_back(table.ell_operator(i));
  const CMatrix C2 = casimir(2, table.subalgebra, rep).matrix();

  for (const auto& [key, Jk] : powers) {
    std::vector<CMatrix> X(q, CMatrix::Zero(d, d));
    for (const auto& b : table.blocks) {
      auto ell = to_double(b.ell);
      auto a = capelli_coefficients(ell);
      CMatrix M = CMatrix::Zero(q, q);
      for (int i = 0; i + 1 < q; ++i) M(i + 1, i) = 1.0;
      for (int i = 0; i < q; ++i) M(i, q - 1) = a[i];
      Eigen::ComplexEigenSolver<CMatrix> es(M);
      // order eigenvectors as ell_1 > ... > ell_q
      CMatrix V(q, q);
      for (int k = 0; k < q; ++k) {
        Index best = 0;
        for (Index j = 1; j < q; ++j)
          if (std::abs(es.eigenvalues()[j] - ell[k]) < std::abs(es.eigenvalues()[best] - ell[k])) best = j;
        if (std::abs(es.eigenvalues()[best] - ell[k]) > 1e-8) throw VerificationError("companion spectrum differs from ell");
        V.col(k) = es.eigenvectors().col(best);
      }
      CVector e1 = CVector::Zero(q);
      e1[0] = 1.0;
      CVector g = V.partialPivLu().solve(e1);
      std::vector<double> delta(q, 1.0);
      for (int k = 0; k < q; ++k)
        for (int j = 0; j < q; ++j)
          if (j != k) delta[k] *= 1.0 + 1.0 / (ell[k] - ell[j]);

      std::vector<CMatrix> XP(q, CMatrix::Zero(d, d));
      for (int k = 0; k < q; ++k) {
        if (std::abs(delta[k]) < 1e-12) continue;  // ell + e_k is not dominant
        for (int i = 0; i < q; ++i) XP[k] += (g[k] / delta[k] * V(i, k)) * Jk[i];
        XP[k] = XP[k] * b.projector;
        X[k] += XP[k];
      }
      for (int i = 1; i <= q + 1; ++i) {
        CMatrix rhs = CMatrix::Zero(d, d);
        for (int k = 0; k < q; ++k) rhs += XP[k] * (delta[k] * std::pow(ell[k], i - 1));
        out.reconstruction_residual = std::max(out.reconstruction_residual, max_abs(Jk[i - 1] * b.projector - rhs));
      }
    }
    const CMatrix id = CMatrix::Identity(d, d);
    for (int k = 0; k < q; ++k) {
      for (int i = 0; i < q; ++i) {
        CMatrix rhs = X[k] * (ellop[i] + (i == k ? 1.0 : 0.0) * id);
        out.exchange_residual = std::max(out.exchange_residual, max_abs(ellop[i] * X[k] - rhs));
      }
      CMatrix rhs = X[k] * (C2 + static_cast<double>(q) * id + 2.0 * ellop[k]);
      out.casimir_exchange_residual = std::max(out.casimir_exchange_residual, max_abs(C2 * X[k] - rhs));
    }
    out.X.emplace(key, std::move(X));
  }
  return out;
}

}  // namespace spinchain
