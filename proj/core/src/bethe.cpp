#include "spinchain/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "spinchain/errors.hpp"
#include "spinchain/laxfactory.hpp"

namespace spinchain {

namespace {

constexpr cplx kI{0.0, 1.0};

double relative_eigen_residual(const CMatrix& O, const CVector& v) {
  const CVector Ov = O * v;
  const cplx mu = v.dot(Ov) / v.squaredNorm();
  const double scale = std::max(O.norm(), 1e-300);
  return (Ov - mu * v).norm() / (scale * v.norm());
}

// Positions of the two poles in the driving term of level i (q = n - i).
struct LevelShifts {
  double plus;   // (q-1)/2 + L_{q+1} + 1/2
  double minus;  // (q-1)/2 + L_q - 1/2
};

LevelShifts level_shifts(int level, const HighestWeight& hw) {
  const int q = hw.n() - level;
  const double half = 0.5 * (q - 1);
  return {half + hw.shifted(q + 1) + 0.5, half + hw.shifted(q) - 0.5};
}

void check_path(const std::vector<int>& path, int n) {
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  for (int a = 1; a <= n; ++a)
    if (static_cast<int>(sorted.size()) != n || sorted[a - 1] != a)
      throw InputError("path must be a permutation of 1.." + std::to_string(n));
}

// log(lhs/rhs) for every root, in the order (level 1 roots, level 2 roots, ...).
std::vector<cplx> log_equations(const BetheRootSet& r, const HighestWeight& hw, int L, const TwistConfig& twist) {
  const int n = hw.n();
  std::vector<cplx> out;
  for (int i = 1; i < n; ++i) {
    const auto sh = level_shifts(i, hw);
    const cplx drive = kI * (twist(r.path[i]) - twist(r.path[i - 1]));
    for (std::size_t l = 0; l < r.levels[i].size(); ++l) {
      const cplx z = r.levels[i][l];
      cplx f = drive + static_cast<double>(L) * (std::log(z - sh.plus) - std::log(z - sh.minus));
      for (cplx y : r.levels[i - 1]) f -= std::log(z - y - 0.5) - std::log(z - y + 0.5);
      for (cplx w : r.levels[i + 1]) f -= std::log(z - w - 0.5) - std::log(z - w + 0.5);
      for (std::size_t k = 0; k < r.levels[i].size(); ++k)
        if (k != l) f -= std::log(z - r.levels[i][k] + 1.0) - std::log(z - r.levels[i][k] - 1.0);
      // reduce to the principal branch of log(lhs/rhs)
      out.push_back(std::log(std::exp(f)));
    }
  }
  return out;
}

bool has_collision(const BetheRootSet& r) {
  for (const auto& lv : r.levels)
    for (std::size_t a = 0; a < lv.size(); ++a)
      for (std::size_t b = a + 1; b < lv.size(); ++b)
        if (std::abs(lv[a] - lv[b]) < 1e-10) return true;
  return false;
}

}  // namespace

std::vector<IndexSet> path_sets(const std::vector<int>& path) {
  const int n = static_cast<int>(path.size());
  check_path(path, n);
  std::vector<IndexSet> sets{IndexSet::none(n)};
  for (int a : path) sets.push_back(sets.back().with(a));
  return sets;
}

std::vector<EigenState> find_eigenstates(const QFamily& fam, const CMatrix& H, const std::vector<IndexSet>& probes,
                                         std::uint64_t seed) {
  const cplx z0(0.31, 0.17);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  std::vector<CMatrix> Qs;
  CMatrix G = H;
  for (const auto& I : probes) {
    Qs.push_back(fam.q_matrix(I, z0));
    G += coef(rng) * Qs.back() / std::max(Qs.back().norm(), 1e-300) * H.norm();
  }
  Eigen::ComplexEigenSolver<CMatrix> es(G);
  if (es.info() != Eigen::Success) throw ConvergenceError("eigensolver failed");

  const int n = fam.rep().n(), L = fam.length();
  std::vector<CMatrix> cartan;
  for (int a = 1; a <= n; ++a) cartan.push_back(total_site_sum(fam.rep().J(a, a), L));

  std::vector<EigenState> states;
  for (Index k = 0; k < G.rows(); ++k) {
    EigenState s;
    s.vector = es.eigenvectors().col(k).normalized();
    s.energy_H = s.vector.dot(H * s.vector);
    s.residual = relative_eigen_residual(H, s.vector);
    for (const auto& Q : Qs) s.residual = std::max(s.residual, relative_eigen_residual(Q, s.vector));
    for (const auto& C : cartan) {
      s.residual = std::max(s.residual, relative_eigen_residual(C, s.vector));
      s.charges.push_back(static_cast<int>(std::lround(s.vector.dot(C * s.vector).real())));
    }
    if (s.residual > 1e-8) throw VerificationError("state " + std::to_string(k) + " is not a joint eigenvector");
    states.push_back(std::move(s));
  }
  std::stable_sort(states.begin(), states.end(), [](const EigenState& a, const EigenState& b) {
    if (a.charges != b.charges) return a.charges > b.charges;
    if (a.energy_H.real() != b.energy_H.real()) return a.energy_H.real() < b.energy_H.real();
    return a.energy_H.imag() < b.energy_H.imag();
  });
  return states;
}

CirclePolynomial q_eigenvalue_polynomial(const QFamily& fam, const IndexSet& I, const EigenState& state) {
  const auto& rep = fam.rep();
  const auto& lam = rep.weight().lambda();
  const int n = rep.n(), L = fam.length();
  const int q = n - I.size();
  const MatrixPolynomial& P = fam.polynomial(I);
  const CVector& v = state.vector;
  const int maxlam = *std::max_element(lam.begin(), lam.end()) - lam.back();
  const int points = L * maxlam * n + 2;
  auto f = [&](cplx z) {
    const cplx mu = v.dot(P(z) * v) / v.squaredNorm();
    return mu / std::pow(r0_tail(z, q, rep.weight()), L);
  };
  return fit_on_circle(f, points, cplx(0.1, 0.05), 2.7, 1e-9);
}

std::vector<cplx> q_eigenvalue_roots(const QFamily& fam, const IndexSet& I, const EigenState& state) {
  return q_eigenvalue_polynomial(fam, I, state).roots();
}

BetheRootSet extract_roots(const QFamily& fam, const std::vector<int>& path, const EigenState& state) {
  BetheRootSet r;
  r.path = path;
  for (const auto& I : path_sets(path)) r.levels.push_back(q_eigenvalue_roots(fam, I, state));
  return r;
}

BetheCheck bethe_residual(const BetheRootSet& roots, const HighestWeight& hw, int L, const TwistConfig& twist) {
  const int n = hw.n();
  check_path(roots.path, n);
  if (static_cast<int>(roots.levels.size()) != n + 1) throw InputError("root set needs n + 1 levels");
  BetheCheck out;
  for (const auto& lv : roots.levels)
    for (std::size_t a = 0; a < lv.size(); ++a)
      for (std::size_t b = a + 1; b < lv.size(); ++b)
        if (std::abs(lv[a] - lv[b]) < 1e-10) out.collision = true;
  for (int i = 1; i < n; ++i) {
    const auto sh = level_shifts(i, hw);
    const cplx drive = std::exp(kI * (twist(roots.path[i]) - twist(roots.path[i - 1])));
    for (std::size_t l = 0; l < roots.levels[i].size(); ++l) {
      const cplx z = roots.levels[i][l];
      const cplx lhs = drive * std::pow((z - sh.plus) / (z - sh.minus), L);
      cplx rhs = 1.0;
      for (cplx y : roots.levels[i - 1]) rhs *= (z - y - 0.5) / (z - y + 0.5);
      for (cplx w : roots.levels[i + 1]) rhs *= (z - w - 0.5) / (z - w + 0.5);
      for (std::size_t k = 0; k < roots.levels[i].size(); ++k)
        if (k != l) rhs *= (z - roots.levels[i][k] + 1.0) / (z - roots.levels[i][k] - 1.0);
      const double r = std::abs(lhs / rhs - 1.0);
      out.residual = std::max(out.residual, std::isfinite(r) ? r : INFINITY);
    }
  }
  return out;
}

namespace {

using Slots = std::vector<std::pair<int, int>>;  // (level, position)

// d/dz of the log form, assembled analytically.
CMatrix log_jacobian(const BetheRootSet& r, const Slots& slots, const HighestWeight& hw, int L) {
  const Index m = static_cast<Index>(slots.size());
  CMatrix jac = CMatrix::Zero(m, m);
  auto index_of = [&](int level, int pos) {
    return static_cast<Index>(std::find(slots.begin(), slots.end(), std::make_pair(level, pos)) - slots.begin());
  };
  for (Index row = 0; row < m; ++row) {
    const auto [i, l] = slots[row];
    const auto sh = level_shifts(i, hw);
    const cplx z = r.levels[i][l];
    cplx diag = static_cast<double>(L) * (1.0 / (z - sh.plus) - 1.0 / (z - sh.minus));
    auto couple = [&](int level, double a, double b) {
      for (int k = 0; k < static_cast<int>(r.levels[level].size()); ++k) {
        if (level == i && k == l) continue;
        const cplx d = z - r.levels[level][k];
        const cplx g = 1.0 / (d + a) - 1.0 / (d + b);
        diag -= g;
        jac(row, index_of(level, k)) += g;
      }
    };
    couple(i - 1, -0.5, 0.5);
    couple(i + 1, -0.5, 0.5);
    couple(i, 1.0, -1.0);
    jac(row, row) += diag;
  }
  return jac;
}

double max_norm(const std::vector<cplx>& f) {
  double acc = 0;
  for (cplx v : f) acc = std::max(acc, std::abs(v));
  return std::isfinite(acc) ? acc : INFINITY;
}

// Damped Newton; returns the final merit value.
double newton_stage(BetheRootSet& r, const Slots& slots, const HighestWeight& hw, int L, const TwistConfig& twist,
                    const NewtonOptions& options) {
  const Index m = static_cast<Index>(slots.size());
  double current = max_norm(log_equations(r, hw, L, twist));
  for (int it = 0; it < options.max_iterations && current > options.tolerance; ++it) {
    const auto F = log_equations(r, hw, L, twist);
    const CMatrix jac = log_jacobian(r, slots, hw, L);
    CVector rhs(m);
    for (Index k = 0; k < m; ++k) rhs[k] = -F[k];
    const CVector step = jac.fullPivLu().solve(rhs);
    double damping = 1.0;
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries, damping *= 0.5) {
      BetheRootSet trial = r;
      for (Index k = 0; k < m; ++k) trial.levels[slots[k].first][slots[k].second] += damping * step[k];
      const double next = max_norm(log_equations(trial, hw, L, twist));
      if (next < current) {
        r = std::move(trial);
        current = next;
        accepted = true;
      }
    }
    if (!accepted) break;
  }
  return current;
}

}  // namespace

BetheRootSet solve_bethe_newton(const HighestWeight& hw, int L, const TwistConfig& twist, const BetheRootSet& start,
                                const NewtonOptions& options) {
  const int n = hw.n();
  check_path(start.path, n);
  twist.validate(n);
  if (static_cast<int>(start.levels.size()) != n + 1) throw InputError("root set needs n + 1 levels");
  if (!start.levels.front().empty() || !start.levels.back().empty())
    throw InputError("outer levels of a root set carry no roots");

  BetheRootSet seeded = start;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> jitter(0.0, 1.0);
  for (auto& lv : seeded.levels)
    for (auto& z : lv) z += options.perturbation * cplx(jitter(rng), jitter(rng));

  Slots slots;
  for (int i = 1; i < n; ++i)
    for (int l = 0; l < static_cast<int>(seeded.levels[i].size()); ++l) slots.emplace_back(i, l);
  if (slots.empty()) return seeded;

  const double accept = std::max(options.tolerance, 1e-9);
  BetheRootSet r = seeded;
  const double merit = newton_stage(r, slots, hw, L, twist, options);
  if (has_collision(r)) throw ConvergenceError("Bethe Newton solve produced coinciding roots");
  if (merit > accept) throw ConvergenceError("Bethe Newton solve stalled at residual " + std::to_string(merit));
  return r;
}

cplx energy_from_roots(const BetheRootSet& roots, const HighestWeight& hw) {
  const int n = hw.n();
  if (static_cast<int>(roots.levels.size()) != n + 1) throw InputError("root set needs n + 1 levels");
  cplx E = 0.0;
  for (int i = 1; i < n; ++i) {
    const auto sh = level_shifts(i, hw);
    for (cplx z : roots.levels[i]) {
      if (std::abs(z - sh.plus) < 1e-12 || std::abs(z - sh.minus) < 1e-12)
        throw PoleError("Bethe root sits on a pole of the energy formula");
      E += 1.0 / (z - sh.plus) - 1.0 / (z - sh.minus);
    }
  }
  return E;
}

}  // namespace spinchain
