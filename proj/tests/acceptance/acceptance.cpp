#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "spinchain/bethe.hpp"
#include "spinchain/gtbasis.hpp"
#include "spinchain/hambuilder.hpp"
#include "spinchain/laxfactory.hpp"
#include "spinchain/qfactory.hpp"
#include "spinchain/weights.hpp"

using namespace spinchain;

namespace {

// Worst observed value of each checked quantity divided by its tolerance; <= 1 passes.
class Tally {
 public:
  void check(double value, double tolerance, const std::string& what) {
    const double ratio = std::isfinite(value) ? value / tolerance : INFINITY;
    if (ratio > worst_ratio_) {
      worst_ratio_ = ratio;
      worst_ = what + " = " + format(value) + " (tol " + format(tolerance) + ")";
    }
    ++checks_;
  }
  bool ok() const { return checks_ > 0 && worst_ratio_ <= 1.0; }
  long checks() const { return checks_; }
  const std::string& worst() const { return worst_; }

  static std::string format(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
  }

 private:
  double worst_ratio_ = -1;
  std::string worst_ = "nothing checked";
  long checks_ = 0;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Tally&)> run;
};

// Dominant weights with lambda_1 <= top and lambda_n = 0.
std::vector<std::vector<int>> weights_up_to(int n, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> lam(n, 0);
  std::function<void(int, int)> fill = [&](int i, int bound) {
    if (i == n - 1) {
      out.push_back(lam);
      return;
    }
    for (int v = bound; v >= 0; --v) {
      lam[i] = v;
      fill(i + 1, v);
    }
  };
  fill(0, top);
  return out;
}

std::vector<cplx> random_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(-0.7, 0.7);
  std::vector<cplx> z;
  for (int k = 0; k < count; ++k) z.emplace_back(re(rng), im(rng));
  return z;
}

std::string label(const std::vector<int>& lam) { return HighestWeight(lam).str(); }

void gt_algebra(Tally& t) {
  for (int n : {2, 3, 4})
    for (const auto& lam : weights_up_to(n, 3)) {
      Representation rep{HighestWeight(lam)};
      const std::string tag = label(lam);
      double comm = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 1; d <= n; ++d) {
              CMatrix rhs = CMatrix::Zero(rep.dim(), rep.dim());
              if (b == c) rhs += rep.J(a, d);
              if (a == d) rhs -= rep.J(c, b);
              comm = std::max(comm, max_abs(commutator(rep.J(a, b), rep.J(c, d)) - rhs));
            }
      t.check(comm, 1e-10, "commutator " + tag);
      for (const auto& I : all_subsets(n))
        for (int k = 1; k <= I.size(); ++k) {
          const CMatrix C = casimir(k, I, rep).matrix();
          const double scale = std::max(1.0, max_abs(C));
          double central = 0;
          for (int a : I.members())
            for (int b : I.members()) central = std::max(central, max_abs(commutator(C, rep.J(a, b))) / scale);
          t.check(central, 1e-10, "C" + std::to_string(k) + " centrality " + tag + " I=" + I.str());
        }
    }
}

void cayley_hamilton(Tally& t) {
  for (int n : {2, 3, 4})
    for (const auto& lam : weights_up_to(n, 3)) {
      Representation rep{HighestWeight(lam)};
      const std::string tag = label(lam);
      for (const auto& I : all_subsets(n)) {
        if (I.empty() || I.size() == n) continue;
        const std::string where = tag + " I=" + I.str();
        t.check(verify_cayley_hamilton(I, rep), 1e-9, "Cayley-Hamilton " + where);
        const auto x = x_basis(I, rep);
        t.check(x.reconstruction_residual, 1e-9, "X reconstruction " + where);
        t.check(x.exchange_residual, 1e-9, "X exchange " + where);
        t.check(x.casimir_exchange_residual, 1e-9, "X Casimir exchange " + where);
      }
    }
}

void block_equations(Tally& t) {
  const auto zs = random_points(3, 11);
  for (int n : {2, 3})
    for (const auto& lam : weights_up_to(n, 2)) {
      Representation rep{HighestWeight(lam)};
      for (const auto& I : all_subsets(n))
        for (cplx z : zs) {
          const auto r = verify_block_equations(z, I, rep);
          for (std::size_t k = 0; k < r.size(); ++k)
            t.check(r[k], 1e-9, "block equation " + std::to_string(k + 1) + " " + label(lam) + " I=" + I.str());
        }
    }
}

void trace_engine(Tally& t) {
  // damped twist so the explicit oscillator trace converges
  const TwistConfig damped{{cplx(0.3, 0.0), cplx(1.1, 2.0)}};
  const IndexSet I(2, {1});
  for (const auto& lam : {std::vector<int>{1, 0}, std::vector<int>{2, 0}}) {
    Representation rep{HighestWeight(lam)};
    for (int L : {1, 2}) {
      QFamily fam(rep, L, damped);
      for (cplx z : {cplx(0.37, 0.21), cplx(-0.8, 0.5), cplx(1.3, -0.2)}) {
        const CMatrix Q = fam.q_matrix(I, z);
        const CMatrix F = oracle::fock_cutoff_q(z, I, rep, L, damped, 40);
        t.check((Q - F).norm() / Q.norm(), 1e-8, "Fock cutoff " + label(lam) + " L=" + std::to_string(L));
      }
    }
  }
  const TwistConfig tw{{cplx(0.3, 0.1), cplx(1.1, -0.2)}};
  for (const auto& lam : {std::vector<int>{1, 0}, std::vector<int>{2, 0}, std::vector<int>{3, 1}}) {
    Representation rep{HighestWeight(lam)};
    QFamily fam(rep, 1, tw);
    for (int a : {1, 2})
      for (cplx z : {cplx(0.3, 0.2), cplx(1.7, -0.1), cplx(-0.6, 0.5)}) {
        const CMatrix Q = fam.q_matrix(IndexSet(2, {a}), z);
        const auto cf = oracle::hypergeometric_diagonal(z, a, rep, tw);
        const std::string where = label(lam) + " a=" + std::to_string(a);
        t.check(max_abs(Q - CMatrix(Q.diagonal().asDiagonal())) / Q.norm(), 1e-7, "hypergeometric diagonality " + where);
        const cplx scale = Q(0, 0) / cf[0];
        for (Index i = 0; i < rep.dim(); ++i)
          t.check(std::abs(Q(i, i) / (scale * cf[i]) - 1.0), 1e-7, "hypergeometric ratio " + where);
      }
  }
}

void functional_relations(Tally& t) {
  const auto zs = random_points(5, 23);
  const std::vector<cplx> phi{cplx(0.3, 0.1), cplx(1.1, -0.2), cplx(2.0, 0.05)};
  for (const auto& lam :
       {std::vector<int>{1, 0}, std::vector<int>{2, 0}, std::vector<int>{1, 0, 0}, std::vector<int>{1, 1, 0}}) {
    Representation rep{HighestWeight(lam)};
    const int n = rep.n();
    const TwistConfig tw{std::vector<cplx>(phi.begin(), phi.begin() + n)};
    for (int L : {1, 2}) {
      QFamily fam(rep, L, tw);
      const std::string tag = label(lam) + " L=" + std::to_string(L);
      const auto sets = all_subsets(n);
      for (std::size_t k = 0; k < zs.size(); ++k) {
        const cplx z = zs[k], w = zs[(k + 1) % zs.size()];
        for (const auto& I : sets)
          for (const auto& J : sets) t.check(commutation_residual(fam, I, J, z, w), 1e-8, "commutator " + tag);
        for (const auto& I : sets)
          for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
              if (!I.contains(a) && !I.contains(b))
                t.check(qq_residual(fam, I, a, b, z).relative, 1e-8, "QQ " + tag + " I=" + I.str());
        for (const auto& I : sets)
          if (I.size() >= 2) t.check(det_formula_residual(fam, I, z).relative, 1e-8, "determinant " + tag + " I=" + I.str());
      }
    }
  }
  // worked instance: L = 2, I = {1}, a = 2, b = 3, lambda = (1,1,0)
  Representation rep(HighestWeight({1, 1, 0}));
  QFamily fam(rep, 2, TwistConfig{{cplx(0.3), cplx(1.1), cplx(2.0)}});
  t.check(qq_residual(fam, IndexSet(3, {1}), 2, 3, cplx(0.7)).relative, 1e-8, "QQ worked instance");
}

void r_matrix_suite(Tally& t) {
  for (const auto& lam :
       {std::vector<int>{1, 0}, std::vector<int>{2, 0}, std::vector<int>{3, 0}, std::vector<int>{1, 1, 0}}) {
    Representation rep{HighestWeight(lam)};
    const std::string tag = label(lam);
    const int n = rep.n();
    const Index d = rep.dim();
    const auto table = tensor_shifted_weights(rep);
    const CMatrix id = CMatrix::Identity(d, d);
    t.check(max_abs(r_lambda_lambda(0.0, rep, table).matrix() - permutation(d)), 1e-10, "R(0) = P " + tag);

    for (cplx z : random_points(3, 31)) {
      const CMatrix R = r_lambda_lambda(z, rep, table).matrix();
      const CMatrix RR = R * r_lambda_lambda(-z, rep, table).matrix();
      t.check(max_abs(RR - CMatrix::Identity(d * d, d * d)), 1e-9, "unitarity " + tag);
      double inv = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          inv = std::max(inv, max_abs(commutator(R, kron(rep.J(a, b), id) + kron(id, rep.J(a, b)))));
      t.check(inv, 1e-10, "gl(n) invariance " + tag);
      t.check(tpg_crosscheck(z, rep), 1e-9, "tensor product graph " + tag);
    }

    // R L L = L L R with the fundamental Lax operator in the auxiliary space
    auto lax_on = [&](cplx z, int site) {
      CMatrix M = z * CMatrix::Identity(n * d * d, n * d * d);
      for (int A = 1; A <= n; ++A)
        for (int B = 1; B <= n; ++B) {
          CMatrix e = CMatrix::Zero(n, n);
          e(A - 1, B - 1) = 1.0;
          M += kron(e, site == 1 ? kron(rep.J(B, A), id) : kron(id, rep.J(B, A)));
        }
      return M;
    };
    const auto pts = random_points(4, 37);
    for (std::size_t k = 0; k + 1 < pts.size(); k += 2) {
      const cplx z1 = pts[k], z2 = pts[k + 1];
      const CMatrix R = kron(CMatrix::Identity(n, n), r_lambda_lambda(z2 - z1, rep, table).matrix());
      const CMatrix lhs = lax_on(z1, 1) * lax_on(z2, 2) * R;
      const CMatrix rhs = R * lax_on(z2, 2) * lax_on(z1, 1);
      t.check(max_abs(lhs - rhs) / std::max(1.0, max_abs(lhs)), 1e-8, "Yang-Baxter " + tag);
    }
  }
}

void hamiltonian_suite(Tally& t) {
  for (const auto& lam : {std::vector<int>{1, 0}, std::vector<int>{2, 0}, std::vector<int>{3, 0},
                          std::vector<int>{1, 1, 0}, std::vector<int>{2, 2, 0}}) {
    Representation rep{HighestWeight(lam)};
    const auto table = tensor_shifted_weights(rep);
    const double h = 1e-5;
    const CMatrix dR = (r_lambda_lambda(h, rep, table).matrix() - r_lambda_lambda(-h, rep, table).matrix()) / (2 * h);
    t.check(max_abs(-permutation(rep.dim()) * dR - hamiltonian_density(rep, table).matrix()), 1e-6,
            "density vs log derivative " + label(lam));
  }

  {
    Representation rep(HighestWeight({1, 0}));
    const auto table = tensor_shifted_weights(rep);
    std::vector<double> vals;
    for (const auto& b : table.blocks) vals.push_back(h_block_value(b, table.shape));
    std::sort(vals.begin(), vals.end());
    t.check(vals.size() == 2 ? std::max(std::abs(vals[0]), std::abs(vals[1] - 2.0)) : INFINITY, 1e-12,
            "fundamental density blocks");
    const CMatrix H = hamiltonian_density(rep, table).matrix();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
    const auto ev = es.eigenvalues();
    double off = 0;
    for (Index i = 0; i < ev.size(); ++i) off = std::max(off, std::min(std::abs(ev[i]), std::abs(ev[i] - 2.0)));
    t.check(off, 1e-12, "fundamental density spectrum");
  }

  for (int s = 1; s <= 4; ++s) {
    Representation rep{HighestWeight({s, 0})};
    const auto table = tensor_shifted_weights(rep);
    for (const auto& b : table.blocks) {
      const int spin = (b.Lambda[0] - b.Lambda[1]) / 2;
      t.check(std::abs(h_block_value(b, table.shape) - (2 * oracle::harmonic(s) - 2 * oracle::harmonic(spin))), 1e-12,
              "spin-" + std::to_string(s) + " harmonic blocks");
    }
  }

  auto block_values = [](const std::vector<int>& lam) {
    Representation rep{HighestWeight(lam)};
    const auto table = tensor_shifted_weights(rep);
    std::map<std::vector<int>, std::pair<double, cplx>> out;
    for (const auto& b : table.blocks) {
      std::vector<int> key = b.Lambda;
      while (!key.empty() && key.back() == 0) key.pop_back();
      out[key] = {h_block_value(b, table.shape), r_block_value(cplx(0.3, 0.2), b, table.shape)};
    }
    return out;
  };
  // gl(2) rectangles are single rows; compare with the same row inside gl(3)
  for (const auto& [small, large] : {std::pair{std::vector<int>{1, 0}, std::vector<int>{1, 0, 0}},
                                     std::pair{std::vector<int>{2, 0}, std::vector<int>{2, 0, 0}},
                                     std::pair{std::vector<int>{3, 0}, std::vector<int>{3, 0, 0}}}) {
    const auto a = block_values(small), b = block_values(large);
    for (const auto& [key, v] : a) {
      const auto it = b.find(key);
      const double diff =
          it == b.end() ? INFINITY : std::max(std::abs(v.first - it->second.first), std::abs(v.second - it->second.second));
      t.check(diff, 1e-12, "rank independence " + label(small));
    }
  }
}

void bethe_closure(Tally& t) {
  struct Case {
    std::vector<int> lam;
    std::vector<cplx> phi;
    int L;
    std::size_t states;
    std::vector<std::vector<int>> paths;
  };
  const std::vector<Case> cases{
      {{1, 0}, {cplx(0.3, 0.1), cplx(1.1, -0.2)}, 4, 16, {{1, 2}, {2, 1}}},
      {{1, 0, 0}, {cplx(0.3, 0.1), cplx(1.1, -0.2), cplx(2.0, 0.05)}, 3, 27, {{1, 2, 3}, {3, 1, 2}}},
  };
  for (const auto& c : cases) {
    Representation rep{HighestWeight(c.lam)};
    const TwistConfig tw{c.phi};
    QFamily fam(rep, c.L, tw);
    const CMatrix H = hamiltonian_total(rep, c.L, tw).matrix();
    std::vector<IndexSet> probes;
    for (const auto& p : c.paths)
      for (const auto& I : path_sets(p))
        if (!I.empty() && I.size() < rep.n()) probes.push_back(I);
    const auto states = find_eigenstates(fam, H, probes);
    const std::string tag = label(c.lam) + " L=" + std::to_string(c.L);
    t.check(states.size() == c.states ? 0.0 : INFINITY, 1.0, "state count " + tag);

    std::vector<std::vector<cplx>> energies;
    for (const auto& path : c.paths) {
      std::vector<BetheRootSet> roots;
      cplx vacuum = 0.0;
      int vacua = 0;
      for (const auto& s : states) {
        roots.push_back(extract_roots(fam, path, s));
        std::size_t m = 0;
        for (const auto& lv : roots.back().levels) m += lv.size();
        if (m == 0) vacuum = s.energy_H, ++vacua;
      }
      t.check(vacua == 1 ? 0.0 : INFINITY, 1.0, "unique reference state " + tag);
      std::vector<cplx> e;
      for (std::size_t k = 0; k < states.size(); ++k) {
        const auto check = bethe_residual(roots[k], rep.weight(), c.L, tw);
        t.check(check.collision ? INFINITY : check.residual, 1e-6, "Bethe equations " + tag);
        e.push_back(energy_from_roots(roots[k], rep.weight()));
        t.check(std::abs(e.back() - (states[k].energy_H - vacuum)), 1e-6, "energy vs diagonalization " + tag);
      }
      // shift back to the H zero point so paths with different reference states compare
      for (cplx& x : e) x += vacuum;
      energies.push_back(std::move(e));
    }
    for (std::size_t k = 0; k < states.size(); ++k)
      t.check(std::abs(energies[0][k] - energies[1][k]), 1e-6, "path agreement " + tag);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "GT algebra suite", 60, gt_algebra},
      {2, "Cayley-Hamilton and X-basis", 60, cayley_hamilton},
      {3, "block equations", 60, block_equations},
      {4, "trace engine", 120, trace_engine},
      {5, "functional relations", 300, functional_relations},
      {6, "R-matrix suite", 120, r_matrix_suite},
      {7, "Hamiltonian suite", 60, hamiltonian_suite},
      {8, "Bethe closure", 600, bethe_closure},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally tally;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = error.empty() && tally.ok() && secs < c.limit_seconds;
    failed += pass ? 0 : 1;
    std::printf("%s [%d] %s: %ld checks, worst %s, %.1fs (limit %.0fs)%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), tally.checks(), tally.worst().c_str(), secs, c.limit_seconds,
                error.empty() ? "" : (", error: " + error).c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
