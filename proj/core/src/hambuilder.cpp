#include "spinchain/hambuilder.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "spinchain/errors.hpp"
#include "spinchain/weights.hpp"

namespace spinchain {

RectangularShape check_rectangular(const Representation& rep) {
  const auto& lam = rep.weight().lambda();
  const int n = rep.n();
  RectangularShape sh;
  sh.shift = lam.back();
  sh.s = lam.front() - sh.shift;
  sh.a = static_cast<int>(std::count(lam.begin(), lam.end(), lam.front()));
  if (sh.s == 0) sh.a = 0;
  sh.alpha = sh.s - sh.a;
  sh.beta = sh.s * sh.a;

  const Index d = rep.dim();
  const CMatrix id = CMatrix::Identity(d, d);
  auto J = [&](int a, int b) -> CMatrix { return a == b ? CMatrix(rep.J(a, b) - sh.shift * id) : rep.J(a, b); };
  int worst_a = 0, worst_b = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      CMatrix lhs = CMatrix::Zero(d, d);
      for (int c = 1; c <= n; ++c) lhs += J(c, b) * J(a, c);
      CMatrix rhs = static_cast<double>(sh.alpha) * J(a, b);
      if (a == b) rhs += static_cast<double>(sh.beta) * id;
      double r = max_abs(lhs - rhs);
      if (r > sh.residual) sh.residual = r, worst_a = a, worst_b = b;
    }
  if (sh.residual > 1e-10)
    throw InputError("weight " + rep.weight().str() + " is not rectangular: J^c_b J^a_c identity fails at (a,b)=(" +
                     std::to_string(worst_a) + "," + std::to_string(worst_b) + ")");
  return sh;
}

namespace {

struct KDs {
  int d, D;
};

std::vector<KDs> block_ranges(const TensorBlock& b, const RectangularShape& sh) {
  std::vector<KDs> out;
  for (int k = 1; k <= sh.a; ++k) {
    const int kb = 2 * sh.a - k + 1;
    const int diff = b.Ahat[k - 1] - b.Ahat[kb - 1];
    if (diff % 2 == 0) throw VerificationError("even shifted-weight difference in tensor block");
    out.push_back({(diff + 1) / 2, sh.s + sh.a - k + 1});
  }
  return out;
}

}  // namespace

cplx r_block_value(cplx z, const TensorBlock& block, const RectangularShape& shape) {
  cplx v = 1.0;
  for (auto [d, D] : block_ranges(block, shape))
    for (int j = 0; j < D - d; ++j) {
      const cplx den = z + static_cast<double>(d + j);
      if (std::abs(den) < 1e-14) throw PoleError("R-matrix pole at factor z + " + std::to_string(d + j));
      v *= (z + static_cast<double>(1 - D + j)) / den;
    }
  return v;
}

double h_block_value(const TensorBlock& block, const RectangularShape& shape) {
  double h = 0;
  for (auto [d, D] : block_ranges(block, shape))
    for (int m = d; m < D; ++m) h += 2.0 / m;
  return h;
}

int block_parity(const TensorBlock& block, const RectangularShape& shape) {
  int e = 0;
  for (auto [d, D] : block_ranges(block, shape)) e += D - d;
  return e % 2 ? -1 : 1;
}

TensorWeightTable tensor_shifted_weights(const Representation& rep) {
  TensorWeightTable table;
  table.shape = check_rectangular(rep);
  const auto& sh = table.shape;
  const int n = rep.n();
  const Index d = rep.dim();
  const CMatrix id = CMatrix::Identity(d, d);

  std::vector<CMatrix> gens(static_cast<std::size_t>(n * n));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      CMatrix g = kron(rep.J(a, b), id) + kron(id, rep.J(a, b));
      if (a == b) g -= 2.0 * sh.shift * CMatrix::Identity(d * d, d * d);
      gens[(a - 1) * n + (b - 1)] = std::move(g);
    }
  GeneratorTable J = [&](int a, int b) -> const CMatrix& { return gens[(a - 1) * n + (b - 1)]; };
  const auto full = IndexSet::full(n).members();
  std::vector<CMatrix> Cs;
  for (int k = 1; k <= n; ++k) {
    auto P = power_table(J, d * d, full, k);
    CMatrix C = CMatrix::Zero(d * d, d * d);
    for (int a = 0; a < n; ++a) C += P[a][a];
    Cs.push_back(std::move(C));
  }

  int total = 0;
  for (int x : rep.weight().lambda()) total += 2 * (x - sh.shift);
  std::vector<std::vector<int>> cands;
  for (const auto& ell : candidate_ells(n, 0, 2 * sh.s)) {
    int sum = 0;
    for (int k = 0; k < n; ++k) sum += ell[k] + k;
    if (sum == total) cands.push_back(ell);
  }
  for (auto& wb : decompose_by_casimirs(Cs, cands)) {
    TensorBlock b;
    for (int k = 0; k < n; ++k) b.Lambda.push_back(wb.ell[k] + k);
    const int len = std::max(n, 2 * sh.a);
    for (int k = 0; k < len; ++k) b.Ahat.push_back((k < n ? b.Lambda[k] : 0) - k);
    b.multiplicity = wb.multiplicity;
    if (b.multiplicity != weyl_dimension(b.Lambda))
      throw VerificationError("tensor square is not multiplicity free");
    b.projector = std::move(wb.projector);
    b.parity = block_parity(b, sh);
    table.blocks.push_back(std::move(b));
  }
  return table;
}

LinOp r_lambda_lambda(cplx z, const Representation& rep, const TensorWeightTable& table) {
  const Index d = rep.dim();
  CMatrix R = CMatrix::Zero(d * d, d * d);
  for (const auto& b : table.blocks) R += r_block_value(z, b, table.shape) * b.projector;
  return LinOp(std::move(R), rep.basis().tensor(rep.basis()));
}

LinOp r_lambda_lambda(cplx z, const Representation& rep) { return r_lambda_lambda(z, rep, tensor_shifted_weights(rep)); }

LinOp hamiltonian_density(const Representation& rep, const TensorWeightTable& table) {
  const Index d = rep.dim();
  CMatrix H = CMatrix::Zero(d * d, d * d);
  for (const auto& b : table.blocks) H += h_block_value(b, table.shape) * b.projector;
  return LinOp(std::move(H), rep.basis().tensor(rep.basis()));
}

LinOp hamiltonian_density(const Representation& rep) { return hamiltonian_density(rep, tensor_shifted_weights(rep)); }

LinOp hamiltonian_total(const Representation& rep, const TensorWeightTable& table, int L, const TwistConfig& twist) {
  if (L < 2) throw InputError("total Hamiltonian needs L >= 2");
  twist.validate(rep.n());
  const Index d = rep.dim();
  const CMatrix h = hamiltonian_density(rep, table).matrix();
  Index D = 1;
  for (int i = 0; i < L; ++i) D *= d;
  CMatrix H = CMatrix::Zero(D, D);
  for (int i = 0; i + 1 < L; ++i) {
    Index left = 1, right = 1;
    for (int j = 0; j < i; ++j) left *= d;
    for (int j = i + 2; j < L; ++j) right *= d;
    H += kron(kron(CMatrix::Identity(left, left), h), CMatrix::Identity(right, right));
  }
  // bond (L,1): move h from sites (L-1,L) by the cyclic shift
  const CMatrix S = cyclic_shift(d, L);
  const CMatrix last = L > 2 ? kron(CMatrix::Identity(D / (d * d), D / (d * d)), h) : h;
  const CMatrix boundary = S.transpose() * last * S;

  CVector phase = CVector::Zero(d);
  for (int a = 1; a <= rep.n(); ++a) phase += twist(a) * rep.J(a, a).diagonal();
  CMatrix U = CMatrix::Zero(d, d), Uinv = CMatrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) {
    U(i, i) = std::exp(cplx(0.0, 1.0) * phase[i]);
    Uinv(i, i) = 1.0 / U(i, i);
  }
  H += embed_site(U, L - 1, L, d) * boundary * embed_site(Uinv, L - 1, L, d);
  return LinOp(std::move(H), rep.basis().power(L));
}

LinOp hamiltonian_total(const Representation& rep, int L, const TwistConfig& twist) {
  return hamiltonian_total(rep, tensor_shifted_weights(rep), L, twist);
}

double tpg_crosscheck(cplx z, const Representation& rep) {
  const auto table = tensor_shifted_weights(rep);
  const auto& blocks = table.blocks;
  const int n = rep.n();
  auto C2 = [&](const TensorBlock& b) {
    std::vector<double> ell;
    for (int k = 0; k < n; ++k) ell.push_back(b.Lambda[k] - k);
    return harish_chandra_casimir(ell, 2);
  };
  auto adjacent = [&](const TensorBlock& x, const TensorBlock& y) {
    int dist = 0;
    for (int k = 0; k < n; ++k) dist += std::abs(x.Lambda[k] - y.Lambda[k]);
    return dist == 2 && x.parity != y.parity;
  };

  std::vector<cplx> rho(blocks.size(), 0.0);
  std::vector<bool> seen(blocks.size(), false);
  std::deque<std::size_t> queue{0};
  rho[0] = 1.0;
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t mu = queue.front();
    queue.pop_front();
    for (std::size_t lam = 0; lam < blocks.size(); ++lam) {
      if (seen[lam] || !adjacent(blocks[mu], blocks[lam])) continue;
      const double delta = 0.25 * (C2(blocks[mu]) - C2(blocks[lam]));
      rho[lam] = rho[mu] * (delta - z) / (delta + z);
      seen[lam] = true;
      queue.push_back(lam);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw VerificationError("tensor product graph is not connected");

  const Index d = rep.dim();
  CMatrix graph = CMatrix::Zero(d * d, d * d);
  for (std::size_t b = 0; b < blocks.size(); ++b) graph += rho[b] * blocks[b].projector;
  const CMatrix PR = permutation(d) * r_lambda_lambda(z, rep, table).matrix();
  const cplx scale = (graph.adjoint() * PR).trace() / (graph.adjoint() * graph).trace();
  return (PR - scale * graph).norm() / PR.norm();
}

}  // namespace spinchain
