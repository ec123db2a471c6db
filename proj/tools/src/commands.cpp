#include "commands.hpp"

#include <algorithm>
#include <numeric>

#include "spinchain/bethe.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/gtbasis.hpp"
#include "spinchain/hambuilder.hpp"
#include "spinchain/laxfactory.hpp"
#include "spinchain/parallel.hpp"
#include "spinchain/parse.hpp"
#include "spinchain/qfactory.hpp"
#include "spinchain/version.hpp"
#include "spinchain/weights.hpp"

namespace spinchain::cli {

namespace {

Representation make_rep(const Options& o) {
  if (o.rep.empty()) throw InputError("--rep is required");
  HighestWeight hw = HighestWeight::parse(o.rep);
  if (o.n != 0 && o.n != hw.n())
    throw InputError("--n " + std::to_string(o.n) + " does not match the length of --rep " + o.rep);
  return Representation(std::move(hw));
}

IndexSet set_at(const Options& o, std::size_t k, int n) {
  if (o.sets.size() <= k) throw InputError("--set is required");
  return IndexSet::parse(o.sets[k], n);
}

TwistConfig make_twist(const Options& o, int n, bool required) {
  if (o.twist.empty()) {
    if (required) throw InputError("--twist is required");
    return TwistConfig{std::vector<cplx>(n, 0.0)};
  }
  TwistConfig tw{parse_complex_list(o.twist)};
  tw.validate(n);
  return tw;
}

std::vector<cplx> z_values(const Options& o) {
  if (o.z.empty()) throw InputError("--z is required");
  return parse_complex_list(o.z);
}

int chain_length(const Options& o, int minimum) {
  if (o.length < minimum) throw InputError("--length must be at least " + std::to_string(minimum));
  return o.length;
}

std::vector<int> path_of(const Options& o, int n) {
  if (o.path.empty()) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
  }
  auto p = parse_int_list(o.path);
  path_sets(p);  // validates
  if (static_cast<int>(p.size()) != n) throw InputError("--path must list 1.." + std::to_string(n));
  return p;
}

// proper nonempty sets along the path, used to split degeneracies of H
std::vector<IndexSet> probes_of(const std::vector<int>& path) {
  std::vector<IndexSet> probes;
  for (const auto& I : path_sets(path))
    if (!I.empty() && I.size() < static_cast<int>(path.size())) probes.push_back(I);
  return probes;
}

cplx expectation(const CMatrix& Q, const CVector& v) { return v.dot(Q * v) / v.squaredNorm(); }

}  // namespace

Json manifest(const Options& o) {
  Json inputs = Json::object();
  inputs["rep"] = o.rep;
  if (o.n != 0) inputs["n"] = o.n;
  inputs["sets"] = o.sets;
  inputs["pair"] = o.pair;
  inputs["length"] = o.length;
  inputs["twist"] = o.twist;
  inputs["z"] = o.z;
  inputs["tolerance"] = o.tolerance;
  inputs["path"] = o.path;
  inputs["seed"] = o.seed;
  inputs["spectrum"] = o.spectrum;
  inputs["format"] = o.format;
  Json m = Json::object();
  m["command"] = o.command;
  m["inputs"] = std::move(inputs);
  m["version"] = kVersion;
  m["timestamp"] = manifest_timestamp();
  return m;
}

Report cmd_patterns(const Options& o) {
  const Representation rep = make_rep(o);
  const int n = rep.n();
  Report r;
  r.result["weight"] = rep.weight().lambda();
  r.result["dimension"] = rep.dim();
  Json pats = Json::array();
  for (const auto& p : rep.patterns()) pats.push_back(p.rows);
  r.result["patterns"] = std::move(pats);

  r.header = {"index"};
  for (int k = n; k >= 1; --k)
    for (int i = 1; i <= k; ++i) r.header.push_back("m_" + std::to_string(k) + "_" + std::to_string(i));
  for (std::size_t idx = 0; idx < rep.patterns().size(); ++idx) {
    std::vector<std::string> row{cell(static_cast<int>(idx))};
    for (int v : rep.patterns()[idx].flattened()) row.push_back(cell(v));
    r.rows.push_back(std::move(row));
  }
  return r;
}

Report cmd_weights(const Options& o) {
  const Representation rep = make_rep(o);
  const IndexSet I = set_at(o, 0, rep.n());
  const auto table = shifted_weights(I, rep);
  Report r;
  r.result["set"] = I.members();
  r.result["subalgebra"] = table.subalgebra.members();
  r.result["q"] = table.q;
  Json blocks = Json::array();
  r.header.clear();
  for (int k = 1; k <= table.q; ++k) r.header.push_back("ell_" + std::to_string(k));
  r.header.push_back("multiplicity");
  for (const auto& b : table.blocks) {
    blocks.push_back({{"ell", b.ell}, {"multiplicity", b.multiplicity}});
    std::vector<std::string> row;
    for (int e : b.ell) row.push_back(cell(e));
    row.push_back(cell(static_cast<int>(b.multiplicity)));
    r.rows.push_back(std::move(row));
  }
  r.result["blocks"] = std::move(blocks);
  if (!I.empty()) {
    const double ch = verify_cayley_hamilton(I, rep);
    r.result["cayley_hamilton_residual"] = ch;
    r.verified = ch <= o.tolerance;
  }
  r.result["tolerance"] = o.tolerance;
  r.result["pass"] = r.verified;
  return r;
}

Report cmd_lax(const Options& o) {
  const Representation rep = make_rep(o);
  const IndexSet I = set_at(o, 0, rep.n());
  const cplx z = z_values(o).front();
  const auto lax = r_I(z, I, rep);
  const auto blocks = verify_block_equations(z, I, rep);
  Report r;
  r.result["set"] = I.members();
  Json modes = Json::array();
  for (const auto& m : lax.modes) modes.push_back({m.c, m.cdot});
  r.result["modes"] = std::move(modes);
  r.result["block_equation_residuals"] = blocks;
  r.verified = *std::max_element(blocks.begin(), blocks.end()) <= o.tolerance;
  r.result["tolerance"] = o.tolerance;
  r.result["pass"] = r.verified;
  Json terms = Json::array();
  r.header = {"x_exponent", "d_exponent", "row", "col", "re", "im"};
  for (const auto& [key, op] : lax.terms) {
    terms.push_back({{"x_exponent", key.first}, {"d_exponent", key.second}, {"matrix", to_json(op.matrix())}});
    const CMatrix& m = op.matrix();
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        r.rows.push_back({joined(key.first), joined(key.second), cell(static_cast<int>(i)), cell(static_cast<int>(j)),
                          cell(m(i, j).real()), cell(m(i, j).imag())});
  }
  r.result["terms"] = std::move(terms);
  return r;
}

Report cmd_qop(const Options& o) {
  const Representation rep = make_rep(o);
  const IndexSet I = set_at(o, 0, rep.n());
  const TwistConfig tw = make_twist(o, rep.n(), true);
  QFamily fam(rep, chain_length(o, 1), tw);
  const cplx z = z_values(o).front();
  const CMatrix Q = fam.q_matrix(I, z);
  Report r;
  r.result["set"] = I.members();
  r.result["z"] = to_json(z);
  r.result["dimension"] = Q.rows();
  r.result["matrix"] = to_json(Q);
  matrix_rows(r, Q);
  return r;
}

Report cmd_verify(const Options& o, const std::string& relation) {
  const Representation rep = make_rep(o);
  const int n = rep.n();
  const TwistConfig tw = make_twist(o, n, true);
  QFamily fam(rep, chain_length(o, 1), tw);
  const auto zs = z_values(o);
  const IndexSet I = o.sets.empty() ? IndexSet::none(n) : set_at(o, 0, n);
  Residual res;
  Report r;
  r.result["relation"] = relation;
  r.result["set"] = I.members();
  if (relation == "qq") {
    const auto ab = parse_int_list(o.pair);
    if (ab.size() != 2) throw InputError("--pair needs two indices a,b");
    if (ab[0] == ab[1] || I.contains(ab[0]) || I.contains(ab[1]))
      throw InputError("--pair must be two distinct indices outside --set");
    res = qq_residual(fam, I, ab[0], ab[1], zs.front());
    r.result["pair"] = ab;
  } else if (relation == "comm") {
    const IndexSet J = o.sets.size() > 1 ? set_at(o, 1, n) : I;
    const cplx w = zs.size() > 1 ? zs[1] : zs.front();
    res.relative = commutation_residual(fam, I, J, zs.front(), w);
    const CMatrix A = fam.q_matrix(I, zs.front()), B = fam.q_matrix(J, w);
    res.absolute = res.relative * A.norm() * B.norm();
    r.result["other_set"] = J.members();
  } else {
    if (I.size() < 2) throw InputError("determinant formula needs |--set| >= 2");
    res = det_formula_residual(fam, I, zs.front());
  }
  r.result["z"] = to_json(std::vector<cplx>(zs.begin(), zs.begin() + (relation == "comm" && zs.size() > 1 ? 2 : 1)));
  r.result["absolute"] = res.absolute;
  r.result["relative"] = res.relative;
  r.result["tolerance"] = o.tolerance;
  r.verified = res.relative <= o.tolerance;
  r.result["pass"] = r.verified;
  r.header = {"relation", "absolute", "relative", "tolerance", "pass"};
  r.rows.push_back({relation, cell(res.absolute), cell(res.relative), cell(o.tolerance), r.verified ? "true" : "false"});
  return r;
}

Report cmd_ham(const Options& o) {
  const Representation rep = make_rep(o);
  const auto table = tensor_shifted_weights(rep);
  Report r;
  r.result["shape"] = {{"rows", table.shape.a}, {"columns", table.shape.s}};
  Json blocks = Json::array();
  for (const auto& b : table.blocks)
    blocks.push_back({{"Lambda", b.Lambda},
                      {"multiplicity", b.multiplicity},
                      {"parity", b.parity},
                      {"h", h_block_value(b, table.shape)}});
  r.result["density_blocks"] = std::move(blocks);
  if (o.spectrum) {
    const TwistConfig tw = make_twist(o, rep.n(), false);
    const CMatrix H = hamiltonian_total(rep, table, chain_length(o, 2), tw).matrix();
    Eigen::ComplexEigenSolver<CMatrix> es(H, false);
    if (es.info() != Eigen::Success) throw ConvergenceError("eigensolver failed");
    std::vector<cplx> ev(es.eigenvalues().begin(), es.eigenvalues().end());
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    r.result["length"] = o.length;
    r.result["spectrum"] = to_json(ev);
    r.header = {"index", "re", "im"};
    for (std::size_t k = 0; k < ev.size(); ++k)
      r.rows.push_back({cell(static_cast<int>(k)), cell(ev[k].real()), cell(ev[k].imag())});
  } else {
    r.header = {"Lambda", "multiplicity", "parity", "h"};
    for (const auto& b : table.blocks)
      r.rows.push_back({joined(b.Lambda), cell(static_cast<int>(b.multiplicity)), cell(b.parity),
                        cell(h_block_value(b, table.shape))});
  }
  return r;
}

Report cmd_rmat(const Options& o) {
  const Representation rep = make_rep(o);
  const auto table = tensor_shifted_weights(rep);
  const cplx z = z_values(o).front();
  const CMatrix R = r_lambda_lambda(z, rep, table).matrix();
  Report r;
  r.result["z"] = to_json(z);
  Json blocks = Json::array();
  for (const auto& b : table.blocks)
    blocks.push_back({{"Lambda", b.Lambda}, {"value", to_json(r_block_value(z, b, table.shape))}});
  r.result["blocks"] = std::move(blocks);
  r.result["dimension"] = R.rows();
  r.result["matrix"] = to_json(R);
  matrix_rows(r, R);
  return r;
}

Report cmd_bethe(const Options& o) {
  const Representation rep = make_rep(o);
  const int n = rep.n();
  const int L = chain_length(o, 2);
  const TwistConfig tw = make_twist(o, n, true);
  const auto path = path_of(o, n);
  QFamily fam(rep, L, tw);
  const CMatrix H = hamiltonian_total(rep, L, tw).matrix();
  const auto states = find_eigenstates(fam, H, probes_of(path), o.seed);

  std::vector<BetheRootSet> roots(states.size());
  parallel_for(states.size(), [&](std::size_t k) { roots[k] = extract_roots(fam, path, states[k]); });

  cplx vacuum = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::size_t m = 0;
    for (const auto& lv : roots[k].levels) m += lv.size();
    if (m == 0) vacuum = states[k].energy_H;
  }

  Report r;
  r.result["path"] = path;
  r.result["reference_energy"] = to_json(vacuum);
  r.header = {"state", "charges", "bethe_residual", "collision", "E_roots_re", "E_roots_im", "E_H_re", "E_H_im", "delta_E"};
  Json out = Json::array();
  double worst_res = 0, worst_dE = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto check = bethe_residual(roots[k], rep.weight(), L, tw);
    const cplx e_roots = energy_from_roots(roots[k], rep.weight());
    const cplx e_h = states[k].energy_H - vacuum;
    const double dE = std::abs(e_roots - e_h);
    worst_res = std::max(worst_res, check.collision ? INFINITY : check.residual);
    worst_dE = std::max(worst_dE, dE);
    Json levels = Json::array();
    for (int i = 1; i < n; ++i) levels.push_back(to_json(roots[k].levels[i]));
    out.push_back({{"charges", states[k].charges},
                   {"roots", std::move(levels)},
                   {"bethe_residual", check.residual},
                   {"collision", check.collision},
                   {"E_from_roots", to_json(e_roots)},
                   {"E_from_H", to_json(e_h)},
                   {"delta_E", dE}});
    r.rows.push_back({cell(static_cast<int>(k)), joined(states[k].charges), cell(check.residual),
                      check.collision ? "true" : "false", cell(e_roots.real()), cell(e_roots.imag()), cell(e_h.real()),
                      cell(e_h.imag()), cell(dE)});
  }
  r.result["states"] = std::move(out);
  r.result["max_bethe_residual"] = worst_res;
  r.result["max_delta_E"] = worst_dE;
  r.result["tolerance"] = o.tolerance;
  r.verified = worst_res <= o.tolerance && worst_dE <= o.tolerance;
  r.result["pass"] = r.verified;
  return r;
}

Report cmd_spectrum(const Options& o) {
  const Representation rep = make_rep(o);
  const int n = rep.n();
  const int L = chain_length(o, 2);
  const TwistConfig tw = make_twist(o, n, true);
  const auto path = path_of(o, n);
  const cplx z = z_values(o).front();
  QFamily fam(rep, L, tw);
  const CMatrix H = hamiltonian_total(rep, L, tw).matrix();
  const auto probes = probes_of(path);
  const auto states = find_eigenstates(fam, H, probes, o.seed);

  std::vector<CMatrix> Qs(probes.size());
  parallel_for(probes.size(), [&](std::size_t k) { Qs[k] = fam.q_matrix(probes[k], z); });

  Report r;
  r.result["path"] = path;
  r.result["z"] = to_json(z);
  r.header = {"state", "charges", "E_re", "E_im"};
  for (const auto& I : probes) {
    r.header.push_back("Q" + joined(I.members(), "_") + "_re");
    r.header.push_back("Q" + joined(I.members(), "_") + "_im");
  }
  Json out = Json::array();
  for (std::size_t k = 0; k < states.size(); ++k) {
    Json q = Json::array();
    std::vector<std::string> row{cell(static_cast<int>(k)), joined(states[k].charges),
                                 cell(states[k].energy_H.real()), cell(states[k].energy_H.imag())};
    for (std::size_t p = 0; p < probes.size(); ++p) {
      const cplx v = expectation(Qs[p], states[k].vector);
      q.push_back({{"set", probes[p].members()}, {"value", to_json(v)}});
      row.push_back(cell(v.real()));
      row.push_back(cell(v.imag()));
    }
    out.push_back({{"charges", states[k].charges},
                   {"energy_H", to_json(states[k].energy_H)},
                   {"joint_residual", states[k].residual},
                   {"q_eigenvalues", std::move(q)}});
    r.rows.push_back(std::move(row));
  }
  r.result["states"] = std::move(out);
  return r;
}

}  // namespace spinchain::cli
