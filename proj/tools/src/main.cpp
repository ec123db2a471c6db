#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11/CLI11.hpp>

#include "commands.hpp"
#include "spinchain/errors.hpp"

using namespace spinchain;
using namespace spinchain::cli;

namespace {

struct Flags {
  bool set = false, pair = false, length = false, twist = false, z = false, path = false, seed = false,
       spectrum = false, n = false;
};

CLI::App* add_command(CLI::App& parent, const std::string& name, const std::string& help, Options& o, Flags f) {
  CLI::App* sub = parent.add_subcommand(name, help);
  sub->add_option("--rep", o.rep, "highest weight, e.g. 1,1,0")->required();
  if (f.n) sub->add_option("--n", o.n, "rank check: must equal the length of --rep");
  if (f.set) sub->add_option("--set", o.sets, "index set, e.g. 1,3 (repeat for a second set)");
  if (f.pair) sub->add_option("--pair", o.pair, "indices a,b outside --set");
  if (f.length) sub->add_option("--length", o.length, "number of sites L");
  if (f.twist) sub->add_option("--twist", o.twist, "twist angles phi_1,...,phi_n (complex literals allowed)");
  if (f.z) sub->add_option("--z", o.z, "spectral parameter(s), e.g. 0.7 or 0.3+0.2i");
  if (f.path) sub->add_option("--path", o.path, "Hasse path as a permutation, e.g. 1,2,3");
  if (f.seed) sub->add_option("--seed", o.seed, "seed for the random probe combination");
  if (f.spectrum) sub->add_flag("--spectrum", o.spectrum, "diagonalize the total Hamiltonian");
  sub->add_option("--tolerance", o.tolerance, "verification tolerance")->capture_default_str();
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", o.out, "output file (default stdout)");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-operators, R-matrices and Bethe roots for rational gl(n) spin chains", "spinchain"};
  app.require_subcommand(1);
  Options o;

  std::map<CLI::App*, std::string> names;
  auto reg = [&](const std::string& name, const std::string& help, Flags f) {
    CLI::App* sub = add_command(app, name, help, o, f);
    names[sub] = name;
    return sub;
  };
  reg("patterns", "list Gelfand-Tsetlin patterns", {.n = true});
  reg("weights", "shifted weights of the complementary subalgebra", {.set = true, .n = true});
  reg("lax", "normal-ordered degenerate Lax operator", {.set = true, .z = true, .n = true});
  reg("qop", "Q-operator matrix", {.set = true, .length = true, .twist = true, .z = true, .n = true});
  reg("ham", "Hamiltonian density blocks and spectrum", {.length = true, .twist = true, .spectrum = true, .n = true});
  reg("rmat", "R-matrix on V x V", {.z = true, .n = true});
  reg("bethe", "Bethe roots from Q eigenvalues versus exact diagonalization",
      {.length = true, .twist = true, .path = true, .seed = true, .n = true});
  reg("spectrum", "joint eigenvalues of H and the Q-operators along a path",
      {.length = true, .twist = true, .z = true, .path = true, .seed = true, .n = true});

  CLI::App* verify = app.add_subcommand("verify", "check a functional relation");
  verify->require_subcommand(1);
  const Flags vf{.set = true, .pair = true, .length = true, .twist = true, .z = true, .n = true};
  for (const auto& [name, help] : std::map<std::string, std::string>{
           {"qq", "QQ relation"}, {"comm", "commutativity of two Q-operators"}, {"det", "determinant formula"}}) {
    CLI::App* sub = add_command(*verify, name, help, o, vf);
    names[sub] = "verify " + name;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  CLI::App* chosen = nullptr;
  for (auto& [sub, name] : names)
    if (sub->parsed()) chosen = sub, o.command = name;

  try {
    Report r;
    const std::string& c = o.command;
    if (c == "patterns") r = cmd_patterns(o);
    else if (c == "weights") r = cmd_weights(o);
    else if (c == "lax") r = cmd_lax(o);
    else if (c == "qop") r = cmd_qop(o);
    else if (c == "ham") r = cmd_ham(o);
    else if (c == "rmat") r = cmd_rmat(o);
    else if (c == "bethe") r = cmd_bethe(o);
    else if (c == "spectrum") r = cmd_spectrum(o);
    else r = cmd_verify(o, c.substr(c.find(' ') + 1));

    const Json m = manifest(o);
    const std::string text = o.format == "csv" ? render_csv(m, r) : render_json(m, r);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!f) throw InputError("cannot open " + o.out);
      f << text;
    }
    if (!r.verified) {
      std::cerr << "verification failed: residual above tolerance " << o.tolerance << "\n";
      return 1;
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n\n" << (chosen ? chosen->help() : app.help());
    return 2;
  } catch (const PoleError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
