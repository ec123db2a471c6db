#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace spinchain::cli {

/// Raw flag values shared by all subcommands.
struct Options {
  std::string command;
  std::string rep;
  int n = 0;  ///< 0 when --n was not given
  std::vector<std::string> sets;
  std::string pair;
  int length = 1;
  std::string twist;
  std::string z;
  double tolerance = 1e-8;
  std::string format = "json";
  std::string out;
  std::string path;
  std::uint64_t seed = 7;
  bool spectrum = false;
};

/// Inputs echoed into the run manifest.
Json manifest(const Options& o);

Report cmd_patterns(const Options& o);
Report cmd_weights(const Options& o);
Report cmd_lax(const Options& o);
Report cmd_qop(const Options& o);
Report cmd_verify(const Options& o, const std::string& relation);
Report cmd_ham(const Options& o);
Report cmd_rmat(const Options& o);
Report cmd_bethe(const Options& o);
Report cmd_spectrum(const Options& o);

}  // namespace spinchain::cli
