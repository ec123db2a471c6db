#pragma once

#include <vector>

#include "spinchain/index_set.hpp"
#include "spinchain/linop.hpp"

namespace spinchain {

/// Boundary twist angles phi_1..phi_n; complex values allowed.
struct TwistConfig {
  std::vector<cplx> phi;

  int n() const { return static_cast<int>(phi.size()); }
  /// 1-based angle.
  cplx operator()(int a) const { return phi.at(a - 1); }
  /// sum_{a in I} phi_a
  cplx total(const IndexSet& I) const;
  /// Trace weight t_{c,cdot} = exp(i (phi_cdot - phi_c)).
  cplx trace_weight(int c, int cdot) const;
  /// Throws InputError on length mismatch, PoleError if some t_{c,cdot} = 1 for c in I.
  void validate(int n, const IndexSet& I) const;
  void validate(int n) const;
};

}  // namespace spinchain
