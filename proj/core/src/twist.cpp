#include "spinchain/twist.hpp"

#include <string>

#include "spinchain/errors.hpp"

namespace spinchain {

cplx TwistConfig::total(const IndexSet& I) const {
  cplx s = 0.0;
  for (int a : I.members()) s += (*this)(a);
  return s;
}

cplx TwistConfig::trace_weight(int c, int cdot) const {
  return std::exp(cplx(0.0, 1.0) * ((*this)(cdot) - (*this)(c)));
}

void TwistConfig::validate(int n) const {
  if (this->n() != n)
    throw InputError("twist has " + std::to_string(this->n()) + " angles, expected " + std::to_string(n));
}

void TwistConfig::validate(int n, const IndexSet& I) const {
  validate(n);
  const IndexSet Ibar = I.complement();
  for (int c : I.members())
    for (int cd : Ibar.members())
      if (std::abs(1.0 - trace_weight(c, cd)) < 1e-12)
        throw PoleError("untwisted direction (" + std::to_string(c) + "," + std::to_string(cd) + ")");
}

}  // namespace spinchain
