#pragma once

#include <string>

#include "trigva/liealg/affine.hpp"
#include "trigva/liealg/trig.hpp"

namespace trigva::liealg {

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]
template <class T, class Bracket>
T jacobi_residual(Bracket&& br, const T& x, const T& y, const T& z) {
  return br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y));
}

enum class IsoKind { A, B, CtoB, D, Dtau };
std::string iso_name(IsoKind k);

struct CheckOutcome {
  bool pass = true;
  std::string witness;  // empty on pass
  long checked = 0;
};

// Dictionary images used by iso_check. `scale` perturbs the character of the
// target covariant algebra.
CovSetup iso_target(IsoKind which, int scale = 1);
CovElem iso_image(IsoKind which, const TrigElem& x, int scale = 1);

CheckOutcome iso_check(IsoKind which, int box, int scale = 1);

}  // namespace trigva::liealg
