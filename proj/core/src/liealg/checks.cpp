#include "trigva/liealg/checks.hpp"

#include "trigva/errors.hpp"

namespace trigva::liealg {

std::string iso_name(IsoKind k) {
  switch (k) {
    case IsoKind::A: return "A";
    case IsoKind::B: return "B";
    case IsoKind::CtoB: return "C_to_B";
    case IsoKind::D: return "D";
    case IsoKind::Dtau: return "D_tau";
  }
  return "?";
}

namespace {

Kind source_kind(IsoKind k) {
  switch (k) {
    case IsoKind::A: return Kind::A;
    case IsoKind::B: return Kind::B;
    case IsoKind::CtoB: return Kind::C;
    default: return Kind::D;
  }
}

// C_{alpha,m} -> q^alpha B_{alpha,m}, c -> c
TrigElem c_to_b(const TrigElem& x) {
  LinComb<TLabel> raw;
  for (const auto& [lab, c] : x.terms.terms()) raw.add(lab, Scalar::q(lab.first) * c);
  return canonicalize_trig(Kind::B, raw, x.central);
}

CovElem to_cov(const TrigElem& x, const CovSetup& setup, bool q_twist, const Scalar& central) {
  CovElem out = cov_central(setup, central * x.central);
  for (const auto& [lab, c] : x.terms.terms()) {
    Scalar f = q_twist ? c * Scalar::q(lab.first) : c;
    out += f * cov_gen(setup, lab.first, lab.second);
  }
  return out;
}

std::string quad(int a, int m, int b, int n) {
  return "(alpha,m,beta,n)=(" + std::to_string(a) + "," + std::to_string(m) + "," +
         std::to_string(b) + "," + std::to_string(n) + ")";
}

}  // namespace

CovSetup iso_target(IsoKind which, int scale) {
  CovSetup s;
  switch (which) {
    case IsoKind::A: s = CovSetup::chi_q(); break;
    case IsoKind::B:
    case IsoKind::CtoB: s = CovSetup::chi_B(); break;
    case IsoKind::D: s = CovSetup::chi_D(); break;
    case IsoKind::Dtau: s = CovSetup::tau(); break;
  }
  s.scale = scale;
  return s;
}

CovElem iso_image(IsoKind which, const TrigElem& x, int scale) {
  if (x.kind != source_kind(which)) throw UsageError("dictionary applied to the wrong kind");
  CovSetup s = iso_target(which, scale);
  Scalar half(mpq_class(1, 2));
  switch (which) {
    case IsoKind::A: return to_cov(x, s, false, 1);
    case IsoKind::B: return to_cov(x, s, false, half);
    case IsoKind::CtoB: return to_cov(c_to_b(x), s, false, half);
    case IsoKind::D: return to_cov(x, s, true, half);
    case IsoKind::Dtau: return to_cov(x, s, true, 1);
  }
  return {};
}

CheckOutcome iso_check(IsoKind which, int box, int scale) {
  if (box < 1) throw UsageError("iso_check needs box >= 1");
  Kind kind = source_kind(which);
  CheckOutcome out;
  for (int a = -box; a <= box; ++a)
    for (int m = -box; m <= box; ++m)
      for (int b = -box; b <= box; ++b)
        for (int n = -box; n <= box; ++n) {
          TrigElem x = trig_gen(kind, a, m), y = trig_gen(kind, b, n);
          TrigElem br = trig_bracket(x, y);
          ++out.checked;
          if (which == IsoKind::CtoB) {
            TrigElem lhs = c_to_b(br), rhs = trig_bracket(c_to_b(x), c_to_b(y));
            if (!(lhs == rhs)) {
              out.pass = false;
              out.witness = quad(a, m, b, n) + ": image " + to_string(lhs) + " vs bracket " +
                            to_string(rhs);
              return out;
            }
          }
          CovElem lhs = iso_image(which, br, scale);
          CovElem rhs = covariant_bracket(iso_image(which, x, scale), iso_image(which, y, scale));
          if (!(lhs == rhs)) {
            out.pass = false;
            out.witness =
                quad(a, m, b, n) + ": image " + to_string(lhs) + " vs bracket " + to_string(rhs);
            return out;
          }
        }
  return out;
}

}  // namespace trigva::liealg
