#include "trigva/qring/laurent.hpp"

#include "trigva/errors.hpp"

namespace trigva::qring {

LaurentQ::LaurentQ(long c) {
  if (c != 0) terms_[0] = c;
}

LaurentQ LaurentQ::monomial(int e, const mpq_class& c) {
  LaurentQ r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

LaurentQ LaurentQ::from_mpoly(const MPoly& p) {
  if (p.var_mask() & ~1u) throw UsageError("not a Laurent polynomial in q: " + p.to_string());
  LaurentQ r;
  for (const auto& t : p.terms()) r.terms_[t.exp[0]] = t.coeff;
  return r;
}

mpq_class LaurentQ::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) {
  for (const auto& [e, c] : o.terms_) {
    auto& slot = terms_[e];
    slot -= c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ r;
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) r += LaurentQ::monomial(e + f, c * d);
  return r;
}

MPoly LaurentQ::to_mpoly() const {
  MPoly p;
  for (const auto& [e, c] : terms_) p += MPoly::q(e) * c;
  return p;
}

}  // namespace trigva::qring
