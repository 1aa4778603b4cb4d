#include "trigva/fock/qpoly.hpp"

#include <algorithm>

#include "trigva/errors.hpp"

namespace trigva::fock {

namespace {

[[noreturn]] void overflow() {
  throw EvaluationError("128-bit coefficient overflow in the Fock kernel", "i128");
}

}  // namespace

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

mpz_class to_mpz(i128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

i128 from_mpz(const mpz_class& z) {
  if (mpz_sizeinbase(z.get_mpz_t(), 2) > 126) overflow();
  mpz_class a = abs(z);
  mpz_class hi = a >> 64, lo = a - (hi << 64);
  unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  i128 r = static_cast<i128>(u);
  return z < 0 ? -r : r;
}

QPoly QPoly::monomial(int e, i128 c) {
  QPoly p;
  if (c != 0) {
    p.lo_ = e;
    p.c_.push_back(c);
  }
  return p;
}

QPoly QPoly::from_mpoly(const qring::MPoly& p) {
  QPoly out;
  for (const auto& t : p.terms()) {
    for (int v = 1; v < qring::kMaxVars; ++v)
      if (t.exp[v] != 0) throw UsageError("QPoly holds polynomials in q only");
    if (t.coeff.get_den() != 1) throw UsageError("QPoly needs integer coefficients");
    out += monomial(t.exp[0], from_mpz(t.coeff.get_num()));
  }
  return out;
}

i128 QPoly::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > hi()) return 0;
  return c_[e - lo_];
}

void QPoly::trim() {
  std::size_t a = 0;
  while (a < c_.size() && c_[a] == 0) ++a;
  if (a == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  std::size_t b = c_.size();
  while (c_[b - 1] == 0) --b;
  if (a > 0 || b < c_.size()) {
    c_ = std::vector<i128>(c_.begin() + a, c_.begin() + b);
    lo_ += static_cast<int>(a);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int lo = std::min(lo_, o.lo_), hi = std::max(this->hi(), o.hi());
  if (lo < lo_ || hi > this->hi()) {
    std::vector<i128> c(hi - lo + 1, 0);
    std::copy(c_.begin(), c_.end(), c.begin() + (lo_ - lo));
    c_ = std::move(c);
    lo_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    i128& slot = c_[o.lo_ - lo_ + i];
    slot = checked_add(slot, o.c_[i]);
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  QPoly n = o;
  n *= -1;
  return *this += n;
}

QPoly& QPoly::operator*=(i128 k) {
  if (k == 0) {
    c_.clear();
    lo_ = 0;
    return *this;
  }
  for (auto& c : c_) c = checked_mul(c, k);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.add_product(a, b);
  return r;
}

void QPoly::add_product(const QPoly& a, const QPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  int lo = a.lo_ + b.lo_, hi = a.hi() + b.hi();
  if (c_.empty()) {
    lo_ = lo;
    c_.assign(hi - lo + 1, 0);
  } else if (lo < lo_ || hi > this->hi()) {
    int nlo = std::min(lo, lo_), nhi = std::max(hi, this->hi());
    std::vector<i128> c(nhi - nlo + 1, 0);
    std::copy(c_.begin(), c_.end(), c.begin() + (lo_ - nlo));
    c_ = std::move(c);
    lo_ = nlo;
  }
  std::size_t off = lo - lo_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      i128& slot = c_[off + i + j];
      slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
    }
  }
  trim();
}

qring::MPoly QPoly::to_mpoly() const {
  qring::MPoly p;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) p += qring::MPoly::q(lo_ + static_cast<int>(i)) * mpq_class(to_mpz(c_[i]));
  return p;
}

}  // namespace trigva::fock
