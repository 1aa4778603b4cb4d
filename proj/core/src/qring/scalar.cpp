#include "trigva/qring/scalar.hpp"

#include "trigva/errors.hpp"

namespace trigva::qring {

namespace {

Exponents negate(const Exponents& e) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::int16_t>(-e[i]);
  return r;
}

// Polynomial part of a Laurent polynomial: the monomial factor is irrelevant
// for gcds against canonical denominators.
MPoly poly_part(const MPoly& p) { return p.shifted(negate(p.min_exponents())); }

MPoly div_laurent(const MPoly& n, const MPoly& g) {
  if (g.is_one()) return n;
  Exponents m = n.min_exponents();
  return divide_exact(n.shifted(negate(m)), g).shifted(m);
}

}  // namespace

Scalar::Scalar(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  Exponents md = negate(den.min_exponents());
  MPoly d = den.shifted(md);
  MPoly n = num.shifted(md);
  if (d.is_constant()) {
    num_ = n * mpq_class(1 / d.leading().coeff);
    den_ = MPoly(1);
    return;
  }
  Exponents mn = n.min_exponents();
  n = n.shifted(negate(mn));
  MPoly g = gcd(n, d);
  if (!g.is_one()) {
    n = divide_exact(n, g);
    d = divide_exact(d, g);
  }
  mpq_class lc = d.leading().coeff;
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    n *= inv;
    d *= inv;
  }
  num_ = n.shifted(mn);
  den_ = std::move(d);
}

Scalar Scalar::operator-() const { return Scalar(Raw{}, -num_, den_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Scalar(den_, num_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
  } else if (den_ == o.den_) {
    MPoly n = num_ + o.num_;
    if (n.is_zero()) return *this = Scalar();
    MPoly g = gcd(poly_part(n), den_);
    num_ = div_laurent(n, g);
    den_ = divide_exact(den_, g);
  } else {
    // Henrici: only the common part of the denominators can cancel
    MPoly g = gcd(den_, o.den_);
    MPoly d1 = divide_exact(den_, g), d2 = divide_exact(o.den_, g);
    MPoly n = num_ * d2 + o.num_ * d1;
    if (n.is_zero()) return *this = Scalar();
    MPoly den = d1 * o.den_;
    MPoly h = g.is_one() ? g : gcd(poly_part(n), g);
    num_ = div_laurent(n, h);
    den_ = divide_exact(den, h);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
  } else {
    MPoly g1 = o.den_.is_one() ? MPoly(1) : gcd(poly_part(num_), o.den_);
    MPoly g2 = den_.is_one() ? MPoly(1) : gcd(poly_part(o.num_), den_);
    MPoly n = div_laurent(num_, g1) * div_laurent(o.num_, g2);
    den_ = divide_exact(den_, g2) * divide_exact(o.den_, g1);
    num_ = std::move(n);
  }
  return *this;
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar Scalar::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.empty() || text.front() != '(') return Scalar(parse_mpoly(text));
  auto close = text.find(')');
  if (close == std::string_view::npos) throw UsageError("unbalanced parenthesis");
  MPoly num = parse_mpoly(text.substr(1, close - 1));
  std::string_view rest = strip(text.substr(close + 1));
  if (rest.empty()) return Scalar(num);
  if (rest.front() != '/') throw UsageError("expected '/' after numerator");
  rest = strip(rest.substr(1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw UsageError("denominator must be parenthesized");
  return Scalar(num, parse_mpoly(rest.substr(1, rest.size() - 2)));
}

Scalar sin_bracket(long s) {
  if (s == 0) return Scalar();
  return Scalar(MPoly::q(static_cast<int>(s)) - MPoly::q(static_cast<int>(-s)));
}

mpq_class specialize(const Scalar& a, const mpq_class& q0, const std::vector<mpq_class>& units) {
  if (q0 == 0) throw DomainError("q cannot be specialized to 0");
  std::vector<mpq_class> point{q0};
  for (const auto& u : units) {
    if (u == 0) throw DomainError("units cannot be specialized to 0");
    point.push_back(u);
  }
  mpq_class d = a.den().evaluate(point);
  if (d == 0) {
    unsigned unit_mask = ~1u;
    MPoly dq = a.den().substitute(unit_mask, point);
    std::string factor = dq.is_zero() ? a.den().to_string()
                                      : (MPoly::q() - MPoly(q0)).to_string();
    throw EvaluationError("denominator " + a.den().to_string() + " vanishes at q = " +
                              q0.get_str(),
                          factor);
  }
  if (q0 == 1 || q0 == -1) throw DomainError("q cannot be specialized to a root of unity");
  return a.num().evaluate(point) / d;
}

}  // namespace trigva::qring
