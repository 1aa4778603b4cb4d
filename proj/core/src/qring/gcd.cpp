// Multivariate gcd over Q by recursive primitive pseudo-remainder sequences.

#include <algorithm>
#include <map>

#include "trigva/errors.hpp"
#include "trigva/qring/mpoly.hpp"

namespace trigva::qring {

namespace {

int lowest_var(unsigned mask) {
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) return i;
  return -1;
}

// Coefficient of v^d, as a polynomial free of v.
MPoly coeff_in(const MPoly& p, int v, int d) {
  MPoly r;
  for (const auto& t : p.terms())
    if (t.exp[v] == d) {
      Exponents e = t.exp;
      e[v] = 0;
      r.add_term(e, t.coeff);
    }
  return r;
}

MPoly content_over(const MPoly& p, unsigned mask);

MPoly univariate_gcd(const MPoly& a, const MPoly& b, int v) {
  auto dense = [v](const MPoly& p) {
    std::vector<mpq_class> c(p.degree_in(v) + 1);
    for (const auto& t : p.terms()) c[t.exp[v]] = t.coeff;
    return c;
  };
  auto trim = [](std::vector<mpq_class>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  };
  std::vector<mpq_class> x = dense(a), y = dense(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    // x <- x mod y
    mpq_class inv = 1 / y.back();
    while (x.size() >= y.size()) {
      mpq_class f = x.back() * inv;
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= f * y[i];
      x.pop_back();
      trim(x);
      if (x.empty()) break;
    }
    if (!x.empty()) {
      mpq_class lc = x.back();
      for (auto& c : x) c /= lc;
    }
    std::swap(x, y);
  }
  MPoly r;
  mpq_class lc = x.back();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Exponents e{};
    e[v] = static_cast<std::int16_t>(i);
    r.add_term(e, x[i] / lc);
  }
  return r;
}

MPoly pseudo_remainder(MPoly r, const MPoly& b, int v) {
  int db = b.degree_in(v);
  MPoly lcb = coeff_in(b, v, db);
  int steps = r.degree_in(v) - db + 1;
  while (!r.is_zero() && steps > 0) {
    int dr = r.degree_in(v);
    if (dr < db) break;
    MPoly lcr = coeff_in(r, v, dr);
    r = lcb * r - lcr * MPoly::var(v, dr - db) * b;
    --steps;
  }
  // lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder
  for (; steps > 0 && !r.is_zero(); --steps) r = lcb * r;
  return r;
}

MPoly primitive_part(const MPoly& p, int v) {
  return divide_exact(p, content_over(p, 1u << v));
}

// Monomial gcd: x^min(e, lowest exponents of p).
MPoly monomial_gcd(const Exponents& e, const MPoly& p) {
  Exponents m = p.min_exponents();
  for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], e[i]);
  return MPoly::monomial(m, 1);
}

// True when a and b are certainly coprime in v after removing contents:
// specialize the other variables at a point where both leading coefficients
// survive and check that the univariate images are coprime.
bool images_coprime(const MPoly& a, const MPoly& b, int v) {
  static const int kPoints[] = {0, 3, -2, 5, 7, -11, 13, 17};
  unsigned others = ~(1u << v);
  std::vector<mpq_class> pt(kMaxVars);
  for (int i = 0; i < kMaxVars; ++i) pt[i] = kPoints[i];
  MPoly ia = a.substitute(others, pt), ib = b.substitute(others, pt);
  if (ia.degree_in(v) != a.degree_in(v) || ib.degree_in(v) != b.degree_in(v)) return false;
  if (ia.is_constant() || ib.is_constant()) return false;
  return univariate_gcd(ia, ib, v).is_constant();
}

MPoly gcd_impl(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  if (a == b) return monic(a);
  if (a.is_monomial()) return monomial_gcd(a.leading().exp, b);
  if (b.is_monomial()) return monomial_gcd(b.leading().exp, a);
  unsigned ma = a.var_mask(), mb = b.var_mask();
  if (unsigned only = ma & ~mb) return gcd_impl(content_over(a, only), b);
  if (unsigned only = mb & ~ma) return gcd_impl(a, content_over(b, only));
  int v = lowest_var(ma);
  if (ma == (1u << v)) return univariate_gcd(a, b, v);
  // main variable: the shared one of least degree
  for (int i = 0; i < kMaxVars; ++i)
    if ((ma & (1u << i)) && std::max(a.degree_in(i), b.degree_in(i)) <
                                std::max(a.degree_in(v), b.degree_in(v)))
      v = i;

  MPoly ca = content_over(a, 1u << v), cb = content_over(b, 1u << v);
  MPoly g = gcd_impl(ca, cb);
  MPoly pa = monic(divide_exact(a, ca)), pb = monic(divide_exact(b, cb));
  if (images_coprime(pa, pb, v)) return monic(g);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  // subresultant remainder sequence
  MPoly lead(1), h(1);
  while (true) {
    int delta = pa.degree_in(v) - pb.degree_in(v);
    MPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = MPoly(1);
      break;
    }
    MPoly divisor = lead;
    for (int i = 0; i < delta; ++i) divisor = divisor * h;
    pa = std::move(pb);
    pb = divide_exact(r, divisor);
    lead = coeff_in(pa, v, pa.degree_in(v));
    if (delta == 0) continue;
    MPoly num = lead, den(1);
    for (int i = 1; i < delta; ++i) {
      num = num * lead;
      den = den * h;
    }
    h = divide_exact(num, den);
  }
  if (pb.is_constant()) return monic(g);
  return monic(g * primitive_part(pb, v));
}

// gcd of the coefficients of p viewed as a polynomial in the variables of mask.
MPoly content_over(const MPoly& p, unsigned mask) {
  std::map<Exponents, MPoly> groups;
  for (const auto& t : p.terms()) {
    Exponents key{}, rest = t.exp;
    for (int i = 0; i < kMaxVars; ++i)
      if (mask & (1u << i)) {
        key[i] = t.exp[i];
        rest[i] = 0;
      }
    groups[key].add_term(rest, t.coeff);
  }
  MPoly g;
  for (auto& [key, c] : groups) {
    g = g.is_zero() ? monic(c) : gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

}  // namespace

MPoly monic(const MPoly& p) {
  if (p.is_zero()) return p;
  const mpq_class& lc = p.leading().coeff;
  if (lc == 1) return p;
  return p * mpq_class(1 / lc);
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (!a.is_polynomial() || !b.is_polynomial())
    throw UsageError("gcd expects polynomials without negative exponents");
  return gcd_impl(a, b);
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (b.is_monomial()) {
    Exponents neg{};
    for (int i = 0; i < kMaxVars; ++i) neg[i] = static_cast<std::int16_t>(-b.leading().exp[i]);
    return a.shifted(neg) * mpq_class(1 / b.leading().coeff);
  }
  MPoly quot, rem = a;
  const Term& lb = b.leading();
  mpq_class inv = 1 / lb.coeff;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading();
    Exponents e{};
    for (int i = 0; i < kMaxVars; ++i) {
      if (lr.exp[i] < lb.exp[i]) throw DomainError("inexact polynomial division");
      e[i] = static_cast<std::int16_t>(lr.exp[i] - lb.exp[i]);
    }
    MPoly t = MPoly::monomial(e, lr.coeff * inv);
    rem -= t * b;
    quot += t;
  }
  return quot;
}

}  // namespace trigva::qring
