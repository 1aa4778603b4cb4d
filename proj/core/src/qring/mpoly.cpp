#include "trigva/qring/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "trigva/errors.hpp"

namespace trigva::qring {

namespace {

mpq_class mpq_pow(const mpq_class& b, int e) {
  if (e == 0) return 1;
  if (b == 0 && e > 0) return 0;
  if (b == 0) throw DomainError("zero raised to a non-positive power");
  mpz_class n, d;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), k);
  mpq_class r = e > 0 ? mpq_class(n, d) : mpq_class(d, n);
  r.canonicalize();
  return r;
}

}  // namespace

MPoly::MPoly(long c) {
  if (c != 0) terms_.push_back({Exponents{}, mpq_class(c)});
}

MPoly::MPoly(const mpq_class& c) {
  if (c != 0) {
    terms_.push_back({Exponents{}, c});
    terms_.back().coeff.canonicalize();
  }
}

MPoly MPoly::monomial(const Exponents& e, const mpq_class& c) {
  MPoly p;
  if (c != 0) {
    p.terms_.push_back({e, c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

MPoly MPoly::var(int v, int power) {
  Exponents e{};
  e[v] = static_cast<std::int16_t>(power);
  return monomial(e, 1);
}

MPoly MPoly::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponents{});
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Exponents{} && terms_[0].coeff == 1;
}

bool MPoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (auto e : t.exp)
      if (e < 0) return false;
  return true;
}

mpq_class MPoly::constant_term() const {
  for (const auto& t : terms_)
    if (t.exp == Exponents{}) return t.coeff;
  return 0;
}

Exponents MPoly::min_exponents() const {
  Exponents m{};
  if (terms_.empty()) return m;
  m = terms_[0].exp;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

unsigned MPoly::var_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.exp[i] != 0) mask |= 1u << i;
  return mask;
}

int MPoly::degree_in(int v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.exp[v] > d) d = t.exp[v];
    first = false;
  }
  return d;
}

int MPoly::max_var() const {
  unsigned mask = var_mask();
  int v = -1;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) v = i;
  return v;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <bool Subtract>
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back(b[j]);
      if constexpr (Subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      mpq_class c = Subtract ? mpq_class(a[i].coeff - b[j].coeff)
                             : mpq_class(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge<false>(terms_, o.terms_);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge<true>(terms_, o.terms_);
  return *this;
}

MPoly& MPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.shifted(a.terms_[0].exp) * a.terms_[0].coeff;
  if (b.terms_.size() == 1) return a.shifted(b.terms_[0].exp) * b.terms_[0].coeff;
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Term r;
      for (int i = 0; i < kMaxVars; ++i)
        r.exp[i] = static_cast<std::int16_t>(s.exp[i] + t.exp[i]);
      r.coeff = s.coeff * t.coeff;
      out.push_back(std::move(r));
    }
  return MPoly::from_unsorted(std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

bool operator<(const MPoly& a, const MPoly& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp) return a.terms_[i].exp < b.terms_[i].exp;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.terms_.size() < b.terms_.size();
}

MPoly MPoly::shifted(const Exponents& delta) const {
  MPoly r = *this;
  for (auto& t : r.terms_)
    for (int i = 0; i < kMaxVars; ++i)
      t.exp[i] = static_cast<std::int16_t>(t.exp[i] + delta[i]);
  return r;
}

void MPoly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& x) { return t.exp < x; });
  if (it != terms_.end() && it->exp == e) {
    it->coeff += c;
    if (it->coeff == 0) terms_.erase(it);
  } else {
    it = terms_.insert(it, Term{e, c});
    it->coeff.canonicalize();
  }
}

MPoly MPoly::substitute(unsigned mask, const std::vector<mpq_class>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term r = t;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!(mask & (1u << i)) || t.exp[i] == 0) continue;
      if (static_cast<std::size_t>(i) >= values.size())
        throw UsageError("no value supplied for " + var_name(i));
      r.coeff *= mpq_pow(values[i], t.exp[i]);
      r.exp[i] = 0;
    }
    out.push_back(std::move(r));
  }
  return from_unsorted(std::move(out));
}

mpq_class MPoly::evaluate(const std::vector<mpq_class>& values) const {
  return substitute(~0u, values).constant_term();
}

std::string var_name(int v) { return v == 0 ? "q" : "u" + std::to_string(v); }

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const mpq_class& c = it->coeff;
    bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    mpq_class a = abs(c);
    std::string factors;
    for (int i = 0; i < kMaxVars; ++i) {
      if (it->exp[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += var_name(i);
      if (it->exp[i] != 1) factors += '^' + std::to_string(it->exp[i]);
    }
    if (factors.empty()) {
      os << a.get_str();
    } else if (a == 1) {
      os << factors;
    } else {
      os << a.get_str() << '*' << factors;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly poly() {
    MPoly r;
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    } else if (peek() == '+') {
      ++i_;
    }
    r = term();
    if (neg) r = -r;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++i_;
      MPoly t = term();
      if (c == '+') r += t; else r -= t;
    }
    return r;
  }

  bool done() {
    skip();
    return i_ >= s_.size();
  }

 private:
  MPoly term() {
    MPoly r = factor();
    for (;;) {
      skip();
      if (peek() != '*') break;
      ++i_;
      r = r * factor();
    }
    return r;
  }

  MPoly factor() {
    skip();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek() == '/') {
        ++i_;
        num += '/' + digits();
      }
      mpq_class v(num);
      v.canonicalize();
      return MPoly(v);
    }
    int v = -1;
    if (c == 'q') {
      ++i_;
      v = 0;
    } else if (c == 'u') {
      ++i_;
      v = std::stoi(digits());
      if (v < 1 || v >= kMaxVars) fail("unit index out of range");
    } else {
      fail("unexpected character");
    }
    int e = 1;
    if (peek() == '^') {
      ++i_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++i_;
      }
      e = std::stoi(digits());
      if (neg) e = -e;
    }
    return MPoly::var(v, e);
  }

  std::string digits() {
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected digits");
    return std::string(s_.substr(start, i_ - start));
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  [[noreturn]] void fail(const char* why) const {
    throw UsageError(std::string("cannot parse polynomial: ") + why + " at offset " +
                     std::to_string(i_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

MPoly parse_mpoly(std::string_view text) {
  Parser p(text);
  MPoly r = p.poly();
  if (!p.done()) throw UsageError("trailing input in '" + std::string(text) + "'");
  return r;
}

}  // namespace trigva::qring
