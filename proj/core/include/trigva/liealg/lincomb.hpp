#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "trigva/qring/scalar.hpp"

namespace trigva {

using qring::Scalar;

// Finite linear combination over an ordered key set; zero coefficients are
// never stored.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Scalar>;

  LinComb() = default;
  LinComb(const Key& k, const Scalar& c = 1) { add(k, c); }

  void add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
  }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else if (!s.is_one()) {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

// Renders "coeff*key + ..." with composite coefficients parenthesized.
inline std::string render_coeff(const Scalar& c, const std::string& key) {
  if (c.is_one()) return key;
  if ((-c).is_one()) return "-" + key;
  std::string s = c.to_string();
  bool simple = s.find_first_of(" /") == std::string::npos;
  return (simple ? s : "(" + s + ")") + "*" + key;
}

template <class Key>
std::string render(const LinComb<Key>& x, const std::function<std::string(const Key&)>& name,
                   const Scalar& central = Scalar(), const std::string& central_name = "") {
  std::string out;
  for (const auto& [k, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += render_coeff(c, name(k));
  }
  if (!central.is_zero()) {
    if (!out.empty()) out += " + ";
    out += render_coeff(central, central_name);
  }
  return out.empty() ? "0" : out;
}

}  // namespace trigva
