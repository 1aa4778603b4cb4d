#include "trigva/fock/kernel.hpp"

#include <functional>
#include <numeric>

#include "trigva/errors.hpp"
#include "trigva/qring/laurent.hpp"

namespace trigva::fock {

using qring::LaurentQ;
using qring::MPoly;

int weight(const XExp& e) {
  int w = 0;
  for (int m = 0; m < kMaxX; ++m) w += (m + 1) * e[m];
  return w;
}

std::string monomial_string(const XExp& e) {
  std::string out;
  for (int m = 0; m < kMaxX; ++m) {
    if (e[m] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(m + 1);
    if (e[m] > 1) out += "^" + std::to_string(e[m]);
  }
  return out.empty() ? "1" : out;
}

FockBasis::FockBasis(int D) : D_(D) {
  if (D < 0 || D > kMaxX) throw UsageError("Fock degree must lie in [0, 16]");
  for (int d = 0; d <= D; ++d) by_degree_[d];
  // partitions of each degree, largest part first
  std::function<void(XExp&, int, int, int)> rec = [&](XExp& e, int left, int max_part, int d) {
    if (left == 0) {
      index_[e] = static_cast<int>(monos_.size());
      by_degree_[d].push_back(static_cast<int>(monos_.size()));
      monos_.push_back(e);
      degree_.push_back(d);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      ++e[p - 1];
      rec(e, left - p, p, d);
      --e[p - 1];
    }
  };
  for (int d = 0; d <= D; ++d) {
    XExp e{};
    rec(e, d, d, d);
  }
}

int FockBasis::index(const XExp& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

bool KVec::is_zero() const {
  for (const auto& p : c)
    if (!p.is_zero()) return false;
  return true;
}

KVec kvec_zero(int size) {
  KVec v;
  v.c.resize(size);
  return v;
}

KVec kvec_unit(int size, int index) {
  KVec v = kvec_zero(size);
  v.c.at(index) = QPoly(1);
  return v;
}

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i128 lcm128(i128 a, i128 b) { return checked_mul(a / gcd128(a, b), b); }

LaurentQ s_laurent(int k) { return LaurentQ::monomial(k) - LaurentQ::monomial(-k); }

LaurentQ power(const LaurentQ& x, int e) {
  LaurentQ r(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Sub-multisets nu of mu with |nu| = k, with coefficient prod C(mu_m, nu_m) (s_{m alpha}/m)^{nu_m}.
void for_each_ann(int alpha, const XExp& mu, int k,
                  const std::function<void(const XExp&, const LaurentQ&)>& f) {
  XExp rest = mu;
  std::function<void(int, int, LaurentQ)> rec = [&](int m, int left, LaurentQ c) {
    if (left == 0) {
      f(rest, c);
      return;
    }
    if (m > kMaxX) return;
    for (int take = 0; take <= mu[m - 1] && take * m <= left; ++take) {
      LaurentQ cc = c;
      if (take > 0) {
        LaurentQ base = s_laurent(m * alpha) * LaurentQ::monomial(0, mpq_class(1, m));
        cc = cc * power(base, take) * LaurentQ::monomial(0, mpq_class(binom(mu[m - 1], take)));
      }
      rest[m - 1] = static_cast<std::uint8_t>(mu[m - 1] - take);
      rec(m + 1, left - take * m, cc);
    }
    rest[m - 1] = mu[m - 1];
  };
  rec(1, k, LaurentQ(1));
}

// Partitions lambda of j with coefficient prod s_{m alpha}^{lambda_m} / lambda_m!.
void for_each_cre(int alpha, int j, const std::function<void(const XExp&, const LaurentQ&)>& f) {
  XExp lam{};
  std::function<void(int, int, LaurentQ)> rec = [&](int max_part, int left, LaurentQ c) {
    if (left == 0) {
      f(lam, c);
      return;
    }
    for (int p = std::min(max_part, left); p >= 1; --p) {
      // choose multiplicity r >= 1 of part p, then continue with smaller parts
      LaurentQ cc = c;
      for (int r = 1; r * p <= left; ++r) {
        cc = cc * s_laurent(p * alpha);
        lam[p - 1] = static_cast<std::uint8_t>(r);
        rec(p - 1, left - r * p, cc * LaurentQ::monomial(0, mpq_class(1, factorial(r))));
      }
      lam[p - 1] = 0;
    }
  };
  rec(j, j, LaurentQ(1));
}

XExp add_exp(const XExp& a, const XExp& b) {
  XExp r{};
  for (int m = 0; m < kMaxX; ++m) r[m] = static_cast<std::uint8_t>(a[m] + b[m]);
  return r;
}

}  // namespace

KVec kvec_combine(const QPoly& a, const KVec& x, const QPoly& b, const KVec& y) {
  if (x.c.size() != y.c.size()) throw UsageError("vector sizes differ");
  KVec r;
  r.den = lcm128(x.den, y.den);
  r.clipped = x.clipped || y.clipped;
  QPoly fa = a, fb = b;
  fa *= r.den / x.den;
  fb *= r.den / y.den;
  r.c.resize(x.c.size());
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    r.c[i].add_product(fa, x.c[i]);
    r.c[i].add_product(fb, y.c[i]);
  }
  return r;
}

FockKernel::FockKernel(int D) : basis_(D) {}

const FockKernel& FockKernel::get(int D) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FockKernel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[D];
  if (!slot) slot = std::make_unique<FockKernel>(D);
  return *slot;
}

const OpTable& FockKernel::vertex(int alpha, int n) const { return table(Kind::Vertex, alpha, n); }
const OpTable& FockKernel::heis(int n) const { return table(Kind::Heis, 0, n); }
const OpTable& FockKernel::cre(int alpha, int j) const { return table(Kind::Cre, alpha, j); }
const OpTable& FockKernel::ann(int alpha, int k) const { return table(Kind::Ann, alpha, k); }

const OpTable& FockKernel::table(Kind kind, int alpha, int n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = tables_[{kind, alpha, n}];
  if (!slot) slot = std::make_unique<OpTable>(build(kind, alpha, n));
  return *slot;
}

OpTable FockKernel::build(Kind kind, int alpha, int n) const {
  const int size = basis_.size(), D = basis_.max_degree();
  std::vector<std::map<int, LaurentQ>> raw(size);
  std::vector<bool> overflow(size, false);
  auto put = [&](int col, const XExp& e, const LaurentQ& c) {
    if (c.is_zero()) return;
    int row = basis_.index(e);
    if (row < 0) {
      overflow[col] = true;
      return;
    }
    raw[col][row] += c;
  };
  for (int col = 0; col < size; ++col) {
    const XExp& mu = basis_.mono(col);
    int d = basis_.degree(col);
    switch (kind) {
      case Kind::Heis:
        if (n > 0) {
          if (n <= kMaxX && mu[n - 1] > 0) {
            XExp e = mu;
            --e[n - 1];
            put(col, e, LaurentQ(mu[n - 1]));
          }
        } else if (n < 0) {
          if (d - n > D) {
            overflow[col] = true;
          } else {
            XExp e = mu;
            ++e[-n - 1];
            put(col, e, LaurentQ(-n));
          }
        }
        break;
      case Kind::Ann:
        if (n >= 0 && n <= d) for_each_ann(alpha, mu, n, [&](const XExp& e, const LaurentQ& c) { put(col, e, c); });
        break;
      case Kind::Cre:
        if (n >= 0) {
          if (d + n > D) {
            overflow[col] = true;
          } else {
            for_each_cre(alpha, n, [&](const XExp& lam, const LaurentQ& c) { put(col, add_exp(mu, lam), c); });
          }
        }
        break;
      case Kind::Vertex:
        if (d - n > D) {
          overflow[col] = true;
          break;
        }
        for (int k = std::max(n, 0); k <= d; ++k)
          for_each_ann(alpha, mu, k, [&](const XExp& rest, const LaurentQ& ca) {
            for_each_cre(alpha, k - n, [&](const XExp& lam, const LaurentQ& cc) {
              put(col, add_exp(rest, lam), ca * cc);
            });
          });
        break;
    }
  }
  mpz_class scale = 1;
  for (const auto& col : raw)
    for (const auto& [row, c] : col)
      for (const auto& [e, r] : c.terms()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), r.get_den_mpz_t());
  OpTable t;
  t.scale = from_mpz(scale);
  t.cols.resize(size);
  for (int col = 0; col < size; ++col) {
    t.cols[col].overflow = overflow[col];
    for (const auto& [row, c] : raw[col]) {
      if (c.is_zero()) continue;
      QPoly p;
      for (const auto& [e, r] : c.terms()) {
        mpq_class v = r * scale;
        p += QPoly::monomial(e, from_mpz(v.get_num()));
      }
      t.cols[col].entries.emplace_back(row, std::move(p));
    }
  }
  return t;
}

KVec FockKernel::apply(const OpTable& t, const KVec& v) const {
  KVec r;
  r.c.resize(v.c.size());
  r.den = checked_mul(v.den, t.scale);
  r.clipped = v.clipped;
  for (std::size_t col = 0; col < v.c.size(); ++col) {
    if (v.c[col].is_zero()) continue;
    if (t.cols[col].overflow) r.clipped = true;
    for (const auto& [row, c] : t.cols[col].entries) r.c[row].add_product(c, v.c[col]);
  }
  return r;
}

std::vector<QPoly> integral_coefficients(const std::vector<Scalar>& k) {
  std::vector<QPoly> out(k.size());
  std::size_t first = k.size();
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!k[i].is_zero()) {
      first = i;
      break;
    }
  if (first == k.size()) return out;
  std::vector<Scalar> ratio(k.size());
  MPoly common(1);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i].is_zero()) continue;
    ratio[i] = k[i] / k[first];
    if ((ratio[i].num().var_mask() | ratio[i].den().var_mask()) & ~1u)
      throw UsageError("coefficients differ by a unit monomial");
    common = common * divide_exact(ratio[i].den(), qring::gcd(common, ratio[i].den()));
  }
  std::vector<MPoly> c(k.size());
  mpz_class den = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i].is_zero()) continue;
    c[i] = ratio[i].num() * divide_exact(common, ratio[i].den());
    for (const auto& t : c[i].terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  for (std::size_t i = 0; i < k.size(); ++i)
    if (!c[i].is_zero()) out[i] = QPoly::from_mpoly(c[i] * mpq_class(den));
  return out;
}

Scalar to_scalar(const QPoly& c, i128 den) {
  return Scalar(c.to_mpoly()) * Scalar(mpq_class(1) / mpq_class(to_mpz(den)));
}

std::string render_coeff(const QPoly& c, i128 den) { return to_scalar(c, den).to_string(); }

}  // namespace trigva::fock
