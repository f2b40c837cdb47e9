#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "areps/error.hpp"

namespace areps {

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = mpq_class;

/// a/b in lowest terms.
inline Rational ratio(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

namespace detail {

inline std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long m) {
  std::vector<std::pair<unsigned long, unsigned>> f;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    f.emplace_back(p, e);
  }
  if (m > 1) f.emplace_back(m, 1);
  return f;
}

inline unsigned long ipow(unsigned long b, unsigned e) {
  unsigned long r = 1;
  while (e--) r *= b;
  return r;
}

inline long long mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, aa = ((a % m) + m) % m;
  while (aa) {
    long long q = g / aa;
    std::swap(g, aa);
    aa -= q * g;
    std::swap(x, x1);
    x1 -= q * x;
  }
  if (g != 1) return -1;
  return ((x % m) + m) % m;
}

}  // namespace detail

/// An element of Q(zeta_m) stored in the Zumbroich basis of its minimal field.
/// Two values are equal exactly when their (order, terms) coincide.
class Cyclotomic {
 public:
  using Term = std::pair<unsigned long, Rational>;  // (exponent k, coefficient of zeta_m^k)

  Cyclotomic() = default;
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT(implicit)
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}   // NOLINT(implicit)
  Cyclotomic(Rational const &q) {                  // NOLINT(implicit)
    if (q != 0) {
      terms_.emplace_back(0, q);
      terms_[0].second.canonicalize();
    }
  }

  /// zeta_m^k in canonical form.
  static Cyclotomic root_of_unity(unsigned long m, long long k) {
    if (m == 0) throw Error(Errc::InvalidInput, "root of unity of order 0");
    std::vector<Rational> dense(m);
    long long r = k % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    dense[static_cast<std::size_t>(r)] = 1;
    return normalize(m, std::move(dense));
  }

  unsigned long order() const { return order_; }
  std::vector<Term> const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return order_ == 1; }

  Rational to_rational() const {
    if (order_ != 1) throw Error(Errc::NotRational, "value " + str() + " is irrational");
    return terms_.empty() ? Rational(0) : terms_[0].second;
  }

  /// Integer value; NotAnInteger when the value is not a rational integer.
  long long to_integer() const {
    if (order_ != 1) throw Error(Errc::NotAnInteger, "value " + str() + " is irrational");
    Rational q = to_rational();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      throw Error(Errc::NotAnInteger, "value " + str() + " is not an integer");
    return q.get_num().get_si();
  }

  /// Floating-point shadow; display and test use only.
  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    for (auto const &[k, c] : terms_) {
      double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(order_);
      z += c.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  friend Cyclotomic operator+(Cyclotomic const &a, Cyclotomic const &b) { return a.combine(b, 1); }
  friend Cyclotomic operator-(Cyclotomic const &a, Cyclotomic const &b) { return a.combine(b, -1); }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto &t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Cyclotomic operator*(Cyclotomic const &a, Cyclotomic const &b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.order_ == 1) return b.scaled(a.terms_[0].second);
    if (b.order_ == 1) return a.scaled(b.terms_[0].second);
    unsigned long L = std::lcm(a.order_, b.order_);
    unsigned long fa = L / a.order_, fb = L / b.order_;
    std::vector<Rational> dense(L);
    for (auto const &[ka, ca] : a.terms_)
      for (auto const &[kb, cb] : b.terms_) dense[(ka * fa + kb * fb) % L] += ca * cb;
    return normalize(L, std::move(dense));
  }

  Cyclotomic scaled(Rational const &q) const {
    if (q == 0) return {};
    Cyclotomic r = *this;
    for (auto &t : r.terms_) t.second *= q;
    return r;
  }

  Cyclotomic &operator+=(Cyclotomic const &b) { return *this = *this + b; }
  Cyclotomic &operator-=(Cyclotomic const &b) { return *this = *this - b; }
  Cyclotomic &operator*=(Cyclotomic const &b) { return *this = *this * b; }

  /// Applies zeta -> zeta^k; k must be coprime to the order.
  Cyclotomic galois(long long k) const {
    long long m = static_cast<long long>(order_);
    long long kk = ((k % m) + m) % m;
    if (std::gcd(kk, m) != 1) throw Error(Errc::NotCoprime, std::to_string(k) + " is not coprime to " + std::to_string(m));
    if (order_ == 1) return *this;
    std::vector<Rational> dense(order_);
    for (auto const &[e, c] : terms_) dense[(e * static_cast<unsigned long>(kk)) % order_] += c;
    return normalize(order_, std::move(dense));
  }

  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (order_ == 1) return Cyclotomic(1 / terms_[0].second);
    // a^-1 = (prod of the other Galois conjugates) / norm(a)
    Cyclotomic others(1);
    for (unsigned long k = 2; k < order_; ++k)
      if (std::gcd(k, order_) == 1) others *= galois(static_cast<long long>(k));
    Rational norm = (*this * others).to_rational();
    return others.scaled(1 / norm);
  }

  friend Cyclotomic operator/(Cyclotomic const &a, Cyclotomic const &b) { return a * b.inverse(); }

  /// Text form `a + b*z(m,k)`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      auto const &[k, c] = terms_[i];
      bool neg = c < 0;
      Rational mag = neg ? Rational(-c) : c;
      std::string body;
      if (k == 0) {
        body = mag.get_str();
      } else {
        std::string z = "z(" + std::to_string(order_) + "," + std::to_string(k) + ")";
        body = mag == 1 ? z : mag.get_str() + "*" + z;
      }
      if (i == 0)
        out += (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

  /// Builds the canonical value of sum_k dense[k] zeta_m^k.
  static Cyclotomic normalize(unsigned long m, std::vector<Rational> dense) {
    zumbroich_reduce(m, dense);
    minimize_order(m, dense);
    Cyclotomic r;
    r.order_ = m;
    for (unsigned long k = 0; k < m; ++k)
      if (dense[k] != 0) r.terms_.emplace_back(k, std::move(dense[k]));
    if (r.terms_.empty()) r.order_ = 1;
    return r;
  }

 private:
  Cyclotomic combine(Cyclotomic const &b, int sign) const {
    if (b.is_zero()) return *this;
    if (order_ == b.order_ && order_ == 1) {
      Rational v = (is_zero() ? Rational(0) : terms_[0].second) + sign * b.terms_[0].second;
      return Cyclotomic(v);
    }
    unsigned long L = std::lcm(order_, b.order_);
    unsigned long fa = L / order_, fb = L / b.order_;
    std::vector<Rational> dense(L);
    for (auto const &[k, c] : terms_) dense[k * fa] += c;
    for (auto const &[k, c] : b.terms_) {
      if (sign > 0)
        dense[k * fb] += c;
      else
        dense[k * fb] -= c;
    }
    return normalize(L, std::move(dense));
  }

  // Rewrites dense into the Zumbroich basis of Q(zeta_m). For m = prod p^v, an
  // exponent k is admissible when, writing its p-component j (mod p^v) in base p,
  // the top digit is nonzero for odd p and zero for p = 2.
  static void zumbroich_reduce(unsigned long m, std::vector<Rational> &dense) {
    for (auto [p, v] : detail::factorize(m)) {
      unsigned long pv = detail::ipow(p, v), top = pv / p, step = m / p;
      unsigned long u = static_cast<unsigned long>(
          detail::mod_inverse(static_cast<long long>((m / pv) % pv), static_cast<long long>(pv)));
      for (unsigned long k = 0; k < m; ++k) {
        if (dense[k] == 0) continue;
        unsigned long digit = ((k % pv) * u % pv) / top;
        if (p == 2) {
          if (digit == 1) {
            dense[(k + step) % m] -= dense[k];
            dense[k] = 0;
          }
        } else if (digit == 0) {
          for (unsigned long a = 1; a < p; ++a) dense[(k + a * step) % m] -= dense[k];
          dense[k] = 0;
        }
      }
    }
  }

  // Shrinks m while the value lies in a smaller cyclotomic field.
  static void minimize_order(unsigned long &m, std::vector<Rational> &dense) {
    bool changed = true;
    while (changed && m > 1) {
      changed = false;
      for (auto [p, v] : detail::factorize(m)) {
        unsigned long mp = m / p;
        if (p == 2 && v == 1) {
          std::vector<Rational> next(mp);
          for (unsigned long k = 0; k < m; ++k)
            if (dense[k] != 0) next[(k / 2) % mp] = dense[k];  // all exponents are even here
          m = mp;
          dense = std::move(next);
          changed = true;
          break;
        }
        if (v >= 2) {
          bool all = true;
          for (unsigned long k = 0; k < m && all; ++k)
            if (dense[k] != 0 && k % p) all = false;
          if (!all) continue;
          std::vector<Rational> next(mp);
          for (unsigned long k = 0; k < m; k += p) next[k / p] = dense[k];
          m = mp;
          dense = std::move(next);
          changed = true;
          break;
        }
        // p odd, v == 1: the value lies in Q(zeta_{m/p}) iff on every coset
        // {k0 + a*m/p : a = 1..p-1} the coefficients agree.
        unsigned long u = static_cast<unsigned long>(
            detail::mod_inverse(static_cast<long long>(mp % p), static_cast<long long>(p)));
        bool ok = true;
        std::vector<Rational> next(mp);
        std::vector<bool> seen(m, false);
        for (unsigned long k = 0; k < m && ok; ++k) {
          if (dense[k] == 0 || seen[k]) continue;
          unsigned long j = (k % p) * u % p;
          unsigned long k0 = (k + m - (j * mp) % m) % m;
          Rational const &c = dense[k];
          for (unsigned long a = 1; a < p && ok; ++a) {
            unsigned long kk = (k0 + a * mp) % m;
            if (dense[kk] != c) ok = false;
            seen[kk] = true;
          }
          if (ok) next[k0 / p] = -c;
        }
        if (!ok) continue;
        m = mp;
        dense = std::move(next);
        changed = true;
        break;
      }
    }
  }

  unsigned long order_ = 1;
  std::vector<Term> terms_;
};

inline Cyclotomic root_of_unity(unsigned long m, long long k) { return Cyclotomic::root_of_unity(m, k); }

}  // namespace areps
