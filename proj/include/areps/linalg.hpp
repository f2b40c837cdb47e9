#pragma once

#include <cstdint>
#include <vector>

#include "areps/error.hpp"

namespace areps {

/// Element of GF(p) for a runtime prime p < 2^31.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t v, std::uint64_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % a.p_, a.p_); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + a.p_ - b.v_) % a.p_, a.p_); }
  friend Fp operator*(Fp a, Fp b) { return raw(a.v_ * b.v_ % a.p_, a.p_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw((p_ - v_) % p_, p_); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp r = raw(1 % p_, p_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  Fp inverse() const {
    if (v_ == 0) throw Error(Errc::DivisionByZero, "inverse of zero in GF(" + std::to_string(p_) + ")");
    return pow(p_ - 2);
  }

 private:
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest generator of GF(p)^*.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> primes;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : primes)
      if (Fp(static_cast<std::int64_t>(g), p).pow((p - 1) / q).value() == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error(Errc::InternalVerificationFailed, "no primitive root mod " + std::to_string(p));
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form in place over a field; returns pivot columns.
/// T needs + - * /, is_zero() and construction of 0/1 via `one`.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T> &m, T const &one) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    T inv = one / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      T f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m, T const &one) {
  return row_reduce(m, one).size();
}

/// Basis (as rows) of { x : m x = 0 }, with `cols` unknowns.
template <class T>
Matrix<T> nullspace(Matrix<T> m, std::size_t cols, T const &one) {
  T zero = one - one;
  auto pivots = row_reduce(m, one);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix<T> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, zero);
    v[f] = one;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = zero - m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace areps
