#pragma once

// Dense univariate polynomials over the rationals. This is the home of the
// eigenvalue polynomials phi(u), A(u) and the closed forms in n.

#include "shifted_hooks/exactnum.hpp"

#include <span>
#include <ostream>
#include <string>
#include <vector>

namespace shifted_hooks {

class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c) : coeffs_{c} { trim(); }  // NOLINT: constants convert implicitly
  UPoly(int c) : UPoly(Rational(c)) {}                // NOLINT
  explicit UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The polynomial `x`.
  static UPoly identity() { return UPoly(std::vector<Rational>{0, 1}); }

  /// x + c
  static UPoly shifted_identity(const Rational& c) { return UPoly(std::vector<Rational>{c, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly& operator+=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(out));
  }
  friend UPoly operator/(UPoly a, const Rational& c) {
    for (auto& x : a.coeffs_) x /= c;
    return a;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Composition p(q(x)).
  UPoly compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + UPoly(*it);
    return acc;
  }

  /// e.g. "1/2*n^2 + 1/2*n"
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Rational mag = abs(c);
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      const bool unit = mag == 1 && i > 0;
      if (!unit) out += to_compact_string(mag);
      if (i > 0) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// (x)_k = x(x-1)...(x-k+1) as a polynomial in x.
inline UPoly falling_factorial_poly(unsigned k) {
  std::vector<Rational> c(k + 1);
  for (unsigned i = 0; i <= k; ++i) c[i] = stirling_first(k, i, StirlingSign::Signed);
  return UPoly(std::move(c));
}

/// Generalized binomial C(p, k) = p(p-1)...(p-k+1)/k! as a polynomial.
inline UPoly binomial_poly(const UPoly& p, unsigned k) {
  UPoly out = 1;
  for (unsigned j = 0; j < k; ++j) out *= p - UPoly(static_cast<int>(j));
  return out / Rational(factorial(k));
}

/// Coefficients c_k with p = sum_k c_k (x)_k.
inline std::vector<Rational> to_falling_basis(const UPoly& p) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& a = p.coeff(static_cast<std::size_t>(i));
    if (a == 0) continue;
    for (int k = 0; k <= i; ++k)
      out[static_cast<std::size_t>(k)] +=
          a * Rational(stirling_second(static_cast<unsigned>(i), static_cast<unsigned>(k)));
  }
  return out;
}

/// Inverse of to_falling_basis.
inline UPoly from_falling_basis(std::span<const Rational> c) {
  UPoly out;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out += falling_factorial_poly(static_cast<unsigned>(k)) * UPoly(c[k]);
  return out;
}

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
inline UPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences.
  std::vector<Rational> dd(ys.begin(), ys.end());
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      if (xs[i] == xs[i - level]) throw std::invalid_argument("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  UPoly out;
  for (std::size_t i = n; i-- > 0;) out = out * UPoly::shifted_identity(-xs[i]) + UPoly(dd[i]);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }

}  // namespace shifted_hooks
