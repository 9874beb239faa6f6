#pragma once

// Exact integers and rationals, plus the classical integer sequences
// (factorials, binomials, Stirling numbers) consumed by the closed forms.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace shifted_hooks {

using Integer = mpz_class;
// mpq_class keeps its value canonical (den > 0, gcd = 1) after every
// arithmetic operation; values built from a num/den pair go through
// make_rational, which canonicalizes.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Always "num/den", including integers ("5/1"); used by every serializer.
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// "5" for integers, "5/2" otherwise; used for human-readable text.
inline std::string to_compact_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return to_fraction_string(r);
}

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

inline Integer factorial(unsigned k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

/// C(a, k) for a >= 0; zero outside 0 <= k <= a.
inline Integer binomial(long a, long k) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper argument");
  if (k < 0 || k > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
  return out;
}

/// Falling factorial (a)_k = a(a-1)...(a-k+1) of an exact value.
inline Rational falling_factorial(const Rational& a, unsigned k) {
  Rational out = 1;
  for (unsigned j = 0; j < k; ++j) out *= a - j;
  return out;
}

namespace detail {

// Lower-triangular table grown row by row on demand. Readers take a shared
// lock; growth takes the exclusive lock.
template <typename Recurrence>
class TriangularMemo {
 public:
  explicit TriangularMemo(Recurrence step) : step_(step) {}

  Integer get(unsigned n, unsigned k) {
    if (k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const unsigned row = static_cast<unsigned>(rows_.size());
      std::vector<Integer> next(row + 1);
      for (unsigned j = 0; j <= row; ++j) next[j] = step_(rows_, row, j);
      rows_.push_back(std::move(next));
    }
    return rows_[n][k];
  }

 private:
  Recurrence step_;
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_;
};

inline Integer at(const std::vector<std::vector<Integer>>& rows, unsigned n, unsigned k) {
  return k <= n ? rows[n][k] : Integer(0);
}

// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
inline Integer unsigned_first_step(const std::vector<std::vector<Integer>>& rows, unsigned n,
                                   unsigned k) {
  if (n == 0) return 1;
  Integer out = (n - 1) * at(rows, n - 1, k);
  if (k > 0) out += at(rows, n - 1, k - 1);
  return out;
}

// S(n,k) = S(n-1,k-1) + k S(n-1,k)
inline Integer second_step(const std::vector<std::vector<Integer>>& rows, unsigned n, unsigned k) {
  if (n == 0) return 1;
  Integer out = k * at(rows, n - 1, k);
  if (k > 0) out += at(rows, n - 1, k - 1);
  return out;
}

using StepFn = Integer (*)(const std::vector<std::vector<Integer>>&, unsigned, unsigned);

inline TriangularMemo<StepFn>& unsigned_first_table() {
  static TriangularMemo<StepFn> table(&unsigned_first_step);
  return table;
}

inline TriangularMemo<StepFn>& second_table() {
  static TriangularMemo<StepFn> table(&second_step);
  return table;
}

}  // namespace detail

enum class StirlingSign { Signed, Unsigned };

/// Stirling numbers of the first kind. The signed variant satisfies
/// (x)_n = sum_k s(n,k) x^k; the unsigned one is |s(n,k)|.
inline Integer stirling_first(unsigned n, unsigned k, StirlingSign sign) {
  Integer c = detail::unsigned_first_table().get(n, k);
  if (sign == StirlingSign::Signed && (n - k) % 2 == 1 && k <= n) c = -c;
  return c;
}

/// Second-order Eulerian numbers <<n,k>>; c(x, x-n) = sum_k <<n,k>> C(x+k, 2n).
inline Integer eulerian_second_order(unsigned n, unsigned k) {
  static detail::TriangularMemo<detail::StepFn> table(
      +[](const std::vector<std::vector<Integer>>& rows, unsigned r, unsigned j) -> Integer {
        if (r == 0) return j == 0 ? 1 : 0;
        Integer out = (j + 1) * detail::at(rows, r - 1, j);
        if (j > 0) out += (2 * r - 1 - j) * detail::at(rows, r - 1, j - 1);
        return out;
      });
  return table.get(n, k);
}

/// Stirling numbers of the second kind: x^n = sum_k S(n,k) (x)_k.
inline Integer stirling_second(unsigned n, unsigned k) { return detail::second_table().get(n, k); }

}  // namespace shifted_hooks
