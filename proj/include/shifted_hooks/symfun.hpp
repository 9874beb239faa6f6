#pragma once

// Symmetric-function building blocks in y_1..y_n: elementary symmetric
// polynomials, p_1, alternants, Schur polynomials, and the diagonal operator
// L(u) = prod_i (y_i d/dy_i + u).

#include "shifted_hooks/partitions.hpp"
#include "shifted_hooks/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace shifted_hooks {

/// e_k(y_1..y_n); zero when k > n.
inline MultiPoly elementary(unsigned k, unsigned n) {
  if (k > n) return {};
  std::vector<MultiPoly::Term> terms;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    Monomial m;
    for (unsigned i = 0; i < n; ++i)
      if (pick[i]) m = m * Monomial(y_var(i + 1));
    terms.push_back({std::move(m), 1});
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return MultiPoly::from_terms(std::move(terms));
}

inline MultiPoly power_sum_1(unsigned n) {
  MultiPoly out;
  for (unsigned i = 1; i <= n; ++i) out += MultiPoly(y_var(i));
  return out;
}

/// Strictly decreasing exponents for det(y_i^{alpha_j}).
class AlternantSpec {
 public:
  explicit AlternantSpec(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {
    for (std::size_t i = 1; i < exponents_.size(); ++i)
      if (exponents_[i] >= exponents_[i - 1])
        throw std::invalid_argument("alternant exponents must be strictly decreasing");
  }

  /// delta + lambda: lambda_i + n - i.
  static AlternantSpec shifted(const Partition& p, unsigned n) { return staircase(p, n, 1); }

  /// theta*delta + lambda: lambda_i + theta*(n - i).
  static AlternantSpec staircase(const Partition& p, unsigned n, unsigned theta) {
    if (p.length() > n) throw std::invalid_argument("alternant: partition longer than the variable count");
    std::vector<unsigned> e(n);
    for (unsigned i = 0; i < n; ++i) e[i] = p.part(i) + theta * (n - 1 - i);
    return AlternantSpec(std::move(e));
  }

  unsigned n() const { return static_cast<unsigned>(exponents_.size()); }
  const std::vector<unsigned>& exponents() const { return exponents_; }

 private:
  std::vector<unsigned> exponents_;
};

/// sum over permutations sigma of sgn(sigma) prod_i y_{sigma(i)}^{alpha_i}.
inline MultiPoly alternant(const AlternantSpec& spec) {
  const unsigned n = spec.n();
  std::vector<unsigned> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::vector<MultiPoly::Term> terms;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    Monomial m;
    for (unsigned i = 0; i < n; ++i) m = m * Monomial(y_var(sigma[i] + 1), spec.exponents()[i]);
    terms.push_back({std::move(m), inversions % 2 ? -1 : 1});
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return MultiPoly::from_terms(std::move(terms));
}

/// The Vandermonde alternant a_delta.
inline MultiPoly vandermonde(unsigned n) { return alternant(AlternantSpec::shifted(Partition(), n)); }

/// a_{theta*delta + lambda} / a_{theta*delta}; theta = 1 gives the Schur polynomial.
/// For theta >= 2 the quotient is in general only a rational function
/// (theta = 2, lambda = (1), n = 2 gives (y1^2+y1y2+y2^2)/(y1+y2)); such
/// inputs raise NotDivisible carrying the offending leading term.
inline MultiPoly generalized_alternant_ratio(const Partition& p, unsigned n, unsigned theta) {
  if (theta == 0) throw std::invalid_argument("theta must be a positive integer");
  const auto num = alternant(AlternantSpec::staircase(p, n, theta));
  const auto den = alternant(AlternantSpec::staircase(Partition(), n, theta));
  if (theta > 1) return exact_div(num, den);
  try {
    return exact_div(num, den);
  } catch (const NotDivisible& e) {
    throw InternalInconsistency(std::string("Schur quotient is not a polynomial: ") + e.what());
  }
}

/// s_lambda(y_1..y_n) as a_{lambda+delta} / a_delta.
inline MultiPoly schur(const Partition& p, unsigned n) { return generalized_alternant_ratio(p, n, 1); }

/// Eigenvalue prod_i (u + lambda_i + theta*(n - i)).
inline UPoly staircase_eigenvalue(const Partition& p, unsigned n, unsigned theta) {
  UPoly out = 1;
  const auto spec = AlternantSpec::staircase(p, n, theta);
  for (unsigned e : spec.exponents()) out *= UPoly::shifted_identity(Rational(e));
  return out;
}

/// L(u) = prod_{i=1}^n (y_i d/dy_i + u), acting diagonally: y^alpha is
/// scaled by prod_{i=1}^n (alpha_i + u), with absent slots counting alpha_i = 0.
inline MultiPoly apply_L(const MultiPoly& p, unsigned n, VarId u) {
  if (u.cls() != VarClass::Param) throw std::invalid_argument("apply_L: u must be a parameter");
  return p.map_terms([&](const Monomial& m) {
    if (!m.only_classes({VarClass::Y, VarClass::Param}))
      throw std::invalid_argument("apply_L: only y variables and parameters are allowed");
    UPoly factor = 1;
    for (unsigned i = 1; i <= n; ++i) factor *= UPoly::shifted_identity(Rational(m.exponent(y_var(i))));
    for (const auto& f : m.factors()) {
      VarId v = VarId::from_packed(f.var);
      if (v.cls() == VarClass::Y && v.index() > n) throw std::invalid_argument("apply_L: y index exceeds slot count");
    }
    return MultiPoly::from_upoly(factor, u);
  });
}

/// a_{theta*delta}^{-1} o L(u) o (multiply by a_{theta*delta}).
inline MultiPoly conjugated_L(const MultiPoly& f, unsigned n, VarId u, unsigned theta = 1) {
  const MultiPoly a = alternant(AlternantSpec::staircase(Partition(), n, theta));
  return exact_div(apply_L(a * f, n, u), a);
}

}  // namespace shifted_hooks
