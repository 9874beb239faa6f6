#pragma once

// Sparse multivariate polynomials over the rationals with classed variables
// (y, w, t, z families and scalar parameters), optional per-class truncation,
// exact division, determinants and truncated power series.

#include "shifted_hooks/exactnum.hpp"
#include "shifted_hooks/upoly.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace shifted_hooks {

enum class VarClass : std::uint8_t { Y = 0, W = 1, T = 2, Z = 3, Param = 4 };
inline constexpr std::size_t kVarClassCount = 5;

inline const char* class_name(VarClass c) {
  switch (c) {
    case VarClass::Y: return "Y";
    case VarClass::W: return "W";
    case VarClass::T: return "T";
    case VarClass::Z: return "Z";
    case VarClass::Param: return "PARAM";
  }
  return "?";
}

/// A variable name: (class, index) packed so that integer order is the
/// fixed (class, index) order.
class VarId {
 public:
  constexpr VarId(VarClass cls, std::uint32_t index) : packed_(pack(cls, index)) {
    if (index == 0 || index >= (1u << 24)) throw std::invalid_argument("VarId: index out of range");
  }

  constexpr VarClass cls() const { return static_cast<VarClass>(packed_ >> 24); }
  constexpr std::uint32_t index() const { return packed_ & 0xFFFFFFu; }
  constexpr std::uint32_t packed() const { return packed_; }

  static constexpr VarId from_packed(std::uint32_t p) { return VarId(p); }

  friend constexpr auto operator<=>(VarId, VarId) = default;

  std::string name() const {
    switch (cls()) {
      case VarClass::Y: return "y" + std::to_string(index());
      case VarClass::W: return "w" + std::to_string(index());
      case VarClass::T: return "t" + std::to_string(index());
      case VarClass::Z: return "z" + std::to_string(index());
      case VarClass::Param:
        if (index() == 1) return "u";
        if (index() == 2) return "x";
        return "u" + std::to_string(index() - 2);
    }
    return "?";
  }

 private:
  constexpr explicit VarId(std::uint32_t packed) : packed_(packed) {}
  static constexpr std::uint32_t pack(VarClass c, std::uint32_t i) {
    return (static_cast<std::uint32_t>(c) << 24) | i;
  }
  std::uint32_t packed_;
};

inline VarId y_var(std::uint32_t i) { return {VarClass::Y, i}; }
inline VarId w_var(std::uint32_t i) { return {VarClass::W, i}; }
inline VarId t_var(std::uint32_t i) { return {VarClass::T, i}; }
inline VarId z_var(std::uint32_t i) { return {VarClass::Z, i}; }
/// Scalar parameters: u = 1, x = 2, u_j = j + 2.
inline VarId u_param() { return {VarClass::Param, 1}; }
inline VarId x_param() { return {VarClass::Param, 2}; }
inline VarId indexed_param(std::uint32_t j) { return {VarClass::Param, j + 2}; }

/// Exponent map with no zero exponents, stored sorted by variable.
class Monomial {
 public:
  struct Factor {
    std::uint32_t var;  // packed VarId
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exp = 1) {
    if (exp > 0) factors_.push_back({v.packed(), exp});
  }
  /// Builds from (var, exp) pairs in any order; repeated variables add up.
  static Monomial from_pairs(std::vector<std::pair<VarId, std::uint32_t>> pairs) {
    Monomial m;
    for (auto [v, e] : pairs) m = m * Monomial(v, e);
    return m;
  }

  bool is_one() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }

  std::uint32_t exponent(VarId v) const {
    for (const auto& f : factors_)
      if (f.var == v.packed()) return f.exp;
    return 0;
  }
  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.exp;
    return d;
  }
  std::uint64_t degree_in(VarClass c) const {
    std::uint64_t d = 0;
    for (const auto& f : factors_)
      if (VarId::from_packed(f.var).cls() == c) d += f.exp;
    return d;
  }
  bool only_classes(std::initializer_list<VarClass> allowed) const {
    for (const auto& f : factors_)
      if (std::find(allowed.begin(), allowed.end(), VarId::from_packed(f.var).cls()) == allowed.end())
        return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->var < i->var) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.push_back({i->var, i->exp + j->exp});
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Whether this monomial divides `m`.
  bool divides(const Monomial& m) const {
    auto j = m.factors_.begin();
    for (const auto& f : factors_) {
      while (j != m.factors_.end() && j->var < f.var) ++j;
      if (j == m.factors_.end() || j->var != f.var || j->exp < f.exp) return false;
    }
    return true;
  }

  /// m / this; requires divides(m).
  Monomial cofactor_in(const Monomial& m) const {
    Monomial out;
    auto i = factors_.begin();
    for (const auto& g : m.factors_) {
      while (i != factors_.end() && i->var < g.var) ++i;
      std::uint32_t e = g.exp;
      if (i != factors_.end() && i->var == g.var) e -= i->exp;
      if (e > 0) out.factors_.push_back({g.var, e});
    }
    return out;
  }

  /// Drops the variables of `vars` (whatever their exponents).
  Monomial without(const Monomial& vars) const {
    Monomial out;
    for (const auto& f : factors_)
      if (vars.exponent(VarId::from_packed(f.var)) == 0) out.factors_.push_back(f);
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic: total degree first, then the first variable (in
  /// VarId order) where exponents differ decides; larger exponent is larger.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
      if (i->var != j->var) return i->var < j->var ? std::strong_ordering::greater : std::strong_ordering::less;
      if (i->exp != j->exp) return i->exp <=> j->exp;
    }
    if (i != a.factors_.end()) return std::strong_ordering::greater;
    if (j != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& f : factors_) {
      h = (h ^ f.var) * 1099511628211ull;
      h = (h ^ f.exp) * 1099511628211ull;
    }
    return h;
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += "*";
      out += VarId::from_packed(f.var).name();
      if (f.exp > 1) out += "^" + std::to_string(f.exp);
    }
    return out;
  }

 private:
  std::vector<Factor> factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Per-class caps on total degree, plus classes whose variables square to
/// zero (t_i^2 = 0). Products drop violating terms immediately.
struct TruncationPolicy {
  std::array<std::optional<std::uint64_t>, kVarClassCount> max_degree{};
  std::array<bool, kVarClassCount> square_free{};

  TruncationPolicy& cap(VarClass c, std::uint64_t d) {
    max_degree[static_cast<std::size_t>(c)] = d;
    return *this;
  }
  TruncationPolicy& squarefree(VarClass c) {
    square_free[static_cast<std::size_t>(c)] = true;
    return *this;
  }

  bool bounds(VarClass c) const {
    auto i = static_cast<std::size_t>(c);
    return max_degree[i].has_value() || square_free[i];
  }

  bool admits(const Monomial& m) const {
    std::array<std::uint64_t, kVarClassCount> deg{};
    for (const auto& f : m.factors()) {
      auto c = static_cast<std::size_t>(VarId::from_packed(f.var).cls());
      if (square_free[c] && f.exp > 1) return false;
      deg[c] += f.exp;
    }
    for (std::size_t c = 0; c < kVarClassCount; ++c)
      if (max_degree[c] && deg[c] > *max_degree[c]) return false;
    return true;
  }

  friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

class PolicyConflict : public std::invalid_argument {
 public:
  PolicyConflict() : std::invalid_argument("polynomials carry conflicting truncation policies") {}
};

class NotDivisible : public std::domain_error {
 public:
  NotDivisible(const std::string& witness)
      : std::domain_error("exact division failed at remainder term " + witness), witness_(witness) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_.push_back({Monomial(), c});
  }
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT
  MultiPoly(VarId v) { terms_.push_back({Monomial(v), 1}); }  // NOLINT
  MultiPoly(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.push_back({m, c});
  }

  /// Collects arbitrary (monomial, coefficient) pairs into canonical form.
  static MultiPoly from_terms(std::vector<Term> terms, std::optional<TruncationPolicy> policy = {}) {
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    for (auto& t : terms) acc[std::move(t.mono)] += t.coeff;
    return collect(std::move(acc), std::move(policy));
  }

  /// p(x) in the given variable.
  static MultiPoly from_upoly(const UPoly& p, VarId var) {
    std::vector<Term> terms;
    for (int i = p.degree(); i >= 0; --i) {
      const Rational& c = p.coeff(static_cast<std::size_t>(i));
      if (c != 0) terms.push_back({Monomial(var, static_cast<std::uint32_t>(i)), c});
    }
    MultiPoly out;
    out.terms_ = std::move(terms);
    return out;
  }

  /// Inverse of from_upoly; throws if another variable occurs.
  UPoly to_upoly(VarId var) const {
    std::vector<Rational> c;
    for (const auto& t : terms_) {
      if (!t.mono.is_one() && (t.mono.factors().size() != 1 || t.mono.factors()[0].var != var.packed()))
        throw std::invalid_argument("to_upoly: polynomial is not univariate in " + var.name());
      auto e = t.mono.exponent(var);
      if (c.size() <= e) c.resize(e + 1);
      c[e] = t.coeff;
    }
    return UPoly(std::move(c));
  }

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<TruncationPolicy>& policy() const { return policy_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
  }
  std::optional<Rational> as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
    return std::nullopt;
  }
  Rational coeff_of(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.mono > k; });
    return it != terms_.end() && it->mono == m ? it->coeff : Rational(0);
  }
  std::uint64_t degree_in(VarClass c) const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_in(c));
    return d;
  }

  /// Returns a copy under `policy`, dropping the terms it forbids.
  MultiPoly truncated(const TruncationPolicy& policy) const {
    MultiPoly out;
    out.policy_ = policy;
    for (const auto& t : terms_)
      if (policy.admits(t.mono)) out.terms_.push_back(t);
    return out;
  }
  MultiPoly without_policy() const {
    MultiPoly out = *this;
    out.policy_.reset();
    return out;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, 1); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, -1); }
  friend MultiPoly operator-(const MultiPoly& a) { return a * Rational(-1); }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator*(MultiPoly a, const Rational& c) {
    if (c == 0) {
      a.terms_.clear();
      return a;
    }
    for (auto& t : a.terms_) t.coeff *= c;
    return a;
  }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return std::move(a) * c; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto policy = merge_policy(a, b);
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        Monomial m = s.mono * t.mono;
        if (policy && !policy->admits(m)) continue;
        acc[std::move(m)] += s.coeff * t.coeff;
      }
    return collect(std::move(acc), policy);
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly out = MultiPoly(1);
    out.policy_ = policy_;
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1u) out = out * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return out;
  }

  /// Every monomial rescaled by `scale(monomial)`; zero results are dropped.
  template <typename F>
  MultiPoly map_terms(F&& scale) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
      MultiPoly piece = scale(t.mono) * MultiPoly(t.mono, t.coeff);
      for (auto& u : piece.terms_) terms.push_back(std::move(u));
    }
    return from_terms(std::move(terms), policy_);
  }

  /// Substitutes an exact value for one variable.
  MultiPoly substitute(VarId v, const Rational& value) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto e = t.mono.exponent(v);
      Rational c = t.coeff;
      if (e > 0) {
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e);
        mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e);
        c *= p;
      }
      terms.push_back({t.mono.without(Monomial(v)), c});
    }
    return from_terms(std::move(terms), policy_);
  }

  /// Polynomials indexed by the exponent of `v`: p = sum_e out[e] * v^e.
  std::vector<MultiPoly> split_by(VarId v) const {
    std::vector<std::vector<Term>> buckets;
    for (const auto& t : terms_) {
      auto e = t.mono.exponent(v);
      if (buckets.size() <= e) buckets.resize(e + 1);
      buckets[e].push_back({t.mono.without(Monomial(v)), t.coeff});
    }
    std::vector<MultiPoly> out;
    for (auto& b : buckets) out.push_back(from_terms(std::move(b), policy_));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      Rational mag = abs(t.coeff);
      if (out.empty())
        out += t.coeff < 0 ? "-" : "";
      else
        out += t.coeff < 0 ? " - " : " + ";
      if (t.mono.is_one()) {
        out += to_compact_string(mag);
      } else {
        if (mag != 1) out += to_compact_string(mag) + "*";
        out += t.mono.to_string();
      }
    }
    return out;
  }

 private:
  static std::optional<TruncationPolicy> merge_policy(const MultiPoly& a, const MultiPoly& b) {
    if (a.policy_ && b.policy_) {
      if (!(*a.policy_ == *b.policy_)) throw PolicyConflict();
      return a.policy_;
    }
    return a.policy_ ? a.policy_ : b.policy_;
  }

  static MultiPoly collect(std::unordered_map<Monomial, Rational, MonomialHash> acc,
                           std::optional<TruncationPolicy> policy) {
    MultiPoly out;
    out.policy_ = std::move(policy);
    out.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0 && (!out.policy_ || out.policy_->admits(m))) out.terms_.push_back({m, std::move(c)});
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return x.mono > y.mono; });
    return out;
  }

  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, int sign) {
    MultiPoly out;
    out.policy_ = merge_policy(a, b);
    auto i = a.terms_.begin(), j = b.terms_.begin();
    auto admit = [&](const Monomial& m) { return !out.policy_ || out.policy_->admits(m); };
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->mono > j->mono)) {
        if (admit(i->mono)) out.terms_.push_back(*i);
        ++i;
      } else if (i == a.terms_.end() || j->mono > i->mono) {
        if (admit(j->mono)) out.terms_.push_back({j->mono, sign * j->coeff});
        ++j;
      } else {
        Rational c = i->coeff + sign * j->coeff;
        if (c != 0 && admit(i->mono)) out.terms_.push_back({i->mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;  // strictly descending graded-lex order
  std::optional<TruncationPolicy> policy_;
};

/// Leading-most monomial at which two polynomials differ, with both coefficients.
struct TermMismatch {
  Monomial mono;
  Rational lhs;
  Rational rhs;
};

inline std::optional<TermMismatch> first_difference(const MultiPoly& a, const MultiPoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  auto i = x.begin(), j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->mono > j->mono)) return TermMismatch{i->mono, i->coeff, 0};
    if (i == x.end() || j->mono > i->mono) return TermMismatch{j->mono, 0, j->coeff};
    if (i->coeff != j->coeff) return TermMismatch{i->mono, i->coeff, j->coeff};
    ++i;
    ++j;
  }
  return std::nullopt;
}

/// q with divisor * q == dividend; throws NotDivisible otherwise.
inline MultiPoly exact_div(const MultiPoly& dividend, const MultiPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("exact_div: division by zero");
  if (dividend.policy() || divisor.policy())
    throw std::invalid_argument("exact_div: truncated operands are not supported");
  auto greater = [](const Monomial& a, const Monomial& b) { return a > b; };
  std::map<Monomial, Rational, decltype(greater)> rest(greater);
  for (const auto& t : dividend.terms()) rest.emplace(t.mono, t.coeff);
  const auto& lead = divisor.terms().front();
  std::vector<MultiPoly::Term> quotient;
  while (!rest.empty()) {
    auto top = rest.begin();
    if (!lead.mono.divides(top->first))
      throw NotDivisible(to_compact_string(top->second) + "*" + top->first.to_string());
    Monomial qm = lead.mono.cofactor_in(top->first);
    Rational qc = top->second / lead.coeff;
    for (const auto& t : divisor.terms()) {
      Monomial m = qm * t.mono;
      auto [it, fresh] = rest.try_emplace(std::move(m), 0);
      it->second -= qc * t.coeff;
      if (it->second == 0) rest.erase(it);
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return MultiPoly::from_terms(std::move(quotient));
}

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Exact determinant by cofactor expansion along successive rows, with
/// minors shared across expansions (memoized by the set of used columns).
inline MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  if (n > 20) throw std::invalid_argument("determinant: matrix too large for cofactor expansion");
  // minors[mask] = det of rows popcount(mask).. restricted to columns not in mask.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::optional<MultiPoly>> minors(full + 1);
  minors[full] = MultiPoly(1);
  for (std::size_t mask = full; mask-- > 0;) {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    MultiPoly acc;
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      const auto& entry = m[row][c];
      const auto& minor = minors[mask | (std::size_t{1} << c)];
      if (!entry.is_zero() && minor && !minor->is_zero()) {
        MultiPoly term = entry * *minor;
        acc = position % 2 == 0 ? acc + term : acc - term;
      }
      ++position;
    }
    minors[mask] = std::move(acc);
  }
  return *minors[0];
}

/// Truncated series q with p*q == 1 modulo `bounds`.
inline MultiPoly geometric_inverse(const MultiPoly& p, const TruncationPolicy& bounds) {
  if (p.constant_term() != 1) throw std::invalid_argument("geometric_inverse: constant term must be 1");
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors())
      if (!bounds.bounds(VarId::from_packed(f.var).cls()))
        throw std::invalid_argument("geometric_inverse: no bound for variable " +
                                    VarId::from_packed(f.var).name());
  // 1/(1 - q) = sum_k q^k, with q nilpotent modulo the bounds.
  const MultiPoly one = MultiPoly(1).truncated(bounds);
  const MultiPoly q = one - p.truncated(bounds);
  MultiPoly sum = one;
  MultiPoly power = one;
  while (true) {
    power = power * q;
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum;
}

/// (1 + t_1 + ... + t_n)^x with t_i^2 = 0:
/// sum over subsets S of (x)_{|S|} prod_{i in S} t_i.
inline MultiPoly multilinear_power(VarId x, unsigned t_count, const TruncationPolicy& policy) {
  if (!policy.square_free[static_cast<std::size_t>(VarClass::T)])
    throw std::invalid_argument("multilinear_power: requires a square-free T policy");
  std::vector<MultiPoly::Term> terms;
  std::vector<MultiPoly> falling;
  for (unsigned k = 0; k <= t_count; ++k) falling.push_back(MultiPoly::from_upoly(falling_factorial_poly(k), x));
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << t_count); ++subset) {
    Monomial ts;
    for (unsigned i = 0; i < t_count; ++i)
      if (subset & (std::uint64_t{1} << i)) ts = ts * Monomial(t_var(i + 1));
    for (const auto& f : falling[static_cast<std::size_t>(__builtin_popcountll(subset))].terms())
      terms.push_back({ts * f.mono, f.coeff});
  }
  return MultiPoly::from_terms(std::move(terms), policy);
}

/// [m] p: the polynomial in the remaining variables multiplying m exactly.
inline MultiPoly coeff(const MultiPoly& p, const Monomial& m) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms()) {
    bool match = true;
    for (const auto& f : m.factors())
      if (t.mono.exponent(VarId::from_packed(f.var)) != f.exp) {
        match = false;
        break;
      }
    if (match) terms.push_back({t.mono.without(m), t.coeff});
  }
  return MultiPoly::from_terms(std::move(terms), p.policy());
}

/// Writes p in the falling-factorial basis of `v`: p = sum_k out[k] * (v)_k,
/// with coefficients polynomial in the other variables.
inline std::vector<MultiPoly> falling_basis_coefficients(const MultiPoly& p, VarId v) {
  auto powers = p.split_by(v);
  std::vector<MultiPoly> out(powers.size());
  for (std::size_t i = 0; i < powers.size(); ++i) {
    if (powers[i].is_zero()) continue;
    for (std::size_t k = 0; k <= i; ++k) {
      Integer s = stirling_second(static_cast<unsigned>(i), static_cast<unsigned>(k));
      if (s != 0) out[k] += powers[i] * Rational(s);
    }
  }
  return out;
}

/// Moves every variable of class `from` to class `to`, keeping indices.
inline MultiPoly rename_class(const MultiPoly& p, VarClass from, VarClass to) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::pair<VarId, std::uint32_t>> pairs;
    for (const auto& f : t.mono.factors()) {
      VarId v = VarId::from_packed(f.var);
      pairs.emplace_back(v.cls() == from ? VarId(to, v.index()) : v, f.exp);
    }
    terms.push_back({Monomial::from_pairs(std::move(pairs)), t.coeff});
  }
  return MultiPoly::from_terms(std::move(terms), p.policy());
}

/// [{"vars": [[class, index, exp], ...], "coeff": "num/den"}, ...] in canonical order.
inline nlohmann::ordered_json to_json(const MultiPoly& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    auto vars = nlohmann::ordered_json::array();
    for (const auto& f : t.mono.factors()) {
      VarId v = VarId::from_packed(f.var);
      vars.push_back({class_name(v.cls()), v.index(), f.exp});
    }
    out.push_back({{"vars", std::move(vars)}, {"coeff", to_fraction_string(t.coeff)}});
  }
  return out;
}

inline MultiPoly multipoly_from_json(const nlohmann::ordered_json& j) {
  static const std::map<std::string, VarClass> classes = {{"Y", VarClass::Y},
                                                          {"W", VarClass::W},
                                                          {"T", VarClass::T},
                                                          {"Z", VarClass::Z},
                                                          {"PARAM", VarClass::Param}};
  std::vector<MultiPoly::Term> terms;
  for (const auto& t : j) {
    std::vector<std::pair<VarId, std::uint32_t>> pairs;
    for (const auto& v : t.at("vars"))
      pairs.emplace_back(VarId(classes.at(v.at(0).get<std::string>()), v.at(1).get<std::uint32_t>()),
                         v.at(2).get<std::uint32_t>());
    terms.push_back({Monomial::from_pairs(std::move(pairs)), parse_rational(t.at("coeff").get<std::string>())});
  }
  return MultiPoly::from_terms(std::move(terms));
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace shifted_hooks
