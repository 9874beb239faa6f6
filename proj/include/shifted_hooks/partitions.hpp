#pragma once

// Integer partitions and their Young-diagram statistics: conjugates, hook
// lengths, contents, standard tableau counts and shifted parts.

#include "shifted_hooks/exactnum.hpp"
#include "shifted_hooks/polyring.hpp"
#include "shifted_hooks/upoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace shifted_hooks {

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weakly decreasing positive parts. Zero padding is applied by callers
/// (see part()), never stored.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    // trailing zeros are accepted and dropped
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("partition: zero part before a positive part");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
  unsigned length() const { return static_cast<unsigned>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Zero-padded 0-based access.
  unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// Whether the diagram of `inner` fits inside this one.
  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
      if (inner.parts_[i] > parts_[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + ")";
  }

 private:
  std::vector<unsigned> parts_;
};

inline nlohmann::ordered_json to_json(const Partition& p) { return nlohmann::ordered_json(p.parts()); }

inline Partition partition_from_json(const nlohmann::ordered_json& j) {
  return Partition(j.get<std::vector<unsigned>>());
}

/// All partitions of n in reverse-lexicographic order, starting from (n).
inline std::vector<Partition> enumerate_partitions(unsigned n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<unsigned> a{n};
  while (true) {
    out.emplace_back(a);
    // Find the last part > 1, decrement it and redistribute the tail greedily.
    unsigned spill = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++spill;
    }
    if (a.empty()) break;
    unsigned cap = --a.back();
    ++spill;
    while (spill > 0) {
      unsigned take = std::min(cap, spill);
      a.push_back(take);
      spill -= take;
    }
  }
  return out;
}

/// Partitions of n with at most `max_length` parts, reverse-lexicographic.
inline std::vector<Partition> enumerate_partitions(unsigned n, unsigned max_length) {
  auto all = enumerate_partitions(n);
  std::erase_if(all, [&](const Partition& p) { return p.length() > max_length; });
  return all;
}

inline Partition conjugate(const Partition& p) {
  std::vector<unsigned> cols(p.part(0), 0);
  for (unsigned row : p.parts())
    for (unsigned j = 0; j < row; ++j) ++cols[j];
  return Partition(std::move(cols));
}

struct HookProfile {
  std::vector<unsigned> hooks;  // row-major over the cells
  std::vector<int> contents;    // column minus row, same order
  Integer hook_product;
};

inline HookProfile hook_profile(const Partition& p) {
  const Partition cols = conjugate(p);
  HookProfile out;
  out.hook_product = 1;
  for (unsigned i = 0; i < p.length(); ++i)
    for (unsigned j = 0; j < p.part(i); ++j) {
      const unsigned arm = p.part(i) - j - 1;
      const unsigned leg = cols.part(j) - i - 1;
      out.hooks.push_back(arm + leg + 1);
      out.contents.push_back(static_cast<int>(j) - static_cast<int>(i));
      out.hook_product *= arm + leg + 1;
    }
  return out;
}

inline Integer hook_product(const Partition& p) { return hook_profile(p).hook_product; }

/// f_lambda = |lambda|! / H_lambda.
inline Integer syt_count(const Partition& p) {
  const Integer num = factorial(p.size());
  const Integer h = hook_product(p);
  if (num % h != 0) throw InternalInconsistency("hook product does not divide |lambda|! for " + p.to_string());
  return num / h;
}

/// 1/k! with the convention 1/k! = 0 for k < 0.
inline Rational inverse_factorial(long k) {
  if (k < 0) return 0;
  return Rational(Integer(1), factorial(static_cast<unsigned>(k)));
}

/// Number of standard fillings of the skew shape outer/inner:
/// |outer/inner|! * det(1/(outer_i - inner_j - i + j)!) over `n_pad` rows
/// (0 means the length of `outer`).
inline Integer skew_syt_count(const Partition& outer, const Partition& inner, unsigned n_pad = 0) {
  if (!outer.contains(inner)) return 0;
  const unsigned n = n_pad == 0 ? outer.length() : n_pad;
  if (n < outer.length()) throw std::invalid_argument("skew_syt_count: padding shorter than the outer shape");
  PolyMatrix m(n, std::vector<MultiPoly>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      m[i][j] = MultiPoly(inverse_factorial(static_cast<long>(outer.part(i)) - static_cast<long>(inner.part(j)) -
                                            static_cast<long>(i) + static_cast<long>(j)));
  const Rational det = *determinant(m).as_constant() * Rational(factorial(outer.size() - inner.size()));
  if (!is_integer(det)) throw InternalInconsistency("non-integral skew tableau count");
  return det.get_num();
}

/// lambda_i + n - i for i = 1..n, with lambda zero-padded; strictly decreasing.
inline std::vector<long> shifted_parts(const Partition& p, unsigned n) {
  if (n < p.length()) throw std::invalid_argument("shifted_parts: n is smaller than the partition length");
  std::vector<long> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = static_cast<long>(p.part(i)) + static_cast<long>(n - 1 - i);
  return out;
}

/// phi_lambda(u) = prod_i (u + lambda_i + n - i).
inline UPoly phi_poly(const Partition& p, unsigned n) {
  UPoly out = 1;
  for (long s : shifted_parts(p, n)) out *= UPoly::shifted_identity(Rational(s));
  return out;
}

/// A_lambda(u) = phi_lambda(u) / H_lambda.
inline UPoly a_lambda_poly(const Partition& p, unsigned n) {
  return phi_poly(p, n) / Rational(hook_product(p));
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

}  // namespace shifted_hooks
