#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "shifted_hooks/partitions.hpp"

namespace shifted_hooks {
namespace {

std::vector<std::vector<unsigned>> parts_of(const std::vector<Partition>& ps) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

TEST(Partition, ValidatesParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition(std::vector<unsigned>{2, 0, 1}), std::invalid_argument);
  const Partition p(std::vector<unsigned>{3, 1, 0, 0});
  EXPECT_EQ(p.parts(), (std::vector<unsigned>{3, 1}));
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.length(), 2u);
  EXPECT_EQ(p.part(5), 0u);
  EXPECT_EQ(to_json(p).dump(), "[3,1]");
  EXPECT_EQ(partition_from_json(nlohmann::ordered_json::parse("[2,1]")), (Partition{2, 1}));
}

TEST(Enumerate, Examples) {
  ASSERT_EQ(enumerate_partitions(0).size(), 1u);
  EXPECT_TRUE(enumerate_partitions(0)[0].empty());
  EXPECT_EQ(parts_of(enumerate_partitions(4)),
            (std::vector<std::vector<unsigned>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
}

TEST(Enumerate, MatchesRecursiveGenerationInOrder) {
  for (unsigned n = 0; n <= 15; ++n) EXPECT_EQ(parts_of(enumerate_partitions(n)), oracle::recursive_partitions(n));
}

TEST(Enumerate, CountsMatchRecurrence) {
  const auto p = oracle::partition_counts(20);
  for (unsigned n = 0; n <= 20; ++n) EXPECT_EQ(Integer(enumerate_partitions(n).size()), p[n]) << n;
}

TEST(Enumerate, LengthBound) {
  for (const auto& p : enumerate_partitions(7, 2)) EXPECT_LE(p.length(), 2u);
  EXPECT_EQ(enumerate_partitions(7, 2).size(), 4u);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{2, 1}), (Partition{2, 1}));
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{5}), (Partition{1, 1, 1, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
}

TEST(Conjugate, InvolutionAndHookSymmetry) {
  for (unsigned n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      if (n <= 10) {
        EXPECT_EQ(hook_product(p), hook_product(conjugate(p)));
      }
    }
}

TEST(Hooks, Examples) {
  auto h = hook_profile(Partition{2, 1});
  EXPECT_EQ(h.hooks, (std::vector<unsigned>{3, 1, 1}));
  EXPECT_EQ(h.contents, (std::vector<int>{0, 1, -1}));
  EXPECT_EQ(h.hook_product, 3);
  h = hook_profile(Partition{1});
  EXPECT_EQ(h.hooks, (std::vector<unsigned>{1}));
  EXPECT_EQ(h.hook_product, 1);
  EXPECT_EQ(h.contents, (std::vector<int>{0}));
  h = hook_profile(Partition{3, 2});
  EXPECT_EQ(h.hooks, (std::vector<unsigned>{4, 3, 1, 2, 1}));
  EXPECT_EQ(h.hook_product, 24);
}

TEST(Syt, Examples) {
  EXPECT_EQ(syt_count(Partition{2, 1}), 2);
  EXPECT_EQ(syt_count(Partition{6}), 1);
  EXPECT_EQ(syt_count(Partition{2, 2}), 2);
  EXPECT_EQ(syt_count(Partition{}), 1);
}

TEST(Syt, HookFormulaMatchesCornerRemoval) {
  for (unsigned n = 1; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(syt_count(p), oracle::count_syt(p.parts())) << p.to_string();
}

TEST(Syt, SquaresSumToFactorial) {
  for (unsigned n = 0; n <= 10; ++n) {
    Integer sum = 0;
    for (const auto& p : enumerate_partitions(n)) sum += syt_count(p) * syt_count(p);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
}

TEST(SkewSyt, Examples) {
  EXPECT_EQ(skew_syt_count(Partition{2, 1}, Partition{1}), 2);
  EXPECT_EQ(skew_syt_count(Partition{2}, Partition{1, 1}), 0);
  EXPECT_EQ(skew_syt_count(Partition{1, 1}, Partition{1, 1}), 1);
  EXPECT_THROW(skew_syt_count(Partition{1, 1, 1}, Partition{}, 2), std::invalid_argument);
}

TEST(SkewSyt, DeterminantMatchesEnumeration) {
  for (unsigned n = 0; n <= 8; ++n)
    for (const auto& outer : enumerate_partitions(n)) {
      EXPECT_EQ(skew_syt_count(outer, Partition{}), syt_count(outer));
      for (unsigned k = 0; k <= n; ++k)
        for (const auto& inner : enumerate_partitions(k)) {
          const Integer expected = oracle::count_skew_fillings(outer.parts(), inner.parts());
          EXPECT_EQ(skew_syt_count(outer, inner), expected) << outer.to_string() << "/" << inner.to_string();
          EXPECT_EQ(skew_syt_count(outer, inner, n + 1), expected);
        }
    }
}

TEST(ShiftedParts, Examples) {
  EXPECT_EQ(shifted_parts(Partition{2, 1}, 3), (std::vector<long>{4, 2, 0}));
  EXPECT_EQ(shifted_parts(Partition{}, 3), (std::vector<long>{2, 1, 0}));
  EXPECT_EQ(shifted_parts(Partition{3}, 3), (std::vector<long>{5, 1, 0}));
  EXPECT_THROW(shifted_parts(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST(ShiftedParts, StrictlyDecreasingAndDetermineLambda) {
  for (unsigned n = 1; n <= 10; ++n) {
    std::set<std::vector<long>> seen;
    for (const auto& p : enumerate_partitions(n)) {
      auto s = shifted_parts(p, n);
      for (std::size_t i = 1; i < s.size(); ++i) EXPECT_GT(s[i - 1], s[i]);
      std::vector<unsigned> back(n);
      for (unsigned i = 0; i < n; ++i) back[i] = static_cast<unsigned>(s[i] - static_cast<long>(n - 1 - i));
      EXPECT_EQ(Partition(back), p);
      EXPECT_TRUE(seen.insert(s).second);
    }
  }
}

TEST(PhiPoly, Examples) {
  EXPECT_EQ(phi_poly(Partition{2, 1}, 3), UPoly(std::vector<Rational>{0, 8, 6, 1}));
  EXPECT_EQ(phi_poly(Partition{}, 2), UPoly(std::vector<Rational>{0, 1, 1}));
  EXPECT_EQ(phi_poly(Partition{1}, 1), UPoly(std::vector<Rational>{1, 1}));
  EXPECT_THROW(phi_poly(Partition{1, 1}, 1), std::invalid_argument);
}

TEST(ALambda, Examples) {
  const UPoly a = a_lambda_poly(Partition{2, 1}, 3);
  EXPECT_EQ(a, UPoly(std::vector<Rational>{0, make_rational(8, 3), 2, make_rational(1, 3)}));
  EXPECT_EQ(a(Rational(1)), 5);
  EXPECT_EQ(a_lambda_poly(Partition{1}, 1), UPoly(std::vector<Rational>{1, 1}));
  EXPECT_EQ(a_lambda_poly(Partition{2}, 2)(Rational(1)), 2);
}

}  // namespace
}  // namespace shifted_hooks
