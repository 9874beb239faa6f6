#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shifted_hooks/identities.hpp"

namespace shifted_hooks {
namespace {

UPoly binom_shift(long shift, unsigned k) { return binomial_poly(UPoly::shifted_identity(Rational(shift)), k); }

// sum_r a[r] C(n + r, beta + r), the known closed forms for beta <= 4.
UPoly binomial_form(const std::vector<long>& a, unsigned beta) {
  UPoly out;
  for (unsigned r = 0; r < a.size(); ++r) out += binom_shift(r, beta + r) * UPoly(Rational(a[r]));
  return out;
}

const std::vector<std::vector<long>> kBinomialForms = {
    {1}, {0, 1}, {-1, -1, 3}, {1, -5, -10, 15}, {2, 19, -20, -105, 105}};

void expect_pass(const VerificationReport& r) {
  EXPECT_TRUE(r.passed()) << to_json(r).dump();
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Eigen, Examples) {
  expect_pass(check_eigen(2, Partition{1}, 1));
  expect_pass(check_eigen(3, Partition{2, 1}, 1));
  expect_pass(check_eigen(2, Partition{2}, 2));
  const auto r = check_eigen(2, Partition{1}, 2);
  expect_pass(r);
  EXPECT_FALSE(r.note.empty());
}

TEST(OperatorOnPowerSum, Examples) {
  for (unsigned n = 1; n <= 3; ++n) expect_pass(check_leibniz_step(n));
  EXPECT_THROW(check_leibniz_step(0), std::invalid_argument);
}

TEST(SchurExpansion, Examples) {
  for (unsigned n : {1u, 2u, 4u}) expect_pass(check_lemma_2_1(n));
}

TEST(HookQuotient, HandValues) {
  struct Case {
    Partition lambda;
    unsigned u;
    long value;
  };
  for (const auto& c : {Case{Partition{1}, 1, 2}, Case{Partition{2, 1}, 1, 5}, Case{Partition{1, 1}, 1, 3}}) {
    const auto r = check_cor_2_2(c.lambda, c.u);
    expect_pass(r);
    EXPECT_EQ(a_lambda_poly(c.lambda, c.lambda.size())(Rational(c.u)), c.value);
  }
}

TEST(HookQuotient, PassesAtUnitShift) {
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate_partitions(n)) expect_pass(check_cor_2_2(lambda, 1));
}

// The displayed quotient H_mu/H_lambda^2 only matches A_lambda(u) at u = 1;
// the top-row hook reading and the skew sum match for every u >= 1.
TEST(HookQuotient, DisplayedHookQuotientOnlyAtUnitShift) {
  const auto r = check_cor_2_2(Partition{1}, 2);
  EXPECT_EQ(r.values.at("A_lambda(u)"), "3/1");
  EXPECT_EQ(r.values.at("H_mu/H_lambda^2"), "6/1");  // mu = (1,1,1), H_mu = 3!
  EXPECT_EQ(r.values.at("top_row_hooks/H_lambda"), "3/1");
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->location, "(a) H_mu/H_lambda^2");

  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (unsigned u = 0; u <= 4; ++u) {
        const auto report = check_cor_2_2(lambda, u);
        if (!report.passed()) {
          EXPECT_EQ(report.witness->location, "(a) H_mu/H_lambda^2");
        }
        if (u >= 1) {
          EXPECT_EQ(report.values.at("top_row_hooks/H_lambda"), report.values.at("A_lambda(u)"));
        }
      }
}

TEST(UnequalShifts, ReportsNonInteger) {
  const auto r = check_remark_2_3();
  expect_pass(r);
  EXPECT_EQ(r.values.at("value"), "5/2");
  EXPECT_EQ(r.values.at("control"), "2/1");
  EXPECT_EQ(r.values.at("assignment_u1=1_u2=2"), "4/1");
  EXPECT_FALSE(r.note.empty());
}

TEST(BinomialDeterminant, SymbolicAndSampled) {
  expect_pass(check_prop_3_1(2));
  expect_pass(check_prop_3_1(3, {Rational(5), Rational(2), Rational(0)}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> z;
    for (int j = 0; j < 4; ++j) z.push_back(oracle::random_rational(rng, 20, 7));
    expect_pass(check_prop_3_1(4, z));
  }
  EXPECT_THROW(check_prop_3_1(3, {Rational(1)}), std::invalid_argument);
}

TEST(BinomialDeterminant, TwoByTwoByHand) {
  // det [[z1+1, 1], [z2, 1]] = z1 - z2 + 1.
  const auto z1 = MultiPoly(z_var(1)), z2 = MultiPoly(z_var(2));
  const PolyMatrix m = {{z1 + 1, MultiPoly(1)}, {z2, MultiPoly(1)}};
  EXPECT_EQ(determinant(m), z1 - z2 + 1);
}

TEST(DeterminantEvaluations, Examples) {
  expect_pass(check_cor_3_2(Partition{1}, {0, 1}));
  expect_pass(check_cor_3_2(Partition{2, 1}, {0, 1, 2}));
  expect_pass(check_cor_3_2(Partition{3, 2}, {2}));
  // (d) for (2,1): prod (l + c)/h = (2*3*1)/(3*1*1) = 2.
  const HookProfile h = hook_profile(Partition{2, 1});
  Rational d = 1;
  for (std::size_t i = 0; i < h.hooks.size(); ++i) d *= make_rational(2 + h.contents[i], h.hooks[i]);
  EXPECT_EQ(d, 2);
  for (unsigned n = 1; n <= 6; ++n)
    for (const auto& lambda : enumerate_partitions(n)) expect_pass(check_cor_3_2(lambda, {0, 1, 2, 5}));
}

TEST(WeightedCauchy, SingleVariableGeometricSeries) {
  TruncationPolicy policy;
  policy.cap(VarClass::Y, 3).cap(VarClass::W, 3).squarefree(VarClass::T);
  const MultiPoly x(x_param());
  const MultiPoly yw = MultiPoly(y_var(1)) * MultiPoly(w_var(1));
  MultiPoly expected;
  for (unsigned d = 0; d <= 3; ++d) expected += (x - Rational(d)) * yw.pow(d);
  EXPECT_EQ(detail::cauchy_weighted_series(1, 1, policy), expected);
  expect_pass(check_thm_1_1(1, 1, 3));
}

TEST(WeightedCauchy, Examples) {
  expect_pass(check_thm_1_1(2, 1, 2));
  expect_pass(check_thm_1_1(2, 2, 4));
}

TEST(FallingCoefficient, Examples) {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned k = 0; k <= n; ++k) expect_pass(check_lemma_4_1(n, k));
  EXPECT_THROW(check_lemma_4_1(2, 3), std::invalid_argument);
}

TEST(FallingCoefficient, SingleVariableByHand) {
  // n = 1: the [w1] part of the series is y1*x - y1 = y1 (x)_1 - y1 (x)_0.
  TruncationPolicy policy;
  policy.cap(VarClass::Y, 1).cap(VarClass::W, 1).squarefree(VarClass::W).squarefree(VarClass::T);
  const auto series = detail::cauchy_weighted_series(1, 1, policy);
  const MultiPoly y1(y_var(1)), x(x_param());
  EXPECT_EQ(coeff(series, Monomial(w_var(1))).without_policy(), y1 * x - y1);
}

TEST(StanLhs, Examples) {
  EXPECT_EQ(stan_lhs(2, {1, 1}), 9);
  EXPECT_EQ(stan_lhs(3, {1}), 6);
  for (unsigned n = 1; n <= 7; ++n) EXPECT_EQ(stan_lhs(n, {0, 0, 0}), 1);
  EXPECT_EQ(stan_lhs(4, {}), 1);
}

TEST(StanLhs, MatchesDirectHandSum) {
  // n = 3 shapes (3),(2,1),(1,1,1) with shifted parts (5,1,0),(4,2,0),(3,2,1), f = 1,2,1.
  const Rational e2 = make_rational(1 * (5 + 0 + 0) + 4 * (8 + 0 + 0) + 1 * (6 + 3 + 2), 6);
  EXPECT_EQ(stan_lhs(3, {2}), e2);
}

TEST(Ebeta, MatchesKnownForms) {
  for (unsigned beta = 0; beta < kBinomialForms.size(); ++beta) {
    const UPoly p = ebeta_closed_poly(beta);
    EXPECT_EQ(p, binomial_form(kBinomialForms[beta], beta)) << "beta=" << beta << " " << p;
    EXPECT_EQ(p.degree(), static_cast<int>(2 * beta));
  }
  EXPECT_EQ(ebeta_closed_poly(1), binom_shift(1, 2));
}

TEST(Ebeta, BinomialCombinationRecoversCoefficients) {
  for (unsigned beta = 0; beta < kBinomialForms.size(); ++beta) {
    const auto a = binomial_combination(ebeta_closed_poly(beta), beta);
    ASSERT_EQ(a.size(), kBinomialForms[beta].size());
    for (std::size_t r = 0; r < a.size(); ++r) EXPECT_EQ(a[r], kBinomialForms[beta][r]);
  }
  EXPECT_EQ(binomial_combination_string(binomial_combination(ebeta_closed_poly(4), 4), 4),
            "2*C(n,4) + 19*C(n+1,5) - 20*C(n+2,6) - 105*C(n+3,7) + 105*C(n+4,8)");
  EXPECT_EQ(binomial_combination_string(binomial_combination(ebeta_closed_poly(1), 1), 1), "C(n+1,2)");
  EXPECT_THROW(binomial_combination(UPoly::identity().compose(UPoly::identity()) * UPoly::identity(), 0),
               std::invalid_argument);
}

TEST(Ebeta, HigherBetaAgainstBruteForce) {
  for (unsigned beta = 5; beta <= 6; ++beta)
    for (unsigned n = 1; n <= 9; ++n) EXPECT_EQ(ebeta_closed_poly(beta)(Rational(n)), stan_lhs(n, {beta}));
}

TEST(ElementaryAverage, Examples) {
  const auto r = check_cor_4_2(3, 1);
  expect_pass(r);
  EXPECT_EQ(r.values.at("value"), "6/1");
  expect_pass(check_cor_4_2(1, 0));
  expect_pass(check_cor_4_2(8, 4));
}

TEST(ElementaryPair, Examples) {
  EXPECT_EQ(elementary_pair_closed_form(2, 1, 1), 9);
  EXPECT_EQ(elementary_pair_closed_form(1, 1, 1), 1);
  expect_pass(check_lemma_5_1(2, 1, 1));
  expect_pass(check_lemma_5_1(1, 1, 1));
  expect_pass(check_lemma_5_1(6, 2, 3));
  EXPECT_THROW(elementary_pair_closed_form(2, 3, 0), std::invalid_argument);
}

TEST(Fit, SingleElementary) {
  std::vector<unsigned> train{1, 2, 3}, test{8, 9, 10};
  const auto r = fit_polynomiality({1}, train, test);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.polynomial, binom_shift(1, 2));
  EXPECT_EQ(r.coefficients.size(), r.degree + 1);
  // C(n+1,2) = (n)_2/2 + (n)_1.
  EXPECT_EQ(r.coefficients, (std::vector<Rational>{0, 1, make_rational(1, 2)}));
}

TEST(Fit, TwoSquaredElementaries) {
  std::vector<unsigned> train, test{10, 11};
  for (unsigned n = 1; n <= 9; ++n) train.push_back(n);
  const auto r = fit_polynomiality({2, 2}, train, test);
  EXPECT_TRUE(r.passed()) << to_json(r).dump();
  EXPECT_EQ(r.degree, 8u);
}

TEST(Fit, PairMatchesClosedFormPolynomial) {
  const auto r = fit_polynomiality({1, 1}, {1, 2, 3, 4, 5}, {6, 7});
  EXPECT_TRUE(r.passed());
  std::vector<Rational> xs, ys;
  for (unsigned n = 1; n <= 5; ++n) {
    xs.emplace_back(n);
    ys.emplace_back(elementary_pair_closed_form(n, 1, 1));
  }
  EXPECT_EQ(r.polynomial, interpolate(xs, ys));
  // n^4/4 + n^3/2 + n^2/4 = (n(n+1)/2)^2.
  EXPECT_EQ(r.polynomial, binom_shift(1, 2) * binom_shift(1, 2));
}

TEST(Fit, DetectsFailure) {
  // A degree-0 fit of ks = () trivially passes; a deliberately short window
  // for ks=(1) is rejected up front.
  EXPECT_THROW(fit_polynomiality({1}, {1, 2}, {5}), std::invalid_argument);
  EXPECT_THROW(fit_polynomiality({1}, {1, 2, 2}, {5}), std::invalid_argument);
  EXPECT_THROW(fit_polynomiality({1}, {1, 2, 3}, {3}), std::invalid_argument);
  EXPECT_THROW(fit_polynomiality({1}, {0, 1, 2}, {5}), std::invalid_argument);
  EXPECT_TRUE(fit_polynomiality({}, {4}, {1, 2, 3}).passed());
}

TEST(Report, JsonShape) {
  const auto r = check_cor_4_2(3, 1);
  const Json j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"identity", "params", "status", "witness", "elapsed_ms", "values"}));
  EXPECT_EQ(j["status"], "PASS");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_TRUE(j["elapsed_ms"].is_null());
  EXPECT_TRUE(to_json(r, true)["elapsed_ms"].is_number());
  EXPECT_EQ(j.dump(), to_json(check_cor_4_2(3, 1)).dump());
}

TEST(Report, FailureCarriesWitness) {
  detail::ReportBuilder b("probe");
  b.equal("first", Rational(1), Rational(2));
  b.equal("second", Rational(3), Rational(4));
  const auto r = b.finish();
  EXPECT_EQ(r.status, Status::Fail);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->location, "first");
  EXPECT_EQ(to_json(r)["witness"]["lhs"], "1/1");

  detail::ReportBuilder p("probe");
  p.equal("poly", MultiPoly(y_var(1)), MultiPoly(y_var(1)) * Rational(2));
  const auto rp = p.finish();
  ASSERT_TRUE(rp.witness.has_value());
  EXPECT_NE(rp.witness->location.find("y1"), std::string::npos);
}

}  // namespace
}  // namespace shifted_hooks
