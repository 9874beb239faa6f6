#pragma once

// One verifier per identity. Each verifier builds the closed form and an
// independent brute-force side, compares them exactly, and returns a
// VerificationReport naming the first discrepancy when they disagree.

#include "shifted_hooks/exactnum.hpp"
#include "shifted_hooks/partitions.hpp"
#include "shifted_hooks/polyring.hpp"
#include "shifted_hooks/symfun.hpp"
#include "shifted_hooks/upoly.hpp"

#include <chrono>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace shifted_hooks {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail };

inline const char* status_name(Status s) { return s == Status::Pass ? "PASS" : "FAIL"; }

struct Witness {
  std::string location;  // monomial or evaluation point
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity;
  Json params = Json::object();
  Status status = Status::Pass;
  std::optional<Witness> witness;  // present iff status == Fail
  Json values = Json::object();    // named exact results worth surfacing
  std::string note;
  double elapsed_ms = 0;

  bool passed() const { return status == Status::Pass; }
};

/// Stable field order; elapsed_ms is null unless timing is requested, so
/// that default output is byte-identical across runs.
inline Json to_json(const VerificationReport& r, bool with_timing = false) {
  Json j;
  j["identity"] = r.identity;
  j["params"] = r.params;
  j["status"] = status_name(r.status);
  if (r.witness)
    j["witness"] = {{"at", r.witness->location}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  else
    j["witness"] = nullptr;
  j["elapsed_ms"] = with_timing ? Json(r.elapsed_ms) : Json(nullptr);
  if (!r.values.empty()) j["values"] = r.values;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

namespace detail {

// Accumulates comparisons, keeping the first mismatch as the witness.
class ReportBuilder {
 public:
  explicit ReportBuilder(std::string identity) : start_(std::chrono::steady_clock::now()) {
    report_.identity = std::move(identity);
  }

  ReportBuilder& param(const std::string& name, Json value) {
    report_.params[name] = std::move(value);
    return *this;
  }
  ReportBuilder& value(const std::string& name, const Rational& v) {
    report_.values[name] = to_fraction_string(v);
    return *this;
  }
  ReportBuilder& note(std::string text) {
    report_.note = std::move(text);
    return *this;
  }

  bool equal(const std::string& where, const MultiPoly& lhs, const MultiPoly& rhs) {
    if (auto diff = first_difference(lhs, rhs)) {
      fail(where + ": [" + diff->mono.to_string() + "]", to_fraction_string(diff->lhs), to_fraction_string(diff->rhs));
      return false;
    }
    return true;
  }
  bool equal(const std::string& where, const Rational& lhs, const Rational& rhs) {
    if (lhs != rhs) {
      fail(where, to_fraction_string(lhs), to_fraction_string(rhs));
      return false;
    }
    return true;
  }
  bool integral(const std::string& where, const Rational& v) {
    if (!is_integer(v)) {
      fail(where + ": integrality", to_fraction_string(v), "denominator 1");
      return false;
    }
    return true;
  }
  bool require(bool ok, const std::string& where, const std::string& lhs, const std::string& rhs) {
    if (!ok) fail(where, lhs, rhs);
    return ok;
  }

  VerificationReport finish() {
    report_.status = report_.witness ? Status::Fail : Status::Pass;
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  void fail(const std::string& where, const std::string& lhs, const std::string& rhs) {
    if (!report_.witness) report_.witness = Witness{where, lhs, rhs};
  }

  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

inline Json partition_param(const Partition& p) { return to_json(p); }

inline MultiPoly poly_in(const UPoly& p, VarId v) { return MultiPoly::from_upoly(p, v); }

/// C(u + shift, k) as a polynomial in u.
inline UPoly binomial_in_u(long shift, unsigned k) {
  return binomial_poly(UPoly::shifted_identity(Rational(shift)), k);
}

/// sum_{i=0}^n C(u+i-1, i) p_1^i e_{n-i}
inline MultiPoly binomial_elementary_sum(unsigned n, VarId u) {
  const MultiPoly p1 = power_sum_1(n);
  MultiPoly out;
  for (unsigned i = 0; i <= n; ++i)
    out += poly_in(binomial_in_u(static_cast<long>(i) - 1, i), u) * p1.pow(i) * elementary(n - i, n);
  return out;
}

/// e_k of a list of integers, by the product prod (1 + v t).
inline Integer elementary_of_values(const std::vector<long>& values, unsigned k) {
  std::vector<Integer> e(k + 1, 0);
  e[0] = 1;
  for (long v : values)
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  return e[k];
}

inline Monomial multilinear_monomial(VarClass cls, unsigned count) {
  Monomial m;
  for (unsigned i = 1; i <= count; ++i) m = m * Monomial(VarId(cls, i));
  return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Eigen-relations of the diagonal operator.

/// L(u) a_{theta*delta+lambda} = prod_i (u + lambda_i + theta(n-i)) a_{theta*delta+lambda},
/// and the ratio a_{theta*delta+lambda}/a_{theta*delta} is an eigenfunction of
/// a_{theta*delta}^{-1} L(u) a_{theta*delta} with the same eigenvalue.
inline VerificationReport check_eigen(unsigned n, const Partition& lambda, unsigned theta) {
  detail::ReportBuilder b("eigen");
  b.param("n", n).param("lambda", detail::partition_param(lambda)).param("theta", theta);
  const VarId u = u_param();
  const MultiPoly a = alternant(AlternantSpec::staircase(lambda, n, theta));
  const MultiPoly eigen = detail::poly_in(staircase_eigenvalue(lambda, n, theta), u);
  b.equal("L(u) alternant", apply_L(a, n, u), eigen * a);
  // For theta > 1 the ratio is usually not a polynomial; the alternant form
  // above is then the whole check.
  try {
    const MultiPoly ratio = generalized_alternant_ratio(lambda, n, theta);
    b.equal("left operator on alternant ratio", conjugated_L(ratio, n, u, theta), eigen * ratio);
  } catch (const NotDivisible&) {
    b.note("alternant ratio is not a polynomial; checked on the alternant only");
  }
  return b.finish();
}

// ---------------------------------------------------------------------------
// Shifted parts and hook lengths.

/// L(u)(a_delta p_1^n) = a_delta n! sum_j C(u+j-1, j) p_1^j e_{n-j}.
inline VerificationReport check_leibniz_step(unsigned n) {
  if (n < 1) throw std::invalid_argument("leibniz: n must be positive");
  detail::ReportBuilder b("leibniz");
  b.param("n", n);
  const VarId u = u_param();
  const MultiPoly a = vandermonde(n);
  const MultiPoly lhs = apply_L(a * power_sum_1(n).pow(n), n, u);
  const MultiPoly rhs = a * detail::binomial_elementary_sum(n, u) * Rational(factorial(n));
  b.equal("symbolic in y,u", lhs, rhs);
  return b.finish();
}

/// sum_i C(u+i-1, i) p_1^i e_{n-i} = sum_{lambda |- n} A_lambda(u) s_lambda.
inline VerificationReport check_lemma_2_1(unsigned n) {
  if (n < 1) throw std::invalid_argument("lemma2.1: n must be positive");
  detail::ReportBuilder b("lemma2.1");
  b.param("n", n);
  const VarId u = u_param();
  MultiPoly schur_side;
  for (const auto& lambda : enumerate_partitions(n))
    schur_side += detail::poly_in(a_lambda_poly(lambda, n), u) * schur(lambda, n);
  b.equal("symbolic in y,u", detail::binomial_elementary_sum(n, u), schur_side);
  return b.finish();
}

/// Routes to A_lambda(u) for lambda |- n, u >= 0: the eigenvalue over the
/// hook product; H_mu / H_lambda^2 with mu = (n^u, lambda'); the product of
/// the top-row hook lengths of mu over H_lambda; and the weighted sum of skew
/// tableau counts. The common value must be an integer.
///
/// H_mu / H_lambda^2 agrees with the others only at u = 1 (then the rows of
/// mu below the first are lambda' itself). The top-row reading holds for
/// every u >= 1: the first row of mu is the first column of lambda + (u^n),
/// whose hooks are exactly lambda_i + n - i + u. At u = 0 the top row of mu
/// is the first row of lambda', so it is only compared for u >= 1.
inline VerificationReport check_cor_2_2(const Partition& lambda, unsigned u) {
  detail::ReportBuilder b("cor2.2");
  b.param("lambda", detail::partition_param(lambda)).param("u", u);
  const unsigned n = lambda.size();
  const Rational eigen_value = a_lambda_poly(lambda, n)(Rational(u));

  const Partition conj = conjugate(lambda);
  std::vector<unsigned> mu_parts(u, n);
  mu_parts.insert(mu_parts.end(), conj.parts().begin(), conj.parts().end());
  const Partition mu(mu_parts);
  const Integer h_lambda = hook_product(lambda);
  b.equal("H_lambda vs H_lambda'", Rational(h_lambda), Rational(hook_product(conj)));
  const Rational hook_quotient = make_rational(hook_product(mu), h_lambda * h_lambda);

  const HookProfile mu_hooks = hook_profile(mu);
  Integer top_row = 1;
  for (unsigned j = 0; j < mu.part(0); ++j) top_row *= mu_hooks.hooks[j];
  const Rational top_row_quotient = make_rational(top_row, h_lambda);

  Rational skew_sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const Rational weight = detail::binomial_in_u(static_cast<long>(n - i) - 1, n - i)(Rational(u));
    if (weight != 0) skew_sum += weight * Rational(skew_syt_count(lambda, Partition(std::vector<unsigned>(i, 1))));
  }

  b.equal("(a) H_mu/H_lambda^2", eigen_value, hook_quotient);
  if (u >= 1) b.equal("(a) top-row hooks of mu / H_lambda", eigen_value, top_row_quotient);
  b.equal("(b) skew tableau sum", eigen_value, skew_sum);
  b.integral("A_lambda(u)", eigen_value);
  b.value("A_lambda(u)", eigen_value);
  b.value("H_mu/H_lambda^2", hook_quotient);
  if (u >= 1) b.value("top_row_hooks/H_lambda", top_row_quotient);
  return b.finish();
}

/// Non-integrality of H_lambda^{-1} prod (lambda_i + n - i + u_i) once the
/// u_i differ, for lambda = (2,0), n = 2.
inline VerificationReport check_remark_2_3() {
  detail::ReportBuilder b("remark2.3");
  const Partition lambda{2};
  const unsigned n = 2;
  b.param("lambda", detail::partition_param(lambda)).param("n", n);
  auto evaluate = [&](const Partition& p, std::vector<long> us) -> Rational {
    const auto shifted = shifted_parts(p, n);
    Rational prod = 1;
    for (unsigned i = 0; i < n; ++i) prod *= shifted[i] + us[i];
    return prod / Rational(hook_product(p));
  };
  // (3 + u_1) u_2 / 2 with u_1 = 2, u_2 = 1 gives (1/2)(5)(1).
  const Rational value = evaluate(lambda, {2, 1});
  const Rational printed_assignment = evaluate(lambda, {1, 2});
  const Rational control = evaluate(lambda, {1, 1});
  const Rational column_control = evaluate(Partition{1, 1}, {1, 1});

  b.equal("u=(2,1)", value, make_rational(5, 2));
  b.require(!is_integer(value), "u=(2,1): non-integrality", to_fraction_string(value), "not an integer");
  b.integral("control u=(1,1)", control);
  b.equal("control u=(1,1)", control, 2);
  b.integral("lambda=(1,1), u=(1,1)", column_control);
  b.value("value", value).value("control", control).value("column_control", column_control);
  b.value("assignment_u1=1_u2=2", printed_assignment);
  b.note("factors (3+u1)*u2 equal (5)(1) at u1=2, u2=1; the assignment u1=1, u2=2 gives 4, an integer");
  return b.finish();
}

// ---------------------------------------------------------------------------
// Determinants.

/// det(C(z_i + n - i, n - j)) = prod_{i<j} (z_i - z_j + j - i)/(j - i); symbolic
/// in z_1..z_n when `z` is empty, otherwise evaluated at the given point.
inline VerificationReport check_prop_3_1(unsigned n, const std::vector<Rational>& z = {}) {
  if (n < 1) throw std::invalid_argument("prop3.1: n must be positive");
  if (!z.empty() && z.size() != n) throw std::invalid_argument("prop3.1: z must have n entries");
  detail::ReportBuilder b("prop3.1");
  b.param("n", n);
  if (z.empty()) {
    b.param("z", "symbolic");
  } else {
    Json zs = Json::array();
    for (const auto& v : z) zs.push_back(to_fraction_string(v));
    b.param("z", std::move(zs));
  }
  auto zi = [&](unsigned i) -> MultiPoly { return z.empty() ? MultiPoly(z_var(i + 1)) : MultiPoly(z[i]); };

  PolyMatrix m(n, std::vector<MultiPoly>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      const UPoly entry = binomial_poly(UPoly::shifted_identity(Rational(n - 1 - i)), n - 1 - j);
      m[i][j] = z.empty() ? MultiPoly::from_upoly(entry, z_var(i + 1)) : MultiPoly(entry(z[i]));
    }
  }
  MultiPoly product = 1;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      product *= (zi(i) - zi(j) + MultiPoly(Rational(j - i))) * make_rational(1, j - i);
  b.equal("determinant", determinant(m), product);
  return b.finish();
}

/// Determinant evaluations for lambda |- n:
/// (a) det(1/(lambda_i - i + j)!) = prod_{i<j}(lambda_i - lambda_j + j - i) / prod (lambda_i + n - i)! = 1/H;
/// (b) det(i/(lambda_i - i + j)!) = n!/H = f_lambda;
/// (c) det(w_i(u)/(lambda_i - i + j)!) = prod w_i(u)/w_i(0)! * prod_{i<j}(w_i(u) - w_j(u)) = A_lambda(u),
///     with w_i(u) = lambda_i + n - i + u;
/// (d) det(C(lambda_i + l - i, l - j)) = H^{-1} prod (lambda_i + l - i)!/(l - i)! = prod_v (l + c_v)/h_v.
inline VerificationReport check_cor_3_2(const Partition& lambda, const std::vector<long>& u_samples) {
  detail::ReportBuilder b("cor3.2");
  Json us = Json::array();
  for (long u : u_samples) us.push_back(u);
  b.param("lambda", detail::partition_param(lambda)).param("u", std::move(us));
  const unsigned n = lambda.size();
  const HookProfile hooks = hook_profile(lambda);
  const Rational inv_h = make_rational(1, hooks.hook_product);
  auto part = [&](unsigned i) { return static_cast<long>(lambda.part(i)); };

  auto scaled_matrix_det = [&](auto row_scale) {
    PolyMatrix m(n, std::vector<MultiPoly>(n));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        m[i][j] = MultiPoly(row_scale(i) * inverse_factorial(part(i) - static_cast<long>(i) + static_cast<long>(j)));
    return *determinant(m).as_constant();
  };

  // (a)
  Rational vandermonde_form = 1;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) vandermonde_form *= part(i) - part(j) + static_cast<long>(j - i);
    vandermonde_form /= Rational(factorial(static_cast<unsigned>(part(i) + n - 1 - i)));
  }
  const Rational det_a = scaled_matrix_det([](unsigned) { return Rational(1); });
  b.equal("(a) determinant vs product form", det_a, vandermonde_form);
  b.equal("(a) determinant vs 1/H", det_a, inv_h);

  // (b)
  const Rational det_b = scaled_matrix_det([](unsigned i) { return Rational(i + 1); });
  b.equal("(b) determinant vs n!/H", det_b, Rational(factorial(n)) * inv_h);
  b.integral("(b)", det_b);

  // (c)
  for (long u : u_samples) {
    auto omega = [&](unsigned i, long at) { return part(i) + static_cast<long>(n - 1 - i) + at; };
    const Rational det_c = scaled_matrix_det([&](unsigned i) { return Rational(omega(i, u)); });
    Rational product_form = 1;
    for (unsigned i = 0; i < n; ++i) {
      product_form *= make_rational(omega(i, u), factorial(static_cast<unsigned>(omega(i, 0))));
      for (unsigned j = i + 1; j < n; ++j) product_form *= omega(i, u) - omega(j, u);
    }
    const std::string at = "(c) u=" + std::to_string(u);
    b.equal(at + " determinant vs product form", det_c, product_form);
    b.equal(at + " determinant vs A_lambda(u)", det_c, a_lambda_poly(lambda, n)(Rational(u)));
    if (u >= 0) b.integral(at, det_c);
  }

  // (d)
  const unsigned l = lambda.length();
  PolyMatrix md(l, std::vector<MultiPoly>(l));
  Rational factorial_form = inv_h;
  for (unsigned i = 0; i < l; ++i) {
    for (unsigned j = 0; j < l; ++j)
      md[i][j] = MultiPoly(Rational(binomial(part(i) + static_cast<long>(l - 1 - i), static_cast<long>(l - 1 - j))));
    factorial_form *= make_rational(factorial(static_cast<unsigned>(part(i) + l - 1 - i)), factorial(l - 1 - i));
  }
  Rational content_form = 1;
  for (std::size_t v = 0; v < hooks.hooks.size(); ++v)
    content_form *= make_rational(static_cast<long>(l) + hooks.contents[v], hooks.hooks[v]);
  const Rational det_d = *determinant(md).as_constant();
  b.equal("(d) determinant vs factorial form", det_d, factorial_form);
  b.equal("(d) determinant vs content form", det_d, content_form);
  b.integral("(d)", det_d);
  b.value("f_lambda", det_b).value("(d)", det_d);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Cauchy-type series with the (x - lambda_i - n + i) weight.

namespace detail {

/// prod_{j,k} (1 - y_j w_k)^{-1} [t_1..t_n] (1 + t_1 + .. + t_n)^x
///   prod_k (1 - sum_j t_j y_j w_k / (1 - y_j w_k)), modulo `policy`.
inline MultiPoly cauchy_weighted_series(unsigned n, unsigned m, const TruncationPolicy& policy) {
  const VarId x = x_param();
  const MultiPoly one = MultiPoly(1).truncated(policy);
  MultiPoly kernel = one;
  MultiPoly factors = one;
  for (unsigned k = 1; k <= m; ++k) {
    MultiPoly inner = one;
    for (unsigned j = 1; j <= n; ++j) {
      const MultiPoly yw = MultiPoly(y_var(j)) * MultiPoly(w_var(k));
      const MultiPoly pair = (MultiPoly(1) - yw).truncated(policy);
      factors = factors * pair;
      inner = inner - MultiPoly(t_var(j)) * yw * geometric_inverse(pair, policy);
    }
    kernel = kernel * inner;
  }
  const MultiPoly with_power = multilinear_power(x, n, policy) * kernel;
  const MultiPoly extracted = coeff(with_power, multilinear_monomial(VarClass::T, n));
  return geometric_inverse(factors, policy) * extracted;
}

}  // namespace detail

/// Truncated check of
///   sum_{l(lambda) <= n} s_lambda(y) s_lambda(w) prod_i (x - lambda_i - n + i)
/// against the series form, both cut at y-degree and w-degree D.
inline VerificationReport check_thm_1_1(unsigned n, unsigned m, unsigned D) {
  if (n < 1 || m < 1) throw std::invalid_argument("thm1.1: n and m must be positive");
  detail::ReportBuilder b("thm1.1");
  b.param("n", n).param("m", m).param("D", D);
  TruncationPolicy policy;
  policy.cap(VarClass::Y, D).cap(VarClass::W, D).squarefree(VarClass::T);

  const VarId x = x_param();
  MultiPoly lhs;
  for (unsigned d = 0; d <= D; ++d)
    for (const auto& lambda : enumerate_partitions(d, std::min(n, m))) {
      UPoly weight = 1;
      for (unsigned i = 0; i < n; ++i)
        weight *= UPoly::shifted_identity(-Rational(lambda.part(i) + n - 1 - i));
      lhs += schur(lambda, n) * rename_class(schur(lambda, m), VarClass::Y, VarClass::W) *
             MultiPoly::from_upoly(weight, x);
    }
  const MultiPoly rhs = detail::cauchy_weighted_series(n, m, policy);
  b.equal("truncated series", lhs.truncated(policy), rhs);
  return b.finish();
}

/// With m = n, the coefficient of (x)_{n-k} in the series form, restricted to
/// [w_1 .. w_n], is (-1)^k (n)_k p_1^{n-k} e_k. After x -> -u and the overall
/// (-1)^n this is the sign-free statement in the rising factorial of u.
inline VerificationReport check_lemma_4_1(unsigned n, unsigned k) {
  if (n < 1 || k > n) throw std::invalid_argument("lemma4.1: need n >= 1 and 0 <= k <= n");
  detail::ReportBuilder b("lemma4.1");
  b.param("n", n).param("k", k);
  TruncationPolicy policy;
  // [w_1..w_n] has y-degree exactly n, and only sees square-free w monomials.
  policy.cap(VarClass::Y, n).cap(VarClass::W, n).squarefree(VarClass::W).squarefree(VarClass::T);
  const auto by_falling = falling_basis_coefficients(detail::cauchy_weighted_series(n, n, policy), x_param());
  const MultiPoly at_degree = n - k < by_falling.size() ? by_falling[n - k] : MultiPoly();
  const MultiPoly lhs = coeff(at_degree, detail::multilinear_monomial(VarClass::W, n)).without_policy();
  const Rational sign = k % 2 == 0 ? 1 : -1;
  const MultiPoly rhs = power_sum_1(n).pow(n - k) * elementary(k, n) *
                        (sign * falling_factorial(Rational(n), k));
  b.equal("[w_1..w_n] coefficient of (x)_{n-k}", lhs, rhs);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Averages of elementary symmetric functions of shifted parts.

/// (1/n!) sum_{lambda |- n} f_lambda^2 prod_j e_{k_j}(lambda_i + n - i), by brute force.
inline Rational stan_lhs(unsigned n, const std::vector<unsigned>& ks) {
  Integer total = 0;
  for (const auto& lambda : enumerate_partitions(n)) {
    const Integer f = syt_count(lambda);
    Integer weight = f * f;
    const auto shifted = shifted_parts(lambda, n);
    for (unsigned k : ks) {
      if (weight == 0) break;
      weight *= detail::elementary_of_values(shifted, k);
    }
    total += weight;
  }
  return make_rational(total, factorial(n));
}

/// sum_{alpha=n-beta}^{n} c(alpha, n-beta) C(n, alpha) as a polynomial in n,
/// using c(N + r, N) = sum_j <<r,j>> C(N + r + j, 2r) with N = n - beta.
inline UPoly ebeta_closed_poly(unsigned beta) {
  const UPoly n = UPoly::identity();
  UPoly out;
  for (unsigned r = 0; r <= beta; ++r) {
    UPoly stirling_part;
    for (unsigned j = 0; j <= r; ++j) {
      const Integer e = eulerian_second_order(r, j);
      if (e == 0) continue;
      stirling_part += binomial_poly(n + UPoly(Rational(static_cast<long>(r + j) - static_cast<long>(beta))), 2 * r) *
                       UPoly(Rational(e));
    }
    out += stirling_part * binomial_poly(n, beta - r);
  }
  return out;
}

/// Coefficients a_r with p(n) = sum_{r=0}^{beta} a_r C(n + r, beta + r).
/// Throws if p has no such representation.
inline std::vector<Rational> binomial_combination(const UPoly& p, unsigned beta) {
  std::vector<Rational> a(beta + 1);
  UPoly rest = p;
  for (unsigned r = beta + 1; r-- > 0;) {
    const UPoly basis = binomial_poly(UPoly::shifted_identity(Rational(r)), beta + r);
    a[r] = rest.coeff(beta + r) / basis.leading();
    rest -= basis * UPoly(a[r]);
  }
  if (!rest.is_zero()) throw std::invalid_argument("polynomial is not a combination of C(n+r, beta+r)");
  return a;
}

/// "2*C(n,4) + 19*C(n+1,5) - ..."
inline std::string binomial_combination_string(const std::vector<Rational>& a, unsigned beta) {
  std::string out;
  for (unsigned r = 0; r < a.size(); ++r) {
    if (a[r] == 0) continue;
    const Rational mag = abs(a[r]);
    out += out.empty() ? (a[r] < 0 ? "-" : "") : (a[r] < 0 ? " - " : " + ");
    if (mag != 1) out += to_compact_string(mag) + "*";
    out += "C(n" + (r ? "+" + std::to_string(r) : std::string()) + "," + std::to_string(beta + r) + ")";
  }
  return out.empty() ? "0" : out;
}

inline VerificationReport check_cor_4_2(unsigned n, unsigned beta) {
  if (n < 1) throw std::invalid_argument("cor4.2: n must be positive");
  detail::ReportBuilder b("cor4.2");
  b.param("n", n).param("beta", beta);
  const Rational brute = stan_lhs(n, {beta});
  const Rational closed = ebeta_closed_poly(beta)(Rational(n));
  b.equal("n=" + std::to_string(n), brute, closed);
  b.value("value", brute);
  return b.finish();
}

/// sum_{k=n-alpha}^n sum_{m=n-beta}^n c(k,n-alpha) c(m,n-beta) C(n,m)
///   sum_j j! C(n-m, j) C(m, n-k-j).
inline Integer elementary_pair_closed_form(unsigned n, unsigned alpha, unsigned beta) {
  if (alpha > n || beta > n) throw std::invalid_argument("lemma5.1: alpha, beta must not exceed n");
  Integer total = 0;
  for (unsigned k = n - alpha; k <= n; ++k)
    for (unsigned m = n - beta; m <= n; ++m) {
      Integer inner = 0;
      for (unsigned j = 0; j <= n - m; ++j)
        inner += factorial(j) * binomial(n - m, j) * binomial(m, static_cast<long>(n) - k - j);
      total += stirling_first(k, n - alpha, StirlingSign::Unsigned) *
               stirling_first(m, n - beta, StirlingSign::Unsigned) * binomial(n, m) * inner;
    }
  return total;
}

inline VerificationReport check_lemma_5_1(unsigned n, unsigned alpha, unsigned beta) {
  if (n < 1) throw std::invalid_argument("lemma5.1: n must be positive");
  detail::ReportBuilder b("lemma5.1");
  b.param("n", n).param("alpha", alpha).param("beta", beta);
  const Rational brute = stan_lhs(n, {alpha, beta});
  const Rational closed = Rational(elementary_pair_closed_form(n, alpha, beta));
  b.equal("n=" + std::to_string(n), brute, closed);
  b.value("value", brute);
  return b.finish();
}

// ---------------------------------------------------------------------------
// Polynomiality in n.

struct FitResult {
  std::vector<unsigned> ks;
  unsigned degree = 0;
  std::vector<Rational> coefficients;  // in the falling-factorial basis (n)_j
  UPoly polynomial;
  std::vector<unsigned> train;
  std::vector<unsigned> test;
  Status status = Status::Pass;
  std::optional<Witness> witness;

  bool passed() const { return status == Status::Pass; }
};

/// Interpolates stan_lhs(., ks) with degree 2*sum(ks) on the first
/// degree+1 training points and requires exact agreement on every remaining
/// training point and every test point.
inline FitResult fit_polynomiality(const std::vector<unsigned>& ks, const std::vector<unsigned>& train,
                                   const std::vector<unsigned>& test) {
  FitResult out;
  out.ks = ks;
  out.degree = 2 * std::accumulate(ks.begin(), ks.end(), 0u);
  out.train = train;
  out.test = test;
  if (train.size() < out.degree + 1)
    throw std::invalid_argument("fit: need at least " + std::to_string(out.degree + 1) + " training points");
  const std::set<unsigned> train_set(train.begin(), train.end());
  if (train_set.size() != train.size()) throw std::invalid_argument("fit: repeated training point");
  for (unsigned t : test)
    if (train_set.count(t)) throw std::invalid_argument("fit: test point " + std::to_string(t) + " is also a training point");
  for (unsigned v : train)
    if (v == 0) throw std::invalid_argument("fit: n must be positive");
  for (unsigned v : test)
    if (v == 0) throw std::invalid_argument("fit: n must be positive");

  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= out.degree; ++i) {
    xs.emplace_back(train[i]);
    ys.push_back(stan_lhs(train[i], ks));
  }
  out.polynomial = interpolate(xs, ys);
  out.coefficients = to_falling_basis(out.polynomial);
  out.coefficients.resize(out.degree + 1);

  auto check = [&](unsigned n, const char* role) {
    const Rational expected = stan_lhs(n, ks);
    const Rational predicted = out.polynomial(Rational(n));
    if (expected != predicted && !out.witness)
      out.witness = Witness{std::string(role) + " n=" + std::to_string(n), to_fraction_string(predicted),
                            to_fraction_string(expected)};
  };
  for (std::size_t i = out.degree + 1; i < train.size(); ++i) check(train[i], "train");
  for (unsigned n : test) check(n, "test");
  out.status = out.witness ? Status::Fail : Status::Pass;
  return out;
}

inline Json to_json(const FitResult& r) {
  Json j;
  j["identity"] = "fit";
  j["ks"] = r.ks;
  j["degree"] = r.degree;
  Json c = Json::array();
  for (const auto& v : r.coefficients) c.push_back(to_fraction_string(v));
  j["coefficients"] = std::move(c);
  j["polynomial"] = r.polynomial.to_string("n");
  j["train"] = r.train;
  j["test"] = r.test;
  j["status"] = status_name(r.status);
  if (r.witness)
    j["witness"] = {{"at", r.witness->location}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  else
    j["witness"] = nullptr;
  return j;
}

}  // namespace shifted_hooks
