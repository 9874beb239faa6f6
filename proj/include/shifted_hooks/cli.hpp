#pragma once

// Command-line front end: verify / table / poly / stan / fit.
// Exit codes: 0 all checks passed, 1 at least one check failed, 2 the
// input was rejected before any computation.

#include "shifted_hooks/identities.hpp"
#include "shifted_hooks/parallel.hpp"

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace shifted_hooks::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv, Text };

/// Inclusive "lo..hi" or a single integer.
struct Range {
  long lo = 0;
  long hi = 0;

  std::vector<long> values() const {
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
};

inline long parse_long(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError(flag + ": not an integer: '" + text + "'");
  return v;
}

inline Range parse_range(const std::string& text, const std::string& flag) {
  auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_long(text, flag);
  } else {
    r.lo = parse_long(text.substr(0, dots), flag);
    r.hi = parse_long(text.substr(dots + 2), flag);
  }
  if (r.lo > r.hi) throw UsageError(flag + ": empty range '" + text + "'");
  return r;
}

inline std::vector<unsigned> parse_list(const std::string& text, const std::string& flag) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    long v = parse_long(item, flag);
    if (v < 0) throw UsageError(flag + ": entries must be nonnegative");
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

/// Values of a range flag, or `fallback` when the flag was not given; every
/// value must lie in [min, max].
inline std::vector<long> range_values(const std::string& text, const std::string& flag, Range fallback, long min,
                                      long max) {
  const Range r = text.empty() ? fallback : parse_range(text, flag);
  if (r.lo < min || r.hi > max)
    throw UsageError(flag + ": values must lie in " + std::to_string(min) + ".." + std::to_string(max));
  return r.values();
}

inline std::vector<unsigned> to_unsigned(const std::vector<long>& v) { return {v.begin(), v.end()}; }

struct Options {
  std::string n, u, m, degree, k, alpha, beta, theta, size, ks, train, test;
  std::string format = "json";
  unsigned threads = default_thread_count();
  std::uint64_t seed = 20240611;
  unsigned samples = 10;
  bool timing = false;
};

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("--format: expected json, csv or text");
}

inline std::uint64_t effective_seed(const Options& o) {
  if (const char* env = std::getenv("SHIFTED_HOOKS_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("SHIFTED_HOOKS_SEED: not an unsigned integer");
  }
  return o.seed;
}

using Case = std::function<VerificationReport()>;

inline const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"eigen", "leibniz", "lemma2.1", "cor2.2", "remark2.3", "prop3.1",
                                                 "cor3.2", "thm1.1", "lemma4.1", "cor4.2", "lemma5.1", "all"};
  return names;
}

/// Expands one identity over the Cartesian product of its ranges. All
/// validation happens here, before any verifier runs.
inline void build_cases(const std::string& identity, const Options& o, std::vector<Case>& cases) {
  if (identity == "eigen") {
    for (auto theta : to_unsigned(range_values(o.theta, "--theta", {1, 1}, 1, 3)))
      for (auto n : to_unsigned(range_values(o.n, "--n", {1, 3}, 1, 4)))
        for (auto s : to_unsigned(range_values(o.size, "--size", {0, 4}, 0, 5)))
          for (const auto& lambda : enumerate_partitions(s, n))
            cases.push_back([=] { return check_eigen(n, lambda, theta); });
  } else if (identity == "leibniz") {
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 4}, 1, 6)))
      cases.push_back([=] { return check_leibniz_step(n); });
  } else if (identity == "lemma2.1") {
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 4}, 1, 5)))
      cases.push_back([=] { return check_lemma_2_1(n); });
  } else if (identity == "cor2.2") {
    const auto us = to_unsigned(range_values(o.u, "--u", {0, 3}, 0, 1000));
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 6}, 1, 12)))
      for (const auto& lambda : enumerate_partitions(n))
        for (auto u : us) cases.push_back([=] { return check_cor_2_2(lambda, u); });
  } else if (identity == "remark2.3") {
    cases.push_back([] { return check_remark_2_3(); });
  } else if (identity == "prop3.1") {
    std::mt19937_64 rng(effective_seed(o));
    std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
    for (auto n : to_unsigned(range_values(o.n, "--n", {2, 6}, 1, 6))) {
      if (n <= 3) cases.push_back([=] { return check_prop_3_1(n); });
      for (unsigned s = 0; s < o.samples; ++s) {
        std::vector<Rational> z;
        for (unsigned i = 0; i < n; ++i) z.push_back(make_rational(num(rng), den(rng)));
        cases.push_back([=] { return check_prop_3_1(n, z); });
      }
    }
  } else if (identity == "cor3.2") {
    const auto us = range_values(o.u, "--u", {0, 2}, -1000, 1000);
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 6}, 1, 9)))
      for (const auto& lambda : enumerate_partitions(n)) cases.push_back([=] { return check_cor_3_2(lambda, us); });
  } else if (identity == "thm1.1") {
    const auto ms = to_unsigned(range_values(o.m, "--m", {1, 2}, 1, 3));
    const auto ds = to_unsigned(range_values(o.degree, "--degree", {3, 3}, 0, 6));
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 2}, 1, 3)))
      for (auto m : ms)
        for (auto d : ds) cases.push_back([=] { return check_thm_1_1(n, m, d); });
  } else if (identity == "lemma4.1") {
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 3}, 1, 4))) {
      const auto ks = to_unsigned(range_values(o.k, "--k", {0, static_cast<long>(n)}, 0, 4));
      for (auto k : ks)
        if (k <= n) cases.push_back([=] { return check_lemma_4_1(n, k); });
    }
  } else if (identity == "cor4.2") {
    const auto betas = to_unsigned(range_values(o.beta, "--beta", {0, 4}, 0, 6));
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 10}, 1, 14)))
      for (auto beta : betas) cases.push_back([=] { return check_cor_4_2(n, beta); });
  } else if (identity == "lemma5.1") {
    const auto alphas = to_unsigned(range_values(o.alpha, "--alpha", {0, 3}, 0, 14));
    const auto betas = to_unsigned(range_values(o.beta, "--beta", {0, 3}, 0, 14));
    for (auto n : to_unsigned(range_values(o.n, "--n", {1, 6}, 1, 14)))
      for (auto a : alphas)
        for (auto b : betas)
          if (a <= n && b <= n) cases.push_back([=] { return check_lemma_5_1(n, a, b); });
  } else if (identity == "all") {
    // Every identity at its default ranges; only the global flags carry over.
    Options defaults;
    defaults.format = o.format;
    defaults.threads = o.threads;
    defaults.seed = o.seed;
    defaults.samples = o.samples;
    defaults.timing = o.timing;
    for (const auto& name : identity_names())
      if (name != "all") build_cases(name, defaults, cases);
  } else {
    throw UsageError("unknown identity '" + identity + "'");
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string flat_params(const Json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out += ";";
    out += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return out;
}

inline void write_reports(const std::vector<VerificationReport>& reports, Format format, bool timing,
                          std::ostream& out) {
  switch (format) {
    case Format::Json:
      for (const auto& r : reports) out << to_json(r, timing).dump() << "\n";
      break;
    case Format::Csv:
      out << "identity,params,status,witness_at,witness_lhs,witness_rhs,elapsed_ms\n";
      for (const auto& r : reports) {
        out << csv_field(r.identity) << "," << csv_field(flat_params(r.params)) << "," << status_name(r.status) << ",";
        if (r.witness)
          out << csv_field(r.witness->location) << "," << csv_field(r.witness->lhs) << "," << csv_field(r.witness->rhs);
        else
          out << ",,";
        out << ",";
        if (timing) out << r.elapsed_ms;
        out << "\n";
      }
      break;
    case Format::Text: {
      std::size_t failed = 0;
      for (const auto& r : reports) {
        out << status_name(r.status) << "  " << r.identity << "  " << flat_params(r.params);
        for (auto it = r.values.begin(); it != r.values.end(); ++it)
          out << "  " << it.key() << "=" << it->get<std::string>();
        if (timing) out << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)";
        out << "\n";
        if (r.witness) {
          ++failed;
          out << "    at " << r.witness->location << ": lhs " << r.witness->lhs << ", rhs " << r.witness->rhs << "\n";
        }
      }
      out << reports.size() << " checks, " << failed << " failed\n";
      break;
    }
  }
}

inline int run_verify(const std::string& identity, const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  std::vector<Case> cases;
  build_cases(identity, o, cases);
  auto reports = parallel_map(cases.size(), o.threads, [&](std::size_t i) {
    try {
      return cases[i]();
    } catch (const std::exception& e) {
      VerificationReport r;
      r.identity = identity;
      r.status = Status::Fail;
      r.witness = Witness{"exception", e.what(), ""};
      return r;
    }
  });
  write_reports(reports, format, o.timing, out);
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

struct Row {
  Json fields;  // ordered; the last field is the exact value
};

inline void write_rows(const std::vector<Row>& rows, Format format, std::ostream& out) {
  if (format == Format::Json) {
    for (const auto& r : rows) out << r.fields.dump() << "\n";
    return;
  }
  auto cell = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (format == Format::Csv && !rows.empty()) {
    std::string header;
    for (auto it = rows.front().fields.begin(); it != rows.front().fields.end(); ++it)
      header += (header.empty() ? "" : ",") + it.key();
    out << header << "\n";
  }
  for (const auto& r : rows) {
    std::string line;
    for (auto it = r.fields.begin(); it != r.fields.end(); ++it) {
      if (format == Format::Csv)
        line += (line.empty() ? "" : ",") + csv_field(cell(*it));
      else
        line += (line.empty() ? "" : "  ") + it.key() + "=" + cell(*it);
    }
    out << line << "\n";
  }
}

inline std::vector<Row> stan_rows(const Options& o, unsigned threads) {
  if (o.ks.empty()) throw UsageError("--ks is required");
  const auto ks = parse_list(o.ks, "--ks");
  const auto ns = to_unsigned(range_values(o.n, "--n", {1, 8}, 1, 20));
  return parallel_map(ns.size(), threads, [&](std::size_t i) {
    Row r;
    r.fields["n"] = ns[i];
    r.fields["ks"] = ks;
    r.fields["value"] = to_fraction_string(stan_lhs(ns[i], ks));
    return r;
  });
}

inline int run_table(const std::string& kind, const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  std::vector<Row> rows;
  if (kind == "alambda") {
    const auto ns = to_unsigned(range_values(o.n, "--n", {1, 4}, 1, 20));
    const auto us = range_values(o.u, "--u", {1, 1}, -1000, 1000);
    for (auto n : ns)
      for (const auto& lambda : enumerate_partitions(n)) {
        const UPoly a = a_lambda_poly(lambda, n);
        for (long u : us) {
          Row r;
          r.fields["n"] = n;
          r.fields["lambda"] = to_json(lambda);
          r.fields["u"] = u;
          r.fields["value"] = to_fraction_string(a(Rational(u)));
          rows.push_back(std::move(r));
        }
      }
  } else if (kind == "stan") {
    rows = stan_rows(o, o.threads);
  } else {
    throw UsageError("unknown table '" + kind + "' (expected alambda or stan)");
  }
  write_rows(rows, format, out);
  return 0;
}

inline int run_stan(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  write_rows(stan_rows(o, o.threads), format, out);
  return 0;
}

inline int run_poly(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.beta.empty()) throw UsageError("--beta is required");
  std::vector<Row> rows;
  for (auto beta : to_unsigned(range_values(o.beta, "--beta", {0, 0}, 0, 6))) {
    const UPoly p = ebeta_closed_poly(beta);
    Row r;
    r.fields["beta"] = beta;
    r.fields["degree"] = p.degree();
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
    r.fields["binomial_form"] = binomial_combination_string(binomial_combination(p, beta), beta);
    r.fields["coefficients"] = std::move(coeffs);
    r.fields["polynomial"] = p.to_string("n");
    rows.push_back(std::move(r));
  }
  write_rows(rows, format, out);
  return 0;
}

inline int run_fit(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.ks.empty() || o.train.empty() || o.test.empty()) throw UsageError("--ks, --train and --test are required");
  const auto ks = parse_list(o.ks, "--ks");
  const auto train = to_unsigned(range_values(o.train, "--train", {}, 1, 40));
  const auto test = to_unsigned(range_values(o.test, "--test", {}, 1, 40));
  FitResult fit;
  try {
    fit = fit_polynomiality(ks, train, test);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Json j = to_json(fit);
  if (format == Format::Json) {
    out << j.dump() << "\n";
  } else {
    Row r;
    r.fields["ks"] = o.ks;
    r.fields["degree"] = fit.degree;
    r.fields["train"] = o.train;
    r.fields["test"] = o.test;
    r.fields["status"] = status_name(fit.status);
    r.fields["polynomial"] = fit.polynomial.to_string("n");
    write_rows({r}, format, out);
    if (fit.witness) out << "at " << fit.witness->location << ": predicted " << fit.witness->lhs << ", actual "
                         << fit.witness->rhs << "\n";
  }
  return fit.passed() ? 0 : 1;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of hook-length, shifted-part and Schur-operator identities"};
  app.require_subcommand(1);
  Options o;
  std::string identity, kind;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto range = [&](CLI::App* sub, const char* flag, std::string& target, const char* help) {
    sub->add_option(flag, target, help);
  };

  auto* verify = app.add_subcommand("verify", "run identity verifiers over parameter ranges");
  verify->add_option("identity", identity, "identity name")->required()->check(CLI::IsMember(identity_names()));
  range(verify, "--n", o.n, "range lo..hi");
  range(verify, "--u", o.u, "range lo..hi");
  range(verify, "--m", o.m, "range lo..hi (thm1.1)");
  range(verify, "--degree", o.degree, "truncation degree D (thm1.1)");
  range(verify, "--k", o.k, "range lo..hi (lemma4.1)");
  range(verify, "--alpha", o.alpha, "range lo..hi (lemma5.1)");
  range(verify, "--beta", o.beta, "range lo..hi (cor4.2, lemma5.1)");
  range(verify, "--theta", o.theta, "range lo..hi (eigen)");
  range(verify, "--size", o.size, "partition sizes lo..hi (eigen)");
  verify->add_option("--seed", o.seed, "seed for random prop3.1 points");
  verify->add_option("--samples", o.samples, "random prop3.1 points per n");
  verify->add_flag("--timing", o.timing, "report elapsed_ms");
  common(verify);

  auto* table = app.add_subcommand("table", "tabulate exact values");
  table->add_option("kind", kind, "alambda or stan")->required()->check(CLI::IsMember({"alambda", "stan"}));
  range(table, "--n", o.n, "range lo..hi");
  range(table, "--u", o.u, "range lo..hi");
  range(table, "--ks", o.ks, "comma-separated k_j");
  common(table);

  auto* poly = app.add_subcommand("poly", "closed-form polynomial in n for e_beta of shifted parts");
  range(poly, "--beta", o.beta, "range lo..hi");
  common(poly);

  auto* stan = app.add_subcommand("stan", "brute-force (1/n!) sum f^2 prod e_k(shifted parts)");
  range(stan, "--ks", o.ks, "comma-separated k_j");
  range(stan, "--n", o.n, "range lo..hi");
  common(stan);

  auto* fit = app.add_subcommand("fit", "interpolate in n and predict held-out values");
  range(fit, "--ks", o.ks, "comma-separated k_j");
  range(fit, "--train", o.train, "range lo..hi");
  range(fit, "--test", o.test, "range lo..hi");
  common(fit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(identity, o, out);
    if (*table) return run_table(kind, o, out);
    if (*poly) return run_poly(o, out);
    if (*stan) return run_stan(o, out);
    if (*fit) return run_fit(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace shifted_hooks::cli
