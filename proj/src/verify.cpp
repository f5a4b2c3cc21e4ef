#include "saxl/verify.hpp"

#include "parallel.hpp"
#include "saxl/characters.hpp"
#include "saxl/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace saxl {

std::string status_name(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::conjecture_holds: return "conjecture-holds";
    case Status::counterexample_to_conjecture: return "counterexample-to-conjecture";
  }
  return "fail";
}

nlohmann::ordered_json to_json(const VerificationReport& report,
                               bool include_timing) {
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
  for (const auto& [lambda, m] : report.witnesses) {
    witnesses.push_back({{"partition", lambda.parts()}, {"multiplicity", to_decimal(m)}});
  }
  nlohmann::ordered_json counterexamples = nlohmann::ordered_json::array();
  for (const auto& c : report.counterexamples) {
    counterexamples.push_back({{"partition", c.partition.parts()}, {"detail", c.detail}});
  }
  nlohmann::ordered_json out;
  out["claim"] = report.claim;
  out["params"] = report.params;
  out["status"] = status_name(report.status);
  out["summary"] = report.summary;
  out["witnesses"] = witnesses;
  out["counterexamples"] = counterexamples;
  out["elapsed_ms"] = include_timing ? report.elapsed.count() : 0;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;
using Multiplicities = std::map<Partition, BigInt, CanonicalOrder>;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

nlohmann::ordered_json params_mu(const Partition& mu) {
  return {{"mu", mu.parts()}};
}

nlohmann::ordered_json params_n(std::uint32_t n) { return {{"n", n}}; }

// A caller's store, or a private one for the duration of a call.
class Tables {
 public:
  explicit Tables(const VerifyOptions& options)
      : local_(TableStore::Options{std::nullopt, std::max(1u, options.jobs)}),
        store_(options.store ? options.store : &local_) {}

  const CharacterTable& operator()(std::uint64_t n) {
    return store_->table(static_cast<std::uint32_t>(n));
  }
  TableStore& store() { return *store_; }

 private:
  TableStore local_;
  TableStore* store_;
};

void require_size_gate(std::uint64_t size, std::uint64_t gate,
                       const VerifyOptions& options, const std::string& claim) {
  if (size > kMaxCharacterDegree) {
    throw GateError(claim + ": |mu| = " + std::to_string(size) +
                    " is beyond the character engine limit of " +
                    std::to_string(kMaxCharacterDegree));
  }
  if (size > gate && !options.long_run) {
    throw GateError(claim + ": |mu| = " + std::to_string(size) +
                    " exceeds the default gate of " + std::to_string(gate) +
                    "; rerun with --long-run");
  }
}

void require_distinct(const Partition& mu) {
  if (!has_distinct_parts(mu)) throw PartitionError("parts not distinct");
}

void finish(VerificationReport& report) {
  report.status = report.counterexamples.empty() ? Status::pass : Status::fail;
}

// <f^power, chi^lambda> for every row of `table`, where f is given by its
// values on the table's columns. Exact; throws on a non-integral result.
std::vector<BigInt> power_multiplicities(const std::vector<std::int64_t>& f,
                                         std::uint32_t power,
                                         const CharacterTable& table,
                                         unsigned jobs) {
  const ClassData classes = class_data(table.degree());
  std::vector<BigInt> weights(table.columns().size());
  for (std::size_t pos = 0; pos < weights.size(); ++pos) {
    weights[pos] = classes.class_size(table.columns()[pos]) *
                   boost::multiprecision::pow(BigInt(f[pos]), power);
  }
  std::vector<BigInt> out(table.rows());
  detail::parallel_for(
      table.rows(), jobs, [] { return 0; },
      [&](int, std::size_t r) {
        BigInt total = 0;
        const auto row = table.row(r);
        for (std::size_t pos = 0; pos < weights.size(); ++pos) {
          if (row[pos] != 0 && weights[pos] != 0) total += weights[pos] * row[pos];
        }
        BigInt q, rem;
        boost::multiprecision::divide_qr(total, classes.group_order, q, rem);
        if (rem != 0) {
          throw std::logic_error("non-integral multiplicity for " +
                                 to_string(table.labels()[r]));
        }
        out[r] = q;
      });
  return out;
}

struct StaircasePowers {
  std::uint64_t degree = 0;
  std::size_t classes_used = 0;
  Multiplicities multiplicities;
  BigInt dimension;
  bool dimension_check = false;
};

// Multiplicities of every irreducible in (chi^{rho_n})^power, using only
// the classes where chi^{rho_n} is nonzero.
StaircasePowers staircase_powers(std::uint32_t n, std::uint32_t power,
                                 const VerifyOptions& options,
                                 const std::string& claim) {
  if (n > kLongRunCubeGate) {
    throw GateError(claim + ": n = " + std::to_string(n) +
                    " is unsupported (largest is " + std::to_string(kLongRunCubeGate) + ")");
  }
  if (n > kDefaultCubeGate && !options.long_run) {
    throw GateError(claim + ": n = " + std::to_string(n) +
                    " exceeds the default gate of " + std::to_string(kDefaultCubeGate) +
                    "; rerun with --long-run");
  }
  const Partition rho = staircase(n);
  const auto big_n = static_cast<std::uint32_t>(rho.size());
  const unsigned jobs = std::max(1u, options.jobs);
  const auto full_row = character_row(rho, jobs);

  TableOptions masked;
  masked.jobs = jobs;
  masked.columns.emplace();
  std::vector<std::int64_t> f;
  for (std::size_t c = 0; c < full_row.size(); ++c) {
    if (full_row[c] != 0) {
      masked.columns->push_back(c);
      f.push_back(full_row[c]);
    }
  }
  const CharacterTable table = build_character_table(big_n, masked);
  const auto mults = power_multiplicities(f, power, table, jobs);

  StaircasePowers out;
  out.degree = big_n;
  out.classes_used = f.size();
  // The identity class is last in canonical order and never vanishes.
  const std::size_t identity = table.columns().size() - 1;
  out.dimension = BigInt(f[identity]);
  BigInt weighted = 0;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    out.multiplicities.emplace(table.labels()[r], mults[r]);
    weighted += mults[r] * table.at(r, identity);
  }
  out.dimension_check = weighted == boost::multiprecision::pow(out.dimension, power);
  return out;
}

}  // namespace

VerificationReport verify_luo_sellke(const Partition& mu,
                                     const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "luo-sellke";
  report.params = params_mu(mu);
  require_distinct(mu);
  require_size_gate(mu.size(), kDefaultSingleGate, options, report.claim);
  Tables tables(options);
  const CharacterTable& table = tables(mu.size());
  std::size_t checked = 0;
  for (const auto& nu : table.labels()) {
    if (!dominates(nu, mu)) continue;
    ++checked;
    const BigInt g = kronecker_coefficient(mu, mu, nu, table);
    report.witnesses.emplace(nu, g);
    if (g < 1) report.counterexamples.push_back({nu, "g(mu,mu,nu) = " + to_decimal(g)});
  }
  report.summary = {{"N", mu.size()}, {"checked", checked}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_tensor_summand(const Partition& mu,
                                         const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "tensor-summand";
  report.params = params_mu(mu);
  require_size_gate(mu.size(), kDefaultSingleGate, options, report.claim);
  Tables tables(options);
  const SchurExpansion d =
      internal_product_hs(mu, tables(mu.size())) - h_to_schur(cee_operator(mu));
  for (const auto& [lambda, c] : d.terms()) {
    report.witnesses.emplace(lambda, c);
    if (c < 0) {
      report.counterexamples.push_back({lambda, "negative coefficient " + to_decimal(c)});
    }
  }
  report.summary = {{"N", mu.size()},
                    {"cee", cee_operator(mu).parts()},
                    {"difference_terms", d.terms().size()},
                    {"equality", d.is_zero()}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_cor_constituents(const Partition& mu,
                                           const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "cor-constituents";
  report.params = params_mu(mu);
  require_distinct(mu);
  require_size_gate(mu.size(), kDefaultSingleGate, options, report.claim);
  Tables tables(options);
  const CharacterTable& table = tables(mu.size());
  const auto chi = table.row(table.row_index(mu));
  const auto mults = power_multiplicities({chi.begin(), chi.end()}, 3, table,
                                          std::max(1u, options.jobs));
  const Partition floor = cee_operator(mu);
  std::size_t checked = 0;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const Partition& lambda = table.labels()[r];
    if (!dominates(lambda, floor)) continue;
    ++checked;
    report.witnesses.emplace(lambda, mults[r]);
    if (mults[r] < 1) {
      report.counterexamples.push_back({lambda, "cube multiplicity " + to_decimal(mults[r])});
    }
  }
  report.summary = {{"N", mu.size()}, {"cee", floor.parts()}, {"checked", checked}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_saxl_cube(std::uint32_t n, const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "saxl-cube";
  report.params = params_n(n);
  const auto powers = staircase_powers(n, 3, options, report.claim);
  report.witnesses = powers.multiplicities;
  for (const auto& [lambda, m] : powers.multiplicities) {
    if (m < 1) report.counterexamples.push_back({lambda, "cube multiplicity " + to_decimal(m)});
  }
  if (!powers.dimension_check) {
    report.counterexamples.push_back({staircase(n), "dimension check failed"});
  }
  report.summary = {{"N", powers.degree},
                    {"irreducibles", powers.multiplicities.size()},
                    {"classes_used", powers.classes_used},
                    {"dimension", to_decimal(powers.dimension)},
                    {"dimension_check", powers.dimension_check}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

VerificationReport conjecture_report(std::string claim, nlohmann::ordered_json params,
                                     const Multiplicities& multiplicities) {
  VerificationReport report;
  report.claim = std::move(claim);
  report.params = std::move(params);
  report.witnesses = multiplicities;
  for (const auto& [lambda, m] : multiplicities) {
    if (m < 1) report.counterexamples.push_back({lambda, "square multiplicity " + to_decimal(m)});
  }
  report.status = report.counterexamples.empty() ? Status::conjecture_holds
                                                 : Status::counterexample_to_conjecture;
  return report;
}

VerificationReport verify_saxl_square(std::uint32_t n, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto powers = staircase_powers(n, 2, options, "saxl-square");
  VerificationReport report =
      conjecture_report("saxl-square", params_n(n), powers.multiplicities);
  report.summary = {{"N", powers.degree},
                    {"irreducibles", powers.multiplicities.size()},
                    {"classes_used", powers.classes_used},
                    {"dimension", to_decimal(powers.dimension)},
                    {"dimension_check", powers.dimension_check}};
  if (!powers.dimension_check) {
    throw std::logic_error("square multiplicities fail the dimension check");
  }
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_staircase_two_core(std::uint32_t n) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "staircase-two-core";
  report.params = params_n(n);
  const Partition rho = staircase(n);
  const auto hooks = hook_lengths(rho);
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < hooks.size(); ++i) {
    for (std::size_t j = 0; j < hooks[i].size(); ++j) {
      ++checked;
      if (hooks[i][j] % 2 == 0) {
        report.counterexamples.push_back(
            {rho, "even hook length " + std::to_string(hooks[i][j]) + " at (" +
                      std::to_string(i) + "," + std::to_string(j) + ")"});
      }
    }
  }
  report.summary = {{"N", rho.size()}, {"hooks_checked", checked}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_two_regular_dominance(std::uint32_t n,
                                                const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "two-regular-dominance";
  report.params = params_n(n);
  const std::uint32_t gate = options.long_run ? kLongRunDominanceGate : kDefaultDominanceGate;
  if (n > gate) {
    throw GateError("two-regular-dominance: n = " + std::to_string(n) + " exceeds the " +
                    (options.long_run ? std::string("enumeration limit") : "default gate") +
                    " of " + std::to_string(gate) +
                    (options.long_run ? "" : "; rerun with --long-run"));
  }
  const Partition rho = staircase(n);
  const auto distinct = enumerate_distinct_partitions(static_cast<unsigned>(rho.size()));
  for (const auto& lambda : distinct) {
    if (!dominates(lambda, rho)) {
      report.counterexamples.push_back({lambda, "does not dominate the staircase"});
    }
  }
  report.summary = {{"N", rho.size()}, {"distinct_partitions_checked", distinct.size()}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_two_modular_shadows(std::uint32_t n,
                                              const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto core = verify_staircase_two_core(n);
  const auto regular = verify_two_regular_dominance(n, options);
  VerificationReport report;
  report.claim = "two-modular";
  report.params = params_n(n);
  report.counterexamples = core.counterexamples;
  report.counterexamples.insert(report.counterexamples.end(),
                                regular.counterexamples.begin(),
                                regular.counterexamples.end());
  report.summary = {{"N", core.summary["N"]},
                    {"two_core", core.ok()},
                    {"hooks_checked", core.summary["hooks_checked"]},
                    {"two_regular_dominance", regular.ok()},
                    {"distinct_partitions_checked",
                     regular.summary["distinct_partitions_checked"]}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_macdonald_identity(const Partition& mu,
                                             const VerifyOptions& options) {
  const auto start = Clock::now();
  VerificationReport report;
  report.claim = "macdonald";
  report.params = params_mu(mu);
  NestedFamilyOptions nested;
  nested.max_size = kDefaultSweepGate;
  nested.override_gate = options.long_run;
  require_size_gate(mu.size(), kDefaultSweepGate, options, report.claim);
  const SchurExpansion chains = nested_family_expansion(mu, nested);
  Tables tables(options);
  const SchurExpansion internal = internal_product_hs(mu, tables(mu.size()));
  for (const auto& [lambda, c] : internal.terms()) report.witnesses.emplace(lambda, c);
  const SchurExpansion d = chains - internal;
  for (const auto& [lambda, c] : d.terms()) {
    report.counterexamples.push_back(
        {lambda, "nested " + to_decimal(chains.coefficient(lambda)) + ", internal " +
                     to_decimal(internal.coefficient(lambda))});
  }
  report.summary = {{"N", mu.size()}, {"terms", internal.terms().size()}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

namespace {

using Single = std::function<VerificationReport(const Partition&, const VerifyOptions&)>;
using Number = std::function<BigInt(const VerificationReport&)>;

BigInt least_witness(const VerificationReport& r) {
  std::optional<BigInt> least;
  for (const auto& [lambda, m] : r.witnesses) {
    if (!least || m < *least) least = m;
  }
  return least.value_or(0);
}

VerificationReport sweep(const std::string& claim, std::uint64_t up_to,
                         bool distinct_only, const VerifyOptions& options,
                         const Single& single, const Number& number) {
  const auto start = Clock::now();
  require_size_gate(up_to, kDefaultSweepGate, options, claim);
  Tables tables(options);
  std::vector<Partition> cases;
  for (std::uint64_t m = 1; m <= up_to; ++m) {
    tables(m);
    const auto all = distinct_only ? enumerate_distinct_partitions(static_cast<unsigned>(m))
                                   : enumerate_partitions(static_cast<unsigned>(m));
    cases.insert(cases.end(), all.begin(), all.end());
  }
  VerifyOptions inner = options;
  inner.store = &tables.store();
  inner.jobs = 1;
  std::vector<VerificationReport> results(cases.size());
  detail::parallel_for(
      cases.size(), std::max(1u, options.jobs), [] { return 0; },
      [&](int, std::size_t i) { results[i] = single(cases[i], inner); });

  VerificationReport report;
  report.claim = claim;
  report.params = {{"up_to", up_to}};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    report.witnesses.emplace(cases[i], number(results[i]));
    if (!results[i].ok()) {
      const auto& first = results[i].counterexamples.front();
      report.counterexamples.push_back(
          {cases[i], to_string(first.partition) + ": " + first.detail});
    }
  }
  report.summary = {{"cases", cases.size()}};
  finish(report);
  report.elapsed = since(start);
  return report;
}

}  // namespace

VerificationReport verify_luo_sellke_sweep(std::uint64_t up_to,
                                           const VerifyOptions& options) {
  return sweep("luo-sellke-sweep", up_to, true, options, verify_luo_sellke,
               least_witness);
}

VerificationReport verify_tensor_summand_sweep(std::uint64_t up_to,
                                               const VerifyOptions& options) {
  return sweep("tensor-summand-sweep", up_to, false, options, verify_tensor_summand,
               [](const VerificationReport& r) {
                 BigInt total = 0;
                 for (const auto& [lambda, c] : r.witnesses) total += c;
                 return total;
               });
}

VerificationReport verify_cor_constituents_sweep(std::uint64_t up_to,
                                                 const VerifyOptions& options) {
  return sweep("cor-constituents-sweep", up_to, true, options, verify_cor_constituents,
               least_witness);
}

VerificationReport verify_macdonald_sweep(std::uint64_t up_to,
                                          const VerifyOptions& options) {
  return sweep("macdonald-sweep", up_to, false, options, verify_macdonald_identity,
               [](const VerificationReport& r) { return BigInt(r.witnesses.size()); });
}

}  // namespace saxl
