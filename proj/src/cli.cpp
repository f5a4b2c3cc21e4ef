#include "saxl/cli.hpp"

#include "saxl/symfunc.hpp"
#include "saxl/table_store.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace saxl {

int exit_code(Status status) {
  return status == Status::fail ? 1 : 0;
}

namespace {

enum class Format { table, json, csv };

struct CliConfig {
  std::string cache_dir;
  unsigned jobs = 1;
  std::string format = "table";
  bool long_run = false;
  bool no_timing = false;

  Format output() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::table;
  }
};

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("ACCEPTED_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "saxl";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "saxl";
  }
  return ".saxl-cache";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_json(std::ostream& out, const nlohmann::ordered_json& j) {
  out << j.dump() << '\n';
}

class Session {
 public:
  Session(const CliConfig& config, std::ostream& out, std::ostream& err)
      : config_(config),
        out_(out),
        err_(err),
        store_(TableStore::Options{config.cache_dir.empty()
                                       ? default_cache_dir()
                                       : std::filesystem::path(config.cache_dir),
                                   config.jobs}) {}

  const CharacterTable& table(std::uint64_t n) {
    if (n > kMaxCharacterDegree) {
      throw PartitionError("character tables are limited to N <= " +
                           std::to_string(kMaxCharacterDegree));
    }
    const auto& t = store_.table(static_cast<std::uint32_t>(n));
    const auto path = ctab_path(*store_.options().cache_dir, static_cast<std::uint32_t>(n));
    switch (store_.last_source()) {
      case TableStore::Source::disk: err_ << "cache hit: " << path.string() << '\n'; break;
      case TableStore::Source::built: err_ << "cache miss, stored: " << path.string() << '\n'; break;
      case TableStore::Source::memory: break;
    }
    return t;
  }

  VerifyOptions verify_options() {
    VerifyOptions o;
    o.store = &store_;
    o.jobs = config_.jobs;
    o.long_run = config_.long_run;
    return o;
  }

  void expansion(const SchurExpansion& v) {
    switch (config_.output()) {
      case Format::table: out_ << to_lines(v); break;
      case Format::json: print_json(out_, to_json(v)); break;
      case Format::csv:
        out_ << "coefficient,partition\n";
        for (const auto& [lambda, c] : v.terms()) {
          out_ << to_decimal(c) << ',' << csv_field(to_string(lambda)) << '\n';
        }
        break;
    }
  }

  void report(const VerificationReport& r) {
    switch (config_.output()) {
      case Format::json: print_json(out_, to_json(r, !config_.no_timing)); break;
      case Format::csv:
        out_ << "kind,partition,value\n";
        out_ << "status,," << status_name(r.status) << '\n';
        for (const auto& [lambda, m] : r.witnesses) {
          out_ << "witness," << csv_field(to_string(lambda)) << ',' << to_decimal(m) << '\n';
        }
        for (const auto& c : r.counterexamples) {
          out_ << "counterexample," << csv_field(to_string(c.partition)) << ','
               << csv_field(c.detail) << '\n';
        }
        break;
      case Format::table:
        out_ << "claim: " << r.claim << '\n'
             << "params: " << r.params.dump() << '\n'
             << "status: " << status_name(r.status) << '\n'
             << "summary: " << r.summary.dump() << '\n'
             << "witnesses: " << r.witnesses.size() << '\n';
        for (const auto& [lambda, m] : r.witnesses) {
          out_ << "  " << to_string(lambda) << ' ' << to_decimal(m) << '\n';
        }
        out_ << "counterexamples: " << r.counterexamples.size() << '\n';
        for (const auto& c : r.counterexamples) {
          out_ << "  " << to_string(c.partition) << ' ' << c.detail << '\n';
        }
        out_ << "elapsed_ms: " << (config_.no_timing ? 0 : r.elapsed.count()) << '\n';
        break;
    }
  }

  const CliConfig& config() const { return config_; }
  std::ostream& out() { return out_; }

 private:
  const CliConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
  TableStore store_;
};

int cmd_kronecker(Session& s, const std::string& a, const std::string& b,
                  const std::optional<std::string>& c) {
  const Partition lambda = parse_partition(a);
  const Partition mu = parse_partition(b);
  if (lambda.size() != mu.size()) {
    throw PartitionError("size mismatch: |" + a + "| = " + std::to_string(lambda.size()) +
                         ", |" + b + "| = " + std::to_string(mu.size()));
  }
  if (c) {
    const Partition nu = parse_partition(*c);
    if (nu.size() != lambda.size()) {
      throw PartitionError("size mismatch: |" + *c + "| = " + std::to_string(nu.size()) +
                           ", expected " + std::to_string(lambda.size()));
    }
    const BigInt g = kronecker_coefficient(lambda, mu, nu, s.table(lambda.size()));
    switch (s.config().output()) {
      case Format::table: s.out() << to_decimal(g) << '\n'; break;
      case Format::json:
        print_json(s.out(), {{"lambda", lambda.parts()},
                             {"mu", mu.parts()},
                             {"nu", nu.parts()},
                             {"coefficient", to_decimal(g)}});
        break;
      case Format::csv:
        s.out() << "lambda,mu,nu,coefficient\n"
                << csv_field(to_string(lambda)) << ',' << csv_field(to_string(mu)) << ','
                << csv_field(to_string(nu)) << ',' << to_decimal(g) << '\n';
        break;
    }
    return 0;
  }
  s.expansion(kronecker_product(SchurExpansion::schur(lambda), SchurExpansion::schur(mu),
                                s.table(lambda.size())));
  return 0;
}

int cmd_cee(Session& s, const std::string& literal) {
  const Partition mu = parse_partition(literal);
  const Partition c = cee_operator(mu);
  switch (s.config().output()) {
    case Format::table: s.out() << to_string(c) << '\n'; break;
    case Format::json: print_json(s.out(), {{"mu", mu.parts()}, {"cee", c.parts()}}); break;
    case Format::csv:
      s.out() << "mu,cee\n" << csv_field(to_string(mu)) << ',' << csv_field(to_string(c)) << '\n';
      break;
  }
  return 0;
}

int cmd_dominance(Session& s, const std::string& a, const std::string& b) {
  const Partition lambda = parse_partition(a);
  const Partition mu = parse_partition(b);
  const bool ge = dominates(lambda, mu);
  const bool le = dominates(mu, lambda);
  const char* relation = ge && le ? "equal" : ge ? "dominates" : le ? "dominated" : "incomparable";
  switch (s.config().output()) {
    case Format::table: s.out() << relation << '\n'; break;
    case Format::json:
      print_json(s.out(), {{"lambda", lambda.parts()},
                           {"mu", mu.parts()},
                           {"relation", relation},
                           {"dominates", ge}});
      break;
    case Format::csv:
      s.out() << "lambda,mu,relation\n"
              << csv_field(to_string(lambda)) << ',' << csv_field(to_string(mu)) << ','
              << relation << '\n';
      break;
  }
  return 0;
}

int cmd_partitions(Session& s, std::uint32_t n, bool distinct,
                   const std::optional<std::string>& floor_literal) {
  if (n > 80) throw PartitionError("partitions: N <= 80 supported");
  std::optional<Partition> floor;
  if (floor_literal) {
    floor = parse_partition(*floor_literal);
    if (floor->size() != n) throw PartitionError("--dominating partition must have size N");
  }
  std::vector<Partition> list;
  for (const auto& p : distinct ? enumerate_distinct_partitions(n) : enumerate_partitions(n)) {
    if (!floor || dominates(p, *floor)) list.push_back(p);
  }
  switch (s.config().output()) {
    case Format::table:
      for (const auto& p : list) s.out() << to_string(p) << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& p : list) arr.push_back(p.parts());
      print_json(s.out(), {{"n", n}, {"count", list.size()}, {"partitions", arr}});
      break;
    }
    case Format::csv:
      s.out() << "partition\n";
      for (const auto& p : list) s.out() << csv_field(to_string(p)) << '\n';
      break;
  }
  return 0;
}

void print_row_values(std::ostream& out, std::span<const std::int64_t> row, char sep) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c) out << sep;
    out << row[c];
  }
  out << '\n';
}

int cmd_chartable(Session& s, std::uint32_t n, const std::optional<std::string>& row_literal) {
  const CharacterTable& t = s.table(n);
  std::vector<std::size_t> rows;
  if (row_literal) {
    const Partition lambda = parse_partition(*row_literal);
    if (lambda.size() != n) {
      throw PartitionError("--row " + *row_literal + " is not a partition of " + std::to_string(n));
    }
    rows.push_back(t.row_index(lambda));
  } else {
    for (std::size_t r = 0; r < t.rows(); ++r) rows.push_back(r);
  }
  switch (s.config().output()) {
    case Format::table:
      for (auto r : rows) print_row_values(s.out(), t.row(r), ' ');
      break;
    case Format::json: {
      nlohmann::ordered_json classes = nlohmann::ordered_json::array();
      for (const auto& c : t.labels()) classes.push_back(c.parts());
      nlohmann::ordered_json body = nlohmann::ordered_json::array();
      for (auto r : rows) {
        const auto values = t.row(r);
        body.push_back({{"partition", t.labels()[r].parts()},
                        {"values", std::vector<std::int64_t>(values.begin(), values.end())}});
      }
      print_json(s.out(), {{"N", n}, {"classes", classes}, {"rows", body}});
      break;
    }
    case Format::csv:
      s.out() << "partition";
      for (const auto& c : t.labels()) s.out() << ',' << csv_field(to_string(c));
      s.out() << '\n';
      for (auto r : rows) {
        s.out() << csv_field(to_string(t.labels()[r])) << ',';
        print_row_values(s.out(), t.row(r), ',');
      }
      break;
  }
  return 0;
}

struct VerifyArgs {
  std::string claim;
  std::optional<std::uint32_t> n;
  std::optional<std::string> mu;
  std::optional<std::uint64_t> up_to;
};

int cmd_verify(Session& s, const VerifyArgs& a) {
  const VerifyOptions options = s.verify_options();
  auto need_n = [&]() -> std::uint32_t {
    if (!a.n) throw CLI::ValidationError("verify " + a.claim + " requires --n");
    return *a.n;
  };
  auto by_mu = [&](auto single, auto sweep) {
    if (a.mu && a.up_to) throw CLI::ValidationError("give --mu or --up-to, not both");
    if (a.mu) return single(parse_partition(*a.mu), options);
    if (a.up_to) return sweep(*a.up_to, options);
    throw CLI::ValidationError("verify " + a.claim + " requires --mu or --up-to");
  };
  VerificationReport r;
  if (a.claim == "saxl-cube") {
    r = verify_saxl_cube(need_n(), options);
  } else if (a.claim == "saxl-square") {
    r = verify_saxl_square(need_n(), options);
  } else if (a.claim == "two-modular") {
    r = verify_two_modular_shadows(need_n(), options);
  } else if (a.claim == "tensor-summand") {
    r = by_mu(verify_tensor_summand, verify_tensor_summand_sweep);
  } else if (a.claim == "luo-sellke") {
    r = by_mu(verify_luo_sellke, verify_luo_sellke_sweep);
  } else if (a.claim == "cor-constituents") {
    r = by_mu(verify_cor_constituents, verify_cor_constituents_sweep);
  } else if (a.claim == "macdonald") {
    r = by_mu(verify_macdonald_identity, verify_macdonald_sweep);
  } else {
    throw CLI::ValidationError("unknown claim " + a.claim);
  }
  s.report(r);
  return exit_code(r.status);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Exact symmetric-group characters, Kronecker products and Saxl checks", "saxl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--cache-dir", config.cache_dir,
                 "Character table cache (default: $ACCEPTED_CACHE_DIR, else ~/.cache/saxl)");
  app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--long-run", config.long_run, "Allow the expensive gated runs");
  app.add_flag("--no-timing", config.no_timing, "Write elapsed_ms as 0");

  std::string a, b;
  std::optional<std::string> c;
  auto* kron = app.add_subcommand("kronecker", "Kronecker coefficient or product s_lambda * s_mu");
  kron->add_option("lambda", a)->required();
  kron->add_option("mu", b)->required();
  kron->add_option("nu", c);

  auto* cee = app.add_subcommand("cee", "The C(mu) operator");
  cee->add_option("mu", a)->required();

  auto* dom = app.add_subcommand("dominance", "Compare two partitions in dominance order");
  dom->add_option("lambda", a)->required();
  dom->add_option("mu", b)->required();

  std::uint32_t n = 0;
  bool distinct = false;
  std::optional<std::string> floor;
  auto* parts = app.add_subcommand("partitions", "List partitions of N in canonical order");
  parts->add_option("N", n)->required();
  parts->add_flag("--distinct", distinct, "Only partitions with distinct parts");
  parts->add_option("--dominating", floor, "Only partitions dominating this one");

  std::optional<std::string> row;
  auto* chart = app.add_subcommand("chartable", "Character table of S_N, cached on disk");
  chart->add_option("N", n)->required();
  chart->add_option("--row", row, "Print only this row");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Check a claim and print a report");
  verify->add_option("claim", vargs.claim)
      ->required()
      ->check(CLI::IsMember({"saxl-cube", "saxl-square", "tensor-summand", "luo-sellke",
                             "cor-constituents", "macdonald", "two-modular"}));
  verify->add_option("--n", vargs.n, "Staircase index")->check(CLI::PositiveNumber);
  verify->add_option("--mu", vargs.mu, "Partition literal such as [3,2,1]");
  verify->add_option("--up-to", vargs.up_to, "Sweep every size from 1 to this")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "saxl: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Session session(config, out, err);
    if (*kron) return cmd_kronecker(session, a, b, c);
    if (*cee) return cmd_cee(session, a);
    if (*dom) return cmd_dominance(session, a, b);
    if (*parts) return cmd_partitions(session, n, distinct, floor);
    if (*chart) return cmd_chartable(session, n, row);
    if (*verify) return cmd_verify(session, vargs);
  } catch (const CorruptCacheError& e) {
    err << "saxl: corrupt cache: " << e.what() << '\n';
    return kExitCorruptCache;
  } catch (const GateError& e) {
    err << "saxl: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "saxl: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "saxl: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "saxl: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "saxl: internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}

}  // namespace saxl
