// One line per acceptance criterion. Exit status is nonzero if any fails.

#include "oracles.hpp"
#include "saxl/characters.hpp"
#include "saxl/cli.hpp"
#include "saxl/symfunc.hpp"
#include "saxl/table_store.hpp"
#include "saxl/verify.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>

using namespace saxl;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      note = what;
    }
  }
};

struct Timed {
  std::string label;
  double limit_ms;
  double ms = 0;
};

int failures = 0;

// Runs body, which fills a Check and a list of timed sections. A criterion
// passes when every requirement holds and every section is under its limit.
void criterion(int id, const std::string& title,
               const std::function<void(Check&, std::vector<Timed>&)>& body) {
  Check check;
  std::vector<Timed> sections;
  try {
    body(check, sections);
  } catch (const std::exception& e) {
    check.require(false, std::string("exception: ") + e.what());
  }
  std::ostringstream timing;
  for (const auto& t : sections) {
    if (t.ms > t.limit_ms) check.require(false, t.label + " over its time limit");
    if (timing.tellp() > 0) timing << ", ";
    timing << t.label << ' ' << static_cast<long long>(t.ms) << " ms < "
           << static_cast<long long>(t.limit_ms) << " ms";
  }
  if (!check.ok) ++failures;
  std::cout << "criterion " << id << ' ' << (check.ok ? "PASS" : "FAIL") << "  " << title
            << "  [" << timing.str() << ']';
  if (!check.ok) std::cout << "  -- " << check.note;
  std::cout << std::endl;
}

template <class F>
double time_ms(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SchurExpansion expand(std::initializer_list<std::pair<Partition, int>> terms) {
  SchurExpansion out(terms.begin()->first.size());
  for (const auto& [p, c] : terms) out.add(p, c);
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "saxl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

int main() {
  criterion(1, "C-operator on (10,6,4,1) and on staircases n <= 30, exact",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"all", 1000});
              t.back().ms = time_ms([&] {
                c.require(cee_operator({10, 6, 4, 1}) ==
                              Partition{4, 3, 3, 3, 2, 2, 1, 1, 1, 1},
                          "C((10,6,4,1)) mismatch");
                for (std::uint32_t n = 1; n <= 30; ++n) {
                  c.require(cee_operator(staircase(n)) == column(n * (n + 1) / 2),
                            "C(rho_" + std::to_string(n) + ") is not a column");
                }
              });
            });

  criterion(2, "staircase tensor cube contains every irreducible, n = 1..6",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"n=1..5", 5000});
              t.back().ms = time_ms([&] {
                for (std::uint32_t n = 1; n <= 5; ++n) {
                  const auto r = verify_saxl_cube(n);
                  c.require(r.status == Status::pass, "n = " + std::to_string(n) + " failed");
                  c.require(r.witnesses.size() == oracle::partition_count(n * (n + 1) / 2),
                            "missing witnesses at n = " + std::to_string(n));
                }
              });
              const auto two = verify_saxl_cube(2);
              c.require(two.witnesses.size() == 3 && two.witnesses.at({3}) == 1 &&
                            two.witnesses.at({2, 1}) == 3 && two.witnesses.at({1, 1, 1}) == 1,
                        "n = 2 witnesses differ from {(3):1, (2,1):3, (1,1,1):1}");
              BigInt weighted = 0;
              for (const auto& [lambda, m] : two.witnesses) {
                weighted += m * oracle::hook_dimension(lambda);
              }
              c.require(weighted == 8, "n = 2 dimension sum is not 8");
              t.push_back({"n=6", 60000});
              t.back().ms = time_ms([&] {
                const auto r = verify_saxl_cube(6);
                c.require(r.status == Status::pass, "n = 6 failed");
                c.require(r.witnesses.size() == 792, "n = 6 does not cover 792 irreducibles");
                std::size_t positive = 0;
                for (const auto& [lambda, m] : r.witnesses) positive += m >= 1;
                c.require(positive == 792, "n = 6 has a zero multiplicity");
              });
            });

  criterion(3, "h_mu * s_mu contains h_C(mu), every mu of size <= 10",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"sweep", 120000});
              t.back().ms = time_ms([&] {
                const auto r = verify_tensor_summand_sweep(10);
                c.require(r.status == Status::pass, "sweep failed");
                std::size_t at_ten = 0;
                for (const auto& [mu, excess] : r.witnesses) at_ten += mu.size() == 10;
                c.require(at_ten == 42, "expected 42 cases at size 10");
                c.require(internal_product_hs({2, 1}, build_character_table(3)) ==
                              expand({{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}),
                          "h_(2,1) * s_(2,1) mismatch");
              });
            });

  criterion(4, "nested-family expansion equals h_mu * s_mu, every mu of size <= 8",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"sweep", 120000});
              t.back().ms = time_ms([&] {
                std::size_t cases = 0;
                for (unsigned m = 1; m <= 8; ++m) {
                  const auto table = build_character_table(m);
                  for (const auto& mu : enumerate_partitions(m)) {
                    ++cases;
                    c.require(nested_family_expansion(mu) == internal_product_hs(mu, table),
                              "mismatch at " + to_string(mu));
                  }
                }
                c.require(cases == 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22, "case count");
              });
            });

  criterion(5, "row-removal skew product equals h_C(mu), every mu of size <= 10",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"sweep", 60000});
              t.back().ms = time_ms([&] {
                for (unsigned m = 0; m <= 10; ++m) {
                  for (const auto& mu : enumerate_partitions(m)) {
                    c.require(product_of_skews(row_removal_chain(mu)) ==
                                  h_to_schur(cee_operator(mu)),
                              "mismatch at " + to_string(mu));
                  }
                }
              });
            });

  criterion(6, "distinct-part mu: s_mu * s_mu contains every nu dominating mu, size <= 12",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"sweep", 120000});
              t.back().ms = time_ms([&] {
                const auto r = verify_luo_sellke_sweep(12);
                c.require(r.status == Status::pass, "sweep failed");
                std::size_t expected = 0;
                for (unsigned m = 1; m <= 12; ++m) {
                  expected += enumerate_distinct_partitions(m).size();
                }
                c.require(r.witnesses.size() == expected, "case count");
              });
            });

  criterion(7, "staircase is a 2-core (n <= 50); 2-regular partitions dominate it (n <= 10)",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"hooks", 1000});
              t.back().ms = time_ms([&] {
                for (std::uint32_t n = 1; n <= 50; ++n) {
                  for (const auto& row : hook_lengths(staircase(n))) {
                    for (auto h : row) c.require(h % 2 == 1, "even hook at n = " + std::to_string(n));
                  }
                  c.require(verify_staircase_two_core(n).status == Status::pass,
                            "two-core report failed at n = " + std::to_string(n));
                }
              });
              t.push_back({"dominance", 10000});
              t.back().ms = time_ms([&] {
                for (std::uint32_t n = 1; n <= 10; ++n) {
                  const Partition rho = staircase(n);
                  for (const auto& lambda : enumerate_distinct_partitions(n * (n + 1) / 2)) {
                    c.require(oracle::prefix_dominates(lambda, rho),
                              to_string(lambda) + " does not dominate rho");
                  }
                  c.require(verify_two_regular_dominance(n).status == Status::pass,
                            "dominance report failed at n = " + std::to_string(n));
                }
              });
            });

  criterion(8, "character engine: orthogonality, Jacobi-Trudi, hook lengths, ctab determinism",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"properties", 60000});
              t.back().ms = time_ms([&] {
                for (std::uint32_t n = 0; n <= 8; ++n) {
                  const auto table = build_character_table(n);
                  const auto classes = class_data(n);
                  for (std::size_t a = 0; a < table.rows(); ++a) {
                    for (std::size_t b = 0; b < table.rows(); ++b) {
                      BigInt rows = 0, cols = 0;
                      for (std::size_t k = 0; k < table.rows(); ++k) {
                        rows += classes.class_size(k) * table.at(a, k) * table.at(b, k);
                        cols += BigInt(table.at(k, a)) * table.at(k, b);
                      }
                      c.require(rows == (a == b ? classes.group_order : BigInt(0)),
                                "row orthogonality at N = " + std::to_string(n));
                      c.require(cols == (a == b ? classes.centralizer_orders[a] : BigInt(0)),
                                "column orthogonality at N = " + std::to_string(n));
                    }
                  }
                }
                for (std::uint32_t n = 1; n <= 5; ++n) {
                  const auto table = build_character_table(n);
                  for (const auto& lambda : table.labels()) {
                    for (const auto& cls : table.labels()) {
                      c.require(table.value(lambda, cls) ==
                                    oracle::jacobi_trudi_character(lambda, cls),
                                "Jacobi-Trudi mismatch at " + to_string(lambda));
                    }
                  }
                }
                for (std::uint32_t n = 1; n <= 10; ++n) {
                  const auto table = build_character_table(n);
                  for (std::size_t r = 0; r < table.rows(); ++r) {
                    c.require(BigInt(table.at(r, table.rows() - 1)) ==
                                  oracle::hook_dimension(table.labels()[r]),
                              "dimension mismatch at N = " + std::to_string(n));
                  }
                }
              });
              const unsigned max_jobs = std::max(4u, std::thread::hardware_concurrency());
              t.push_back({"ctab jobs 1 vs " + std::to_string(max_jobs), 60000});
              t.back().ms = time_ms([&] {
                namespace fs = std::filesystem;
                const auto base = fs::temp_directory_path() /
                                  ("saxl-acceptance-" + std::to_string(::getpid()));
                fs::remove_all(base);
                for (std::uint32_t n = 0; n <= 18; ++n) {
                  const auto a = base / "one";
                  const auto b = base / "max";
                  c.require(cli({"--cache-dir", a.string(), "--jobs", "1", "chartable",
                                 std::to_string(n)}) == 0,
                            "chartable failed");
                  c.require(cli({"--cache-dir", b.string(), "--jobs", std::to_string(max_jobs),
                                 "chartable", std::to_string(n)}) == 0,
                            "chartable failed");
                  c.require(slurp(ctab_path(a, n)) == slurp(ctab_path(b, n)),
                            "ctab bytes differ at N = " + std::to_string(n));
                }
                fs::remove_all(base);
              });
            });

  criterion(9, "tensor square of the staircase, n <= 6, reported as conjecture-holds",
            [](Check& c, std::vector<Timed>& t) {
              t.push_back({"n=1..6", 60000});
              t.back().ms = time_ms([&] {
                for (std::uint32_t n = 1; n <= 6; ++n) {
                  const auto r = verify_saxl_square(n);
                  c.require(r.status == Status::conjecture_holds,
                            "n = " + std::to_string(n) + " not conjecture-holds");
                  for (const auto& [lambda, m] : r.witnesses) {
                    c.require(m >= 1, "zero square multiplicity at " + to_string(lambda));
                  }
                }
              });
              std::map<Partition, BigInt, CanonicalOrder> zero{{{3}, 1}, {{2, 1}, 0}, {{1, 1, 1}, 1}};
              const auto flipped = conjecture_report("saxl-square", {{"n", 2}}, zero);
              c.require(flipped.status == Status::counterexample_to_conjecture,
                        "a zero did not flip the status");
              c.require(exit_code(flipped.status) == 0, "a zero would fail the build");
            });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
