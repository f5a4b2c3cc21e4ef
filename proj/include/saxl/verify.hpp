#pragma once

#include "saxl/exact.hpp"
#include "saxl/partition.hpp"
#include "saxl/table_store.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace saxl {

enum class Status { pass, fail, conjecture_holds, counterexample_to_conjecture };

/// "pass", "fail", "conjecture-holds", "counterexample-to-conjecture".
std::string status_name(Status status);

struct Counterexample {
  Partition partition;
  std::string detail;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string claim;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::pass;
  /// Computed counts that are not multiplicities (hooks checked and so on).
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::map<Partition, BigInt, CanonicalOrder> witnesses;
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  /// True for pass and conjecture-holds.
  bool ok() const noexcept {
    return status == Status::pass || status == Status::conjecture_holds;
  }
};

/// {"claim", "params", "status", "summary", "witnesses": [{"partition",
/// "multiplicity"}], "counterexamples": [{"partition", "detail"}],
/// "elapsed_ms"}. Multiplicities are decimal strings. With timing off,
/// elapsed_ms is written as 0 so output is reproducible.
nlohmann::ordered_json to_json(const VerificationReport& report,
                               bool include_timing = true);

struct VerifyOptions {
  /// Complete tables come from here when set, otherwise they are built
  /// on demand and dropped afterwards.
  TableStore* store = nullptr;
  unsigned jobs = 1;
  /// Lifts the default size gates up to the engine limits.
  bool long_run = false;
};

/// Default gates; long_run raises them to the hard limits below.
inline constexpr std::uint32_t kDefaultCubeGate = 6;
inline constexpr std::uint32_t kLongRunCubeGate = 7;
inline constexpr std::uint64_t kDefaultSweepGate = 12;
/// Single-partition claims other than macdonald.
inline constexpr std::uint64_t kDefaultSingleGate = 21;
inline constexpr std::uint32_t kDefaultDominanceGate = 13;
inline constexpr std::uint32_t kLongRunDominanceGate = 16;

/// g(mu, mu, nu) >= 1 for every nu dominating mu. mu must have distinct
/// parts (PartitionError "parts not distinct").
VerificationReport verify_luo_sellke(const Partition& mu,
                                     const VerifyOptions& options = {});

/// h_mu * s_mu - h_{C(mu)} has no negative Schur coefficient. Witnesses
/// hold that difference.
VerificationReport verify_tensor_summand(const Partition& mu,
                                         const VerifyOptions& options = {});

/// <(chi^mu)^3, chi^lambda> >= 1 for every lambda dominating C(mu). mu must
/// have distinct parts.
VerificationReport verify_cor_constituents(const Partition& mu,
                                           const VerifyOptions& options = {});

/// Every irreducible of S_N, N = n(n+1)/2, occurs in the tensor cube of the
/// staircase character. Witnesses hold all cube multiplicities.
VerificationReport verify_saxl_cube(std::uint32_t n,
                                    const VerifyOptions& options = {});

/// Same for the tensor square. Reported as conjecture-holds or
/// counterexample-to-conjecture, never as fail.
VerificationReport verify_saxl_square(std::uint32_t n,
                                      const VerifyOptions& options = {});

/// Builds the square report from its multiplicities; exposed so the status
/// rule can be exercised directly.
VerificationReport conjecture_report(
    std::string claim, nlohmann::ordered_json params,
    const std::map<Partition, BigInt, CanonicalOrder>& multiplicities);

/// Every hook length of the staircase is odd.
VerificationReport verify_staircase_two_core(std::uint32_t n);

/// Every distinct-part partition of n(n+1)/2 dominates the staircase.
VerificationReport verify_two_regular_dominance(std::uint32_t n,
                                                const VerifyOptions& options = {});

/// Both checks above in one report.
VerificationReport verify_two_modular_shadows(std::uint32_t n,
                                              const VerifyOptions& options = {});

/// nested_family_expansion(mu) == internal_product_hs(mu).
VerificationReport verify_macdonald_identity(const Partition& mu,
                                             const VerifyOptions& options = {});

/// Runs a single-partition claim over every partition of 1..up_to (only
/// distinct-part ones where the claim requires it). Witnesses map each mu
/// to a per-claim number: the least multiplicity for luo-sellke and
/// cor-constituents, the total excess coefficient for tensor-summand, the
/// number of Schur terms for macdonald.
VerificationReport verify_luo_sellke_sweep(std::uint64_t up_to,
                                           const VerifyOptions& options = {});
VerificationReport verify_tensor_summand_sweep(std::uint64_t up_to,
                                               const VerifyOptions& options = {});
VerificationReport verify_cor_constituents_sweep(std::uint64_t up_to,
                                                 const VerifyOptions& options = {});
VerificationReport verify_macdonald_sweep(std::uint64_t up_to,
                                          const VerifyOptions& options = {});

}  // namespace saxl
