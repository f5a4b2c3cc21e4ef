#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace saxl {

/// Raised for malformed partition input (bad parts, bad literals, bad
/// arguments to partition operations).
class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Parts are stored as 32-bit unsigned integers; sizes are accumulated in
/// 64 bits. The empty partition is the unique partition of 0.
///
/// The default ordering (operator<=>) is lexicographic on the parts, so the
/// canonical enumeration order used throughout the library ((N) first,
/// (1^N) last) is *descending* in this ordering; see CanonicalOrder.
class Partition {
 public:
  using part_type = std::uint32_t;

  Partition() = default;

  /// Validating constructor; throws PartitionError naming the bad index.
  explicit Partition(std::vector<part_type> parts);
  Partition(std::initializer_list<part_type> parts)
      : Partition(std::vector<part_type>(parts)) {}

  const std::vector<part_type>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); zero beyond the length.
  part_type operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Unchecked {};
  Partition(std::vector<part_type> parts, Unchecked);
  friend Partition from_sorted_parts(std::vector<part_type> parts);

  std::vector<part_type> parts_;
  std::uint64_t size_ = 0;
};

/// Comparator giving the canonical order: descending lexicographic.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    return a > b;
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Builds a partition from arbitrary signed input, rejecting non-positive
/// parts and increases. The error message identifies the offending index.
Partition make_partition(std::span<const std::int64_t> parts);
Partition make_partition(std::initializer_list<std::int64_t> parts);

/// Skips validation; the caller guarantees weakly decreasing positive parts.
Partition from_sorted_parts(std::vector<Partition::part_type> parts);

/// (n, n-1, ..., 1). Throws for n == 0.
Partition staircase(std::uint32_t n);

/// (1^n); the empty partition for n == 0.
Partition column(std::uint32_t n);

Partition conjugate(const Partition& lambda);

/// Prefix-sum dominance: lambda >= mu. Throws on size mismatch.
bool dominates(const Partition& lambda, const Partition& mu);

/// Hook lengths, row by row (row i has lambda_i entries).
std::vector<std::vector<std::uint32_t>> hook_lengths(const Partition& lambda);

/// The p-core, computed on the abacus: beta-numbers are slid down their
/// runners, which removes every removable p-rim-hook at once.
Partition p_core(const Partition& lambda, std::uint32_t p);

/// p-weight: number of p-rim-hooks removed to reach the p-core.
std::uint64_t p_weight(const Partition& lambda, std::uint32_t p);

/// True iff no part value occurs p or more times.
bool is_p_regular(const Partition& lambda, std::uint32_t p);

bool has_distinct_parts(const Partition& lambda);

/// C(mu): for each i >= 1, i copies of mu_i - mu_{i+1} (mu_i = 0 past the
/// end); zero differences are dropped. |C(mu)| == |mu|.
Partition cee_operator(const Partition& mu);

/// First-column hook lengths of lambda padded to `beads` beads:
/// beta_i = lambda_i + beads - 1 - i. Requires beads >= length.
std::vector<std::uint64_t> beta_numbers(const Partition& lambda,
                                        std::size_t beads);

/// Inverse of beta_numbers; input in any order, distinct entries.
Partition from_beta_numbers(std::vector<std::uint64_t> betas);

/// Every partition of n exactly once, in canonical order.
std::vector<Partition> enumerate_partitions(std::uint32_t n);

/// Partitions of n into distinct parts, in canonical order.
std::vector<Partition> enumerate_distinct_partitions(std::uint32_t n);

/// Number of partitions of n by Euler's pentagonal recurrence; n <= 400.
std::uint64_t partition_count(std::uint32_t n);

/// Whether `inner` fits inside `outer` cell-wise.
bool contains(const Partition& outer, const Partition& inner);

/// "[3,2,1]"; the empty partition renders "[]".
std::string to_string(const Partition& lambda);

/// Accepts the to_string grammar with optional whitespace around tokens.
Partition parse_partition(std::string_view text);

}  // namespace saxl
