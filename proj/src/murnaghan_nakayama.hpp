#pragma once

// Murnaghan-Nakayama evaluation on a bead abacus.
//
// A shape of size <= n is encoded with exactly n beads: bead i sits at
// lambda_i + n - 1 - i, so positions fit in 2n bits. Removing a rim hook of
// length k moves a bead from b down to an empty b - k; its leg length is the
// number of beads strictly between the two positions.

#include "saxl/exact.hpp"
#include "saxl/partition.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace saxl::detail {

inline std::uint64_t bead_mask(const Partition& shape, std::uint32_t beads) {
  std::uint64_t mask = 0;
  for (std::uint32_t i = 0; i < beads; ++i) {
    mask |= std::uint64_t{1} << (shape[i] + beads - 1 - i);
  }
  return mask;
}

inline void accumulate(std::int64_t& acc, std::int64_t term, bool negate) {
  const bool overflow = negate ? __builtin_sub_overflow(acc, term, &acc)
                               : __builtin_add_overflow(acc, term, &acc);
  if (overflow) throw std::overflow_error("character value exceeds 64 bits");
}

inline void accumulate(BigInt& acc, const BigInt& term, bool negate) {
  if (negate) {
    acc -= term;
  } else {
    acc += term;
  }
}

/// Interns cycle-part suffixes so the memo key stays two machine words.
class SuffixInterner {
 public:
  /// ids[k] identifies the suffix parts[k..]; parts sorted descending.
  std::vector<std::uint32_t> suffix_ids(const std::vector<std::uint32_t>& parts) {
    std::vector<std::uint32_t> ids(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
      auto suffix = from_sorted_parts({parts.begin() + static_cast<std::ptrdiff_t>(k), parts.end()});
      auto [it, inserted] = ids_.try_emplace(std::move(suffix), static_cast<std::uint32_t>(ids_.size()));
      ids[k] = it->second;
    }
    return ids;
  }

 private:
  std::unordered_map<Partition, std::uint32_t, PartitionHash> ids_;
};

/// Memoized on (bead mask, remaining cycle parts). Cycle parts are consumed
/// largest first. Not thread-safe; use one evaluator per worker.
template <class Value>
class MnEvaluator {
 public:
  MnEvaluator(std::uint32_t degree, std::size_t memo_capacity = 0)
      : degree_(degree), capacity_(memo_capacity) {}

  std::uint32_t beads() const noexcept { return degree_; }

  /// Prepares a class: returns its suffix ids for evaluate().
  std::vector<std::uint32_t> prepare(const Partition& cycle_type) {
    return interner_.suffix_ids(cycle_type.parts());
  }

  Value evaluate(std::uint64_t mask, const Partition& cycle_type,
                 const std::vector<std::uint32_t>& ids) {
    return eval(mask, cycle_type.parts().data(), ids.data(),
                cycle_type.length());
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  struct Key {
    std::uint64_t mask;
    std::uint32_t suffix;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.mask * 0x9e3779b97f4a7c15ull;
      h ^= (std::uint64_t{k.suffix} + 0x7f4a7c159e3779b9ull) + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  Value eval(std::uint64_t mask, const std::uint32_t* parts,
             const std::uint32_t* ids, std::size_t count) {
    if (count == 0) return Value{1};
    const bool memoize = count > 1;
    if (memoize) {
      if (auto it = memo_.find(Key{mask, ids[0]}); it != memo_.end()) {
        return it->second;
      }
    }
    const std::uint32_t k = parts[0];
    Value acc{0};
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      if (b < static_cast<int>(k)) continue;
      const int target = b - static_cast<int>(k);
      const std::uint64_t target_bit = std::uint64_t{1} << target;
      if (mask & target_bit) continue;
      const std::uint64_t top_bit = std::uint64_t{1} << b;
      const std::uint64_t between = mask & (top_bit - 1) & ~((target_bit << 1) - 1);
      const bool odd_leg = std::popcount(between) % 2 == 1;
      const Value sub =
          eval(mask ^ top_bit ^ target_bit, parts + 1, ids + 1, count - 1);
      if (sub != 0) accumulate(acc, sub, odd_leg);
    }
    if (memoize) {
      if (capacity_ != 0 && memo_.size() >= capacity_) memo_.clear();
      memo_.emplace(Key{mask, ids[0]}, acc);
    }
    return acc;
  }

  std::uint32_t degree_;
  std::size_t capacity_;
  SuffixInterner interner_;
  std::unordered_map<Key, Value, KeyHash> memo_;
};

}  // namespace saxl::detail
