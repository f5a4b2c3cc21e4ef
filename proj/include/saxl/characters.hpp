#pragma once

#include "saxl/exact.hpp"
#include "saxl/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace saxl {

/// The character engine encodes shapes as 64-bit bead masks with one bead
/// per possible row, so degrees above 32 are rejected. Every character value
/// of S_N for N <= 32 is bounded by sqrt(32!) < 2^63 in magnitude.
inline constexpr std::uint32_t kMaxCharacterDegree = 32;

/// Conjugacy-class data of S_N, classes in canonical partition order.
struct ClassData {
  std::uint32_t degree = 0;
  std::vector<Partition> classes;
  std::vector<BigInt> centralizer_orders;
  BigInt group_order{1};

  std::size_t count() const noexcept { return classes.size(); }
  BigInt class_size(std::size_t c) const {
    return group_order / centralizer_orders[c];
  }
  /// Position of `cycle_type` among classes; throws PartitionError if absent.
  std::size_t index_of(const Partition& cycle_type) const;
};

/// z_c = prod_i i^{m_i} m_i!.
BigInt centralizer_order(const Partition& cycle_type);

ClassData class_data(std::uint32_t n);

/// chi^shape(cycle_type) by the Murnaghan-Nakayama rule, in arbitrary
/// precision. Throws PartitionError on a size mismatch.
BigInt character_value(const Partition& shape, const Partition& cycle_type);

/// Exact irreducible characters of S_N. Rows are indexed by all partitions
/// of N in canonical order; columns by a subset of the classes (all of them
/// for a complete table), also in canonical order.
class CharacterTable {
 public:
  CharacterTable(std::uint32_t degree, std::vector<std::size_t> columns,
                 std::vector<std::int64_t> values);

  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Partition>& labels() const noexcept { return labels_; }
  std::size_t rows() const noexcept { return labels_.size(); }
  /// Class indices held, ascending.
  const std::vector<std::size_t>& columns() const noexcept { return columns_; }
  bool complete() const noexcept { return columns_.size() == labels_.size(); }

  std::size_t row_index(const Partition& shape) const;

  /// Raw cell access by row and column position.
  std::int64_t at(std::size_t row, std::size_t column_pos) const noexcept {
    return values_[row * columns_.size() + column_pos];
  }
  std::span<const std::int64_t> row(std::size_t r) const noexcept {
    return {values_.data() + r * columns_.size(), columns_.size()};
  }

  /// chi^shape(cycle_type); the class must be among the held columns.
  BigInt value(const Partition& shape, const Partition& cycle_type) const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.degree_ == b.degree_ && a.columns_ == b.columns_ &&
           a.values_ == b.values_;
  }

 private:
  std::uint32_t degree_;
  std::vector<Partition> labels_;
  std::vector<std::size_t> columns_;
  std::vector<std::int64_t> values_;
};

struct TableOptions {
  /// Worker threads; results do not depend on this.
  unsigned jobs = 1;
  /// Restrict to these class indices (canonical positions). Unset = all.
  std::optional<std::vector<std::size_t>> columns;
  /// Per-worker memo entry bound; when exceeded the memo is flushed.
  /// Zero means unbounded.
  std::size_t memo_capacity = 0;
};

CharacterTable build_character_table(std::uint32_t n,
                                      const TableOptions& options = {});

/// One row of the table, over all classes in canonical order.
std::vector<std::int64_t> character_row(const Partition& shape,
                                        unsigned jobs = 1);

/// Class function on S_N, indexed by the classes in canonical order.
using ClassFunction = std::vector<BigInt>;

ClassFunction row_function(const CharacterTable& table, std::size_t row);

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g);

/// Character of M^mu = Ind_{S_mu}^{S_N} 1, as sum_lambda K_{lambda mu}
/// chi^lambda. Requires a complete table of degree |mu|.
ClassFunction permutation_character(const Partition& mu,
                                    const CharacterTable& table);

/// (1/N!) sum_c |c| f(c) g(c).
Rational inner_product(const ClassFunction& f, const ClassFunction& g,
                       const ClassData& classes);

/// inner_product for genuine characters: throws std::logic_error when the
/// result is not an integer.
BigInt character_inner_product(const ClassFunction& f, const ClassFunction& g,
                               const ClassData& classes);

}  // namespace saxl
