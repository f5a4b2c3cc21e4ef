#include "saxl/characters.hpp"

#include "murnaghan_nakayama.hpp"
#include "parallel.hpp"
#include "saxl/symfunc.hpp"

#include <algorithm>

namespace saxl {

namespace {

void require_degree(std::uint64_t n) {
  if (n > kMaxCharacterDegree) {
    throw PartitionError("character engine supports degree <= " +
                         std::to_string(kMaxCharacterDegree));
  }
}

std::size_t canonical_index(const std::vector<Partition>& sorted,
                            const Partition& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p, CanonicalOrder{});
  if (it == sorted.end() || *it != p) {
    throw PartitionError("partition " + to_string(p) + " not in index");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

std::size_t ClassData::index_of(const Partition& cycle_type) const {
  return canonical_index(classes, cycle_type);
}

BigInt centralizer_order(const Partition& cycle_type) {
  BigInt z = 1;
  const auto& parts = cycle_type.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const std::uint64_t multiplicity = j - i;
    for (std::uint64_t m = 1; m <= multiplicity; ++m) z *= BigInt(parts[i]) * m;
    i = j;
  }
  return z;
}

ClassData class_data(std::uint32_t n) {
  ClassData data;
  data.degree = n;
  data.classes = enumerate_partitions(n);
  data.group_order = factorial(n);
  data.centralizer_orders.reserve(data.classes.size());
  for (const auto& c : data.classes) {
    data.centralizer_orders.push_back(centralizer_order(c));
  }
  return data;
}

BigInt character_value(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size()) {
    throw PartitionError("character_value: shape and cycle type differ in size");
  }
  require_degree(shape.size());
  const auto n = static_cast<std::uint32_t>(shape.size());
  detail::MnEvaluator<BigInt> mn(n);
  const auto ids = mn.prepare(cycle_type);
  return mn.evaluate(detail::bead_mask(shape, n), cycle_type, ids);
}

CharacterTable::CharacterTable(std::uint32_t degree,
                               std::vector<std::size_t> columns,
                               std::vector<std::int64_t> values)
    : degree_(degree),
      labels_(enumerate_partitions(degree)),
      columns_(std::move(columns)),
      values_(std::move(values)) {
  if (!std::is_sorted(columns_.begin(), columns_.end()) ||
      std::adjacent_find(columns_.begin(), columns_.end()) != columns_.end() ||
      (!columns_.empty() && columns_.back() >= labels_.size())) {
    throw std::invalid_argument("character table columns must be ascending class indices");
  }
  if (values_.size() != labels_.size() * columns_.size()) {
    throw std::invalid_argument("character table value count mismatch");
  }
}

std::size_t CharacterTable::row_index(const Partition& shape) const {
  return canonical_index(labels_, shape);
}

BigInt CharacterTable::value(const Partition& shape,
                             const Partition& cycle_type) const {
  const std::size_t c = canonical_index(labels_, cycle_type);
  auto it = std::lower_bound(columns_.begin(), columns_.end(), c);
  if (it == columns_.end() || *it != c) {
    throw std::out_of_range("class " + to_string(cycle_type) +
                            " not held by this table");
  }
  return at(row_index(shape), static_cast<std::size_t>(it - columns_.begin()));
}

CharacterTable build_character_table(std::uint32_t n,
                                     const TableOptions& options) {
  require_degree(n);
  const auto shapes = enumerate_partitions(n);
  std::vector<std::size_t> columns;
  if (options.columns) {
    columns = *options.columns;
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
  } else {
    columns.resize(shapes.size());
    for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  }
  std::vector<std::uint64_t> masks;
  masks.reserve(shapes.size());
  for (const auto& s : shapes) masks.push_back(detail::bead_mask(s, n));

  const std::size_t width = columns.size();
  std::vector<std::int64_t> values(shapes.size() * width);
  detail::parallel_for(
      width, options.jobs,
      [&] { return detail::MnEvaluator<std::int64_t>(n, options.memo_capacity); },
      [&](detail::MnEvaluator<std::int64_t>& mn, std::size_t pos) {
        const Partition& cls = shapes.at(columns[pos]);
        const auto ids = mn.prepare(cls);
        for (std::size_t r = 0; r < shapes.size(); ++r) {
          values[r * width + pos] = mn.evaluate(masks[r], cls, ids);
        }
      });
  return CharacterTable(n, std::move(columns), std::move(values));
}

std::vector<std::int64_t> character_row(const Partition& shape, unsigned jobs) {
  require_degree(shape.size());
  const auto n = static_cast<std::uint32_t>(shape.size());
  const auto classes = enumerate_partitions(n);
  const std::uint64_t mask = detail::bead_mask(shape, n);
  std::vector<std::int64_t> row(classes.size());
  detail::parallel_for(
      classes.size(), jobs, [&] { return detail::MnEvaluator<std::int64_t>(n); },
      [&](detail::MnEvaluator<std::int64_t>& mn, std::size_t c) {
        row[c] = mn.evaluate(mask, classes[c], mn.prepare(classes[c]));
      });
  return row;
}

ClassFunction row_function(const CharacterTable& table, std::size_t row) {
  if (!table.complete()) {
    throw std::invalid_argument("row_function requires a complete table");
  }
  const auto values = table.row(row);
  return ClassFunction(values.begin(), values.end());
}

ClassFunction pointwise_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("class functions of different degrees");
  }
  ClassFunction out(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) out[c] = f[c] * g[c];
  return out;
}

ClassFunction permutation_character(const Partition& mu,
                                    const CharacterTable& table) {
  if (mu.size() != table.degree() || !table.complete()) {
    throw std::invalid_argument(
        "permutation_character needs a complete table of degree |mu|");
  }
  ClassFunction psi(table.rows(), BigInt(0));
  const SchurExpansion h = h_to_schur(mu);
  for (const auto& [lambda, kostka] : h.terms()) {
    const auto row = table.row(table.row_index(lambda));
    for (std::size_t c = 0; c < psi.size(); ++c) psi[c] += kostka * row[c];
  }
  return psi;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g,
                       const ClassData& classes) {
  if (f.size() != classes.count() || g.size() != classes.count()) {
    throw std::invalid_argument("class function length does not match S_" +
                                std::to_string(classes.degree));
  }
  BigInt total = 0;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c] == 0 || g[c] == 0) continue;
    total += classes.class_size(c) * f[c] * g[c];
  }
  return Rational(total, classes.group_order);
}

BigInt character_inner_product(const ClassFunction& f, const ClassFunction& g,
                               const ClassData& classes) {
  const Rational r = inner_product(f, g, classes);
  if (denominator(r) != 1) {
    throw std::logic_error("inner product of characters is not an integer");
  }
  return numerator(r);
}

}  // namespace saxl
