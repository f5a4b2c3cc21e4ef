// Littlewood-Richardson machinery: skew expansions by lattice-word tableau
// enumeration, Schur products by strip insertion, and skew-shape components.

#include "saxl/symfunc.hpp"

#include <algorithm>

namespace saxl {

namespace {

using Count = std::map<Partition, std::uint64_t, CanonicalOrder>;

Partition content_partition(const std::vector<std::uint32_t>& content) {
  std::vector<Partition::part_type> parts;
  for (auto c : content) {
    if (c == 0) break;
    parts.push_back(c);
  }
  return from_sorted_parts(std::move(parts));
}

// Fills the skew diagram in reading order (rows top to bottom, each row right
// to left). A cell's entry is bounded above by its right neighbour (rows
// weakly increase) and below by the cell above (columns strictly increase);
// the reading word stays a lattice word, so the content is a partition.
class SkewTableauCounter {
 public:
  SkewTableauCounter(const SkewShape& shape, const Partition* target)
      : shape_(shape), target_(target) {
    grid_.resize(shape.outer.length());
    for (std::size_t i = 0; i < shape.outer.length(); ++i) {
      grid_[i].assign(shape.outer[i], 0);
      for (std::size_t j = shape.outer[i]; j-- > shape.inner[i];) {
        cells_.emplace_back(i, j);
      }
    }
  }

  Count run() {
    place(0);
    return std::move(counts_);
  }

 private:
  void place(std::size_t t) {
    if (t == cells_.size()) {
      ++counts_[content_partition(content_)];
      return;
    }
    const auto [i, j] = cells_[t];
    std::uint32_t lo = 1;
    if (i > 0 && j >= shape_.inner[i - 1]) lo = grid_[i - 1][j] + 1;
    std::uint32_t hi = static_cast<std::uint32_t>(content_.size()) + 1;
    if (j + 1 < shape_.outer[i]) hi = std::min(hi, grid_[i][j + 1]);
    if (target_) hi = std::min(hi, static_cast<std::uint32_t>(target_->length()));
    for (std::uint32_t v = lo; v <= hi; ++v) {
      if (v > content_.size()) content_.push_back(0);
      const std::uint32_t have = content_[v - 1];
      const bool lattice = v == 1 || have < content_[v - 2];
      const bool fits = !target_ || have < (*target_)[v - 1];
      if (lattice && fits) {
        ++content_[v - 1];
        grid_[i][j] = v;
        place(t + 1);
        grid_[i][j] = 0;
        --content_[v - 1];
      }
      if (content_.back() == 0) content_.pop_back();
    }
  }

  const SkewShape& shape_;
  const Partition* target_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<std::uint32_t>> grid_;
  std::vector<std::uint32_t> content_;
  Count counts_;
};

// Adds the letters 1..l(beta) to alpha, letter k as a horizontal strip of
// beta_k cells. Each row of the added region then reads weakly increasing
// letters; a filling counts when its reading word is a lattice word.
class StripInserter {
 public:
  StripInserter(const Partition& alpha, const Partition& beta)
      : alpha_(alpha), beta_(beta) {}

  Count run() {
    rows_.clear();
    insert(0, alpha_);
    return std::move(counts_);
  }

 private:
  void insert(std::size_t k, const Partition& current) {
    if (k == beta_.length()) {
      if (lattice()) ++counts_[current];
      return;
    }
    const auto letter = static_cast<std::uint32_t>(k + 1);
    for_each_horizontal_strip(current, beta_[k], [&](const Partition& next) {
      if (rows_.size() < next.length()) rows_.resize(next.length());
      for (std::size_t i = 0; i < next.length(); ++i) {
        rows_[i].insert(rows_[i].end(), next[i] - current[i], letter);
      }
      insert(k + 1, next);
      for (std::size_t i = 0; i < next.length(); ++i) {
        rows_[i].resize(rows_[i].size() - (next[i] - current[i]));
      }
    });
  }

  bool lattice() const {
    std::vector<std::uint32_t> seen(beta_.length() + 1, 0);
    for (const auto& row : rows_) {
      for (auto it = row.rbegin(); it != row.rend(); ++it) {
        const std::uint32_t v = *it;
        ++seen[v];
        if (v > 1 && seen[v] > seen[v - 1]) return false;
      }
    }
    return true;
  }

  const Partition& alpha_;
  const Partition& beta_;
  std::vector<std::vector<std::uint32_t>> rows_;
  Count counts_;
};

SchurExpansion from_counts(std::uint64_t degree, const Count& counts) {
  SchurExpansion out(degree);
  for (const auto& [lambda, count] : counts) out.add(lambda, BigInt(count));
  return out;
}

}  // namespace

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
  if (!contains(outer, inner)) {
    throw PartitionError("skew shape: " + saxl::to_string(inner) +
                         " is not contained in " + saxl::to_string(outer));
  }
}

std::string to_string(const SkewShape& shape) {
  return to_string(shape.outer) + "/" + to_string(shape.inner);
}

void for_each_horizontal_strip(
    const Partition& shape, std::uint32_t r,
    const std::function<void(const Partition&)>& visit) {
  // Row i may grow up to shape_{i-1}; row 0 is unbounded; one new row may
  // start below the last, bounded by the last part.
  const std::size_t rows = shape.length() + 1;
  std::vector<Partition::part_type> next(rows);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i,
                                                           std::uint32_t left) {
    if (i == rows) {
      if (left != 0) return;
      std::vector<Partition::part_type> parts(next.begin(), next.end());
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      visit(from_sorted_parts(std::move(parts)));
      return;
    }
    const std::uint32_t base = shape[i];
    const std::uint32_t room =
        i == 0 ? left : std::min<std::uint32_t>(left, shape[i - 1] - base);
    for (std::uint32_t add = room + 1; add-- > 0;) {
      next[i] = base + add;
      rec(i + 1, left - add);
    }
  };
  rec(0, r);
}

SchurExpansion skew_schur_expand(const SkewShape& shape) {
  return from_counts(shape.size(), SkewTableauCounter(shape, nullptr).run());
}

BigInt lr_coefficient(const Partition& outer, const Partition& inner,
                      const Partition& nu) {
  if (!contains(outer, inner) || outer.size() - inner.size() != nu.size()) {
    return 0;
  }
  const SkewShape shape(outer, inner);
  const auto counts = SkewTableauCounter(shape, &nu).run();
  auto it = counts.find(nu);
  return it == counts.end() ? BigInt(0) : BigInt(it->second);
}

SchurExpansion schur_product(const Partition& alpha, const Partition& beta) {
  return from_counts(alpha.size() + beta.size(), StripInserter(alpha, beta).run());
}

std::vector<SkewShape> connected_components(const SkewShape& shape) {
  std::vector<SkewShape> out;
  const auto& outer = shape.outer;
  const auto& inner = shape.inner;
  auto nonempty = [&](std::size_t i) { return inner[i] < outer[i]; };
  std::size_t i = 0;
  while (i < outer.length()) {
    if (!nonempty(i)) {
      ++i;
      continue;
    }
    std::size_t last = i;
    // Row below shares a column iff its right end passes the left end above.
    while (last + 1 < outer.length() && nonempty(last + 1) &&
           outer[last + 1] > inner[last]) {
      ++last;
    }
    const std::uint32_t shift = inner[last];
    std::vector<Partition::part_type> o, in;
    for (std::size_t r = i; r <= last; ++r) {
      o.push_back(outer[r] - shift);
      if (inner[r] > shift) in.push_back(inner[r] - shift);
    }
    out.emplace_back(from_sorted_parts(std::move(o)), from_sorted_parts(std::move(in)));
    i = last + 1;
  }
  return out;
}

}  // namespace saxl
