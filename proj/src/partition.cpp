#include "saxl/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>

namespace saxl {

namespace {

std::uint64_t sum_parts(const std::vector<Partition::part_type>& parts) {
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

}  // namespace

Partition::Partition(std::vector<part_type> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) {
      throw PartitionError("non-positive part at index " + std::to_string(i));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw PartitionError("not weakly decreasing at index " +
                           std::to_string(i));
    }
  }
  size_ = sum_parts(parts_);
}

Partition::Partition(std::vector<part_type> parts, Unchecked)
    : parts_(std::move(parts)), size_(sum_parts(parts_)) {}

Partition from_sorted_parts(std::vector<Partition::part_type> parts) {
  return Partition(std::move(parts), Partition::Unchecked{});
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto x : p) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h;
}

Partition make_partition(std::span<const std::int64_t> parts) {
  std::vector<Partition::part_type> out;
  out.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) {
      throw PartitionError("non-positive part at index " + std::to_string(i));
    }
    if (parts[i] > std::numeric_limits<Partition::part_type>::max()) {
      throw PartitionError("part too large at index " + std::to_string(i));
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw PartitionError("not weakly decreasing at index " +
                           std::to_string(i));
    }
    out.push_back(static_cast<Partition::part_type>(parts[i]));
  }
  return from_sorted_parts(std::move(out));
}

Partition make_partition(std::initializer_list<std::int64_t> parts) {
  return make_partition(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

Partition staircase(std::uint32_t n) {
  if (n == 0) throw PartitionError("staircase requires n >= 1");
  std::vector<Partition::part_type> parts(n);
  for (std::uint32_t i = 0; i < n; ++i) parts[i] = n - i;
  return from_sorted_parts(std::move(parts));
}

Partition column(std::uint32_t n) {
  return from_sorted_parts(std::vector<Partition::part_type>(n, 1));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<Partition::part_type> out(lambda[0], 0);
  for (auto part : lambda) {
    for (Partition::part_type j = 0; j < part; ++j) ++out[j];
  }
  return from_sorted_parts(std::move(out));
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw PartitionError("dominance requires partitions of equal size");
  }
  const std::size_t len = std::max(lambda.length(), mu.length());
  std::uint64_t a = 0, b = 0;
  for (std::size_t k = 0; k < len; ++k) {
    a += lambda[k];
    b += mu[k];
    if (a < b) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> hook_lengths(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  std::vector<std::vector<std::uint32_t>> hooks(lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    hooks[i].resize(lambda[i]);
    for (std::size_t j = 0; j < lambda[i]; ++j) {
      hooks[i][j] = static_cast<std::uint32_t>((lambda[i] - j - 1) +
                                               (cols[j] - i - 1) + 1);
    }
  }
  return hooks;
}

std::vector<std::uint64_t> beta_numbers(const Partition& lambda,
                                        std::size_t beads) {
  if (beads < lambda.length()) {
    throw PartitionError("bead count smaller than partition length");
  }
  std::vector<std::uint64_t> betas(beads);
  for (std::size_t i = 0; i < beads; ++i) {
    betas[i] = std::uint64_t{lambda[i]} + (beads - 1 - i);
  }
  return betas;
}

Partition from_beta_numbers(std::vector<std::uint64_t> betas) {
  std::sort(betas.begin(), betas.end(), std::greater<>());
  const std::size_t beads = betas.size();
  std::vector<Partition::part_type> parts;
  for (std::size_t i = 0; i < beads; ++i) {
    const std::uint64_t offset = beads - 1 - i;
    if (betas[i] < offset) throw PartitionError("beta numbers not distinct");
    const std::uint64_t part = betas[i] - offset;
    if (part == 0) break;
    parts.push_back(static_cast<Partition::part_type>(part));
  }
  return from_sorted_parts(std::move(parts));
}

namespace {

// Beads of a p-abacus, counted per runner.
std::vector<std::uint64_t> runner_counts(const std::vector<std::uint64_t>& betas,
                                         std::uint32_t p) {
  std::vector<std::uint64_t> counts(p, 0);
  for (auto b : betas) ++counts[b % p];
  return counts;
}

void require_modulus(std::uint32_t p) {
  if (p < 2) throw PartitionError("modulus p must be at least 2");
}

}  // namespace

Partition p_core(const Partition& lambda, std::uint32_t p) {
  require_modulus(p);
  const auto betas = beta_numbers(lambda, lambda.length());
  const auto counts = runner_counts(betas, p);
  std::vector<std::uint64_t> slid;
  slid.reserve(betas.size());
  for (std::uint32_t r = 0; r < p; ++r) {
    for (std::uint64_t k = 0; k < counts[r]; ++k) slid.push_back(r + k * p);
  }
  return from_beta_numbers(std::move(slid));
}

std::uint64_t p_weight(const Partition& lambda, std::uint32_t p) {
  require_modulus(p);
  // Each bead slides (b - lowest free slot) / p positions; the total is the
  // number of rim hooks removed.
  const auto betas = beta_numbers(lambda, lambda.length());
  std::vector<std::vector<std::uint64_t>> runners(p);
  for (auto b : betas) runners[b % p].push_back(b / p);
  std::uint64_t weight = 0;
  for (auto& levels : runners) {
    std::sort(levels.begin(), levels.end());
    for (std::size_t k = 0; k < levels.size(); ++k) weight += levels[k] - k;
  }
  return weight;
}

bool is_p_regular(const Partition& lambda, std::uint32_t p) {
  require_modulus(p);
  const auto& parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (j - i >= p) return false;
    i = j;
  }
  return true;
}

bool has_distinct_parts(const Partition& lambda) {
  return is_p_regular(lambda, 2);
}

Partition cee_operator(const Partition& mu) {
  std::vector<Partition::part_type> parts;
  parts.reserve(mu.size());
  for (std::size_t i = 0; i < mu.length(); ++i) {
    const Partition::part_type diff = mu[i] - mu[i + 1];
    if (diff == 0) continue;
    parts.insert(parts.end(), i + 1, diff);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return from_sorted_parts(std::move(parts));
}

std::vector<Partition> enumerate_partitions(std::uint32_t n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Reverse-lexicographic successor: find the last part > 1, decrement it
  // and redistribute the remainder greedily.
  std::vector<Partition::part_type> a{n};
  while (true) {
    out.push_back(from_sorted_parts(a));
    std::uint64_t rem = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++rem;
    }
    if (a.empty()) break;
    const Partition::part_type k = --a.back();
    ++rem;
    while (rem > k) {
      a.push_back(k);
      rem -= k;
    }
    a.push_back(static_cast<Partition::part_type>(rem));
  }
  return out;
}

std::vector<Partition> enumerate_distinct_partitions(std::uint32_t n) {
  std::vector<Partition> out;
  std::vector<Partition::part_type> cur;
  // Parts strictly below `bound`, summing to `rem`, largest first.
  std::function<void(std::uint32_t, std::uint32_t)> rec =
      [&](std::uint32_t rem, std::uint32_t bound) {
        if (rem == 0) {
          out.push_back(from_sorted_parts(cur));
          return;
        }
        for (std::uint32_t part = std::min(rem, bound - 1); part >= 1; --part) {
          // Remaining parts are < part, so at most part*(part-1)/2 more.
          if (std::uint64_t{part} * (part + 1) / 2 < rem) break;
          cur.push_back(part);
          rec(rem - part, part);
          cur.pop_back();
        }
      };
  rec(n, n + 1);
  return out;
}

std::uint64_t partition_count(std::uint32_t n) {
  if (n > 400) throw PartitionError("partition_count supports n <= 400");
  // Partial sums briefly exceed p(m), so accumulate in 128 bits.
  std::vector<__int128> p(n + 1, 0);
  p[0] = 1;
  for (std::int64_t m = 1; m <= static_cast<std::int64_t>(n); ++m) {
    __int128 acc = 0;
    for (std::int64_t k = 1;; ++k) {
      const std::int64_t g1 = k * (3 * k - 1) / 2;
      const std::int64_t g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[m - g1];
      if (g2 <= m) acc += sign * p[m - g2];
    }
    p[m] = acc;
  }
  return static_cast<std::uint64_t>(p[n]);
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

std::string to_string(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda[i]);
  }
  out += ']';
  return out;
}

Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> PartitionError {
    return PartitionError("malformed partition literal '" + std::string(text) +
                          "': " + what);
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw fail("expected '['");
  ++pos;
  skip_ws();
  std::vector<std::int64_t> parts;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      std::int64_t value = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') throw fail("unexpected '+'");
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{}) throw fail("expected an integer");
      pos += static_cast<std::size_t>(ptr - first);
      skip_ws();
      parts.push_back(value);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw fail("expected ',' or ']'");
    }
  }
  skip_ws();
  if (pos != text.size()) throw fail("trailing characters");
  return make_partition(parts);
}

}  // namespace saxl
