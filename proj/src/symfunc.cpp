#include "saxl/symfunc.hpp"

#include <unordered_map>

namespace saxl {

SchurExpansion SchurExpansion::schur(const Partition& lambda) {
  SchurExpansion out(lambda.size());
  out.add(lambda, 1);
  return out;
}

BigInt SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SchurExpansion::add(const Partition& lambda, const BigInt& coeff) {
  if (lambda.size() != degree_) {
    throw PartitionError("term " + to_string(lambda) +
                         " does not have degree " + std::to_string(degree_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SchurExpansion::all_nonnegative() const {
  for (const auto& [lambda, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

void SchurExpansion::require_degree(const SchurExpansion& other) const {
  if (other.degree_ != degree_ && !other.is_zero() && !is_zero()) {
    throw std::invalid_argument("adding Schur expansions of different degrees");
  }
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other) {
  require_degree(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [lambda, c] : other.terms_) add(lambda, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& other) {
  require_degree(other);
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [lambda, c] : other.terms_) add(lambda, -c);
  return *this;
}

SchurExpansion& SchurExpansion::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= scalar;
  return *this;
}

SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) {
  a += b;
  return a;
}

SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) {
  a -= b;
  return a;
}

SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b) {
  SchurExpansion out(a.degree() + b.degree());
  for (const auto& [alpha, ca] : a.terms()) {
    for (const auto& [beta, cb] : b.terms()) {
      const SchurExpansion product = schur_product(alpha, beta);
      for (const auto& [nu, c] : product.terms()) {
        out.add(nu, ca * cb * c);
      }
    }
  }
  return out;
}

SchurExpansion pieri_multiply(const SchurExpansion& v, std::uint32_t r) {
  SchurExpansion out(v.degree() + r);
  for (const auto& [nu, c] : v.terms()) {
    for_each_horizontal_strip(nu, r, [&](const Partition& lambda) { out.add(lambda, c); });
  }
  return out;
}

SchurExpansion h_to_schur(const Partition& mu) {
  SchurExpansion v = SchurExpansion::schur({});
  for (auto part : mu) v = pieri_multiply(v, part);
  return v;
}

BigInt kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  return h_to_schur(mu).coefficient(lambda);
}

namespace {

void require_table(const CharacterTable& table, std::uint64_t degree) {
  if (!table.complete() || table.degree() != degree) {
    throw std::invalid_argument("need a complete character table of degree " +
                                std::to_string(degree));
  }
}

}  // namespace

SchurExpansion decompose(const ClassFunction& f, const CharacterTable& table) {
  require_table(table, table.degree());
  if (f.size() != table.rows()) {
    throw std::invalid_argument("class function length does not match table");
  }
  const ClassData classes = class_data(table.degree());
  std::vector<BigInt> weighted(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c] != 0) weighted[c] = classes.class_size(c) * f[c];
  }
  SchurExpansion out(table.degree());
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const auto row = table.row(r);
    BigInt total = 0;
    for (std::size_t c = 0; c < f.size(); ++c) {
      if (weighted[c] != 0 && row[c] != 0) total += weighted[c] * row[c];
    }
    if (total == 0) continue;
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(total, classes.group_order, quotient, remainder);
    if (remainder != 0) {
      throw std::logic_error("non-integral multiplicity for " +
                             to_string(table.labels()[r]));
    }
    out.add(table.labels()[r], quotient);
  }
  return out;
}

ClassFunction to_class_function(const SchurExpansion& v,
                                const CharacterTable& table) {
  require_table(table, v.degree());
  ClassFunction f(table.rows(), BigInt(0));
  for (const auto& [lambda, coeff] : v.terms()) {
    const auto row = table.row(table.row_index(lambda));
    for (std::size_t c = 0; c < f.size(); ++c) f[c] += coeff * row[c];
  }
  return f;
}

SchurExpansion kronecker_product(const SchurExpansion& a,
                                 const SchurExpansion& b,
                                 const CharacterTable& table) {
  if (a.degree() != b.degree()) {
    throw PartitionError("internal product needs equal degrees");
  }
  require_table(table, a.degree());
  return decompose(
      pointwise_product(to_class_function(a, table), to_class_function(b, table)),
      table);
}

BigInt kronecker_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu, const CharacterTable& table) {
  if (lambda.size() != mu.size() || mu.size() != nu.size()) {
    throw PartitionError("Kronecker coefficient needs partitions of one size");
  }
  require_table(table, lambda.size());
  const ClassData classes = class_data(table.degree());
  const auto a = table.row(table.row_index(lambda));
  const auto b = table.row(table.row_index(mu));
  const auto c = table.row(table.row_index(nu));
  BigInt total = 0;
  for (std::size_t k = 0; k < classes.count(); ++k) {
    const BigInt triple = BigInt(a[k]) * b[k] * c[k];
    if (triple != 0) total += classes.class_size(k) * triple;
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(total, classes.group_order, quotient, remainder);
  if (remainder != 0) throw std::logic_error("non-integral Kronecker coefficient");
  return quotient;
}

SchurExpansion internal_product_hs(const Partition& mu,
                                   const CharacterTable& table) {
  require_table(table, mu.size());
  const ClassFunction psi = permutation_character(mu, table);
  const ClassFunction chi = row_function(table, table.row_index(mu));
  return decompose(pointwise_product(psi, chi), table);
}

namespace {

// Every partition contained in `outer` of the given size, canonical order.
void for_each_subpartition(const Partition& outer, std::uint64_t size,
                           const std::function<void(const Partition&)>& visit) {
  std::vector<Partition::part_type> cur;
  std::vector<std::uint64_t> tail(outer.length() + 1, 0);
  for (std::size_t i = outer.length(); i-- > 0;) tail[i] = tail[i + 1] + outer[i];
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i,
                                                           std::uint64_t left) {
    if (left == 0) {
      visit(from_sorted_parts(cur));
      return;
    }
    if (i == outer.length() || tail[i] < left) return;
    std::uint64_t cap = outer[i];
    if (i > 0) cap = std::min<std::uint64_t>(cap, cur.back());
    cap = std::min(cap, left);
    for (std::uint64_t part = cap; part >= 1; --part) {
      cur.push_back(static_cast<Partition::part_type>(part));
      rec(i + 1, left - part);
      cur.pop_back();
    }
  };
  rec(0, size);
}

}  // namespace

SchurExpansion nested_family_expansion(const Partition& mu,
                                       const NestedFamilyOptions& options) {
  if (mu.size() > options.max_size && !options.override_gate) {
    throw GateError("nested family expansion is gated at |mu| <= " +
                    std::to_string(options.max_size) + " (|mu| = " +
                    std::to_string(mu.size()) + "); pass an override to run it");
  }
  // from(level, lambda) = sum over chains below lambda starting at row
  // `level` of mu; memoized since chains share tails.
  std::vector<std::unordered_map<Partition, SchurExpansion, PartitionHash>> memo(
      mu.length() + 1);
  std::function<SchurExpansion(std::size_t, const Partition&)> from =
      [&](std::size_t level, const Partition& lambda) -> SchurExpansion {
    if (level == mu.length()) return SchurExpansion::schur({});
    if (auto it = memo[level].find(lambda); it != memo[level].end()) return it->second;
    SchurExpansion sum(lambda.size());
    for_each_subpartition(lambda, lambda.size() - mu[level], [&](const Partition& sub) {
      sum += skew_schur_expand(SkewShape(lambda, sub)) * from(level + 1, sub);
    });
    memo[level].emplace(lambda, sum);
    return sum;
  };
  return from(0, mu);
}

std::vector<Partition> row_removal_partitions(const Partition& mu) {
  std::vector<Partition> chain;
  for (std::size_t i = 0; i <= mu.length(); ++i) {
    chain.push_back(from_sorted_parts(
        {mu.parts().begin() + static_cast<std::ptrdiff_t>(i), mu.parts().end()}));
  }
  return chain;
}

std::vector<SkewShape> row_removal_chain(const Partition& mu) {
  const auto chain = row_removal_partitions(mu);
  std::vector<SkewShape> shapes;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    shapes.emplace_back(chain[i], chain[i + 1]);
  }
  return shapes;
}

SchurExpansion product_of_skews(const std::vector<SkewShape>& shapes) {
  SchurExpansion out = SchurExpansion::schur({});
  for (const auto& shape : shapes) out = out * skew_schur_expand(shape);
  return out;
}

std::string to_lines(const SchurExpansion& v) {
  std::string out;
  for (const auto& [lambda, c] : v.terms()) {
    out += to_decimal(c);
    out += ' ';
    out += to_string(lambda);
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const SchurExpansion& v) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [lambda, c] : v.terms()) {
    terms.push_back({{"partition", lambda.parts()}, {"coeff", to_decimal(c)}});
  }
  return {{"degree", v.degree()}, {"terms", terms}};
}

SchurExpansion schur_expansion_from_json(const nlohmann::json& j) {
  SchurExpansion out(j.at("degree").get<std::uint64_t>());
  for (const auto& term : j.at("terms")) {
    const auto parts = term.at("partition").get<std::vector<std::int64_t>>();
    out.add(make_partition(parts), parse_decimal(term.at("coeff").get<std::string>()));
  }
  return out;
}

}  // namespace saxl
