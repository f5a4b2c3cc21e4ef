#pragma once

#include "saxl/characters.hpp"
#include "saxl/exact.hpp"
#include "saxl/partition.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace saxl {

/// Raised when a request exceeds a configured size gate and no override
/// was given.
class GateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse exact linear combination of Schur functions s_lambda, all of one
/// degree. Zero coefficients are never stored.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, BigInt, CanonicalOrder>;

  SchurExpansion() = default;
  explicit SchurExpansion(std::uint64_t degree) : degree_(degree) {}

  /// The single term s_lambda.
  static SchurExpansion schur(const Partition& lambda);

  std::uint64_t degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Partition& lambda) const;

  /// Adds coeff * s_lambda. Throws PartitionError if |lambda| != degree.
  void add(const Partition& lambda, const BigInt& coeff);

  bool all_nonnegative() const;

  SchurExpansion& operator+=(const SchurExpansion& other);
  SchurExpansion& operator-=(const SchurExpansion& other);
  SchurExpansion& operator*=(const BigInt& scalar);

  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void require_degree(const SchurExpansion& other) const;

  std::uint64_t degree_ = 0;
  Terms terms_;
};

SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b);
SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b);

/// Ordinary product of symmetric functions, via Littlewood-Richardson
/// fillings that add the cells of each right-hand term to each left-hand
/// term.
SchurExpansion operator*(const SchurExpansion& a, const SchurExpansion& b);

/// s_alpha * s_beta as above.
SchurExpansion schur_product(const Partition& alpha, const Partition& beta);

/// The diagram outer/inner. Construction checks containment.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape(Partition outer_shape, Partition inner_shape = {});

  std::uint64_t size() const noexcept { return outer.size() - inner.size(); }
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

std::string to_string(const SkewShape& shape);

/// Calls visit(lambda) for each lambda with lambda/shape a horizontal strip
/// of r cells, lambda in canonical order.
void for_each_horizontal_strip(const Partition& shape, std::uint32_t r,
                               const std::function<void(const Partition&)>& visit);

/// v * h_r by the Pieri rule.
SchurExpansion pieri_multiply(const SchurExpansion& v, std::uint32_t r);

/// h_mu = sum_lambda K_{lambda mu} s_lambda, by iterated Pieri.
SchurExpansion h_to_schur(const Partition& mu);

BigInt kostka_number(const Partition& lambda, const Partition& mu);

/// s_{outer/inner} = sum_nu c^{outer}_{inner, nu} s_nu, counting
/// Littlewood-Richardson skew tableaux.
SchurExpansion skew_schur_expand(const SkewShape& shape);

BigInt lr_coefficient(const Partition& outer, const Partition& inner,
                      const Partition& nu);

/// Edge-connected components of the diagram, top to bottom, each translated
/// so that its leftmost column is column 0 and its top row is row 0.
std::vector<SkewShape> connected_components(const SkewShape& shape);

/// Decomposes a class function of S_N against a complete table:
/// coefficient of s_nu is <f, chi^nu>. Throws std::logic_error if some
/// coefficient is not an integer.
SchurExpansion decompose(const ClassFunction& f, const CharacterTable& table);

/// Class function of sum_lambda a_lambda chi^lambda.
ClassFunction to_class_function(const SchurExpansion& v,
                                const CharacterTable& table);

/// Internal (Kronecker) product a * b; degrees must match the table.
SchurExpansion kronecker_product(const SchurExpansion& a,
                                 const SchurExpansion& b,
                                 const CharacterTable& table);

/// g(lambda, mu, nu) = sum_c chi^lambda(c) chi^mu(c) chi^nu(c) / z_c.
BigInt kronecker_coefficient(const Partition& lambda, const Partition& mu,
                             const Partition& nu, const CharacterTable& table);

/// h_mu * s_mu from the pointwise product psi^mu chi^mu.
SchurExpansion internal_product_hs(const Partition& mu,
                                   const CharacterTable& table);

struct NestedFamilyOptions {
  std::uint64_t max_size = 12;
  bool override_gate = false;
};

/// Sum over chains mu = l1 > l2 > ... > {} with |l_i| - |l_{i+1}| = mu_i of
/// prod_i s_{l_i / l_{i+1}}. Exponential; gated on |mu|.
SchurExpansion nested_family_expansion(const Partition& mu,
                                       const NestedFamilyOptions& options = {});

/// The chain l_i = (mu_i, mu_{i+1}, ...): mu with its first i - 1 rows
/// removed, ending with the empty partition.
std::vector<Partition> row_removal_partitions(const Partition& mu);

/// Consecutive skew shapes l_i / l_{i+1} of row_removal_partitions(mu).
std::vector<SkewShape> row_removal_chain(const Partition& mu);

/// Product of skew expansions over the shapes; 1 (= s_{}) for an empty list.
SchurExpansion product_of_skews(const std::vector<SkewShape>& shapes);

/// "<coeff> <partition>" per line, canonical order.
std::string to_lines(const SchurExpansion& v);

/// {"degree": N, "terms": [{"partition": [...], "coeff": "<decimal>"}]}
nlohmann::ordered_json to_json(const SchurExpansion& v);
SchurExpansion schur_expansion_from_json(const nlohmann::json& j);

}  // namespace saxl
