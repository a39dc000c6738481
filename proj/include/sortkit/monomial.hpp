#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sortkit/errors.hpp"

namespace sortkit {

/// Ordered list of variable names. Position 0 is the largest variable under
/// pure lex; a monomial's exponent at position i belongs to names()[i].
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  /// x1, ..., xn (or any other prefix).
  static VarSet numbered(std::string_view prefix, std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Throws ParseError for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Concatenation; names must stay unique.
  VarSet concat(const VarSet& tail) const;

  friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// True iff `name` is a legal variable identifier: a letter, then letters,
/// digits or underscores, optionally followed by one `^{...}` group.
bool is_valid_var_name(std::string_view name);

/// Exponent vector over a VarSet. The VarSet itself is not stored; two
/// monomials are compatible when their lengths agree.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  /// The unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  /// Throws StructuralError on negative exponents.
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::int64_t degree() const;
  /// Degree restricted to positions [first, last).
  std::int64_t degree(std::size_t first, std::size_t last) const;
  bool is_unit() const;
  bool is_squarefree() const;
  /// Index of the unique variable if this is a single variable, else -1.
  std::ptrdiff_t as_variable() const;

  /// Exponent vectors compare lexicographically, which on equal lengths is
  /// exactly pure lex with position 0 largest.
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  friend class MonomialBuilder;
  std::vector<Exponent> exps_;
};

/// Mutable accumulator used by the algorithms that assemble monomials
/// factor by factor.
class MonomialBuilder {
 public:
  explicit MonomialBuilder(std::size_t nvars) : exps_(nvars, 0) {}
  void add(std::size_t index, Monomial::Exponent power = 1);
  Monomial build() &&;

 private:
  std::vector<Monomial::Exponent> exps_;
};

/// Componentwise sum; overflow is a StructuralError.
Monomial mul(const Monomial& u, const Monomial& v);
bool divides(const Monomial& divisor, const Monomial& u);
/// u / divisor; throws PreconditionError if divisor does not divide u.
Monomial quotient(const Monomial& u, const Monomial& divisor);
Monomial gcd(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
bool coprime(const Monomial& u, const Monomial& v);
Monomial power(const Monomial& u, Monomial::Exponent k);

/// Pure lex comparison; position 0 is the largest variable.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

/// Variable positions of u in ascending order, repeated by multiplicity.
std::vector<std::size_t> factor_sequence(const Monomial& u);
/// Inverse of factor_sequence.
Monomial from_factors(std::size_t nvars, std::span<const std::size_t> factors);

/// Throws StructuralError when u and v live over different variable counts.
void require_same_ring(const Monomial& u, const Monomial& v);

/// `1`, or `*`-joined factors `name^e` with `^1` omitted.
std::string format(const Monomial& u, const VarSet& vars);
Monomial parse_monomial(std::string_view text, const VarSet& vars);

/// Variable names mentioned in a monomial string, in order of appearance.
std::vector<std::string> mentioned_names(std::string_view text);
/// Sorts names by (alphabetic prefix, numeric suffix) so that x2 < x10.
std::vector<std::string> natural_sort(std::vector<std::string> names);

struct MonomialHash {
  std::size_t operator()(const Monomial& u) const noexcept;
};

}  // namespace sortkit
