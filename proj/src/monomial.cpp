#include "sortkit/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>

namespace sortkit {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_word(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw StructuralError("exponent overflow");
  return out;
}

// Splits one factor into (name, exponent). A trailing `^digits` is an
// exponent; `^{...}` belongs to the name.
std::pair<std::string_view, Monomial::Exponent> split_factor(std::string_view factor) {
  auto caret = factor.rfind('^');
  if (caret != std::string_view::npos && caret + 1 < factor.size() &&
      std::all_of(factor.begin() + caret + 1, factor.end(), is_digit)) {
    Monomial::Exponent e = 0;
    auto digits = factor.substr(caret + 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ParseError("bad exponent in factor '" + std::string(factor) + "'");
    return {trim(factor.substr(0, caret)), e};
  }
  return {trim(factor), 1};
}

std::vector<std::string_view> split_factors(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '*') {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !is_alpha(name.front())) return false;
  std::size_t i = 1;
  while (i < name.size() && is_word(name[i])) ++i;
  if (i == name.size()) return true;
  // optional ^{word}
  if (name.substr(i, 2) != "^{" || name.back() != '}') return false;
  auto inner = name.substr(i + 2, name.size() - i - 3);
  return !inner.empty() && std::all_of(inner.begin(), inner.end(), is_word);
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw StructuralError("variable set must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_var_name(names_[i]))
      throw StructuralError("invalid variable name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw StructuralError("duplicate variable name '" + names_[i] + "'");
  }
}

VarSet VarSet::numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VarSet(std::move(names));
}

std::size_t VarSet::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw ParseError("unknown variable '" + std::string(name) + "'");
  return it->second;
}

bool VarSet::contains(std::string_view name) const { return index_.contains(std::string(name)); }

VarSet VarSet::concat(const VarSet& tail) const {
  auto names = names_;
  names.insert(names.end(), tail.names_.begin(), tail.names_.end());
  return VarSet(std::move(names));
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_)
    if (e < 0) throw StructuralError("negative exponent");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw StructuralError("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::int64_t Monomial::degree() const { return degree(0, exps_.size()); }

std::int64_t Monomial::degree(std::size_t first, std::size_t last) const {
  std::int64_t d = 0;
  for (std::size_t i = first; i < last; ++i) d += exps_[i];
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::ptrdiff_t Monomial::as_variable() const {
  std::ptrdiff_t found = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (exps_[i] != 1 || found >= 0) return -1;
    found = static_cast<std::ptrdiff_t>(i);
  }
  return found;
}

void MonomialBuilder::add(std::size_t index, Monomial::Exponent power) {
  exps_.at(index) = checked_add(exps_[index], power);
}

Monomial MonomialBuilder::build() && { return Monomial(std::move(exps_)); }

void require_same_ring(const Monomial& u, const Monomial& v) {
  if (u.size() != v.size())
    throw StructuralError("monomials over different variable sets (" + std::to_string(u.size()) +
                          " vs " + std::to_string(v.size()) + " variables)");
}

Monomial mul(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  MonomialBuilder b(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) b.add(i, checked_add(u[i], v[i]));
  return std::move(b).build();
}

bool divides(const Monomial& divisor, const Monomial& u) {
  require_same_ring(divisor, u);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (divisor[i] > u[i]) return false;
  return true;
}

Monomial quotient(const Monomial& u, const Monomial& divisor) {
  if (!divides(divisor, u)) throw PreconditionError("quotient: divisor does not divide");
  std::vector<Monomial::Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] - divisor[i];
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<Monomial::Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = std::min(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  std::vector<Monomial::Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = std::max(u[i], v[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0 && v[i] > 0) return false;
  return true;
}

Monomial power(const Monomial& u, Monomial::Exponent k) {
  if (k < 0) throw PreconditionError("negative power");
  MonomialBuilder b(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    Monomial::Exponent e = 0;
    if (__builtin_mul_overflow(u[i], k, &e)) throw StructuralError("exponent overflow");
    b.add(i, e);
  }
  return std::move(b).build();
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  return u <=> v;
}

std::vector<std::size_t> factor_sequence(const Monomial& u) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(u.degree()));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (Monomial::Exponent k = 0; k < u[i]; ++k) out.push_back(i);
  return out;
}

Monomial from_factors(std::size_t nvars, std::span<const std::size_t> factors) {
  MonomialBuilder b(nvars);
  for (auto f : factors) b.add(f);
  return std::move(b).build();
}

std::string format(const Monomial& u, const VarSet& vars) {
  if (u.size() != vars.size()) throw StructuralError("monomial does not match variable set");
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (u[i] != 1) out += '^' + std::to_string(u[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, const VarSet& vars) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty monomial");
  MonomialBuilder b(vars.size());
  if (text == "1") return std::move(b).build();
  for (auto factor : split_factors(text)) {
    if (factor.empty()) throw ParseError("empty factor in '" + std::string(text) + "'");
    auto [name, e] = split_factor(factor);
    if (!is_valid_var_name(name)) throw ParseError("bad variable name '" + std::string(name) + "'");
    b.add(vars.index_of(name), e);
  }
  return std::move(b).build();
}

std::vector<std::string> mentioned_names(std::string_view text) {
  std::vector<std::string> out;
  text = trim(text);
  if (text == "1") return out;
  for (auto factor : split_factors(text)) {
    auto [name, e] = split_factor(factor);
    if (!is_valid_var_name(name)) throw ParseError("bad variable name '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), name) == out.end()) out.emplace_back(name);
  }
  return out;
}

std::vector<std::string> natural_sort(std::vector<std::string> names) {
  auto chunk_less = [](std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (is_digit(a[i]) && is_digit(b[j])) {
        std::size_t i2 = i, j2 = j;
        while (i2 < a.size() && is_digit(a[i2])) ++i2;
        while (j2 < b.size() && is_digit(b[j2])) ++j2;
        auto na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
        // compare numerically without overflow: length, then digits
        auto strip = [](std::string_view s) {
          while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
          return s;
        };
        na = strip(na);
        nb = strip(nb);
        if (na.size() != nb.size()) return na.size() < nb.size();
        if (na != nb) return na < nb;
        i = i2;
        j = j2;
      } else {
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
      }
    }
    return (a.size() - i) < (b.size() - j);
  };
  std::sort(names.begin(), names.end(), chunk_less);
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : u.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace sortkit
