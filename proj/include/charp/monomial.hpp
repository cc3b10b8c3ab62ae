#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace charp {

/// Exponent vector x_1^{e_1} ... x_v^{e_v}.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  /// The monomial 1 in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// True iff gcd(this, other) = 1.
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

enum class OrderKind { lex, grevlex };

/// A monomial order of kind lex or grevlex applied to variables in the order
/// given by `permutation` (permutation[0] is the most significant variable).
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(OrderKind kind) : kind_(kind) {}
  MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation);

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }
  /// Accepts "lex" and "grevlex".
  static MonomialOrder parse(const std::string& name);

  OrderKind kind() const { return kind_; }
  /// Empty means identity.
  const std::vector<std::size_t>& permutation() const { return perm_; }
  std::string name() const { return kind_ == OrderKind::lex ? "lex" : "grevlex"; }

  /// Throws ArityMismatch when lengths differ.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  std::size_t var(std::size_t rank) const { return perm_.empty() ? rank : perm_[rank]; }
  OrderKind kind_ = OrderKind::grevlex;
  std::vector<std::size_t> perm_;
};

inline std::strong_ordering compare(const MonomialOrder& order, const Monomial& a,
                                    const Monomial& b) {
  return order.compare(a, b);
}

/// All monomials in `nvars` variables of total degree <= `max_degree`,
/// sorted strictly descending under `order`.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree,
                                      const MonomialOrder& order);

}  // namespace charp
