#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charp/field.hpp"
#include "charp/monomial.hpp"

namespace charp {

/// Ambient polynomial ring k[x_1..x_v] with a fixed monomial order. Variable
/// names are display metadata; ring identity is (field, v, order).
struct Ring {
  Field field = Field::rationals();
  std::vector<std::string> vars;
  MonomialOrder order;

  std::size_t nvars() const { return vars.size(); }
  bool same_as(const Ring& other) const {
    return field == other.field && nvars() == other.nvars() && order == other.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());
/// Variables named x1..xn.
RingPtr make_ring(Field field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex());
/// Same variables and order over another field.
RingPtr with_field(const Ring& ring, Field field);

struct Term {
  Coefficient coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly descending under the
/// ring's order, no zero coefficients, no repeated monomials.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);

  /// Canonicalizes arbitrary input (sorts, merges duplicates, drops zeros).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Coefficient& c, Monomial m);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  /// Total degree; nullopt stands for the degree of 0 (minus infinity).
  std::optional<std::uint64_t> degree() const;

  /// Leading data; the polynomial must be nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Coefficient& leading_coefficient() const { return terms_.front().coeff; }

  /// Divides by the leading coefficient (zero stays zero).
  Polynomial monic() const;
  Polynomial scale(const Coefficient& c) const;
  /// this * c * m.
  Polynomial mul_term(const Coefficient& c, const Monomial& m) const;
  /// this - c * m * g, computed in one merge.
  Polynomial sub_mul_term(const Coefficient& c, const Monomial& m, const Polynomial& g) const;
  Polynomial pow(unsigned e) const;

  Coefficient evaluate(std::span<const Coefficient> point) const;
  /// Coefficient of `m` (zero if absent).
  Coefficient coefficient_of(const Monomial& m) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Structural equality; requires the same ring.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// "c*x^e*y + ..." with unit coefficients and exponents omitted.
  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Throws AmbientMismatch unless the two rings agree on (field, v, order).
void require_same_ring(const Ring& a, const Ring& b);

/// Lexicographic comparison of term lists under the ring order (a proper
/// prefix is smaller). Used to sort generator lists deterministically.
bool term_list_less(const Polynomial& a, const Polynomial& b);

/// F(X, Y) with every variable replaced by the corresponding image. F must
/// have integer coefficients; the images share one target ring.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);
/// As above with an explicit target ring (needed when there are no images).
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images,
                      const RingPtr& target);

/// Coefficientwise image of a polynomial over Q in F_p. Throws BadPrime when
/// p divides a denominator.
Polynomial reduce_coeffs_mod_p(const Polynomial& f, std::uint64_t p);
/// As above into a given F_p ring with the same arity and order.
Polynomial reduce_coeffs_mod_p(const Polynomial& f, const RingPtr& target);

/// Parses "3/2*x^2*y - (x+1)^2 + 7". Supports + - * ^ and parentheses;
/// identifiers must be variables of the ring.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
/// Parses "(f1, f2, ...)" or "f1, f2". "()" is the zero ideal's generator list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);
/// Identifiers in `text` in order of first appearance.
std::vector<std::string> collect_identifiers(std::string_view text);

}  // namespace charp
