#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "charp/polynomial.hpp"

namespace charp {

/// An ideal given by generators. Zero generators are dropped; the zero ideal
/// keeps the single generator 0.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring_ptr() const { return ring_; }
  const Ring& ring() const { return *ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  /// Generators other than the zero placeholder.
  std::span<const Polynomial> nonzero_generators() const;
  bool is_zero_ideal() const { return gens_.size() == 1 && gens_[0].is_zero(); }

  /// "(g1, g2, ...)".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Ideal generated by the union of both generator lists.
Ideal ideal_sum(const Ideal& a, const Ideal& b);

struct GroebnerLimits {
  std::size_t max_pairs = 200000;
  std::uint64_t max_degree = 128;
};

/// A reduced Groebner basis: monic, interreduced, sorted ascending by
/// leading monomial. Empty for the zero ideal, {1} for the unit ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {}

  const RingPtr& ring_ptr() const { return ring_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_unit(); }
  bool is_zero() const { return basis_.empty(); }

  Polynomial reduce(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> basis_;
};

/// Full reduction of f by G: f - r lies in (G) and no term of r is divisible
/// by a leading monomial of G. The first divisor in list order is used.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// S(f, g) = (L/LT(f)) f - (L/LT(g)) g with L = lcm(LM(f), LM(g)).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger's algorithm with the product and chain criteria, normal
/// selection strategy (smallest lcm first). Throws DegreeCapExceeded when a
/// limit is hit. Not memoized.
GroebnerBasis buchberger(const Ideal& ideal, const GroebnerLimits& limits = {});

/// Memoized buchberger() keyed by (ring identity, generators). Safe to call
/// from several threads.
std::shared_ptr<const GroebnerBasis> groebner_basis(const Ideal& ideal);

bool ideal_member(const Polynomial& f, const Ideal& ideal);
/// I is a subset of J.
bool ideal_contains(const Ideal& i, const Ideal& j);
bool ideal_equal(const Ideal& i, const Ideal& j);
/// The residue of f in k[T]/I is zero.
bool quotient_is_zero(const Polynomial& f, const Ideal& ideal);

}  // namespace charp
