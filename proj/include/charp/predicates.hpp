#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charp/groebner.hpp"

namespace charp {

/// Complexity of a presentation: the bound d with n <= d and every generator
/// of degree <= d.
struct ComplexityReport {
  std::size_t nvars = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t complexity = 0;
  std::size_t generator_count = 0;
};

ComplexityReport complexity(const Ideal& ideal);
/// Complexity of an arbitrary collection of polynomials in one ring.
ComplexityReport complexity(std::size_t nvars, std::span<const Polynomial> polys);

struct HeightResult {
  std::size_t dimension = 0;
  std::size_t height = 0;
};

/// Krull dimension of k[T]/I: the largest set of variables containing the
/// support of no leading monomial of the reduced basis. Throws UnitIdeal.
std::size_t dimension(const Ideal& ideal);
/// Codimension v - dim(I). Throws UnitIdeal.
HeightResult height_poly(const Ideal& ideal);
/// ht(m) - ht(I) for I contained in m. Throws NotContained or UnitIdeal.
std::size_t height_in_quotient(const Ideal& m, const Ideal& ideal);

enum class RadicalVerdict { Equal, NotContainedInP, GeneratorPowerNotFound };

struct RadicalResult {
  RadicalVerdict verdict = RadicalVerdict::Equal;
  /// For Equal: the smallest e with g^e in I, per generator of P.
  std::vector<unsigned> exponents;
  /// NotContainedInP: the generator of I outside P.
  /// GeneratorPowerNotFound: the generator of P with no power in I up to cap.
  std::optional<Polynomial> witness;
  unsigned cap = 0;
};

/// Decides Rad(I) = P for a prime P by checking I in P and searching, for each
/// generator g of P, an exponent e <= cap with g^e in I.
RadicalResult radical_equals(const Ideal& ideal, const Ideal& prime, unsigned exponent_cap = 16);

enum class ProbeVerdict { NotPrime, ProbablyPrime };

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::ProbablyPrime;
  /// NotPrime certificate: f, g outside P with f*g in P.
  std::optional<Polynomial> f, g;
  unsigned trials = 0;
  /// Trials spent before the certificate was found (== trials otherwise).
  unsigned trials_used = 0;
};

/// Monte-Carlo primality probe with sparse random pairs of degree
/// <= degree_bound and coefficients from {+-1, +-2}. Deterministic in seed.
/// Throws UnitIdeal.
ProbeResult prime_probe(const Ideal& ideal, unsigned degree_bound, unsigned trials,
                        std::uint64_t seed);

/// The ideal (T_1 - b_1, ..., T_v - b_v).
Ideal point_ideal(const RingPtr& ring, std::span<const Coefficient> point);
/// m equals (T - b); certifies m maximal with residue field k.
bool rational_maximal(const Ideal& m, std::span<const Coefficient> point);

}  // namespace charp
