#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "charp/groebner.hpp"

namespace charp {

/// Coefficient tuple of an ideal of complexity <= d: D = C(n+d, n) rows, one
/// per normalized generator (zero-padded), each listing the coefficients on
/// all monomials of degree <= d in descending order.
struct IdealCode {
  std::size_t nvars = 0;
  unsigned complexity = 0;
  MonomialOrder order;
  Field field = Field::rationals();
  std::vector<std::vector<Coefficient>> rows;

  friend bool operator==(const IdealCode&, const IdealCode&) = default;
};

/// C(n+d, n). Throws InvalidArgument when n == 0 or d < n.
std::uint64_t code_size(std::size_t n, unsigned d);

/// Same ideal, every generator monic, leading monomials pairwise distinct.
/// Colliding generators are replaced by their difference until distinct.
Ideal normalize_generators(const Ideal& ideal);

/// Throws ComplexityExceeded(d) when d < n or a normalized generator has
/// degree > d.
IdealCode encode_ideal(const Ideal& ideal, unsigned d);
/// Throws ParseError on malformed row counts or lengths.
Ideal decode_ideal(const IdealCode& code);

/// JSON text {nvars, complexity, order, field[, modulus], rows}. The
/// rendering is canonical: parse followed by render is the identity.
std::string code_to_json(const IdealCode& code);
IdealCode code_from_json(const std::string& text);

}  // namespace charp
