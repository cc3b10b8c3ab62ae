#pragma once

// Test-only helpers: ring construction from text, the shared ideal corpus,
// deterministic random polynomials, and the brute-force oracles that the
// Groebner-based predicates are checked against.

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "charp/groebner.hpp"
#include "charp/io.hpp"

namespace charp {
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << f.to_string(); }
}  // namespace charp

namespace charp::testing {

RingPtr ring_of(const std::string& vars, const Field& field = Field::rationals(),
                MonomialOrder order = MonomialOrder::grevlex());
Polynomial poly(const RingPtr& ring, const std::string& text);
Ideal ideal(const RingPtr& ring, const std::string& text);

struct CorpusIdeal {
  std::string vars;
  Field field;
  MonomialOrder order;
  std::string generators;

  RingPtr ring() const { return ring_of(vars, field, order); }
  Ideal make() const { return ideal(ring(), generators); }
};

/// Proper ideals in at most 4 variables with generators of degree at most 4.
std::vector<CorpusIdeal> ideal_corpus();

/// Monomial ideals in at most 4 variables, given as raw generator text.
std::vector<CorpusIdeal> monomial_corpus();

/// Random polynomial with up to `max_terms` terms of degree <= max_degree and
/// integer coefficients in [-bound, bound].
Polynomial random_poly(const RingPtr& ring, unsigned max_degree, unsigned max_terms, long bound,
                       std::mt19937_64& rng);

/// sum h_i f_i with random cofactors of degree <= cofactor_degree.
Polynomial random_combination(const Ideal& ideal, unsigned cofactor_degree, std::mt19937_64& rng);

/// Brute-force membership: row-reduces span{ m * f_i : deg m <= cofactor_degree }
/// over the coefficient field and tests whether f lies in that span.
class SpanOracle {
 public:
  SpanOracle(const Ideal& ideal, unsigned cofactor_degree);
  bool contains(const Polynomial& f) const;

 private:
  std::vector<Coefficient> to_vector(const Polynomial& f) const;
  void reduce(std::vector<Coefficient>& v) const;

  RingPtr ring_;
  unsigned max_degree_ = 0;
  std::vector<Monomial> columns_;
  // pivot column -> normalized row (pivot entry 1)
  std::vector<std::pair<std::size_t, std::vector<Coefficient>>> pivots_;
};

/// Dimension of k[x]/I for a monomial ideal by exhaustive subset search on
/// the raw generators (a subset U is independent when no generator's
/// support lies inside U).
std::size_t monomial_dimension_oracle(const Ideal& monomial_ideal);

struct RadicalPair {
  const char* vars;
  const char* ideal;
  const char* prime;
};

/// Pairs (I, P) with P prime and Rad(I) = P.
const std::vector<RadicalPair>& radical_pairs();
/// Pairs with I contained in P but Rad(I) strictly smaller than P.
const std::vector<RadicalPair>& radical_non_pairs();

struct CaseDraft {
  std::string field = "Q";  // "Q" or a prime modulus
  std::string vars = "T";
  std::string order = "grevlex";
  std::size_t n = 1, r = 1;
  std::vector<std::string> equations;
  std::vector<std::string> I, m;
  std::optional<std::vector<std::string>> b;
  std::vector<std::string> x, y;
  std::size_t claimed_n = 1;
  bool domain_claim = false;
};

/// Builds a case document from polynomial text and parses it like a case file.
CaseFile make_case(const CaseDraft& draft);

/// The worked X1 - Y1^2 witness: I = (0), m = (T), b = 0, x1 = T^2, y1 = T.
CaseDraft integer_case();
/// The 6X1 - Y1^2 witness with x1 = (1/6)T^2.
CaseDraft sixfold_case();

/// Directory holding the shipped case files.
std::string cases_dir();
/// Every shipped case file, sorted by name.
std::vector<std::string> case_paths();

}  // namespace charp::testing
