#include "charp/predicates.hpp"

#include <algorithm>
#include <random>

#include "charp/errors.hpp"

namespace charp {

ComplexityReport complexity(std::size_t nvars, std::span<const Polynomial> polys) {
  ComplexityReport r;
  r.nvars = nvars;
  for (const Polynomial& p : polys) {
    if (p.is_zero()) continue;
    r.max_degree = std::max(r.max_degree, *p.degree());
    ++r.generator_count;
  }
  r.complexity = std::max<std::uint64_t>(nvars, r.max_degree);
  return r;
}

ComplexityReport complexity(const Ideal& ideal) {
  return complexity(ideal.ring().nvars(), ideal.nonzero_generators());
}

std::size_t dimension(const Ideal& ideal) {
  auto gb = groebner_basis(ideal);
  if (gb->is_unit()) throw UnitIdeal();
  const std::size_t n = ideal.ring().nvars();
  if (n > 24) throw InvalidArgument("dimension search supports at most 24 variables");
  std::vector<std::uint32_t> supports;
  for (const Polynomial& g : gb->basis()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading_monomial()[i] != 0) s |= 1u << i;
    supports.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    auto size = static_cast<std::size_t>(__builtin_popcount(subset));
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

HeightResult height_poly(const Ideal& ideal) {
  HeightResult r;
  r.dimension = dimension(ideal);
  r.height = ideal.ring().nvars() - r.dimension;
  return r;
}

std::size_t height_in_quotient(const Ideal& m, const Ideal& ideal) {
  require_same_ring(m.ring(), ideal.ring());
  if (!ideal_contains(ideal, m)) throw NotContained("I is not contained in m");
  std::size_t hm = height_poly(m).height;
  std::size_t hi = height_poly(ideal).height;
  // I in m forces ht(I) <= ht(m).
  return hm - hi;
}

RadicalResult radical_equals(const Ideal& ideal, const Ideal& prime, unsigned exponent_cap) {
  require_same_ring(ideal.ring(), prime.ring());
  if (exponent_cap == 0) throw InvalidArgument("exponent cap must be positive");
  RadicalResult r;
  r.cap = exponent_cap;
  auto prime_gb = groebner_basis(prime);
  for (const Polynomial& g : ideal.nonzero_generators()) {
    if (!prime_gb->contains(g)) {
      r.verdict = RadicalVerdict::NotContainedInP;
      r.witness = g;
      return r;
    }
  }
  auto gb = groebner_basis(ideal);
  for (const Polynomial& g : prime.generators()) {
    // residue tracks g^e modulo I.
    Polynomial residue = gb->reduce(g);
    unsigned found = 0;
    for (unsigned e = 1; e <= exponent_cap; ++e) {
      if (e > 1) residue = gb->reduce(residue * g);
      if (residue.is_zero()) {
        found = e;
        break;
      }
    }
    if (!found) {
      r.verdict = RadicalVerdict::GeneratorPowerNotFound;
      r.witness = g;
      r.exponents.clear();
      return r;
    }
    r.exponents.push_back(found);
  }
  return r;
}

namespace {

/// Sparse random polynomial: 1-3 distinct monomials with coefficients from
/// {1, -1, 2, -2}. Uses raw engine output so results do not depend on the
/// standard library's distribution implementations.
Polynomial random_sparse(const RingPtr& ring, const std::vector<Monomial>& monos,
                         std::mt19937_64& rng) {
  static constexpr long kSamples[] = {1, -1, 2, -2};
  std::size_t max_terms = std::min<std::size_t>(3, monos.size());
  std::size_t count = 1 + rng() % max_terms;
  std::vector<std::size_t> picked;
  while (picked.size() < count) {
    std::size_t k = rng() % monos.size();
    if (std::find(picked.begin(), picked.end(), k) == picked.end()) picked.push_back(k);
  }
  std::vector<Term> terms;
  for (std::size_t k : picked)
    terms.push_back(Term{Coefficient::from_integer(kSamples[rng() % 4], ring->field), monos[k]});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

constexpr std::size_t kProbePool = 64;

ProbeResult prime_probe(const Ideal& ideal, unsigned degree_bound, unsigned trials,
                        std::uint64_t seed) {
  if (degree_bound == 0) throw InvalidArgument("probe degree bound must be positive");
  auto gb = groebner_basis(ideal);
  if (gb->is_unit()) throw UnitIdeal();
  const RingPtr& ring = ideal.ring_ptr();
  // Nonconstant monomials only: constants are units and never witness anything.
  std::vector<Monomial> monos;
  for (Monomial& m : monomials_up_to(ring->nvars(), degree_bound, ring->order))
    if (!m.is_one()) monos.push_back(std::move(m));
  ProbeResult r;
  r.trials = trials;
  r.trials_used = trials;
  if (monos.empty()) return r;
  std::mt19937_64 rng(seed);
  // Every sampled non-member is paired with the earlier ones kept in a
  // bounded pool, so a trial tests many products instead of one.
  std::vector<Polynomial> pool;
  for (unsigned t = 0; t < trials; ++t) {
    Polynomial f = random_sparse(ring, monos, rng);
    if (gb->contains(f)) continue;
    if (gb->contains(f * f)) return ProbeResult{ProbeVerdict::NotPrime, f, f, trials, t + 1};
    for (const Polynomial& g : pool)
      if (gb->contains(f * g)) return ProbeResult{ProbeVerdict::NotPrime, g, f, trials, t + 1};
    if (pool.size() < kProbePool) pool.push_back(std::move(f));
  }
  return r;
}

Ideal point_ideal(const RingPtr& ring, std::span<const Coefficient> point) {
  if (point.size() != ring->nvars()) throw ArityMismatch("point has the wrong number of coordinates");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < point.size(); ++i)
    gens.push_back(Polynomial::variable(ring, i) - Polynomial::constant(ring, point[i]));
  return Ideal(ring, std::move(gens));
}

bool rational_maximal(const Ideal& m, std::span<const Coefficient> point) {
  return ideal_equal(m, point_ideal(m.ring_ptr(), point));
}

}  // namespace charp
