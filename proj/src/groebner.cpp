#include "charp/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>

#include "charp/errors.hpp"

namespace charp {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (Polynomial& g : generators) {
    require_same_ring(*ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  if (gens_.empty()) gens_.emplace_back(ring_);
}

std::span<const Polynomial> Ideal::nonzero_generators() const {
  if (is_zero_ideal()) return {};
  return gens_;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring_ptr(), std::move(gens));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const Polynomial& g : divisors) require_same_ring(f.ring(), g.ring());
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      p = p.sub_mul_term(lt.coeff / divisor->leading_coefficient(),
                         lt.mono / divisor->leading_monomial(), *divisor);
    } else {
      remainder.push_back(lt);
      Polynomial lead = Polynomial::term(p.ring_ptr(), lt.coeff, lt.mono);
      p = p - lead;
    }
  }
  // Remainder terms were emitted in descending order already.
  return Polynomial::from_terms(f.ring_ptr(), std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial a = f.mul_term(f.leading_coefficient().inverse(), l / f.leading_monomial());
  return a.sub_mul_term(g.leading_coefficient().inverse(), l / g.leading_monomial(), g);
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  require_same_ring(*ring_, f.ring());
  return normal_form(f, basis_);
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

/// Interreduces a Groebner basis into the unique reduced one.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, const MonomialOrder& order) {
  for (Polynomial& p : g) p = p.monic();
  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& p : g) {
    bool redundant = false;
    for (const Polynomial& q : minimal)
      if (q.leading_monomial().divides(p.leading_monomial())) redundant = true;
    if (!redundant) minimal.push_back(p);
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(l < k ? reduced[l] : minimal[l]);
    reduced.push_back(normal_form(minimal[k], others).monic());
  }
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const GroebnerLimits& limits) {
  const RingPtr& ring = ideal.ring_ptr();
  const MonomialOrder& order = ring->order;
  std::vector<Polynomial> basis;
  for (const Polynomial& g : ideal.nonzero_generators()) {
    if (g.is_unit()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    basis.push_back(g.monic());
  }
  if (basis.empty()) return GroebnerBasis(ring, {});

  // Pairs still to be treated, keyed by (i, j) with i < j.
  std::map<std::pair<std::size_t, std::size_t>, Monomial> pending;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.emplace(std::make_pair(i, j),
                      basis[i].leading_monomial().lcm(basis[j].leading_monomial()));
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  // Normal strategy: smallest lcm by degree, then by the ring order, then by index.
  auto select = [&]() {
    auto best = pending.begin();
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const Monomial& a = it->second;
      const Monomial& b = best->second;
      if (a.degree() != b.degree()) {
        if (a.degree() < b.degree()) best = it;
      } else if (order.compare(a, b) < 0) {
        best = it;
      }
    }
    return best;
  };

  std::size_t processed = 0;
  while (!pending.empty()) {
    auto it = select();
    auto [i, j] = it->first;
    Monomial lcm = it->second;
    pending.erase(it);
    if (++processed > limits.max_pairs)
      throw DegreeCapExceeded("Groebner pair budget of " + std::to_string(limits.max_pairs) +
                              " exhausted");
    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    if (li.coprime(lj)) continue;  // product criterion
    bool chain = false;            // chain criterion
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = basis[k].leading_monomial().divides(lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;
    Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    if (r.is_unit()) return GroebnerBasis(ring, {Polynomial::constant(ring, 1)});
    if (*r.degree() > limits.max_degree)
      throw DegreeCapExceeded("Groebner basis element of degree " + std::to_string(*r.degree()) +
                              " exceeds the cap " + std::to_string(limits.max_degree));
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }
  return GroebnerBasis(ring, reduce_basis(std::move(basis), order));
}

namespace {

std::string cache_key(const Ideal& ideal) {
  const Ring& r = ideal.ring();
  std::string key = r.field.to_string() + "|" + std::to_string(r.nvars()) + "|" + r.order.name();
  for (std::size_t v : r.order.permutation()) key += "," + std::to_string(v);
  for (const Polynomial& g : ideal.generators()) {
    key += "|";
    for (const Term& t : g.terms()) {
      key += t.coeff.to_string() + ":";
      for (auto e : t.mono.exponents()) key += std::to_string(e) + ".";
      key += ";";
    }
  }
  return key;
}

class BasisCache {
 public:
  std::shared_ptr<const GroebnerBasis> get(const Ideal& ideal) {
    std::string key = cache_key(ideal);
    {
      std::lock_guard lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return rebind(it->second, ideal);
    }
    auto computed = std::make_shared<const GroebnerBasis>(buchberger(ideal));
    std::lock_guard lock(mutex_);
    if (entries_.size() >= kMaxEntries) entries_.clear();
    auto [it, inserted] = entries_.emplace(std::move(key), computed);
    return rebind(it->second, ideal);
  }

 private:
  static constexpr std::size_t kMaxEntries = 4096;

  // Cached bases may come from a structurally identical ring object with
  // different variable names; hand back one bound to the caller's ring.
  static std::shared_ptr<const GroebnerBasis> rebind(std::shared_ptr<const GroebnerBasis> gb,
                                                     const Ideal& ideal) {
    if (gb->ring_ptr() == ideal.ring_ptr() || gb->ring_ptr()->vars == ideal.ring().vars) return gb;
    std::vector<Polynomial> moved;
    for (const Polynomial& p : gb->basis())
      moved.push_back(Polynomial::from_terms(ideal.ring_ptr(), p.terms()));
    return std::make_shared<const GroebnerBasis>(ideal.ring_ptr(), std::move(moved));
  }

  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const GroebnerBasis>> entries_;
};

BasisCache& cache() {
  static BasisCache instance;
  return instance;
}

}  // namespace

std::shared_ptr<const GroebnerBasis> groebner_basis(const Ideal& ideal) {
  return cache().get(ideal);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal) {
  require_same_ring(f.ring(), ideal.ring());
  return groebner_basis(ideal)->contains(f);
}

bool ideal_contains(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring());
  auto gb = groebner_basis(j);
  for (const Polynomial& g : i.nonzero_generators())
    if (!gb->contains(g)) return false;
  return true;
}

bool ideal_equal(const Ideal& i, const Ideal& j) {
  require_same_ring(i.ring(), j.ring());
  const auto gi = groebner_basis(i);
  const auto gj = groebner_basis(j);
  const auto& a = gi->basis();
  const auto& b = gj->basis();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].terms() != b[k].terms()) return false;
  return true;
}

bool quotient_is_zero(const Polynomial& f, const Ideal& ideal) { return ideal_member(f, ideal); }

}  // namespace charp
