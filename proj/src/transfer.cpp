#include "charp/transfer.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace charp {

namespace {

void require_shapes(const DiophantineSystem& sys, const Witness& w) {
  if (!w.ring) throw ArityMismatch("witness has no ring");
  if (w.x_images.size() != sys.n)
    throw ArityMismatch("witness has " + std::to_string(w.x_images.size()) + " x-images, system expects " +
                        std::to_string(sys.n));
  if (w.y_images.size() != sys.r)
    throw ArityMismatch("witness has " + std::to_string(w.y_images.size()) + " y-images, system expects " +
                        std::to_string(sys.r));
  for (const Polynomial& f : sys.equations)
    if (f.ring().nvars() != sys.n + sys.r)
      throw ArityMismatch("equation " + f.to_string() + " is not in n + r variables");
  auto check = [&](const std::vector<Polynomial>& ps) {
    for (const Polynomial& p : ps) require_same_ring(*w.ring, p.ring());
  };
  check(w.ideal_gens);
  check(w.max_gens);
  check(w.x_images);
  check(w.y_images);
  if (w.point && w.point->size() != w.ring->nvars())
    throw ArityMismatch("point b has the wrong number of coordinates");
}

std::vector<Polynomial> all_polys(const Witness& w) {
  std::vector<Polynomial> all = w.ideal_gens;
  all.insert(all.end(), w.max_gens.begin(), w.max_gens.end());
  all.insert(all.end(), w.x_images.begin(), w.x_images.end());
  all.insert(all.end(), w.y_images.begin(), w.y_images.end());
  return all;
}

}  // namespace

bool VerificationResult::condition2_ok() const {
  return std::all_of(condition2.begin(), condition2.end(), [](bool b) { return b; });
}

bool VerificationResult::passed() const {
  return condition1.verdict == RadicalVerdict::Equal && condition2_ok() && height_ok() &&
         condition3 != Condition3::Failed;
}

VerificationResult verify_witness(const DiophantineSystem& sys, const Witness& w,
                                  const VerifyCaps& caps) {
  require_shapes(sys, w);
  const RingPtr& ring = w.ring;
  Ideal ideal(ring, w.ideal_gens);
  Ideal m(ring, w.max_gens);
  if (!ideal_contains(ideal, m)) throw NotContained("I is not contained in m");

  VerificationResult r;
  r.claimed_n = w.claimed_n;
  r.condition1 = radical_equals(ideal_sum(Ideal(ring, w.x_images), ideal), m, caps.exponent_cap);

  std::vector<Polynomial> images = w.x_images;
  images.insert(images.end(), w.y_images.begin(), w.y_images.end());
  for (const Polynomial& f : sys.equations)
    r.condition2.push_back(quotient_is_zero(substitute(f, images, ring), ideal));

  r.computed_n = height_in_quotient(m, ideal);

  if (w.point) {
    bool ok = rational_maximal(m, *w.point);
    for (const Polynomial& g : ideal.nonzero_generators()) ok = ok && g.evaluate(*w.point).is_zero();
    r.condition3 = ok ? Condition3::Passed : Condition3::Failed;
  }
  if (w.domain_claim)
    r.prime_probe = prime_probe(ideal, caps.probe_degree, caps.probe_trials, caps.seed);

  auto polys = all_polys(w);
  r.complexity = complexity(ring->nvars(), polys);
  return r;
}

std::string to_string(BadReason reason) {
  return reason == BadReason::Denominator ? "denominator" : "leading-coefficient";
}

std::vector<mpz_class> prime_factors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class rest = abs(n);
  if (rest == 0) return out;
  for (unsigned long q = 2; q < 100000 && rest > 1; ++q) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      out.emplace_back(q);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    }
  }
  // Split what is left with Pollard's rho.
  std::vector<mpz_class> stack;
  if (rest > 1) stack.push_back(rest);
  while (!stack.empty()) {
    mpz_class c = stack.back();
    stack.pop_back();
    if (mpz_probab_prime_p(c.get_mpz_t(), 40)) {
      out.push_back(c);
      continue;
    }
    mpz_class d = c;
    for (unsigned long shift = 1; d == c; ++shift) {
      mpz_class x = 2, y = 2;
      d = 1;
      auto step = [&](mpz_class& v) {
        v = (v * v + shift) % c;
      };
      while (d == 1) {
        step(x);
        step(y);
        step(y);
        mpz_class diff = abs(x - y);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), c.get_mpz_t());
      }
    }
    stack.push_back(d);
    stack.push_back(c / d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<mpz_class, std::set<BadReason>> bad_primes(const DiophantineSystem& sys, const Witness& w) {
  require_shapes(sys, w);
  std::map<mpz_class, std::set<BadReason>> out;
  if (!w.ring->field.is_rational()) return out;
  auto note = [&](const mpz_class& n, BadReason why) {
    for (const mpz_class& p : prime_factors(n)) out[p].insert(why);
  };
  for (const Polynomial& f : all_polys(w))
    for (const Term& t : f.terms()) note(t.coeff.rational_value().get_den(), BadReason::Denominator);
  if (w.point)
    for (const Coefficient& c : *w.point) note(c.rational_value().get_den(), BadReason::Denominator);
  // Generators whose leading coefficient can vanish: I, m and the x-images
  // that generate (x) + I.
  auto leading = [&](const std::vector<Polynomial>& ps) {
    for (const Polynomial& f : ps)
      if (!f.is_zero()) note(f.leading_coefficient().rational_value().get_num(), BadReason::LeadingCoefficient);
  };
  leading(w.ideal_gens);
  leading(w.max_gens);
  leading(w.x_images);
  return out;
}

Witness reduce_witness_mod_p(const Witness& w, std::uint64_t p) {
  const Field fp = Field::prime(p);
  if (!w.ring->field.is_rational()) throw FieldMismatch("only witnesses over Q can be reduced");
  RingPtr target = with_field(*w.ring, fp);
  auto reduce_all = [&](const std::vector<Polynomial>& ps) {
    std::vector<Polynomial> out;
    for (const Polynomial& f : ps) out.push_back(reduce_coeffs_mod_p(f, target));
    return out;
  };
  Witness out{target,
              reduce_all(w.ideal_gens),
              reduce_all(w.max_gens),
              std::nullopt,
              reduce_all(w.x_images),
              reduce_all(w.y_images),
              w.claimed_n,
              w.domain_claim};
  if (w.point) {
    std::vector<Coefficient> b;
    for (const Coefficient& c : *w.point) {
      const mpq_class& q = c.rational_value();
      if (mpz_divisible_ui_p(q.get_den_mpz_t(), p))
        throw BadPrime(p, "divides the denominator of point coordinate " + q.get_str());
      b.push_back(Coefficient::from_integer(q.get_num(), fp) / Coefficient::from_integer(q.get_den(), fp));
    }
    out.point = std::move(b);
  }
  auto degenerate = [&](const std::vector<Polynomial>& before, const std::vector<Polynomial>& after) {
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (before[i].is_zero() || before[i].is_unit()) continue;
      if (after[i].is_zero() || after[i].is_unit()) throw DegenerateGenerator(p, before[i].to_string());
    }
  };
  degenerate(w.ideal_gens, out.ideal_gens);
  degenerate(w.max_gens, out.max_gens);
  auto collapse = [&](const std::vector<Polynomial>& before, const std::vector<Polynomial>& after) {
    for (std::size_t i = 0; i < before.size(); ++i) {
      if (before[i].is_zero()) continue;
      if (after[i].is_zero() || !(after[i].leading_monomial() == before[i].leading_monomial()))
        throw BadPrime(p, "divides the leading coefficient of " + before[i].to_string());
    }
  };
  collapse(w.ideal_gens, out.ideal_gens);
  collapse(w.max_gens, out.max_gens);
  collapse(w.x_images, out.x_images);
  return out;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 2); q <= hi; ++q) {
    if (is_prime(q)) out.push_back(q);
    if (q == UINT64_MAX) break;
  }
  return out;
}

std::string to_string(PrimeStatus status) {
  switch (status) {
    case PrimeStatus::Pass: return "pass";
    case PrimeStatus::Fail: return "fail";
    case PrimeStatus::Unresolved: return "unresolved";
    case PrimeStatus::Error: return "error";
  }
  return "error";
}

bool SweepReport::all_passed() const {
  return std::all_of(per_prime.begin(), per_prime.end(),
                     [](const PrimeOutcome& o) { return o.status == PrimeStatus::Pass; });
}

namespace {

PrimeOutcome run_prime(const DiophantineSystem& sys, const Witness& w, std::uint64_t p,
                       const VerifyCaps& caps) {
  PrimeOutcome o;
  o.prime = p;
  try {
    Witness reduced = reduce_witness_mod_p(w, p);
    VerificationResult r = verify_witness(sys, reduced, caps);
    if (r.passed()) {
      o.status = PrimeStatus::Pass;
    } else if (r.condition1.verdict == RadicalVerdict::Equal && r.condition2_ok() && r.height_ok()) {
      // Only the F_p-rational certificate is missing; the witness may need
      // an extension of the prime field.
      o.status = PrimeStatus::Unresolved;
    } else {
      o.status = PrimeStatus::Fail;
    }
    o.result = std::move(r);
  } catch (const Error& e) {
    o.status = PrimeStatus::Error;
    o.error = e.what();
  }
  return o;
}

}  // namespace

SweepReport sweep(const DiophantineSystem& sys, const Witness& w,
                  const std::vector<std::uint64_t>& primes, const VerifyCaps& caps, unsigned jobs) {
  SweepReport report;
  report.char0 = verify_witness(sys, w, caps);
  if (!report.char0.passed()) throw SweepRefused(report.char0);
  report.char0_d = report.char0.complexity.complexity;

  std::vector<std::uint64_t> list = primes;
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (!list.empty()) {
    report.lo = list.front();
    report.hi = list.back();
  }
  auto bad = bad_primes(sys, w);
  std::vector<std::uint64_t> good;
  for (std::uint64_t p : list) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    auto it = bad.find(mpz_class(static_cast<unsigned long>(p)));
    if (it != bad.end()) report.bad_primes[p] = it->second;
    else good.push_back(p);
  }

  report.per_prime.resize(good.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < good.size(); k = next++)
      report.per_prime[k] = run_prime(sys, w, good[k], caps);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(good.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const PrimeOutcome& o : report.per_prime) {
    if (!o.result) continue;
    std::uint64_t d = o.result->complexity.complexity;
    report.uniform_d = report.uniform_d ? std::max(*report.uniform_d, d) : d;
  }
  return report;
}

std::vector<std::vector<Coefficient>> search_witness_points(const Ideal& ideal, std::uint64_t budget) {
  const Ring& ring = ideal.ring();
  if (!ring.field.is_prime_field()) throw InvalidArgument("point search needs a prime field");
  const std::uint64_t p = ring.field.modulus();
  const std::size_t n = ring.nvars();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / p) throw BudgetExceeded("p^v exceeds the point budget " + std::to_string(budget));
    total *= p;
  }
  if (total > budget) throw BudgetExceeded("p^v exceeds the point budget " + std::to_string(budget));
  std::vector<std::vector<Coefficient>> out;
  std::vector<std::uint64_t> digits(n, 0);
  std::vector<Coefficient> point(n, Coefficient::zero(ring.field));
  for (std::uint64_t k = 0; k < total; ++k) {
    for (std::size_t i = 0; i < n; ++i) point[i] = Coefficient::from_integer(static_cast<unsigned long>(digits[i]), ring.field);
    bool zero = true;
    for (const Polynomial& g : ideal.nonzero_generators()) {
      if (!g.evaluate(point).is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) out.push_back(point);
    // Increment the last coordinate first so points come out lexicographically.
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

}  // namespace charp
