#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "charp/errors.hpp"
#include "charp/predicates.hpp"

namespace charp {

/// Equations F_a(X_1..X_n, Y_1..Y_r) with integer coefficients, stored as
/// polynomials over Q in n + r variables.
struct DiophantineSystem {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Polynomial> equations;
};

/// Semi-parametric witness (S = k[T]/I, m, b, x, y) for a system.
struct Witness {
  RingPtr ring;
  std::vector<Polynomial> ideal_gens;
  std::vector<Polynomial> max_gens;
  std::optional<std::vector<Coefficient>> point;
  std::vector<Polynomial> x_images;
  std::vector<Polynomial> y_images;
  std::size_t claimed_n = 0;
  bool domain_claim = false;
};

struct VerifyCaps {
  unsigned exponent_cap = 16;
  unsigned probe_trials = 200;
  unsigned probe_degree = 2;
  std::uint64_t seed = 0;
};

enum class Condition3 { Passed, Failed, NotCertified };

struct VerificationResult {
  /// Rad((x) + I) = m.
  RadicalResult condition1;
  /// F_a(x, y) = 0 in S, one entry per equation.
  std::vector<bool> condition2;
  Condition3 condition3 = Condition3::NotCertified;
  std::size_t computed_n = 0;
  std::size_t claimed_n = 0;
  std::optional<ProbeResult> prime_probe;
  /// Over I, m, x and y together.
  ComplexityReport complexity;

  bool height_ok() const { return computed_n == claimed_n; }
  bool condition2_ok() const;
  bool passed() const;
};

/// Checks the witness conditions in the witness's own field. Throws
/// NotContained when I is not inside m, ArityMismatch on shape errors and
/// UnitIdeal when I or m is the unit ideal.
VerificationResult verify_witness(const DiophantineSystem& sys, const Witness& w,
                                  const VerifyCaps& caps = {});

enum class BadReason { Denominator, LeadingCoefficient };

std::string to_string(BadReason reason);

/// Primes at which the characteristic-zero witness cannot be reduced
/// faithfully, with the reasons found. A sound over-approximation.
std::map<mpz_class, std::set<BadReason>> bad_primes(const DiophantineSystem& sys, const Witness& w);

/// Prime factors of |n| (n != 0), ascending and without repetition.
std::vector<mpz_class> prime_factors(const mpz_class& n);

/// Coefficientwise reduction of a witness over Q into F_p. Throws BadPrime
/// (denominator or leading-coefficient collapse) or DegenerateGenerator.
Witness reduce_witness_mod_p(const Witness& w, std::uint64_t p);

/// Primes in [lo, hi]; empty when lo > hi.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

enum class PrimeStatus { Pass, Fail, Unresolved, Error };

std::string to_string(PrimeStatus status);

struct PrimeOutcome {
  std::uint64_t prime = 0;
  PrimeStatus status = PrimeStatus::Error;
  std::optional<VerificationResult> result;
  std::string error;
};

struct SweepReport {
  std::uint64_t lo = 0, hi = 0;
  /// Bad primes inside the swept list.
  std::map<std::uint64_t, std::set<BadReason>> bad_primes;
  std::vector<PrimeOutcome> per_prime;  // ascending by prime
  std::optional<std::uint64_t> uniform_d;
  std::uint64_t char0_d = 0;
  VerificationResult char0;

  bool all_passed() const;
};

/// Raised when the characteristic-zero witness does not verify.
class SweepRefused : public Error {
 public:
  explicit SweepRefused(VerificationResult r)
      : Error("characteristic-zero verification failed; sweep refused"), result_(std::move(r)) {}
  const VerificationResult& result() const { return result_; }

 private:
  VerificationResult result_;
};

/// Reduces and re-verifies the witness at every listed prime outside the bad
/// set. Work runs on `jobs` threads; the report is ordered by prime and does
/// not depend on `jobs`.
SweepReport sweep(const DiophantineSystem& sys, const Witness& w,
                  const std::vector<std::uint64_t>& primes, const VerifyCaps& caps = {},
                  unsigned jobs = 1);

/// All F_p-rational zeros of the ideal's generators. Throws BudgetExceeded
/// when p^v exceeds `budget`.
std::vector<std::vector<Coefficient>> search_witness_points(const Ideal& ideal,
                                                            std::uint64_t budget = 1000000);

}  // namespace charp
