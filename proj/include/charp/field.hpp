#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace charp {

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// base set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Coefficient field descriptor: the rationals, or F_p for a word-size prime.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is a prime below 2^62.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  bool is_prime_field() const { return modulus_ != 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return modulus_; }
  std::uint64_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Coefficient;
  explicit Field(std::uint64_t m) : modulus_(m) {}
  std::uint64_t modulus_;
};

struct Residue {
  std::uint64_t value;
  std::uint64_t modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An exact element of Q or F_p. Rationals are kept in lowest terms with a
/// positive denominator; residues in [0, p).
class Coefficient {
 public:
  /// Zero of Q.
  Coefficient() : value_(mpq_class(0)) {}

  static Coefficient rational(mpq_class q);
  static Coefficient rational(long num, long den = 1);
  static Coefficient residue(std::int64_t v, std::uint64_t p);
  /// Image of an integer in the given field.
  static Coefficient from_integer(const mpz_class& n, const Field& field);
  static Coefficient zero(const Field& field);
  static Coefficient one(const Field& field);

  /// Parses "a", "-a", "a/b" exactly. Decimal points and exponents are
  /// rejected. Over F_p a fraction is mapped to a * b^-1.
  static Coefficient parse(std::string_view text, const Field& field);

  Field field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  bool is_zero() const;
  bool is_one() const;
  /// True for rationals with denominator 1, and always for residues.
  bool is_integer() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue_value() const;

  Coefficient operator-() const;
  Coefficient inverse() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

  friend bool operator==(const Coefficient& a, const Coefficient& b);
  /// Same field as `other` without materializing Field descriptors.
  bool same_field(const Coefficient& other) const;

  /// "num/den" (or "num" when the denominator is 1) for Q, the canonical
  /// representative for F_p.
  std::string to_string() const;

 private:
  explicit Coefficient(std::variant<mpq_class, Residue> v) : value_(std::move(v)) {}
  std::variant<mpq_class, Residue> value_;
};

}  // namespace charp
