#include "charp/field.hpp"

#include <charconv>

#include "charp/errors.hpp"

namespace charp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (a == 0) throw DivisionByZero();
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& n, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

void require_same_field(const Coefficient& a, const Coefficient& b) {
  if (!a.same_field(b))
    throw FieldMismatch("coefficients over " + a.field().to_string() + " and " +
                        b.field().to_string());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime(p))
    throw InvalidArgument("modulus " + std::to_string(p) + " is not a word-size prime");
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "F_" + std::to_string(modulus_);
}

Coefficient Coefficient::rational(mpq_class q) {
  q.canonicalize();
  return Coefficient(std::move(q));
}

Coefficient Coefficient::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return rational(mpq_class(num, den));
}

Coefficient Coefficient::residue(std::int64_t v, std::uint64_t p) {
  Field::prime(p);
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Coefficient(Residue{static_cast<std::uint64_t>(r), p});
}

Coefficient Coefficient::from_integer(const mpz_class& n, const Field& field) {
  if (field.is_rational()) return Coefficient(mpq_class(n));
  return Coefficient(Residue{reduce_mpz(n, field.modulus()), field.modulus()});
}

Coefficient Coefficient::zero(const Field& field) { return from_integer(0, field); }
Coefficient Coefficient::one(const Field& field) { return from_integer(1, field); }

Coefficient Coefficient::parse(std::string_view text, const Field& field) {
  auto parse_int = [&](std::string_view s, bool allow_sign) -> mpz_class {
    std::string_view digits = s;
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+'))
      digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("empty integer in coefficient '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9')
        throw ParseError("coefficient '" + std::string(text) + "' is not an exact integer or fraction");
    }
    std::string owned(s);
    if (!owned.empty() && owned[0] == '+') owned.erase(0, 1);
    return mpz_class(owned, 10);
  };
  auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash), true);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1), false);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (field.is_rational()) return rational(mpq_class(num, den));
  return from_integer(num, field) / from_integer(den, field);
}

Field Coefficient::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Coefficient::same_field(const Coefficient& other) const {
  if (value_.index() != other.value_.index()) return false;
  if (auto* r = std::get_if<Residue>(&value_))
    return r->modulus == std::get<Residue>(other.value_).modulus;
  return true;
}

bool Coefficient::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Coefficient::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool Coefficient::is_integer() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_den() == 1;
  return true;
}

const mpq_class& Coefficient::rational_value() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("residue has no rational value");
}

std::uint64_t Coefficient::residue_value() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("rational has no residue value");
}

Coefficient Coefficient::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_))
    return Coefficient(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  return Coefficient(mpq_class(-std::get<mpq_class>(value_)));
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (auto* r = std::get_if<Residue>(&value_))
    return Coefficient(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  return Coefficient(mpq_class(1 / std::get<mpq_class>(value_)));
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  require_same_field(a, b);
  if (auto* r = std::get_if<Residue>(&a.value_)) {
    std::uint64_t s = r->value + std::get<Residue>(b.value_).value;
    if (s >= r->modulus) s -= r->modulus;
    return Coefficient(Residue{s, r->modulus});
  }
  return Coefficient(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  require_same_field(a, b);
  if (auto* r = std::get_if<Residue>(&a.value_))
    return Coefficient(
        Residue{mul_mod(r->value, std::get<Residue>(b.value_).value, r->modulus), r->modulus});
  return Coefficient(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }

std::string Coefficient::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace charp
