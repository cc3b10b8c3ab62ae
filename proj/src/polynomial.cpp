#include "charp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "charp/errors.hpp"

namespace charp {

RingPtr make_ring(Field field, std::vector<std::string> vars, MonomialOrder order) {
  if (!order.permutation().empty() && order.permutation().size() != vars.size())
    throw InvalidArgument("variable order permutation has the wrong length");
  return std::make_shared<const Ring>(Ring{field, std::move(vars), std::move(order)});
}

RingPtr make_ring(Field field, std::size_t nvars, MonomialOrder order) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < nvars; ++i) vars.push_back("x" + std::to_string(i + 1));
  return make_ring(field, std::move(vars), std::move(order));
}

RingPtr with_field(const Ring& ring, Field field) {
  return make_ring(field, ring.vars, ring.order);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b))
    throw AmbientMismatch("operands live in different rings (" + a.field.to_string() + "[" +
                          std::to_string(a.nvars()) + " vars, " + a.order.name() + "] vs " +
                          b.field.to_string() + "[" + std::to_string(b.nvars()) + " vars, " +
                          b.order.name() + "])");
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  for (const Term& t : terms) {
    if (t.mono.nvars() != r.nvars()) throw ArityMismatch("monomial length differs from ring arity");
    if (!t.coeff.same_field(Coefficient::zero(r.field)))
      throw FieldMismatch("coefficient " + t.coeff.to_string() + " is not in " + r.field.to_string());
  }
  std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return r.order.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, const Coefficient& c) {
  Monomial one(ring->nvars());
  return from_terms(std::move(ring), {Term{c, std::move(one)}});
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Coefficient k = Coefficient::from_integer(c, ring->field);
  return constant(std::move(ring), k);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw ArityMismatch("variable index out of range");
  Coefficient one = Coefficient::one(ring->field);
  Monomial m = Monomial::variable(ring->nvars(), index);
  return Polynomial(std::move(ring), {Term{one, std::move(m)}});
}

Polynomial Polynomial::term(RingPtr ring, const Coefficient& c, Monomial m) {
  return from_terms(std::move(ring), {Term{c, std::move(m)}});
}

std::optional<std::uint64_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scale(leading_coefficient().inverse());
}

Polynomial Polynomial::scale(const Coefficient& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.coeff * c, t.mono});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const Coefficient& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.coeff * c, t.mono * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::sub_mul_term(const Coefficient& c, const Monomial& m,
                                    const Polynomial& g) const {
  require_same_ring(*ring_, *g.ring_);
  if (c.is_zero()) return *this;
  const MonomialOrder& order = ring_->order;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    if (a == terms_.end()) {
      out.push_back(Term{-(b->coeff * c), std::move(bm)});
      ++b;
      continue;
    }
    auto cmp = order.compare(a->mono, bm);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(Term{-(b->coeff * c), std::move(bm)});
      ++b;
    } else {
      Coefficient s = a->coeff - b->coeff * c;
      if (!s.is_zero()) out.push_back(Term{std::move(s), std::move(bm)});
      ++a;
      ++b;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Coefficient Polynomial::evaluate(std::span<const Coefficient> point) const {
  if (point.size() != ring_->nvars()) throw ArityMismatch("point has the wrong number of coordinates");
  Coefficient acc = Coefficient::zero(ring_->field);
  for (const Term& t : terms_) {
    Coefficient v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (Monomial::Exponent k = 0; k < t.mono[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

Coefficient Polynomial::coefficient_of(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return Coefficient::zero(ring_->field);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{-t.coeff, t.mono});
  return Polynomial(ring_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return a.sub_mul_term(-Coefficient::one(a.ring().field), Monomial(a.ring().nvars()), b);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a.sub_mul_term(Coefficient::one(a.ring().field), Monomial(a.ring().nvars()), b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back(Term{s.coeff * t.coeff, s.mono * t.mono});
  return Polynomial::from_terms(a.ring_, std::move(prod));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring(), b.ring());
  return a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    std::string c;
    bool negative = false;
    if (t.coeff.is_rational()) {
      mpq_class q = t.coeff.rational_value();
      negative = sgn(q) < 0;
      c = mpq_class(abs(q)).get_str();
    } else {
      c = t.coeff.to_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

bool term_list_less(const Polynomial& a, const Polynomial& b) {
  const MonomialOrder& order = a.ring().order;
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    auto c = order.compare(x[i].mono, y[i].mono);
    if (c != 0) return c < 0;
    std::string cx = x[i].coeff.to_string(), cy = y[i].coeff.to_string();
    if (cx != cy) return cx < cy;
  }
  return x.size() < y.size();
}

namespace {

Polynomial substitute_into(const Polynomial& f, std::span<const Polynomial> images,
                           const RingPtr& target) {
  if (f.ring().nvars() != images.size())
    throw ArityMismatch("substitution expects " + std::to_string(f.ring().nvars()) +
                        " images, got " + std::to_string(images.size()));
  for (const Polynomial& g : images) require_same_ring(*target, g.ring());
  // powers[i][e] caches images[i]^e.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const Term& t : f.terms()) {
    Coefficient c;
    if (t.coeff.is_rational()) {
      if (!t.coeff.is_integer())
        throw InvalidArgument("substitution source has non-integer coefficient " + t.coeff.to_string());
      c = Coefficient::from_integer(t.coeff.rational_value().get_num(), target->field);
    } else {
      if (!t.coeff.same_field(Coefficient::zero(target->field)))
        throw FieldMismatch("substitution source and target fields differ");
      c = t.coeff;
    }
    if (c.is_zero()) continue;
    Polynomial piece = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i] > 0) piece *= power(i, t.mono[i]);
    result += piece;
  }
  return result;
}

}  // namespace

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
  if (images.empty()) {
    if (f.ring().nvars() != 0) throw ArityMismatch("substitution needs images");
    throw ArityMismatch("substitution into a ring without variables needs a target ring");
  }
  return substitute_into(f, images, images.front().ring_ptr());
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images,
                      const RingPtr& target) {
  return substitute_into(f, images, target);
}

Polynomial reduce_coeffs_mod_p(const Polynomial& f, std::uint64_t p) {
  Field fp = Field::prime(p);
  if (f.ring().field == fp) return f;
  return reduce_coeffs_mod_p(f, with_field(f.ring(), fp));
}

Polynomial reduce_coeffs_mod_p(const Polynomial& f, const RingPtr& target) {
  const Field fp = target->field;
  if (!fp.is_prime_field() || target->nvars() != f.ring().nvars() || !(target->order == f.ring().order))
    throw AmbientMismatch("reduction target must be an F_p ring of the same shape");
  const std::uint64_t p = fp.modulus();
  if (f.ring().field.is_prime_field()) {
    if (f.ring().field == fp) return Polynomial::from_terms(target, f.terms());
    throw FieldMismatch("cannot reduce a polynomial over " + f.ring().field.to_string() + " modulo " +
                        std::to_string(p));
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    const mpq_class& q = t.coeff.rational_value();
    if (mpz_divisible_ui_p(q.get_den_mpz_t(), p))
      throw BadPrime(p, "divides the denominator of coefficient " + q.get_str());
    out.push_back(Term{Coefficient::from_integer(q.get_num(), fp) /
                           Coefficient::from_integer(q.get_den(), fp),
                       t.mono});
  }
  return Polynomial::from_terms(target, std::move(out));
}

// ---------------------------------------------------------------------------
// Text parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        Polynomial d = factor();
        if (d.is_zero()) fail("division by zero");
        if (!d.is_unit()) fail("only division by a nonzero constant is supported");
        acc = acc.scale(d.leading_coefficient().inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail("floating-point literals are not exact");
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return Polynomial::constant(ring_, Coefficient::from_integer(n, ring_->field));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& vars = ring_->vars;
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, static_cast<std::size_t>(it - vars.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    int depth = 0;
    std::size_t close = std::string_view::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) {
        close = i;
        break;
      }
    }
    if (close == text.size() - 1) text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Polynomial> out;
  if (text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string_view piece = trim(text.substr(start, i - start));
      if (piece.empty()) throw ParseError("empty generator in '" + std::string(text) + "'");
      out.push_back(parse_polynomial(piece, ring));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    } else if (std::isdigit(c)) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace charp
