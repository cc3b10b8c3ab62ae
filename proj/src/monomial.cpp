#include "charp/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "charp/errors.hpp"

namespace charp {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_.at(index) = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  q.degree_ = degree_ - divisor.degree_;
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial p(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) p.exps_[i] += other.exps_[i];
  p.degree_ = degree_ + other.degree_;
  return p;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), perm_(std::move(permutation)) {
  std::vector<std::size_t> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw InvalidArgument("variable order is not a permutation");
  bool identity = true;
  for (std::size_t i = 0; i < perm_.size(); ++i) identity = identity && perm_[i] == i;
  if (identity) perm_.clear();
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "grevlex") return grevlex();
  throw ParseError("unknown monomial order '" + name + "'");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  if (b.nvars() != n) throw ArityMismatch("comparing monomials of different lengths");
  if (!perm_.empty() && perm_.size() != n)
    throw ArityMismatch("variable order does not match monomial length");
  if (kind_ == OrderKind::lex) {
    for (std::size_t r = 0; r < n; ++r) {
      auto c = a[var(r)] <=> b[var(r)];
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Equal degree: the monomial with the smaller exponent in the last
  // differing variable is larger.
  for (std::size_t r = n; r-- > 0;) {
    auto c = b[var(r)] <=> a[var(r)];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
  return a.kind_ == b.kind_ && a.perm_ == b.perm_;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree,
                                      const MonomialOrder& order) {
  std::vector<Monomial> out;
  std::vector<Monomial::Exponent> e(nvars, 0);
  // Odometer over exponent vectors with bounded total degree.
  auto rec = [&](auto&& self, std::size_t i, unsigned budget) -> void {
    if (i == nvars) {
      out.emplace_back(e);
      return;
    }
    for (unsigned k = 0; k <= budget; ++k) {
      e[i] = k;
      self(self, i + 1, budget - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return out;
}

}  // namespace charp
