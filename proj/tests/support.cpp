#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "charp/errors.hpp"

namespace charp::testing {

RingPtr ring_of(const std::string& vars, const Field& field, MonomialOrder order) {
  std::vector<std::string> names;
  std::stringstream ss(vars);
  std::string v;
  while (std::getline(ss, v, ',')) names.push_back(v);
  return make_ring(field, std::move(names), std::move(order));
}

Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

Ideal ideal(const RingPtr& ring, const std::string& text) {
  return Ideal(ring, parse_polynomial_list(text, ring));
}

std::vector<CorpusIdeal> ideal_corpus() {
  const Field q = Field::rationals();
  const auto grevlex = MonomialOrder::grevlex();
  const auto lex = MonomialOrder::lex();
  return {
      {"x,y", q, grevlex, "(x^2 - y, x)"},
      {"x,y", q, grevlex, "(x*y - 1, x^2 + y^2 - 4)"},
      {"x,y", q, grevlex, "(x^3 - 2*x*y, x^2*y - 2*y^2 + x)"},
      {"x,y,z", q, grevlex, "(x^2 + y^2 + z^2 - 1, x - y, y - z^2)"},
      {"x,y,z", q, grevlex, "(x*y, x*z)"},
      {"x,y", q, grevlex, "(x^2, y)"},
      {"x,y", q, grevlex, "(x - y, 2*y)"},
      {"T1,T2", q, grevlex, "(T1*T2 - 1)"},
      {"x,y", q, grevlex, "(x^2*y + x*y^2 - 1, x*y - x)"},
      {"x,y", q, grevlex, "(y^2 - x^3)"},
      {"x,y", q, grevlex, "(x^2 + y^2 - 1, x - y)"},
      {"x,y,z", q, grevlex, "(x*y - z, x*z - y, y*z - x)"},
      {"x,y,z", q, grevlex, "(x^3 - y^2, x^2*y - z)"},
      {"a,b,c,d", q, grevlex, "(a*b - c*d, a*c - b*d)"},
      {"a,b,c,d", q, grevlex, "(a + b + c + d, a*b + b*c + c*d + d*a, a*b*c + b*c*d + c*d*a + d*a*b, a*b*c*d - 1)"},
      {"x,y", q, grevlex, "(x^4 - y, y^4 - x)"},
      {"x,y", q, grevlex, "(x^2 - 2, y^2 - 3)"},
      {"x,y,z", q, grevlex, "(x*y*z - 1, x + y + z)"},
      {"x,y,z", q, grevlex, "(x^2 - y*z, y^2 - x*z, z^2 - x*y)"},
      {"x,y", q, grevlex, "(x^3, y^3, x*y)"},
      {"x,y", q, grevlex, "(1/2*x^2 - 3*y, 2/3*x*y - 1)"},
      {"x,y,z", q, grevlex, "(x + y + z, x*y + y*z + z*x, x*y*z)"},
      {"a,b,c,d", q, grevlex, "(a^2 - b, b^2 - c, c^2 - d)"},
      {"x,y", q, grevlex, "(x^2 + x*y + 1, y^2 - 1)"},
      {"x", q, grevlex, "(x)"},
      {"x", q, grevlex, "(x^2 - 1, (x - 1)^3)"},
      {"x,y", q, grevlex, "(x^2*y^2 - 1, x^3 - y)"},
      {"x,y,z", q, grevlex, "(x*y - 2, y*z - 3, z*x - 6)"},
      {"x,y,z,w", q, grevlex, "(x*z - y^2, x*w - y*z, y*w - z^2)"},
      {"x,y", q, grevlex, "(x^4 + y^4 - 1, x*y - 1/2)"},
      {"x,y,z", q, lex, "(x^2 - y, y^2 - z, x*z - 1)"},
      {"x,y", q, lex, "(x^2 + y^2 - 1, x*y - 1/4)"},
      {"x,y", Field::prime(5), grevlex, "(x^2 + 1, y - x)"},
      {"x,y", Field::prime(7), grevlex, "(x*y - 3, x^2 + y^2 - 1)"},
      {"x,y", Field::prime(2), grevlex, "(x^2 + x, y^2 + y, x*y + 1)"},
      {"x,y,z", Field::prime(3), grevlex, "(x^3 - x, y^3 - y, x + y + z)"},
      {"x,y,z", Field::prime(101), grevlex, "(x^2*y - z^2, x*y^2 - 1)"},
      {"x,y", Field::prime(11), lex, "(x^3 + y, y^2 - x + 2)"},
  };
}

std::vector<CorpusIdeal> monomial_corpus() {
  const Field q = Field::rationals();
  const auto g = MonomialOrder::grevlex();
  return {
      {"x,y", q, g, "(0)"},
      {"x,y", q, g, "(x)"},
      {"x,y", q, g, "(x*y)"},
      {"x,y,z", q, g, "(x*y, x*z)"},
      {"x,y", q, g, "(x^2, y)"},
      {"x,y", q, g, "(x^3, x*y^2)"},
      {"x,y,z", q, g, "(x*y, y*z, z*x)"},
      {"x,y,z", q, g, "(x^2*y, y^2*z, z^2*x)"},
      {"x,y,z,w", q, g, "(x*y, z*w)"},
      {"x,y,z,w", q, g, "(x*y*z*w)"},
      {"x,y,z,w", q, g, "(x, y^2, z^3)"},
      {"x,y,z,w", q, g, "(x*y, y*z, z*w, w*x)"},
      {"x,y,z,w", q, g, "(x^2, y^2, z^2, w^2)"},
      {"x,y,z,w", q, g, "(x*y*z, y*z*w)"},
      {"x", q, g, "(x^4)"},
      {"x,y,z", q, g, "(x^2*y*z)"},
      {"x,y,z,w", q, g, "(x*z, x*w, y*z, y*w)"},
      {"x,y,z", q, g, "(x^4, y^4, z^4, x*y*z)"},
  };
}

Polynomial random_poly(const RingPtr& ring, unsigned max_degree, unsigned max_terms, long bound,
                       std::mt19937_64& rng) {
  const auto monos = monomials_up_to(ring->nvars(), max_degree, ring->order);
  std::vector<Term> terms;
  const unsigned count = 1 + static_cast<unsigned>(rng() % max_terms);
  for (unsigned k = 0; k < count; ++k) {
    long c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
    terms.push_back(Term{Coefficient::from_integer(c, ring->field), monos[rng() % monos.size()]});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial random_combination(const Ideal& ideal, unsigned cofactor_degree, std::mt19937_64& rng) {
  Polynomial sum(ideal.ring_ptr());
  for (const Polynomial& f : ideal.nonzero_generators())
    sum += random_poly(ideal.ring_ptr(), cofactor_degree, 4, 3, rng) * f;
  return sum;
}

SpanOracle::SpanOracle(const Ideal& ideal, unsigned cofactor_degree) : ring_(ideal.ring_ptr()) {
  std::uint64_t gen_degree = 0;
  for (const Polynomial& f : ideal.nonzero_generators()) gen_degree = std::max(gen_degree, *f.degree());
  max_degree_ = cofactor_degree + static_cast<unsigned>(gen_degree);
  columns_ = monomials_up_to(ring_->nvars(), max_degree_, ring_->order);
  const auto multipliers = monomials_up_to(ring_->nvars(), cofactor_degree, ring_->order);
  for (const Polynomial& f : ideal.nonzero_generators()) {
    for (const Monomial& m : multipliers) {
      auto row = to_vector(f.mul_term(Coefficient::one(ring_->field), m));
      reduce(row);
      auto lead = std::find_if(row.begin(), row.end(), [](const Coefficient& c) { return !c.is_zero(); });
      if (lead == row.end()) continue;
      const std::size_t col = static_cast<std::size_t>(lead - row.begin());
      const Coefficient inv = lead->inverse();
      for (Coefficient& c : row) c *= inv;
      // Keep existing pivot rows reduced against the new pivot.
      for (auto& [pc, prow] : pivots_) {
        if (prow[col].is_zero()) continue;
        const Coefficient factor = prow[col];
        for (std::size_t k = 0; k < prow.size(); ++k) prow[k] -= factor * row[k];
      }
      pivots_.emplace_back(col, std::move(row));
    }
  }
}

std::vector<Coefficient> SpanOracle::to_vector(const Polynomial& f) const {
  std::vector<Coefficient> v(columns_.size(), Coefficient::zero(ring_->field));
  for (const Term& t : f.terms()) {
    auto it = std::find(columns_.begin(), columns_.end(), t.mono);
    if (it == columns_.end()) throw InvalidArgument("query degree exceeds the oracle's span");
    v[static_cast<std::size_t>(it - columns_.begin())] = t.coeff;
  }
  return v;
}

void SpanOracle::reduce(std::vector<Coefficient>& v) const {
  for (const auto& [col, row] : pivots_) {
    if (v[col].is_zero()) continue;
    const Coefficient factor = v[col];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= factor * row[k];
  }
}

bool SpanOracle::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  if (*f.degree() > max_degree_) return false;
  auto v = to_vector(f);
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Coefficient& c) { return c.is_zero(); });
}

std::size_t monomial_dimension_oracle(const Ideal& monomial_ideal) {
  const std::size_t n = monomial_ideal.ring().nvars();
  std::vector<std::vector<bool>> supports;
  for (const Polynomial& g : monomial_ideal.nonzero_generators()) {
    if (g.size() != 1) throw InvalidArgument("oracle expects monomial generators");
    std::vector<bool> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = g.leading_monomial().exponents()[i] > 0;
    supports.push_back(s);
  }
  std::size_t best = 0;
  for (std::uint64_t subset = 0; subset < (1ULL << n); ++subset) {
    bool independent = true;
    for (const auto& s : supports) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (s[i] && !(subset >> i & 1)) inside = false;
      if (inside) independent = false;
    }
    if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(subset)));
  }
  return best;
}

}  // namespace charp::testing

namespace charp::testing {

CaseFile make_case(const CaseDraft& draft) {
  Json ring;
  if (draft.field == "Q") ring["field"] = "Q";
  else ring["field"] = Json{{"Fp", std::stoull(draft.field)}};
  std::vector<std::string> vars;
  std::stringstream ss(draft.vars);
  for (std::string v; std::getline(ss, v, ',');) vars.push_back(v);
  ring["vars"] = vars;
  ring["order"] = draft.order;
  Json doc;
  doc["ring"] = ring;
  doc["system"] = Json{{"n", draft.n}, {"r", draft.r}, {"equations", draft.equations}};
  Json w;
  w["I"] = draft.I;
  w["m"] = draft.m;
  w["b"] = draft.b ? Json(*draft.b) : Json(nullptr);
  w["x"] = draft.x;
  w["y"] = draft.y;
  w["claimed_n"] = draft.claimed_n;
  w["domain_claim"] = draft.domain_claim;
  doc["witness"] = w;
  return parse_case(doc.dump());
}

CaseDraft integer_case() {
  CaseDraft c;
  c.equations = {"X1 - Y1^2"};
  c.m = {"T"};
  c.b = std::vector<std::string>{"0"};
  c.x = {"T^2"};
  c.y = {"T"};
  return c;
}

CaseDraft sixfold_case() {
  CaseDraft c = integer_case();
  c.equations = {"6*X1 - Y1^2"};
  c.x = {"1/6*T^2"};
  return c;
}

const std::vector<RadicalPair>& radical_pairs() {
  static const std::vector<RadicalPair> pairs = {
      {"x,y", "(x^2, y)", "(x, y)"},
      {"T", "(1/6*T^2)", "(T)"},
      {"x,y", "(x^3)", "(x)"},
      {"x,y", "(x^2, x*y, y^3)", "(x, y)"},
      {"x,y", "(x^2 - 2*x*y + y^2)", "(x - y)"},
      {"x,y", "(x^2, y^2)", "(x, y)"},
      {"T1,T2", "(T1^2, T2 - T1)", "(T1, T2)"},
      {"x,y", "((x - 1)^2, y - 2)", "(x - 1, y - 2)"},
      {"x,y", "((x^2 + y^2 - 1)^2)", "(x^2 + y^2 - 1)"},
      {"x,y,z", "(z^3, x - y, y^2)", "(x, y, z)"},
  };
  return pairs;
}

const std::vector<RadicalPair>& radical_non_pairs() {
  static const std::vector<RadicalPair> pairs = {
      {"x,y", "(x)", "(x, y)"},
      {"x,y", "(x*y)", "(x, y)"},
      {"x,y", "(0)", "(x)"},
      {"x,y", "(x^2)", "(x, y)"},
      {"x,y", "(x - y)", "(x, y)"},
      {"x,y", "(y - x^2)", "(x, y)"},
      {"x,y", "(x*y - 1)", "(x - 1, y - 1)"},
      {"x,y", "(x^3 - y^2)", "(x, y)"},
      {"x,y,z", "(x*z, y*z)", "(x, y)"},
      {"T", "(T^2 - T)", "(T)"},
  };
  return pairs;
}

std::string cases_dir() { return CHARP_CASES_DIR; }

std::vector<std::string> case_paths() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(cases_dir()))
    if (entry.path().extension() == ".json" && entry.path().filename() != "expected.json")
      out.push_back(entry.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace charp::testing
