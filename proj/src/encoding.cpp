#include "charp/encoding.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "charp/errors.hpp"

namespace charp {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw InvalidArgument("code size overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t code_size(std::size_t n, unsigned d) {
  if (n == 0) throw InvalidArgument("code size needs at least one variable");
  if (d < n)
    throw InvalidArgument("complexity " + std::to_string(d) + " is below the variable count " +
                          std::to_string(n));
  std::uint64_t size = binomial(n + d, n);
  if (size > binomial(2ULL * d, d)) throw InvalidArgument("code size exceeds C(2d, d)");
  return size;
}

Ideal normalize_generators(const Ideal& ideal) {
  const MonomialOrder& order = ideal.ring().order;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.nonzero_generators()) gens.push_back(g.monic());
  std::stable_sort(gens.begin(), gens.end(), term_list_less);

  auto lm_less = [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; };
  std::map<Monomial, Polynomial, decltype(lm_less)> by_leading(lm_less);
  for (Polynomial g : gens) {
    while (!g.is_zero()) {
      auto it = by_leading.find(g.leading_monomial());
      if (it == by_leading.end()) {
        by_leading.emplace(g.leading_monomial(), g);
        break;
      }
      g = (g - it->second).monic();
    }
  }
  std::vector<Polynomial> out;
  for (auto it = by_leading.rbegin(); it != by_leading.rend(); ++it) out.push_back(it->second);
  return Ideal(ideal.ring_ptr(), std::move(out));
}

IdealCode encode_ideal(const Ideal& ideal, unsigned d) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  if (d < n)
    throw ComplexityExceeded(d, "the ring has " + std::to_string(n) + " variables");
  const std::uint64_t size = code_size(n, d);
  Ideal normalized = normalize_generators(ideal);
  for (const Polynomial& g : normalized.nonzero_generators())
    if (*g.degree() > d)
      throw ComplexityExceeded(d, "generator " + g.to_string() + " has degree " +
                                      std::to_string(*g.degree()));
  std::vector<Monomial> monos = monomials_up_to(n, d, ring.order);
  IdealCode code{n, d, ring.order, ring.field, {}};
  code.rows.assign(size, std::vector<Coefficient>(size, Coefficient::zero(ring.field)));
  std::size_t row = 0;
  for (const Polynomial& g : normalized.nonzero_generators()) {
    // Both lists are descending, so one pass matches terms to columns.
    std::size_t col = 0;
    for (const Term& t : g.terms()) {
      while (!(monos[col] == t.mono)) ++col;
      code.rows[row][col] = t.coeff;
    }
    ++row;
  }
  return code;
}

namespace {

void check_shape(const IdealCode& code) {
  const std::uint64_t size = code_size(code.nvars, code.complexity);
  if (code.rows.size() != size)
    throw ParseError("code has " + std::to_string(code.rows.size()) + " rows, expected " +
                     std::to_string(size));
  for (const auto& row : code.rows)
    if (row.size() != size)
      throw ParseError("code row has " + std::to_string(row.size()) + " entries, expected " +
                       std::to_string(size));
}

}  // namespace

Ideal decode_ideal(const IdealCode& code) {
  check_shape(code);
  RingPtr ring = make_ring(code.field, code.nvars, code.order);
  std::vector<Monomial> monos = monomials_up_to(code.nvars, code.complexity, code.order);
  std::vector<Polynomial> gens;
  for (const auto& row : code.rows) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) terms.push_back(Term{row[c], monos[c]});
    if (!terms.empty()) gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

std::string code_to_json(const IdealCode& code) {
  nlohmann::ordered_json j;
  j["nvars"] = code.nvars;
  j["complexity"] = code.complexity;
  j["order"] = code.order.name();
  if (!code.order.permutation().empty()) j["variable_order"] = code.order.permutation();
  if (code.field.is_rational()) {
    j["field"] = "Q";
  } else {
    j["field"] = "Fp";
    j["modulus"] = code.field.modulus();
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : code.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Coefficient& c : row) r.push_back(c.to_string());
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

IdealCode code_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ideal code is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("ideal code must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    static const char* kKnown[] = {"nvars", "complexity", "order", "variable_order",
                                   "field", "modulus", "rows"};
    if (std::find_if(std::begin(kKnown), std::end(kKnown),
                     [&](const char* k) { return key == k; }) == std::end(kKnown))
      throw ParseError("unknown field '" + key + "' in ideal code");
  }
  try {
    IdealCode code;
    code.nvars = j.at("nvars").get<std::size_t>();
    code.complexity = j.at("complexity").get<unsigned>();
    std::vector<std::size_t> perm;
    if (j.contains("variable_order")) perm = j.at("variable_order").get<std::vector<std::size_t>>();
    code.order = MonomialOrder(MonomialOrder::parse(j.at("order").get<std::string>()).kind(), perm);
    std::string field = j.at("field").get<std::string>();
    if (field == "Q") {
      if (j.contains("modulus")) throw ParseError("modulus given for field Q");
      code.field = Field::rationals();
    } else if (field == "Fp") {
      code.field = Field::prime(j.at("modulus").get<std::uint64_t>());
    } else {
      throw ParseError("unknown field '" + field + "'");
    }
    for (const auto& row : j.at("rows")) {
      std::vector<Coefficient> r;
      for (const auto& c : row) {
        if (!c.is_string()) throw ParseError("code coefficients must be strings");
        r.push_back(Coefficient::parse(c.get<std::string>(), code.field));
      }
      code.rows.push_back(std::move(r));
    }
    check_shape(code);
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ideal code: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("malformed ideal code: ") + e.what());
  }
}

}  // namespace charp
