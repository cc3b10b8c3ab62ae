#include "charp/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace charp {

namespace {

using nlohmann::json;

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ParseError("unknown field '" + key + "' in " + where);
  }
}

const json& required(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError("missing field '" + std::string(key) + "' in " + where);
  return j.at(key);
}

Coefficient coeff_from_json(const json& j, const Field& field) {
  if (j.is_string()) return Coefficient::parse(j.get<std::string>(), field);
  if (j.is_number_integer()) {
    return Coefficient::parse(j.dump(), field);
  }
  throw ParseError("coefficient " + j.dump() + " must be an integer or an exact \"num/den\" string");
}

std::size_t count_from_json(const json& j, const std::string& what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Polynomial> poly_list(const json& j, const RingPtr& ring, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be a list of polynomials");
  std::vector<Polynomial> out;
  for (const json& p : j) out.push_back(poly_from_json(p, ring));
  return out;
}

const char* verdict_name(RadicalVerdict v) {
  switch (v) {
    case RadicalVerdict::Equal: return "Equal";
    case RadicalVerdict::NotContainedInP: return "NotContainedInP";
    case RadicalVerdict::GeneratorPowerNotFound: return "GeneratorPowerNotFound";
  }
  return "Equal";
}

RadicalVerdict verdict_from(const std::string& s) {
  if (s == "Equal") return RadicalVerdict::Equal;
  if (s == "NotContainedInP") return RadicalVerdict::NotContainedInP;
  if (s == "GeneratorPowerNotFound") return RadicalVerdict::GeneratorPowerNotFound;
  throw ParseError("unknown radical verdict '" + s + "'");
}

const char* condition3_name(Condition3 c) {
  switch (c) {
    case Condition3::Passed: return "passed";
    case Condition3::Failed: return "failed";
    case Condition3::NotCertified: return "not_certified";
  }
  return "not_certified";
}

Condition3 condition3_from(const std::string& s) {
  if (s == "passed") return Condition3::Passed;
  if (s == "failed") return Condition3::Failed;
  if (s == "not_certified") return Condition3::NotCertified;
  throw ParseError("unknown condition3 value '" + s + "'");
}

PrimeStatus status_from(const std::string& s) {
  for (PrimeStatus st : {PrimeStatus::Pass, PrimeStatus::Fail, PrimeStatus::Unresolved, PrimeStatus::Error})
    if (to_string(st) == s) return st;
  throw ParseError("unknown prime status '" + s + "'");
}

BadReason reason_from(const std::string& s) {
  if (s == to_string(BadReason::Denominator)) return BadReason::Denominator;
  if (s == to_string(BadReason::LeadingCoefficient)) return BadReason::LeadingCoefficient;
  throw ParseError("unknown bad-prime reason '" + s + "'");
}

ComplexityReport complexity_from_json(const json& j) {
  ComplexityReport r;
  r.nvars = j.at("nvars").get<std::size_t>();
  r.max_degree = j.at("max_degree").get<std::uint64_t>();
  r.complexity = j.at("complexity").get<std::uint64_t>();
  r.generator_count = j.at("generator_count").get<std::size_t>();
  return r;
}

RadicalResult radical_from_json(const json& j, const RingPtr& ring) {
  RadicalResult r;
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  r.cap = j.at("cap").get<unsigned>();
  r.exponents = j.at("exponents").get<std::vector<unsigned>>();
  if (!j.at("witness").is_null()) r.witness = parse_polynomial(j.at("witness").get<std::string>(), ring);
  return r;
}

ProbeResult probe_from_json(const json& j, const RingPtr& ring) {
  ProbeResult r;
  r.verdict = j.at("verdict").get<std::string>() == "NotPrime" ? ProbeVerdict::NotPrime
                                                                : ProbeVerdict::ProbablyPrime;
  r.trials = j.at("trials").get<unsigned>();
  r.trials_used = j.at("trials_used").get<unsigned>();
  if (!j.at("f").is_null()) r.f = parse_polynomial(j.at("f").get<std::string>(), ring);
  if (!j.at("g").is_null()) r.g = parse_polynomial(j.at("g").get<std::string>(), ring);
  return r;
}

Json optional_poly(const std::optional<Polynomial>& p) {
  return p ? Json(p->to_string()) : Json(nullptr);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json ring_to_json(const Ring& ring) {
  Json j;
  if (ring.field.is_rational()) j["field"] = "Q";
  else j["field"] = Json{{"Fp", ring.field.modulus()}};
  j["vars"] = ring.vars;
  j["order"] = ring.order.name();
  return j;
}

RingPtr ring_from_json(const json& j) {
  only_keys(j, {"field", "vars", "order"}, "ring");
  const json& f = required(j, "field", "ring");
  Field field = Field::rationals();
  if (f.is_string()) {
    if (f.get<std::string>() != "Q") throw ParseError("field must be \"Q\" or {\"Fp\": p}");
  } else if (f.is_object()) {
    only_keys(f, {"Fp"}, "field");
    const json& p = required(f, "Fp", "field");
    if (!p.is_number_unsigned()) throw ParseError("Fp modulus must be a positive integer");
    try {
      field = Field::prime(p.get<std::uint64_t>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  } else {
    throw ParseError("field must be \"Q\" or {\"Fp\": p}");
  }
  const json& vars = required(j, "vars", "ring");
  if (!vars.is_array()) throw ParseError("vars must be a list of names");
  std::vector<std::string> names;
  for (const json& v : vars) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::string order = "grevlex";
  if (j.contains("order")) {
    if (!j.at("order").is_string()) throw ParseError("order must be a string");
    order = j.at("order").get<std::string>();
  }
  return make_ring(field, std::move(names), MonomialOrder::parse(order));
}

Json poly_to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const Term& t : f.terms())
    terms.push_back(Json{{"coeff", t.coeff.to_string()}, {"exps", t.mono.exponents()}});
  return terms;
}

Polynomial poly_from_json(const json& j, const RingPtr& ring) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>(), ring);
  if (!j.is_array()) throw ParseError("polynomial must be a term list or text");
  std::vector<Term> terms;
  for (const json& t : j) {
    only_keys(t, {"coeff", "exps"}, "term");
    Coefficient c = coeff_from_json(required(t, "coeff", "term"), ring->field);
    const json& e = required(t, "exps", "term");
    if (!e.is_array() || e.size() != ring->nvars())
      throw ParseError("term exponents must list " + std::to_string(ring->nvars()) + " integers");
    std::vector<Monomial::Exponent> exps;
    for (const json& x : e) exps.push_back(static_cast<Monomial::Exponent>(count_from_json(x, "exponent")));
    terms.push_back(Term{c, Monomial(std::move(exps))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

CaseFile parse_case(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("case file is not valid JSON: ") + e.what());
  }
  try {
    only_keys(j, {"ring", "system", "witness"}, "case file");
    CaseFile c;
    c.ring = ring_from_json(required(j, "ring", "case file"));

    const json& s = required(j, "system", "case file");
    only_keys(s, {"n", "r", "equations"}, "system");
    c.system.n = count_from_json(required(s, "n", "system"), "n");
    c.system.r = count_from_json(required(s, "r", "system"), "r");
    std::vector<std::string> xy;
    for (std::size_t i = 0; i < c.system.n; ++i) xy.push_back("X" + std::to_string(i + 1));
    for (std::size_t i = 0; i < c.system.r; ++i) xy.push_back("Y" + std::to_string(i + 1));
    RingPtr eq_ring = make_ring(Field::rationals(), std::move(xy), c.ring->order);
    c.system.equations = poly_list(required(s, "equations", "system"), eq_ring, "equations");
    for (const Polynomial& f : c.system.equations)
      for (const Term& t : f.terms())
        if (!t.coeff.is_integer())
          throw ParseError("equation coefficient " + t.coeff.to_string() + " is not an integer");

    const json& w = required(j, "witness", "case file");
    only_keys(w, {"I", "m", "b", "x", "y", "claimed_n", "domain_claim"}, "witness");
    Witness& wit = c.witness;
    wit.ring = c.ring;
    wit.ideal_gens = poly_list(required(w, "I", "witness"), c.ring, "I");
    wit.max_gens = poly_list(required(w, "m", "witness"), c.ring, "m");
    if (w.contains("b") && !w.at("b").is_null()) {
      if (!w.at("b").is_array()) throw ParseError("b must be a list of coefficients or null");
      std::vector<Coefficient> b;
      for (const json& x : w.at("b")) b.push_back(coeff_from_json(x, c.ring->field));
      wit.point = std::move(b);
    }
    wit.x_images = poly_list(required(w, "x", "witness"), c.ring, "x");
    wit.y_images = poly_list(required(w, "y", "witness"), c.ring, "y");
    wit.claimed_n = count_from_json(required(w, "claimed_n", "witness"), "claimed_n");
    if (w.contains("domain_claim")) {
      if (!w.at("domain_claim").is_boolean()) throw ParseError("domain_claim must be a boolean");
      wit.domain_claim = w.at("domain_claim").get<bool>();
    }
    if (wit.x_images.size() != c.system.n || wit.y_images.size() != c.system.r)
      throw ParseError("witness tuple lengths do not match the system's n and r");
    if (wit.point && wit.point->size() != c.ring->nvars())
      throw ParseError("b must have one coordinate per ring variable");
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed case file: ") + e.what());
  } catch (const ArityMismatch& e) {
    throw ParseError(std::string("malformed case file: ") + e.what());
  } catch (const FieldMismatch& e) {
    throw ParseError(std::string("malformed case file: ") + e.what());
  } catch (const DivisionByZero& e) {
    throw ParseError(std::string("malformed case file: ") + e.what());
  }
}

CaseFile load_case(const std::string& path) { return parse_case(read_file(path)); }

Json case_to_json(const CaseFile& c) {
  Json j;
  j["ring"] = ring_to_json(*c.ring);
  Json eqs = Json::array();
  for (const Polynomial& f : c.system.equations) eqs.push_back(poly_to_json(f));
  j["system"] = Json{{"n", c.system.n}, {"r", c.system.r}, {"equations", eqs}};
  auto list = [](const std::vector<Polynomial>& ps) {
    Json a = Json::array();
    for (const Polynomial& p : ps) a.push_back(poly_to_json(p));
    return a;
  };
  const Witness& w = c.witness;
  Json wj;
  wj["I"] = list(w.ideal_gens);
  wj["m"] = list(w.max_gens);
  if (w.point) {
    Json b = Json::array();
    for (const Coefficient& x : *w.point) b.push_back(x.to_string());
    wj["b"] = b;
  } else {
    wj["b"] = nullptr;
  }
  wj["x"] = list(w.x_images);
  wj["y"] = list(w.y_images);
  wj["claimed_n"] = w.claimed_n;
  wj["domain_claim"] = w.domain_claim;
  j["witness"] = wj;
  return j;
}

Json to_json(const ComplexityReport& r) {
  return Json{{"nvars", r.nvars},
              {"max_degree", r.max_degree},
              {"complexity", r.complexity},
              {"generator_count", r.generator_count}};
}

Json to_json(const RadicalResult& r) {
  return Json{{"verdict", verdict_name(r.verdict)},
              {"exponents", r.exponents},
              {"witness", optional_poly(r.witness)},
              {"cap", r.cap}};
}

Json to_json(const ProbeResult& r) {
  return Json{{"verdict", r.verdict == ProbeVerdict::NotPrime ? "NotPrime" : "ProbablyPrime"},
              {"f", optional_poly(r.f)},
              {"g", optional_poly(r.g)},
              {"trials", r.trials},
              {"trials_used", r.trials_used}};
}

Json to_json(const VerificationResult& r, const Ring& ring) {
  Json j;
  j["passed"] = r.passed();
  j["ring"] = ring_to_json(ring);
  j["condition1"] = to_json(r.condition1);
  j["condition2"] = r.condition2;
  j["condition3"] = condition3_name(r.condition3);
  j["height"] = Json{{"computed", r.computed_n}, {"claimed", r.claimed_n}, {"ok", r.height_ok()}};
  j["prime_probe"] = r.prime_probe ? to_json(*r.prime_probe) : Json(nullptr);
  j["complexity"] = to_json(r.complexity);
  return j;
}

Json to_json(const SweepReport& r, const Ring& ring) {
  Json j;
  j["all_passed"] = r.all_passed();
  j["prime_range"] = Json::array({r.lo, r.hi});
  Json bad = Json::array();
  for (const auto& [p, reasons] : r.bad_primes) {
    Json rs = Json::array();
    for (BadReason why : reasons) rs.push_back(to_string(why));
    bad.push_back(Json{{"prime", p}, {"reasons", rs}});
  }
  j["bad_primes"] = bad;
  Json per = Json::array();
  for (const PrimeOutcome& o : r.per_prime) {
    Json e;
    e["prime"] = o.prime;
    e["status"] = to_string(o.status);
    e["result"] = o.result ? to_json(*o.result, *with_field(ring, Field::prime(o.prime))) : Json(nullptr);
    e["error"] = o.error.empty() ? Json(nullptr) : Json(o.error);
    per.push_back(std::move(e));
  }
  j["per_prime"] = per;
  j["uniform_d"] = r.uniform_d ? Json(*r.uniform_d) : Json(nullptr);
  j["char0_d"] = r.char0_d;
  j["char0"] = to_json(r.char0, ring);
  return j;
}

VerificationResult verification_from_json(const json& j) {
  try {
    RingPtr ring = ring_from_json(j.at("ring"));
    VerificationResult r;
    r.condition1 = radical_from_json(j.at("condition1"), ring);
    r.condition2 = j.at("condition2").get<std::vector<bool>>();
    r.condition3 = condition3_from(j.at("condition3").get<std::string>());
    r.computed_n = j.at("height").at("computed").get<std::size_t>();
    r.claimed_n = j.at("height").at("claimed").get<std::size_t>();
    if (!j.at("prime_probe").is_null()) r.prime_probe = probe_from_json(j.at("prime_probe"), ring);
    r.complexity = complexity_from_json(j.at("complexity"));
    if (j.at("passed").get<bool>() != r.passed()) throw ParseError("inconsistent 'passed' flag");
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed verification result: ") + e.what());
  }
}

SweepReport sweep_from_json(const json& j) {
  try {
    SweepReport r;
    r.lo = j.at("prime_range").at(0).get<std::uint64_t>();
    r.hi = j.at("prime_range").at(1).get<std::uint64_t>();
    for (const json& b : j.at("bad_primes")) {
      auto& reasons = r.bad_primes[b.at("prime").get<std::uint64_t>()];
      for (const json& why : b.at("reasons")) reasons.insert(reason_from(why.get<std::string>()));
    }
    for (const json& e : j.at("per_prime")) {
      PrimeOutcome o;
      o.prime = e.at("prime").get<std::uint64_t>();
      o.status = status_from(e.at("status").get<std::string>());
      if (!e.at("result").is_null()) o.result = verification_from_json(e.at("result"));
      if (!e.at("error").is_null()) o.error = e.at("error").get<std::string>();
      r.per_prime.push_back(std::move(o));
    }
    if (!j.at("uniform_d").is_null()) r.uniform_d = j.at("uniform_d").get<std::uint64_t>();
    r.char0_d = j.at("char0_d").get<std::uint64_t>();
    r.char0 = verification_from_json(j.at("char0"));
    if (j.at("all_passed").get<bool>() != r.all_passed()) throw ParseError("inconsistent 'all_passed' flag");
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed sweep report: ") + e.what());
  }
}

}  // namespace charp
