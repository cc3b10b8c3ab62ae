// charp: command-line front end for the exact ideal predicates and the
// mod-p transfer harness. Standard output carries JSON only; pass/fail is
// reported through the exit code (0 pass, 1 negative verdict, 2 structural).

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "charp/encoding.hpp"
#include "charp/io.hpp"
#include "charp/predicates.hpp"
#include "charp/transfer.hpp"

namespace {

using charp::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kStructural = 2;

std::string error_kind(const charp::Error& e) {
  if (dynamic_cast<const charp::BadPrime*>(&e)) return "BadPrime";
  if (dynamic_cast<const charp::DegenerateGenerator*>(&e)) return "DegenerateGenerator";
  if (dynamic_cast<const charp::UnitIdeal*>(&e)) return "UnitIdeal";
  if (dynamic_cast<const charp::NotContained*>(&e)) return "NotContained";
  if (dynamic_cast<const charp::DegreeCapExceeded*>(&e)) return "DegreeCapExceeded";
  if (dynamic_cast<const charp::ComplexityExceeded*>(&e)) return "ComplexityExceeded";
  if (dynamic_cast<const charp::BudgetExceeded*>(&e)) return "BudgetExceeded";
  return "Error";
}

bool is_structural(const charp::Error& e) {
  return dynamic_cast<const charp::ParseError*>(&e) || dynamic_cast<const charp::ArityMismatch*>(&e) ||
         dynamic_cast<const charp::InvalidArgument*>(&e) ||
         dynamic_cast<const charp::AmbientMismatch*>(&e) || dynamic_cast<const charp::FieldMismatch*>(&e);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

/// "@path" reads the operand from a file, anything else is inline text.
std::string operand(const std::string& value) {
  if (!value.empty() && value[0] == '@') return charp::read_file(value.substr(1));
  return value;
}

std::vector<charp::Coefficient> parse_point(const std::string& text, const charp::Field& field) {
  std::vector<charp::Coefficient> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t()");
    auto e = item.find_last_not_of(" \t()");
    if (b == std::string::npos) throw charp::ParseError("empty point coordinate");
    out.push_back(charp::Coefficient::parse(item.substr(b, e - b + 1), field));
  }
  return out;
}

/// Ring options shared by the predicate subcommands.
struct RingOptions {
  std::string vars;
  std::string field = "Q";
  std::string order = "grevlex";

  void attach(CLI::App* app) {
    app->add_option("--vars", vars, "Comma-separated variable names (default: in order of appearance)");
    app->add_option("--field", field, "Q or a prime p")->capture_default_str();
    app->add_option("--order", order, "grevlex or lex")->capture_default_str();
  }

  charp::RingPtr make(const std::vector<std::string>& texts) const {
    std::vector<std::string> names;
    if (!vars.empty()) {
      std::stringstream ss(vars);
      std::string v;
      while (std::getline(ss, v, ',')) names.push_back(v);
    } else {
      for (const std::string& t : texts)
        for (const std::string& id : charp::collect_identifiers(t))
          if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
    }
    charp::Field f = charp::Field::rationals();
    if (field != "Q") {
      std::uint64_t p = 0;
      try {
        p = std::stoull(field);
      } catch (const std::exception&) {
        throw charp::ParseError("field must be Q or a prime, got '" + field + "'");
      }
      f = charp::Field::prime(p);
    }
    return charp::make_ring(f, std::move(names), charp::MonomialOrder::parse(order));
  }
};

charp::Ideal ideal_from(const std::string& text, const charp::RingPtr& ring) {
  return charp::Ideal(ring, charp::parse_polynomial_list(text, ring));
}

Json poly_list_json(const std::vector<charp::Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

struct CapOptions {
  unsigned exponent_cap = 16;
  unsigned probe_trials = 200;
  unsigned probe_degree = 2;
  std::uint64_t seed = 0;

  void attach(CLI::App* app) {
    app->add_option("--exponent-cap", exponent_cap, "Largest power searched in radical checks")
        ->capture_default_str();
    app->add_option("--probe-trials", probe_trials, "Random pairs tried by the primality probe")
        ->capture_default_str();
    app->add_option("--probe-degree", probe_degree, "Degree bound of probe polynomials")->capture_default_str();
    app->add_option("--seed", seed, "Probe seed")->capture_default_str();
  }
  charp::VerifyCaps caps() const { return {exponent_cap, probe_trials, probe_degree, seed}; }
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto number = [&](std::string_view piece) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || end != piece.data() + piece.size() || piece.empty())
      throw charp::ParseError("prime range must look like LO..HI, got '" + text + "'");
    return v;
  };
  std::string_view view(text);
  auto dots = view.find("..");
  if (dots == std::string_view::npos) {
    std::uint64_t p = number(view);
    return {p, p};
  }
  return {number(view.substr(0, dots)), number(view.substr(dots + 2))};
}

int error_exit(const charp::Error& e, bool emit_json) {
  std::cerr << "charp: " << e.what() << "\n";
  if (is_structural(e)) return kStructural;
  if (emit_json) emit(Json{{"passed", false}, {"error", Json{{"kind", error_kind(e)}, {"message", e.what()}}}});
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ideal predicates and mod-p transfer of semi-parametric witnesses"};
  app.require_subcommand(1);

  // verify
  std::string case_path;
  std::optional<std::uint64_t> prime;
  bool char0 = false;
  CapOptions caps;
  auto* verify = app.add_subcommand("verify", "Verify a witness case file");
  verify->add_option("case", case_path, "Case file (JSON)")->required();
  auto* prime_opt = verify->add_option("--prime", prime, "Reduce modulo p and verify over F_p");
  verify->add_flag("--char0", char0, "Verify in characteristic zero")->excludes(prime_opt);
  caps.attach(verify);

  // sweep
  std::string range = "2..100";
  unsigned jobs = 1;
  std::string output;
  auto* sweep = app.add_subcommand("sweep", "Reduce and re-verify a witness over a range of primes");
  sweep->add_option("case", case_path, "Case file (JSON)")->required();
  sweep->add_option("--primes", range, "Prime range LO..HI")->capture_default_str();
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--output", output, "Also write the report to this path");
  caps.attach(sweep);

  // predicates
  RingOptions ring_opts;
  std::string ideal_text, f_text, prime_text, quotient_text, point_text, code_text;
  unsigned cap = 16, degree = 2, trials = 200, d = 0;
  std::uint64_t seed = 0, budget = 1000000;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("--ideal", ideal_text, "Generators, e.g. \"(x^2 - y, x)\" or @file")->required();
  ring_opts.attach(gb);

  auto* member = app.add_subcommand("member", "Ideal membership f in I");
  member->add_option("--f", f_text, "Polynomial")->required();
  member->add_option("--ideal", ideal_text, "Ideal")->required();
  ring_opts.attach(member);

  auto* dim = app.add_subcommand("dim", "Krull dimension of k[x]/I");
  dim->add_option("--ideal", ideal_text, "Ideal")->required();
  ring_opts.attach(dim);

  auto* height = app.add_subcommand("height", "Height of I, or of I in k[x]/J with --quotient J");
  height->add_option("--ideal", ideal_text, "Ideal")->required();
  height->add_option("--quotient", quotient_text, "Ideal J contained in I");
  ring_opts.attach(height);

  auto* radical = app.add_subcommand("radical-eq", "Decide Rad(I) = P");
  radical->add_option("--ideal", ideal_text, "Ideal I")->required();
  radical->add_option("--prime", prime_text, "Prime ideal P")->required();
  radical->add_option("--cap", cap, "Exponent cap")->capture_default_str();
  ring_opts.attach(radical);

  auto* probe = app.add_subcommand("prime-probe", "Randomized primality probe");
  probe->add_option("--ideal", ideal_text, "Ideal")->required();
  probe->add_option("--degree", degree, "Degree bound")->capture_default_str();
  probe->add_option("--trials", trials, "Trials")->capture_default_str();
  probe->add_option("--seed", seed, "Seed")->capture_default_str();
  ring_opts.attach(probe);

  auto* maximal = app.add_subcommand("maximal", "Check m = (x - b)");
  maximal->add_option("--ideal", ideal_text, "Ideal m")->required();
  maximal->add_option("--point", point_text, "Point b, e.g. \"1,2\"")->required();
  ring_opts.attach(maximal);

  auto* encode = app.add_subcommand("encode", "Encode an ideal as a coefficient tuple");
  encode->add_option("--ideal", ideal_text, "Ideal")->required();
  encode->add_option("--d", d, "Complexity bound")->required();
  ring_opts.attach(encode);

  auto* decode = app.add_subcommand("decode", "Decode a coefficient tuple");
  decode->add_option("--code", code_text, "Code JSON or @file")->required();

  auto* cplx = app.add_subcommand("complexity", "Complexity of a presentation");
  cplx->add_option("--ideal", ideal_text, "Ideal")->required();
  ring_opts.attach(cplx);

  auto* points = app.add_subcommand("points", "F_p-rational zeros of an ideal");
  points->add_option("--ideal", ideal_text, "Ideal")->required();
  points->add_option("--budget", budget, "Largest number of points enumerated")->capture_default_str();
  ring_opts.attach(points);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kStructural;
  }

  try {
    if (verify->parsed()) {
      charp::CaseFile c = charp::load_case(case_path);
      try {
        charp::Witness w = c.witness;
        if (prime) w = charp::reduce_witness_mod_p(c.witness, *prime);
        else if (char0 && !c.ring->field.is_rational())
          throw charp::InvalidArgument("--char0 needs a case over Q");
        charp::VerificationResult r = charp::verify_witness(c.system, w, caps.caps());
        emit(charp::to_json(r, *w.ring));
        return r.passed() ? kPass : kFail;
      } catch (const charp::Error& e) {
        return error_exit(e, true);
      }
    }

    if (sweep->parsed()) {
      charp::CaseFile c = charp::load_case(case_path);
      if (!c.ring->field.is_rational()) throw charp::InvalidArgument("sweeps need a case over Q");
      auto [lo, hi] = parse_range(range);
      Json report;
      int status = kPass;
      try {
        charp::SweepReport r =
            charp::sweep(c.system, c.witness, charp::primes_in_range(lo, hi), caps.caps(), jobs);
        r.lo = lo;
        r.hi = hi;
        report = charp::to_json(r, *c.ring);
        status = r.all_passed() ? kPass : kFail;
      } catch (const charp::SweepRefused& e) {
        std::cerr << "charp: " << e.what() << "\n";
        report = Json{{"refused", true}, {"char0", charp::to_json(e.result(), *c.ring)}};
        status = kFail;
      } catch (const charp::Error& e) {
        return error_exit(e, true);
      }
      if (!output.empty()) {
        std::ofstream out(output, std::ios::binary);
        if (!out) throw charp::ParseError("cannot write '" + output + "'");
        out << report.dump(2) << "\n";
      }
      emit(report);
      return status;
    }

    if (decode->parsed()) {
      charp::Ideal ideal = charp::decode_ideal(charp::code_from_json(operand(code_text)));
      emit(Json{{"ring", charp::ring_to_json(ideal.ring())},
                {"generators", poly_list_json(std::vector(ideal.nonzero_generators().begin(),
                                                          ideal.nonzero_generators().end()))}});
      return kPass;
    }

    std::string itext = operand(ideal_text);
    std::string ftext = f_text.empty() ? "" : operand(f_text);
    std::string ptext = prime_text.empty() ? "" : operand(prime_text);
    std::string qtext = quotient_text.empty() ? "" : operand(quotient_text);
    charp::RingPtr ring = ring_opts.make({itext, ftext, ptext, qtext});
    charp::Ideal ideal = ideal_from(itext, ring);

    try {
      if (gb->parsed()) {
        auto basis = charp::groebner_basis(ideal);
        emit(Json{{"ring", charp::ring_to_json(*ring)}, {"basis", poly_list_json(basis->basis())}});
        return kPass;
      }
      if (member->parsed()) {
        bool in = charp::ideal_member(charp::parse_polynomial(ftext, ring), ideal);
        emit(Json{{"member", in}});
        return in ? kPass : kFail;
      }
      if (dim->parsed()) {
        emit(Json{{"dimension", charp::dimension(ideal)}});
        return kPass;
      }
      if (height->parsed()) {
        if (!qtext.empty()) {
          emit(Json{{"height_in_quotient", charp::height_in_quotient(ideal, ideal_from(qtext, ring))}});
        } else {
          auto h = charp::height_poly(ideal);
          emit(Json{{"dimension", h.dimension}, {"height", h.height}, {"convention", "codimension"}});
        }
        return kPass;
      }
      if (radical->parsed()) {
        auto r = charp::radical_equals(ideal, ideal_from(ptext, ring), cap);
        emit(charp::to_json(r));
        return r.verdict == charp::RadicalVerdict::Equal ? kPass : kFail;
      }
      if (probe->parsed()) {
        auto r = charp::prime_probe(ideal, degree, trials, seed);
        emit(charp::to_json(r));
        return r.verdict == charp::ProbeVerdict::ProbablyPrime ? kPass : kFail;
      }
      if (maximal->parsed()) {
        bool ok = charp::rational_maximal(ideal, parse_point(point_text, ring->field));
        emit(Json{{"rational_maximal", ok}});
        return ok ? kPass : kFail;
      }
      if (encode->parsed()) {
        std::cout << charp::code_to_json(charp::encode_ideal(ideal, d)) << "\n";
        return kPass;
      }
      if (cplx->parsed()) {
        emit(charp::to_json(charp::complexity(ideal)));
        return kPass;
      }
      if (points->parsed()) {
        Json a = Json::array();
        for (const auto& b : charp::search_witness_points(ideal, budget)) {
          Json pt = Json::array();
          for (const auto& c : b) pt.push_back(c.to_string());
          a.push_back(pt);
        }
        emit(Json{{"points", a}});
        return kPass;
      }
    } catch (const charp::Error& e) {
      return error_exit(e, true);
    }
  } catch (const charp::Error& e) {
    return error_exit(e, false);
  }
  return kStructural;
}
