#include <gtest/gtest.h>

#include "charp/errors.hpp"
#include "charp/io.hpp"
#include "support.hpp"

using namespace charp;
using namespace charp::testing;

namespace {

const char* kCase = R"({
  "ring": {"field": "Q", "vars": ["T"], "order": "grevlex"},
  "system": {"n": 1, "r": 1, "equations": [[{"coeff": "6", "exps": [1, 0]}, {"coeff": "-1", "exps": [0, 2]}]]},
  "witness": {"I": [], "m": [[{"coeff": "1", "exps": [1]}]], "b": ["0"],
              "x": [[{"coeff": "1/6", "exps": [2]}]], "y": ["T"], "claimed_n": 1, "domain_claim": false}
})";

std::string with(std::string text, const std::string& from, const std::string& to) {
  auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST(CaseFile, ParsesTermListsAndText) {
  auto c = parse_case(kCase);
  EXPECT_EQ(c.system.n, 1u);
  EXPECT_EQ(c.system.equations[0].to_string(), "-Y1^2 + 6*X1");
  EXPECT_EQ(c.witness.x_images[0], poly(c.ring, "1/6*T^2"));
  EXPECT_EQ(c.witness.y_images[0], poly(c.ring, "T"));
  ASSERT_TRUE(c.witness.point.has_value());
  EXPECT_TRUE((*c.witness.point)[0].is_zero());
  EXPECT_TRUE(c.witness.ideal_gens.empty());
}

TEST(CaseFile, RejectsStructuralErrors) {
  EXPECT_THROW(parse_case("{"), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"claimed_n\": 1", "\"claimed_n\": 1, \"extra\": 0")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"1/6\"", "\"0.1666\"")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"1/6\"", "0.5")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"coeff\": \"6\"", "\"coeff\": \"1/2\"")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"exps\": [2]", "\"exps\": [2, 0]")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"y\": [\"T\"]", "\"y\": []")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"b\": [\"0\"]", "\"b\": [\"0\", \"1\"]")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"Q\"", "{\"Fp\": 6}")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"grevlex\"", "\"deglex\"")), ParseError);
  EXPECT_THROW(parse_case(with(kCase, "\"y\": [\"T\"]", "\"y\": [\"S\"]")), ParseError);
}

TEST(CaseFile, AcceptsNullPointAndPrimeField) {
  auto c = parse_case(with(with(kCase, "\"b\": [\"0\"]", "\"b\": null"), "\"Q\"", "{\"Fp\": 7}"));
  EXPECT_FALSE(c.witness.point.has_value());
  EXPECT_EQ(c.ring->field, Field::prime(7));
  EXPECT_EQ(c.witness.x_images[0], poly(c.ring, "6*T^2"));
}

TEST(CaseFile, RoundTripsThroughJson) {
  for (const auto& path : case_paths()) {
    auto c = load_case(path);
    auto text = case_to_json(c).dump();
    auto again = parse_case(text);
    EXPECT_EQ(case_to_json(again).dump(), text) << path;
  }
}

TEST(Reports, VerificationRoundTrip) {
  for (const auto& path : case_paths()) {
    auto c = load_case(path);
    auto r = verify_witness(c.system, c.witness);
    auto j = to_json(r, *c.ring);
    auto back = verification_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(to_json(back, *c.ring).dump(), j.dump()) << path;
    EXPECT_EQ(back.passed(), r.passed());
  }
}

TEST(Reports, SweepRoundTrip) {
  auto c = make_case(sixfold_case());
  auto rep = sweep(c.system, c.witness, primes_in_range(2, 40));
  auto j = to_json(rep, *c.ring);
  auto back = sweep_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(to_json(back, *c.ring).dump(), j.dump());
  EXPECT_EQ(j.at("bad_primes").size(), 2u);
  EXPECT_EQ(j.at("uniform_d"), 2);
}

TEST(Reports, ProbeAndRadicalShapes) {
  auto r = ring_of("x,y");
  auto rad = to_json(radical_equals(ideal(r, "(x^2, y)"), ideal(r, "(x, y)"), 4));
  EXPECT_EQ(rad.at("verdict"), "Equal");
  EXPECT_EQ(rad.at("exponents"), Json::parse("[2, 1]"));
  auto probe = to_json(prime_probe(ideal(r, "(x*y)"), 2, 200, 0));
  EXPECT_EQ(probe.at("verdict"), "NotPrime");
  EXPECT_TRUE(probe.at("f").is_string());
}
