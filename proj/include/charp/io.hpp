#pragma once

#include <string>

#include "json.hpp"

#include "charp/transfer.hpp"

namespace charp {

using Json = nlohmann::ordered_json;

/// A case file: one system plus one witness.
struct CaseFile {
  RingPtr ring;
  DiophantineSystem system;
  Witness witness;
};

/// Parses the case-file schema. Unknown keys, floats and malformed
/// coefficients raise ParseError. Polynomials are term lists
/// [{"coeff": "a/b", "exps": [...]}, ...] or polynomial text.
CaseFile parse_case(const std::string& text);
CaseFile load_case(const std::string& path);
Json case_to_json(const CaseFile& c);

Json ring_to_json(const Ring& ring);
RingPtr ring_from_json(const nlohmann::json& j);
Json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const nlohmann::json& j, const RingPtr& ring);

Json to_json(const ComplexityReport& r);
Json to_json(const RadicalResult& r);
Json to_json(const ProbeResult& r);
/// Includes the ring so polynomial certificates can be re-read.
Json to_json(const VerificationResult& r, const Ring& ring);
Json to_json(const SweepReport& r, const Ring& ring);

/// Inverse of to_json for reports; re-rendering a parsed report reproduces
/// the original text.
VerificationResult verification_from_json(const nlohmann::json& j);
SweepReport sweep_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);

}  // namespace charp
