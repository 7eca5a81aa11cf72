#pragma once

// JSON ingestion of Seifert matrices and JSON rendering of every report the
// command-line tool prints.

#include <string>
#include <vector>

#include "json.hpp"
#include "knotcg/obstruction.hpp"

namespace knotcg::report {

using Json = nlohmann::ordered_json;

/// Parses {"label": string?, "matrix": [[int, ...], ...]}. Structural problems
/// throw Schema; Seifert invariant violations throw InvalidSeifert. Integers
/// may be JSON numbers or decimal strings.
SeifertMatrix parse_seifert(const std::string& text);
Json to_json(const SeifertMatrix& s);

/// Parses "10", "3/2" or "2.5" into an exact rational.
mpq_class parse_rational(const std::string& text);

Json integer(const mpz_class& v);

Json analyze(const SeifertMatrix& s, long bound);
/// Singular angles produce {"signature": null, "singular": true}.
Json signature(const SeifertMatrix& s, const RationalAngle& a);
Json cover(const SeifertMatrix& s, bool with_metabolizers);
Json verification(const SeifertMatrix& companion, const VerificationReport& rep,
                  const mpq_class* suggested_for);

}  // namespace knotcg::report
