#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "invmaps/canonical.hpp"
#include "invmaps/explorer.hpp"
#include "invmaps/tensor.hpp"
#include "invmaps/verify.hpp"

namespace invmaps {

// JSON schemas. Objects are emitted through nlohmann::json's default ordered
// map, so keys come out sorted and the output is byte-stable.

nlohmann::json rational_to_json(const Rational& q);  // [num, den]
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const Polynomial& g);  // {"vars", "terms": [{"coeff", "exps"}]}
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json signature_to_json(const Signature& s);  // {"n_minus", "n_plus"}
nlohmann::json group_to_json(const DiagonalCyclicGroup& g);  // {"p", "weights"}
DiagonalCyclicGroup group_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const std::vector<MapComponent>& map);
nlohmann::json canonical_to_json(const CanonicalResult& r);

nlohmann::json steps_to_json(const std::vector<TensorStep>& steps);
std::vector<TensorStep> steps_from_json(const nlohmann::json& j, std::size_t num_vars);

nlohmann::json trace_to_json(const ConstructionTrace& t);
/// Rebuilds the trace by replaying its steps, then checks the stored result
/// and ranks against the replay. Throws ParseError on mismatch.
ConstructionTrace trace_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const SearchConfig& c);
SearchConfig config_from_json(const nlohmann::json& j);
nlohmann::json spectrum_to_json(const SpectrumReport& r);
SpectrumReport spectrum_from_json(const nlohmann::json& j);

nlohmann::json verification_to_json(const VerificationReport& v);

enum class OutputFormat { Text, Json };

void emit_report(std::ostream& os, const Signature& s, OutputFormat format);
void emit_report(std::ostream& os, const Polynomial& g, OutputFormat format);
void emit_report(std::ostream& os, const std::vector<MapComponent>& map, OutputFormat format);
void emit_report(std::ostream& os, const CanonicalResult& r, OutputFormat format);
void emit_report(std::ostream& os, const ConstructionTrace& t, OutputFormat format);
void emit_report(std::ostream& os, const SpectrumReport& r, OutputFormat format);
void emit_report(std::ostream& os, const VerificationReport& v, OutputFormat format);

}  // namespace invmaps
