#include "invmaps/report.hpp"

#include <limits>
#include <sstream>

#include "invmaps/errors.hpp"
#include "invmaps/poly_io.hpp"

namespace invmaps {

using nlohmann::json;

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("invalid integer string in JSON");
    return z;
  }
  throw ParseError("expected an integer in JSON, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("JSON object is missing \"") + key + "\"");
  return j.at(key);
}

std::string step_verb(const TensorStep& s) {
  if (s.fraction == 1) return "mul";
  if (s.fraction == Rational(1, 2)) return "split";
  return "frac " + s.fraction.get_str();
}

}  // namespace

json rational_to_json(const Rational& q) { return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("rational must be [num, den], got " + j.dump());
  const mpz_class den = integer_from_json(j[1]);
  if (den == 0) throw ParseError("zero denominator in JSON rational");
  Rational q(integer_from_json(j[0]), den);
  q.canonicalize();
  return q;
}

json polynomial_to_json(const Polynomial& g) {
  json terms = json::array();
  for (const auto& [alpha, c] : g.terms()) {
    terms.push_back({{"coeff", rational_to_json(c)},
                     {"exps", std::vector<int>(alpha.exponents().begin(), alpha.exponents().end())}});
  }
  return {{"vars", g.num_vars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const json& j) {
  const json& vars = field(j, "vars");
  if (!vars.is_number_unsigned() || vars.get<std::size_t>() < 1) throw ParseError("\"vars\" must be a positive integer");
  const auto n = vars.get<std::size_t>();
  Polynomial out(n);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const auto& t : terms) {
    const json& exps = field(t, "exps");
    if (!exps.is_array() || exps.size() != n) throw ParseError("term exponent vector has the wrong length");
    std::vector<int> e;
    for (const auto& x : exps) {
      if (!x.is_number_integer() || x.get<long>() < 0) throw ParseError("exponents must be non-negative integers");
      e.push_back(x.get<int>());
    }
    out.add_term(MultiIndex(std::move(e)), rational_from_json(field(t, "coeff")));
  }
  return out;
}

json signature_to_json(const Signature& s) { return {{"n_plus", s.n_plus}, {"n_minus", s.n_minus}}; }

json group_to_json(const DiagonalCyclicGroup& g) { return {{"p", g.order()}, {"weights", g.weights()}}; }

DiagonalCyclicGroup group_from_json(const json& j) {
  try {
    return make_group(field(j, "p").get<int>(), field(j, "weights").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid group JSON: ") + e.what());
  }
}

json map_to_json(const std::vector<MapComponent>& map) {
  json out = json::array();
  for (const auto& m : map) {
    out.push_back({{"coeff2", rational_to_json(m.squared_coeff)},
                   {"exps", std::vector<int>(m.exponent.exponents().begin(), m.exponent.exponents().end())},
                   {"side", m.side == MapSide::F ? "F" : "G"}});
  }
  return out;
}

json canonical_to_json(const CanonicalResult& r) {
  return {{"group", group_to_json(r.group)},
          {"polynomial", polynomial_to_json(r.f_gamma)},
          {"rank", r.n_gamma},
          {"signature", {r.signature.n_plus, r.signature.n_minus}},
          {"map", map_to_json(extract_map(r.f_gamma))}};
}

json steps_to_json(const std::vector<TensorStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back({{"target", std::vector<int>(s.target.exponents().begin(), s.target.exponents().end())},
                   {"fraction", rational_to_json(s.fraction)}});
  }
  return out;
}

std::vector<TensorStep> steps_from_json(const json& j, std::size_t num_vars) {
  if (!j.is_array()) throw ParseError("steps must be an array");
  std::vector<TensorStep> out;
  for (const auto& s : j) {
    const json& target = field(s, "target");
    if (!target.is_array() || target.size() != num_vars) throw ParseError("step target has the wrong length");
    std::vector<int> e;
    for (const auto& x : target) {
      if (!x.is_number_integer() || x.get<long>() < 0) throw ParseError("exponents must be non-negative integers");
      e.push_back(x.get<int>());
    }
    out.push_back({MultiIndex(std::move(e)), rational_from_json(field(s, "fraction"))});
  }
  return out;
}

json trace_to_json(const ConstructionTrace& t) {
  return {{"group", group_to_json(t.group)},
          {"steps", steps_to_json(t.steps)},
          {"ranks", t.rank_after_each_step},
          {"rank", t.result.size()},
          {"result", polynomial_to_json(t.result)}};
}

ConstructionTrace trace_from_json(const json& j) {
  const DiagonalCyclicGroup group = group_from_json(field(j, "group"));
  ConstructionTrace t = replay_steps(group, steps_from_json(field(j, "steps"), group.dimension()));
  if (j.contains("result") && polynomial_from_json(j.at("result")) != t.result) {
    throw ParseError("trace result does not match its replayed steps");
  }
  if (j.contains("ranks") && j.at("ranks").get<std::vector<std::size_t>>() != t.rank_after_each_step) {
    throw ParseError("trace ranks do not match its replayed steps");
  }
  return t;
}

json config_to_json(const SearchConfig& c) {
  json fractions = json::array();
  for (const auto& s : c.allowed_fractions) fractions.push_back(rational_to_json(s));
  json out = {{"max_depth", c.max_depth}, {"fractions", fractions}};
  out["max_degree"] = c.max_degree ? json(*c.max_degree) : json(nullptr);
  out["rank_window"] = c.rank_window ? json::array({c.rank_window->first, c.rank_window->second}) : json(nullptr);
  return out;
}

SearchConfig config_from_json(const json& j) {
  SearchConfig c;
  c.max_depth = field(j, "max_depth").get<int>();
  c.allowed_fractions.clear();
  for (const auto& s : field(j, "fractions")) c.allowed_fractions.push_back(rational_from_json(s));
  if (j.contains("max_degree") && !j.at("max_degree").is_null()) c.max_degree = j.at("max_degree").get<int>();
  if (j.contains("rank_window") && !j.at("rank_window").is_null()) {
    const auto w = j.at("rank_window").get<std::vector<std::size_t>>();
    if (w.size() != 2) throw ParseError("rank_window must be [lo, hi]");
    c.rank_window = std::make_pair(w[0], w[1]);
  }
  return c;
}

json spectrum_to_json(const SpectrumReport& r) {
  json achieved = json::array();
  for (const auto& [rank, trace] : r.achieved) {
    achieved.push_back({{"rank", rank}, {"depth", trace.steps.size()}, {"trace", steps_to_json(trace.steps)}});
  }
  return {{"group", group_to_json(r.group)},
          {"config", config_to_json(r.config)},
          {"achieved", achieved},
          {"frontier_size_per_level", r.frontier_size_per_level}};
}

SpectrumReport spectrum_from_json(const json& j) {
  SpectrumReport r;
  r.group = group_from_json(field(j, "group"));
  r.config = config_from_json(field(j, "config"));
  r.frontier_size_per_level = field(j, "frontier_size_per_level").get<std::vector<std::size_t>>();
  for (const auto& entry : field(j, "achieved")) {
    const auto rank = field(entry, "rank").get<std::size_t>();
    ConstructionTrace t = replay_steps(r.group, steps_from_json(field(entry, "trace"), r.group.dimension()));
    if (t.result.size() != rank) throw ParseError("spectrum entry does not replay to rank " + std::to_string(rank));
    r.achieved.emplace(rank, std::move(t));
  }
  return r;
}

json verification_to_json(const VerificationReport& v) {
  json out = {{"invariant", v.invariant},
              {"hyperplane", v.hyperplane},
              {"nonnegative", v.nonnegative},
              {"rank", v.rank},
              {"signature", signature_to_json(v.signature)}};
  out["sphere_target"] = v.sphere_target ? json(*v.sphere_target) : json(nullptr);
  return out;
}

namespace {

void write_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

void write_map_text(std::ostream& os, const std::vector<MapComponent>& map) {
  for (const auto& m : map) {
    os << "  " << (m.side == MapSide::F ? "F" : "G") << "  |c|^2 = " << m.squared_coeff.get_str()
       << "  c = " << m.display_coefficient() << "  " << format_monomial(m.exponent, "z") << '\n';
  }
}

}  // namespace

void emit_report(std::ostream& os, const Signature& s, OutputFormat format) {
  if (format == OutputFormat::Json) return write_json(os, signature_to_json(s));
  os << "signature: (" << s.n_plus << ", " << s.n_minus << ")\n";
}

void emit_report(std::ostream& os, const Polynomial& g, OutputFormat format) {
  if (format == OutputFormat::Json) return write_json(os, polynomial_to_json(g));
  os << format_polynomial(g) << '\n';
}

void emit_report(std::ostream& os, const std::vector<MapComponent>& map, OutputFormat format) {
  if (format == OutputFormat::Json) return write_json(os, map_to_json(map));
  write_map_text(os, map);
}

void emit_report(std::ostream& os, const CanonicalResult& r, OutputFormat format) {
  if (format == OutputFormat::Json) return write_json(os, canonical_to_json(r));
  os << "polynomial: " << format_polynomial(r.f_gamma) << '\n'
     << "rank: " << r.n_gamma << '\n'
     << "signature: (" << r.signature.n_plus << ", " << r.signature.n_minus << ")\n"
     << "map:\n";
  write_map_text(os, extract_map(r.f_gamma));
}

void emit_report(std::ostream& os, const ConstructionTrace& t, OutputFormat format) {
  if (format == OutputFormat::Json) return write_json(os, trace_to_json(t));
  os << "start: f_Gamma  rank " << t.rank_after_each_step.front() << '\n';
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    os << "step " << (i + 1) << ": " << step_verb(t.steps[i]) << ' ' << format_monomial(t.steps[i].target)
       << "  rank " << t.rank_after_each_step[i + 1] << '\n';
  }
  os << "rank: " << t.result.size() << '\n' << "polynomial: " << format_polynomial(t.result) << '\n';
}

void emit_report(std::ostream& os, const SpectrumReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return write_json(os, spectrum_to_json(r));
  os << "states per level:";
  for (auto n : r.frontier_size_per_level) os << ' ' << n;
  os << '\n';
  for (const auto& [rank, trace] : r.achieved) {
    os << "rank " << rank << ':';
    if (trace.steps.empty()) os << " f_Gamma";
    for (const auto& s : trace.steps) os << " [" << step_verb(s) << ' ' << format_monomial(s.target) << ']';
    os << '\n';
  }
}

void emit_report(std::ostream& os, const VerificationReport& v, OutputFormat format) {
  if (format == OutputFormat::Json) return write_json(os, verification_to_json(v));
  os << std::boolalpha << "invariant: " << v.invariant << '\n'
     << "hyperplane: " << v.hyperplane << '\n'
     << "nonnegative: " << v.nonnegative << '\n'
     << "rank: " << v.rank << '\n'
     << "signature: (" << v.signature.n_plus << ", " << v.signature.n_minus << ")\n"
     << "sphere_target: ";
  if (v.sphere_target) {
    os << "S^" << *v.sphere_target << '\n';
  } else {
    os << "none\n";
  }
}

}  // namespace invmaps
