#include "invmaps/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "invmaps/canonical.hpp"
#include "invmaps/errors.hpp"
#include "invmaps/explorer.hpp"
#include "invmaps/poly_io.hpp"
#include "invmaps/report.hpp"
#include "invmaps/tensor.hpp"
#include "invmaps/verify.hpp"

namespace invmaps {

namespace {

struct Options {
  std::string format = "text";
  bool quiet = false;
  int p = 0;
  std::vector<int> weights;
  std::string poly;
  std::string at;
  std::string fraction = "1";
  long long target_rank = 0;
  std::string method = "thm1";
  int max_depth = 3;
  std::optional<int> max_degree;
  std::string fractions = "1,1/2";
  std::optional<std::size_t> rank_min;
  std::optional<std::size_t> rank_max;
  std::string script;
};

// Inline text, or the contents of the file it names.
std::string read_inline_or_file(const std::string& value) {
  std::error_code ec;
  if (!value.empty() && std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return value;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  Rational q;
  try {
    if (slash == std::string::npos) {
      q = Rational(mpz_class(text));
    } else {
      const mpz_class den(text.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in '" + text + "'");
      q = Rational(mpz_class(text.substr(0, slash)), den);
      q.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid rational '" + text + "'");
  }
  return q;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw ParseError("empty fraction list");
  return out;
}

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  OutputFormat format() const { return opts_.format == "json" ? OutputFormat::Json : OutputFormat::Text; }

  DiagonalCyclicGroup group() const { return make_group(opts_.p, opts_.weights); }

  DiagonalCyclicGroup usable_group() const {
    auto g = group();
    if (!g.fixed_point_free()) {
      throw DomainError("group of order " + std::to_string(g.order()) +
                        " is not fixed-point-free: every weight must be coprime to p");
    }
    return g;
  }

  Polynomial poly(std::optional<std::size_t> num_vars) const {
    return parse_polynomial_any(read_inline_or_file(opts_.poly), num_vars);
  }

  void canonical() { emit_report(out_, canonical_polynomial(usable_group()), format()); }

  void verify() {
    const auto g = group();
    emit_report(out_, verify_bundle(g, poly(g.dimension())), format());
  }

  void map() {
    const Polynomial g = poly(std::nullopt);
    if (format() == OutputFormat::Text) out_ << "polynomial: " << format_polynomial(g) << '\n';
    emit_report(out_, extract_map(g), format());
  }

  void tensor() {
    const auto g = usable_group();
    const Polynomial f = canonical_polynomial(g).f_gamma;
    const Polynomial result =
        tensor_at(poly(g.dimension()), parse_monomial(opts_.at, g.dimension()), parse_rational(opts_.fraction), f);
    if (format() == OutputFormat::Json) {
      out_ << nlohmann::json{{"polynomial", polynomial_to_json(result)},
                             {"rank", result.size()},
                             {"verification", verification_to_json(verify_bundle(g, result))}}
                  .dump(2)
           << '\n';
      return;
    }
    out_ << "polynomial: " << format_polynomial(result) << '\n' << "rank: " << result.size() << '\n';
  }

  void construct() {
    const auto g = usable_group();
    const auto trace = opts_.method == "thm2" ? construct_thm2(g, opts_.target_rank) : construct_thm1(g, opts_.target_rank);
    emit_report(out_, trace, format());
  }

  void spectrum() {
    SearchConfig cfg;
    cfg.max_depth = opts_.max_depth;
    cfg.max_degree = opts_.max_degree;
    cfg.allowed_fractions = parse_rational_list(opts_.fractions);
    if (opts_.rank_min || opts_.rank_max) {
      cfg.rank_window = std::make_pair(opts_.rank_min.value_or(0),
                                       opts_.rank_max.value_or(std::numeric_limits<std::size_t>::max()));
    }
    emit_report(out_, explore_spectrum(usable_group(), cfg), format());
  }

  void replay() {
    const auto g = usable_group();
    std::string text = read_inline_or_file(opts_.script);
    if (text.find('\n') == std::string::npos) std::replace(text.begin(), text.end(), ';', '\n');
    const auto steps = parse_script(text, g.dimension());
    const auto states = replay_script(g, steps);
    if (format() == OutputFormat::Json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [rank, poly] : states) arr.push_back({{"rank", rank}, {"polynomial", polynomial_to_json(poly)}});
      out_ << nlohmann::json{{"group", group_to_json(g)}, {"steps", steps_to_json(steps)}, {"states", arr}}.dump(2)
           << '\n';
      return;
    }
    out_ << "start: f_Gamma  rank " << states.front().first << '\n';
    for (std::size_t i = 0; i < steps.size(); ++i) {
      out_ << "step " << (i + 1) << ": " << (steps[i].fraction == 1 ? "mul " : "split ")
           << format_monomial(steps[i].target) << "  rank " << states[i + 1].first << '\n';
    }
  }

 private:
  const Options& opts_;
  std::ostream& out_;
};

void add_group_options(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "group order")->required();
  sub->add_option("--weights", o.weights, "comma-separated weights a_1,...,a_n")->delimiter(',')->required();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Group-invariant CR sphere maps via invariant real polynomials", "invmaps"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", o.quiet, "suppress diagnostics on the error stream");

  auto* canonical = app.add_subcommand("canonical", "canonical invariant polynomial f_Gamma, rank and map");
  add_group_options(canonical, o);

  auto* verify = app.add_subcommand("verify", "check invariance, hyperplane identity and non-negativity");
  add_group_options(verify, o);
  verify->add_option("--poly", o.poly, "polynomial text, JSON, or a file containing either")->required();

  auto* map = app.add_subcommand("map", "monomial map components of a polynomial");
  map->add_option("--poly", o.poly, "polynomial text, JSON, or a file containing either")->required();

  auto* tensor = app.add_subcommand("tensor", "apply one tensoring step with f_Gamma");
  add_group_options(tensor, o);
  tensor->add_option("--poly", o.poly, "polynomial text, JSON, or a file containing either")->required();
  tensor->add_option("--at", o.at, "target monomial, e.g. \"x1^3\"")->required();
  tensor->add_option("--fraction", o.fraction, "fraction of the term to tensor, in (0,1]");

  auto* construct = app.add_subcommand("construct", "build an invariant polynomial of a given rank");
  add_group_options(construct, o);
  construct->add_option("--target-rank", o.target_rank, "requested rank N")->required();
  construct->add_option("--method", o.method, "thm1 (any n) or thm2 (n = 2)")->check(CLI::IsMember({"thm1", "thm2"}));

  auto* spectrum = app.add_subcommand("spectrum", "breadth-first search over tensoring steps");
  add_group_options(spectrum, o);
  spectrum->add_option("--max-depth", o.max_depth, "number of steps");
  spectrum->add_option("--max-degree", o.max_degree, "total degree cap");
  spectrum->add_option("--fractions", o.fractions, "allowed fractions, e.g. 1,1/2");
  spectrum->add_option("--rank-min", o.rank_min, "smallest rank to report");
  spectrum->add_option("--rank-max", o.rank_max, "largest rank to report");

  auto* replay = app.add_subcommand("replay", "replay a script of mul/split steps");
  add_group_options(replay, o);
  replay->add_option("--script", o.script, "script file, or inline steps separated by ';'")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  Runner run(o, out);
  try {
    if (*canonical) run.canonical();
    else if (*verify) run.verify();
    else if (*map) run.map();
    else if (*tensor) run.tensor();
    else if (*construct) run.construct();
    else if (*spectrum) run.spectrum();
    else if (*replay) run.replay();
    return 0;
  } catch (const ParseError& e) {
    if (!o.quiet) err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    if (!o.quiet) err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    if (!o.quiet) err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace invmaps
