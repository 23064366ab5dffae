#include "polynorm/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polynorm/algebra.hpp"
#include "polynorm/error.hpp"
#include "polynorm/grothendieck.hpp"
#include "polynorm/json_io.hpp"
#include "polynorm/laurent.hpp"
#include "polynorm/normdecomp.hpp"
#include "polynorm/random.hpp"
#include "polynorm/svg.hpp"

namespace polynorm::cli {
namespace {

using json_io::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  auto it = std::find_if_not(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  return it != text.end() && (*it == '{' || *it == '[');
}

// An argument is inline JSON, "-" for stdin, or a path.
std::string read_argument(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (looks_like_json(arg)) return arg;
  return read_file(arg);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Json load_json(const std::string& arg) { return parse_json(read_argument(arg)); }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchCapExceeded:
      return kSearchCap;
    case ErrorCode::NotSymmetric:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidParameter:
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::SliceMismatch:
      return kPrecondition;
    case ErrorCode::IdentityCheckFailed:
      return kInternal;
    case ErrorCode::EmptyPolytope:
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::InvalidInput:
      return kUsage;
  }
  return kInternal;
}

void report(std::ostream& err, std::string_view code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

std::vector<std::string> split_vars(const std::string& list) {
  std::vector<std::string> vars;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }),
               name.end());
    if (name.empty()) throw Error(ErrorCode::InvalidInput, "empty variable name in --vars");
    vars.push_back(name);
  }
  return vars;
}

struct Check {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
};

Json selftest(std::uint64_t seed, std::size_t cases) {
  random::Engine rng(seed);
  std::uniform_int_distribution<std::size_t> dim_of(1, 3);
  std::vector<Check> checks;

  Check dec{"decompose_identity"};
  for (std::size_t i = 0; i < cases; ++i, ++dec.cases) {
    const Polytope p = random::symmetric_polytope(rng, dim_of(rng), 5, 5);
    const NormDecomposition d = decompose(p);
    if (verify_norm_identity(d.p, d.q, d.r)) ++dec.passed;
  }
  checks.push_back(dec);

  Check slice{"stretch_slice"};
  for (std::size_t i = 0; i < cases; ++i, ++slice.cases) {
    const Polytope p = random::polytope(rng, dim_of(rng), 5, 3);
    const StretchData s = stretch(p);
    if (slice_matches(s.y, s.slice)) ++slice.passed;
  }
  checks.push_back(slice);

  Check newton{"newton_homomorphism"};
  for (std::size_t i = 0; i < cases; ++i, ++newton.cases) {
    const std::size_t n = dim_of(rng);
    const LaurentPolynomial f = random::laurent(rng, n, 6, 4);
    const LaurentPolynomial g = random::laurent(rng, n, 6, 4);
    if (equal(newton_polytope(multiply(f, g)), newton_polytope(f) + newton_polytope(g))) {
      ++newton.passed;
    }
  }
  checks.push_back(newton);

  Check norm{"norm_roundtrip"};
  for (std::size_t i = 0; i < cases; ++i) {
    const Polytope q0 = random::polytope(rng, dim_of(rng) == 1 ? 1 : 2, 3, 1);
    const Polytope p = q0 + mirror(q0);
    if (lattice_points(p).size() > 12) continue;
    ++norm.cases;
    if (auto w = is_integral_norm(p, 12); w && equal(*w + mirror(*w), p)) ++norm.passed;
  }
  checks.push_back(norm);

  Check group{"norm_difference"};
  for (std::size_t i = 0; i < cases; ++i, ++group.cases) {
    const std::size_t n = dim_of(rng);
    const Polytope a = random::polytope(rng, n, 4, 3);
    const GrothendieckElement x = add(element(a, Polytope::origin(n)),
                                      mirror_element(element(a, Polytope::origin(n))));
    if (verify_certificate(x, norm_difference(x))) ++group.passed;
  }
  checks.push_back(group);

  Json out{{"seed", seed}, {"cases", cases}, {"checks", Json::array()}};
  bool all = true;
  for (const auto& c : checks) {
    const bool ok = c.passed == c.cases;
    all = all && ok;
    out["checks"].push_back(
        Json{{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}, {"ok", ok}});
  }
  out["passed"] = all;
  return out;
}

void write_svg(const std::string& path, const std::vector<SvgLayer>& layers) {
  if (path.empty()) return;
  for (const auto& layer : layers) {
    if (layer.polytope.dim() != 2) {
      throw Error(ErrorCode::InvalidParameter, "--svg is only available for dimension 2");
    }
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  file << render_svg(layers);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Minkowski arithmetic on lattice polytopes and their norm decompositions"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string out_path;
  std::string svg_path;
  std::size_t cap = kDefaultSearchCap;
  std::string vars;
  std::uint64_t seed = 1;
  std::size_t cases = 20;

  auto add_inputs = [&](CLI::App* sub, std::size_t count, const std::string& what) {
    sub->add_option("inputs", inputs, what)->required()->expected(static_cast<int>(count));
    sub->add_option("--out", out_path, "Write the JSON result to this file instead of stdout");
    return sub;
  };

  auto* sum = add_inputs(app.add_subcommand("sum", "Minkowski sum of two polytopes"), 2,
                         "Two polytopes (JSON, file path, or - for stdin)");
  sum->add_option("--svg", svg_path, "Render the operands and the sum (dimension 2)");
  auto* mirror_cmd = add_inputs(app.add_subcommand("mirror", "Mirror image of a polytope"), 1, "Polytope");
  auto* equal_cmd = add_inputs(app.add_subcommand("equal", "Test two polytopes for equality"), 2, "Two polytopes");
  auto* symmetric_cmd = add_inputs(
      app.add_subcommand("symmetric", "Symmetry of a polytope (also up to translation) or of an element"),
      1, "Polytope or element");
  auto* decompose_cmd = add_inputs(
      app.add_subcommand("decompose", "Find Q, R with P + Q + mirror(Q) = R + mirror(R)"), 1,
      "Symmetric polytope");
  decompose_cmd->add_option("--svg", svg_path, "Render P, Q and R (dimension 2)");
  auto* norm_cmd = add_inputs(
      app.add_subcommand("is-norm", "Exhaustive search for Q with Q + mirror(Q) = P"), 1,
      "Symmetric polytope");
  norm_cmd->add_option("--cap", cap, "Maximum number of lattice points of P")->capture_default_str();
  norm_cmd->add_option("--svg", svg_path, "Render P and the witness (dimension 2)");
  auto* verify_cmd = add_inputs(
      app.add_subcommand("verify", "Re-check a certificate emitted by decompose or norm-diff"), 1,
      "Certificate JSON");
  auto* newton_cmd = add_inputs(
      app.add_subcommand("newton", "Newton polytope of a Laurent polynomial"), 1,
      "Polynomial JSON, a file, or an expression such as \"3*x^2*y^-1 - x\"");
  newton_cmd->add_option("--vars", vars, "Comma separated variable names for expressions");
  newton_cmd->add_option("--svg", svg_path, "Render the Newton polytope (dimension 2)");
  auto* group_cmd = add_inputs(
      app.add_subcommand("group-eq", "Equality of two Grothendieck group elements"), 2, "Two elements");
  auto* normdiff_cmd = add_inputs(
      app.add_subcommand("norm-diff", "Write a symmetric element as a difference of norms"), 1,
      "Element JSON");
  normdiff_cmd->add_option("--svg", svg_path, "Render the element and certificate (dimension 2)");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run randomized consistency checks");
  selftest_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  selftest_cmd->add_option("--cases", cases, "Cases per check")->capture_default_str();
  selftest_cmd->add_option("--out", out_path, "Write the JSON result to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return kUsage;
  }

  try {
    Json result;
    int code = kOk;
    if (sum->parsed()) {
      const Polytope a = json_io::polytope_from_json(load_json(inputs[0]));
      const Polytope b = json_io::polytope_from_json(load_json(inputs[1]));
      const Polytope s = a + b;
      write_svg(svg_path, {{"P", a}, {"Q", b}, {"P+Q", s}});
      result = json_io::to_json(s);
    } else if (mirror_cmd->parsed()) {
      result = json_io::to_json(mirror(json_io::polytope_from_json(load_json(inputs[0]))));
    } else if (equal_cmd->parsed()) {
      const Polytope a = json_io::polytope_from_json(load_json(inputs[0]));
      const Polytope b = json_io::polytope_from_json(load_json(inputs[1]));
      result = Json{{"equal", equal(a, b)}};
    } else if (symmetric_cmd->parsed()) {
      const Json input = load_json(inputs[0]);
      if (input.is_object() && input.contains("plus")) {
        result = Json{{"symmetric", is_symmetric_element(json_io::element_from_json(input))}};
      } else {
        const Polytope p = json_io::polytope_from_json(input);
        const auto t = symmetric_up_to_translation(p);
        result = Json{{"symmetric", is_symmetric(p)},
                      {"symmetric_up_to_translation", t.has_value()},
                      {"translation", t ? json_io::to_json(*t) : Json(nullptr)}};
      }
    } else if (decompose_cmd->parsed()) {
      const NormDecomposition d = decompose(json_io::polytope_from_json(load_json(inputs[0])));
      write_svg(svg_path, {{"P", d.p}, {"Q", d.q}, {"R", d.r}});
      result = json_io::to_json(d);
    } else if (norm_cmd->parsed()) {
      const Polytope p = json_io::polytope_from_json(load_json(inputs[0]));
      const NormSearchResult r = search_integral_norm(p, {.cap = cap});
      std::vector<SvgLayer> layers{{"P", p}};
      if (r.witness) layers.push_back({"Q", *r.witness});
      write_svg(svg_path, layers);
      result = json_io::to_json(r);
    } else if (verify_cmd->parsed()) {
      const Json cert = load_json(inputs[0]);
      if (cert.is_object() && cert.contains("certificate")) {
        const GrothendieckElement x = json_io::element_from_json(cert.at("element"));
        const NormDifferenceCertificate c = json_io::certificate_from_json(cert.at("certificate"));
        result = Json{{"kind", "norm_difference"}, {"valid", verify_certificate(x, c)}};
      } else {
        const NormDecomposition d = json_io::decomposition_from_json(cert);
        result = Json{{"kind", "decomposition"}, {"valid", verify_norm_identity(d.p, d.q, d.r)}};
      }
    } else if (newton_cmd->parsed()) {
      // Besides JSON, a path or "-", the argument may be an expression.
      const std::string& arg = inputs[0];
      const bool is_source = arg == "-" || looks_like_json(arg) || std::filesystem::is_regular_file(arg);
      const std::string text = is_source ? read_argument(arg) : arg;
      LaurentPolynomial f(0);
      std::vector<std::string> names;
      if (looks_like_json(text)) {
        std::tie(f, names) = json_io::laurent_from_json(parse_json(text));
      } else {
        if (vars.empty()) throw Error(ErrorCode::InvalidInput, "--vars is required for expressions");
        names = split_vars(vars);
        f = parse_laurent(text, names);
      }
      const Polytope p = newton_polytope(f);
      write_svg(svg_path, {{"Newton polytope", p}});
      result = Json{{"polynomial", json_io::to_json(f, names)},
                    {"newton_polytope", json_io::to_json(p)}};
    } else if (group_cmd->parsed()) {
      const GrothendieckElement x = json_io::element_from_json(load_json(inputs[0]));
      const GrothendieckElement y = json_io::element_from_json(load_json(inputs[1]));
      result = Json{{"equal", element_eq(x, y)}};
    } else if (normdiff_cmd->parsed()) {
      const GrothendieckElement x = json_io::element_from_json(load_json(inputs[0]));
      const NormDifferenceCertificate c = norm_difference(x);
      write_svg(svg_path, {{"X.plus", x.plus()}, {"X.minus", x.minus()}, {"u", c.u}, {"v", c.v}});
      result = Json{{"element", json_io::to_json(x)},
                    {"certificate", json_io::to_json(c)},
                    {"verified", true}};
    } else if (selftest_cmd->parsed()) {
      result = selftest(seed, cases);
      if (!result["passed"].get<bool>()) code = kInternal;
    }

    const std::string text = result.dump(2) + "\n";
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path);
      if (!file) throw Error(ErrorCode::InvalidInput, "cannot write '" + out_path + "'");
      file << text;
    }
    return code;
  } catch (const Error& e) {
    report(err, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report(err, "InternalError", e.what());
    return kInternal;
  }
}

}  // namespace polynorm::cli
