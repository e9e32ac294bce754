#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "bdcoords/bd.hpp"
#include "bdcoords/io.hpp"
#include "bdcoords/verify.hpp"

using namespace bdcoords;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

constexpr double kRoundTripTolerance = 1e-9;

struct Options {
  std::string suite = "all";
  int n = 3;
  int samples = 200;
  std::uint64_t seed = 1;
  bool exact = false;
  bool floating = false;
  int max = 10;
  double tolerance = 1e-9;
  std::string input;
  std::string out;
};

int cmd_verify(const Options& o) {
  VerifyConfig cfg;
  cfg.suite = o.suite;
  cfg.n = o.n;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.mode = o.floating ? Mode::Float : Mode::Exact;
  cfg.max = o.max;
  cfg.tolerance = o.tolerance;
  const auto results = run_verify(cfg);
  bool ok = true;
  Json report{{"command", "verify"},
              {"n", cfg.n},
              {"samples", cfg.samples},
              {"seed", cfg.seed},
              {"mode", cfg.mode == Mode::Exact ? "exact" : "float"},
              {"suites", Json::array()}};
  for (const auto& r : results) {
    ok = ok && r.pass;
    std::printf("%-13s %s  cases=%zu failures=%zu worst_deviation=%s", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                r.cases, r.failures, format_double(r.worst_deviation).c_str());
    if (r.name == "rhombus" || r.name == "band") std::printf(" sign_mismatches=%zu", r.sign_mismatches);
    std::printf("\n");
    report["suites"].push_back(suite_to_json(r));
  }
  report["pass"] = ok;
  if (!o.out.empty()) write_text(o.out + ".json", dump_json(report));
  return ok ? kOk : kVerificationFailure;
}

int cmd_invariants(const Options& o) {
  const SurfaceInput in = load_surface(o.input);
  if (!in.parameters) throw SchemaError("$.shears: missing (invariants needs shears and twists)");
  const DevelopedSurface ds = assemble_surface(in.spec, *in.parameters);
  const BDVector v = bd_vector(ds, o.n);
  const ClosedLeafReport cl = closed_leaf_report(v, in.spec, &ds);
  const Membership poly = polytope_membership(v, in.spec);
  const Membership slice = slice_membership(v);
  Json report{{"command", "invariants"},
              {"n", o.n},
              {"bd_vector", bd_vector_to_json(v)},
              {"closed_leaf", closed_leaf_to_json(cl)},
              {"polytope", membership_to_json(poly)},
              {"slice", membership_to_json(slice)}};
  write_text(o.out + ".json", dump_json(report));
  write_text(o.out + ".csv", bd_vector_csv(v));
  std::printf("N=%zu polytope=%s slice=%s closed_leaf_max_gap=%s\n", v.layout.size(), poly.member ? "true" : "false",
              slice.member ? "true" : "false", format_double(cl.max_gap).c_str());
  for (const auto& d : poly.diagnostics) std::fprintf(stderr, "polytope: %s\n", d.c_str());
  for (const auto& d : slice.diagnostics) std::fprintf(stderr, "slice: %s\n", d.c_str());
  return poly.member && slice.member ? kOk : kVerificationFailure;
}

int cmd_realize(const Options& o) {
  const SurfaceInput in = load_surface(o.input);
  if (!in.slice) throw SchemaError("$.slice: missing (realize needs a slice point)");
  const Realization r = realize_slice(*in.slice, in.spec, o.n);
  double worst_residual = 0.0;
  Json twists = Json::object();
  for (std::size_t c = 0; c < in.spec.curves.size(); ++c) {
    twists[in.spec.curves[c].id] = Json{{"t", r.twists[c].t}, {"residual", r.twists[c].residual}};
    worst_residual = std::max(worst_residual, r.twists[c].residual);
  }
  const bool ok = r.max_deviation < kRoundTripTolerance && worst_residual < kRoundTripTolerance;
  Json report{{"command", "realize"},
              {"n", o.n},
              {"surface", surface_to_json(in.spec, &r.surface.parameters())},
              {"developed", developed_to_json(r.surface)},
              {"solve_twist", twists},
              {"bd_vector", bd_vector_to_json(r.vector)},
              {"max_deviation", r.max_deviation},
              {"pass", ok}};
  write_text(o.out + ".json", dump_json(report));
  write_text(o.out + ".csv", bd_vector_csv(r.vector));
  std::printf("N=%zu max_deviation=%s worst_twist_residual=%s %s\n", r.vector.layout.size(),
              format_double(r.max_deviation).c_str(), format_double(worst_residual).c_str(), ok ? "PASS" : "FAIL");
  return ok ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle, shear and gluing coordinates of Fuchsian representations"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Check the flag, binomial and Veronese identities");
  verify->add_option("--suite", o.suite, "triple-ratio|double-ratio|rhombus|band|permutation|wedge-factor|all")
      ->capture_default_str();
  verify->add_option("--n", o.n, "Dimension n")->capture_default_str();
  verify->add_option("--samples", o.samples, "Random samples per suite")->capture_default_str();
  verify->add_option("--seed", o.seed, "Seed for mt19937_64")->capture_default_str();
  auto* exact = verify->add_flag("--exact", o.exact, "Rational arithmetic (default)");
  verify->add_flag("--float", o.floating, "Double precision")->excludes(exact);
  verify->add_option("--max", o.max, "Largest parameter for rhombus/band")->capture_default_str();
  verify->add_option("--tolerance", o.tolerance, "Float-mode relative tolerance")->capture_default_str();
  verify->add_option("--out", o.out, "Write <prefix>.json");

  auto* invariants = app.add_subcommand("invariants", "BD coordinates of a surface given by shears and twists");
  invariants->add_option("--input", o.input, "Surface JSON")->required();
  invariants->add_option("--n", o.n, "Dimension n")->capture_default_str();
  invariants->add_option("--out", o.out, "Output prefix")->required();

  auto* realize = app.add_subcommand("realize", "Realize a slice point as a hyperbolic surface");
  realize->add_option("--input", o.input, "Surface JSON with a slice object")->required();
  realize->add_option("--n", o.n, "Dimension n")->capture_default_str();
  realize->add_option("--out", o.out, "Output prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (o.n < 2) throw DomainError("--n must be at least 2");
    if (verify->parsed()) return cmd_verify(o);
    if (invariants->parsed()) return cmd_invariants(o);
    return cmd_realize(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
