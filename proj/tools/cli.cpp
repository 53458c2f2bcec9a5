#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quivertilt/families.hpp"
#include "quivertilt/mutation.hpp"
#include "quivertilt/phi.hpp"
#include "quivertilt/quiver.hpp"
#include "quivertilt/reduction.hpp"
#include "report.hpp"
#include "service.hpp"

namespace quivertilt::tools {

namespace {

// Unreadable files are usage errors; malformed contents are domain errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream o(path);
  if (!o) throw UsageError("cannot write " + path);
  o << text;
}

BoundQuiver load(const std::string& path) { return parse_quiver(slurp(path)); }

struct Output {
  std::ostream& out;
  bool json;
  // text and JSON go through here so they cannot drift apart
  void emit(const std::string& text, const nlohmann::json& j) {
    if (json)
      out << j.dump(2) << '\n';
    else
      out << text;
  }
};

std::string equivalent_text(const DerivedParams& a, const DerivedParams& b, bool eq) {
  return "A " + to_string(a) + "\nB " + to_string(b) + '\n' + (eq ? "equivalent\n" : "not equivalent\n");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gentle bound quiver workbench"};
  app.name("quivertilt");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");
  app.fallthrough();

  std::string file, file2, out_path, trace_out, vertex, kind;
  std::uint64_t seed = 0;
  int m = 2, port = 8080;
  std::vector<int> nonoriented, oriented;
  std::string host = "127.0.0.1";

  auto* validate = app.add_subcommand("validate", "check gentleness");
  validate->add_option("FILE", file)->required();

  auto* phi = app.add_subcommand("phi", "AG invariant");
  phi->add_option("FILE", file)->required();
  phi->add_option("--seed", seed, "sign assignment seed");

  auto* threads = app.add_subcommand("threads", "permitted and forbidden threads with signs");
  threads->add_option("FILE", file)->required();
  threads->add_option("--seed", seed, "sign assignment seed");

  auto* mut = app.add_subcommand("mutate", "one tilt or cotilt");
  mut->add_option("FILE", file)->required();
  mut->add_option("--vertex", vertex)->required();
  mut->add_option("--kind", kind)->required()->check(CLI::IsMember({"tilt", "cotilt"}));
  mut->add_option("-o", out_path, "also write the result here");

  auto* tr = app.add_subcommand("trace", "apply a trace file");
  tr->add_option("FILE", file)->required();
  tr->add_option("TRACEFILE", file2)->required();
  tr->add_option("-o", out_path, "also write the result here");

  auto* cls = app.add_subcommand("classify", "gentleness, cycles, recognizers, parameters");
  cls->add_option("FILE", file)->required();

  auto* nf = app.add_subcommand("normal-form", "build a normal form");
  auto* no_opt = nf->add_option("--nonoriented", nonoriented, "n1 k1 n2 k2 r")->expected(5)->allow_extra_args(false);
  auto* or_opt = nf->add_option("--oriented", oriented, "k n t")->expected(3)->allow_extra_args(false);
  no_opt->excludes(or_opt);
  nf->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  nf->add_option("-o", out_path, "also write the result here");

  auto* red = app.add_subcommand("reduce", "reduce to normal form");
  red->add_option("FILE", file)->required();
  red->add_option("-o", out_path, "also write the reduced quiver here");
  red->add_option("--trace", trace_out, "write the mutation trace here");

  auto* eq = app.add_subcommand("equivalent", "decide derived equivalence of two algebras");
  eq->add_option("A", file)->required();
  eq->add_option("B", file2)->required();

  auto* demo = app.add_subcommand("collision-demo", "two normal forms with equal phi");
  demo->add_option("--m", m)->check(CLI::PositiveNumber);

  auto* srv = app.add_subcommand("serve", "HTTP endpoints for the explorer");
  srv->add_option("--port", port)->check(CLI::Range(1, 65535));
  srv->add_option("--host", host);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }
  if (nf->parsed() && nonoriented.empty() == oriented.empty()) {
    err << "normal-form needs exactly one of --nonoriented n1 k1 n2 k2 r, --oriented k n t\n\n" << nf->help();
    return kUsage;
  }

  Output o{out, json};
  try {
    if (validate->parsed()) {
      auto r = validate_gentle(load(file));
      o.emit(gentle_to_text(r), gentle_to_json(r));
      return r.ok() ? kOk : kDomain;
    }
    if (phi->parsed()) {
      auto p = compute_phi(load(file), seed);
      o.emit(p.to_text(), {{"phi", p.to_json()}});
      return kOk;
    }
    if (threads->parsed()) {
      auto q = load(file);
      auto t = enumerate_threads(q, assign_signs(q, seed));
      o.emit(threads_to_text(t), threads_to_json(t));
      return kOk;
    }
    if (mut->parsed() || tr->parsed()) {
      auto q = load(file);
      BoundQuiver res = mut->parsed() ? mutate(q, {parse_kind(kind), vertex}) : apply_trace(q, parse_trace(slurp(file2)));
      if (!out_path.empty()) spill(out_path, serialize_quiver(res));
      o.emit(serialize_quiver(res), quiver_to_json(res));
      return kOk;
    }
    if (cls->parsed()) {
      auto c = classify_json(load(file), true);
      o.emit(classify_text(c), c);
      return c["gentle"].get<bool>() ? kOk : kDomain;
    }
    if (nf->parsed()) {
      NormalFormParams p;
      if (!nonoriented.empty())
        p = NonOriented{nonoriented[0], nonoriented[1], nonoriented[2], nonoriented[3], nonoriented[4]};
      else
        p = Oriented{oriented[0], oriented[1], oriented[2]};
      auto q = build_normal_form(p, m);
      if (!out_path.empty()) spill(out_path, serialize_quiver(q));
      o.emit(serialize_quiver(q), quiver_to_json(q));
      return kOk;
    }
    if (red->parsed()) {
      auto r = reduce(load(file));
      if (!out_path.empty()) spill(out_path, serialize_quiver(r.quiver));
      if (!trace_out.empty()) spill(trace_out, serialize_trace(r.trace()));
      o.emit(r.log() + "params " + to_string(r.params) + '\n' + serialize_quiver(r.quiver), r.to_json());
      return kOk;
    }
    if (eq->parsed()) {
      auto a = extract_params(load(file));
      auto b = extract_params(load(file2));
      bool e = decide_derived_equivalent(a, b);
      o.emit(equivalent_text(a, b, e), {{"a", derived_to_json(a)}, {"b", derived_to_json(b)}, {"equivalent", e}});
      return kOk;
    }
    if (demo->parsed()) {
      auto r = phi_collision_demo(m);
      o.emit(r.text(), r.to_json());
      return kOk;
    }
    if (srv->parsed()) return serve(host, resolve_port(port)) == 0 ? kOk : kDomain;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // ParseError, DomainError, TraceError
    if (json)
      out << nlohmann::json{{"error", e.what()}}.dump(2) << '\n';
    else
      err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace quivertilt::tools
