// Copyright 2026 The Hyperwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperwalk/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperwalk/fixtures.hpp"
#include "hyperwalk/io.hpp"
#include "hyperwalk/verify.hpp"

namespace hyperwalk::cli {

namespace {

using io::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const Json& doc) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  f << doc.dump(2) << '\n';
}

Word parse_word(const std::string& text) {
  Word w;
  std::stringstream s(text);
  std::string part;
  while (std::getline(s, part, ',')) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || v < 0) {
      throw Error(ErrorCode::InvalidArgument, "bad letter '" + part + "' in word '" + text + "'");
    }
    w.push_back(static_cast<Index>(v));
  }
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "empty word");
  return w;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void print_distribution(std::ostream& out, const Distribution& d, bool json) {
  if (json) {
    out << io::distribution_to_json(d).dump() << '\n';
    return;
  }
  out << "   i  probability\n";
  for (Index i = 0; i < d.size(); ++i) {
    std::string idx = std::to_string(i);
    out << std::string(idx.size() < 4 ? 4 - idx.size() : 0, ' ') << idx << "  " << fixed(d[i])
        << '\n';
  }
}

void print_report(std::ostream& out, const Json& doc, bool json) {
  if (json) {
    out << doc.dump(2) << '\n';
    return;
  }
  out << doc.value("report", std::string("report")) << ": "
      << (doc.value("pass", false) ? "PASS" : "FAIL") << '\n';
  for (const auto& [key, value] : doc.items()) {
    if (key == "kind" || key == "version" || key == "report" || key == "pass") continue;
    out << "  " << key << ": " << value.dump() << '\n';
  }
}

/// The tensor's involution if it can be derived and the tensor validates.
std::optional<Permutation> involution_if_hypergroup(const StructureTensor& t) {
  try {
    const auto partial = derive_partial_involution(t);
    Permutation sigma;
    for (const auto& s : partial) {
      if (!s) return std::nullopt;
      sigma.push_back(*s);
    }
    if (!validate_hypergroup(t, sigma).pass()) return std::nullopt;
    return sigma;
  } catch (const Error&) {
    return std::nullopt;
  }
}

PointedGraph load_graph(const std::string& file, const std::string& spec) {
  if (!file.empty()) return io::parse_graph(read_file(file));
  if (!spec.empty()) return generate_graph(GraphSpec::parse(spec));
  throw Error(ErrorCode::InvalidArgument, "one of --graph or --spec is required");
}

struct Options {
  std::string graph, spec, tensor, kraus, state, word, kraus_out, state_out, name;
  std::uint64_t seed = 1;
  bool seed_given = false;
  double tol = -1.0;
  bool json = false;
  bool float_mode = false;
  std::size_t max_len = 3;
  std::size_t states = 20;
  Index h_dim = 1;
  Index radius = 8;
  Index n = 3;
  double x = 0.5;
};

int gen(const Options& o, std::ostream& out) {
  const std::string& g = o.name;
  Json doc;
  if (g == "c4") {
    doc = io::hypergroup_to_json(fixtures::c4());
  } else if (g == "z-window") {
    doc = io::hypergroup_to_json(fixtures::z_window(o.radius));
  } else if (g == "zn") {
    doc = io::hypergroup_to_json(fixtures::cyclic_group(o.n));
  } else if (g == "s3") {
    doc = io::hypergroup_to_json(fixtures::s3_group());
  } else if (g == "s3-classes") {
    doc = io::hypergroup_to_json(fixtures::s3_classes());
  } else if (g == "lo2") {
    doc = io::tensor_to_json(fixtures::lo2());
  } else if (g == "perturbed-c4") {
    doc = io::tensor_to_json(fixtures::perturbed_c4());
  } else if (g == "ex44") {
    doc = io::kraus_to_json(fixtures::three_point_family());
  } else if (g == "ex44-state") {
    doc = io::state_to_json(fixtures::three_point_state(o.x));
  } else if (g == "ex45") {
    doc = io::kraus_to_json(fixtures::lattice_family(o.radius, o.x));
  } else if (g == "ex45-state") {
    doc = io::state_to_json(fixtures::lattice_state(o.radius));
  } else if (g == "ex55") {
    doc = io::kraus_to_json(fixtures::stationary_family());
  } else if (g == "ex56") {
    doc = io::kraus_to_json(fixtures::left_zero_family());
  } else if (g == "ex55-state" || g == "ex56-state") {
    doc = io::state_to_json(fixtures::half_identity_state());
  } else if (g == "random-state") {
    doc = io::state_to_json(random_block_state(o.h_dim, o.n, o.seed));
  } else if (g == "graph") {
    doc = io::graph_to_json(generate_graph(GraphSpec::parse(o.spec.empty() ? "cycle(4)" : o.spec)));
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + g + "'");
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  if (cmd == "gen") return gen(o, out);

  if (cmd == "graph-hypergroup") {
    const auto graph = load_graph(o.graph, o.spec);
    const ExactTensor t = wildberger_tensor(graph);
    out << io::tensor_to_json(t, involution_if_hypergroup(t.to_double())).dump(2) << '\n';
    return kOk;
  }
  if (cmd == "check-graph") {
    const auto graph = load_graph(o.graph, o.spec);
    const SphereTable spheres(graph);
    const auto doc = io::report_to_json(check_condition_S(graph, spheres),
                                        check_distance_regular(graph, spheres),
                                        check_sphere_assumption(graph, spheres));
    print_report(out, doc, o.json);
    return doc["pass"].get<bool>() ? kOk : kFailed;
  }
  if (cmd == "validate") {
    Json doc;
    bool pass = false;
    if (!o.tensor.empty()) {
      const auto text = read_file(o.tensor);
      const Json raw = io::parse_document(text, "hypergroup");
      const auto t = io::parse_tensor(text);
      Permutation sigma;
      if (raw.contains("involution")) {
        for (const auto& v : raw["involution"]) sigma.push_back(v.get<Index>());
      } else {
        sigma = derive_involution(t);
      }
      const auto report = validate_hypergroup(t, sigma);
      doc = io::report_to_json(report);
      pass = report.pass();
    } else if (!o.kraus.empty()) {
      const KrausFamily f = io::parse_kraus(read_file(o.kraus), false);
      const auto report = validate_kraus(f);
      doc = io::report_to_json(report);
      pass = report.pass;
    } else if (!o.state.empty()) {
      io::parse_state(read_file(o.state));
      doc = io::report_to_json(VerificationReport{"state", 1, 0, 0.0, tol::psd, true, {}, {}, ""});
      pass = true;
    } else {
      throw Error(ErrorCode::InvalidArgument, "one of --tensor, --kraus or --state is required");
    }
    print_report(out, doc, o.json);
    return pass ? kOk : kFailed;
  }
  if (cmd == "realize") {
    const auto t = io::parse_tensor(read_file(o.tensor));
    const auto iso = o.seed_given ? random_isometries(t, o.h_dim, o.seed)
                                  : std::map<BlockKey, CMatrix>{};
    const auto r = realize(t, o.h_dim, iso);
    const Json k = io::kraus_to_json(r.family);
    const Json s = io::state_to_json(r.state);
    if (!o.kraus_out.empty()) write_file(o.kraus_out, k);
    if (!o.state_out.empty()) write_file(o.state_out, s);
    if (o.kraus_out.empty() && o.state_out.empty()) out << Json::array({k, s}).dump(2) << '\n';
    return kOk;
  }
  if (cmd == "walk") {
    const auto family = io::parse_kraus(read_file(o.kraus));
    const auto state = io::parse_state(read_file(o.state));
    print_distribution(out, walk_distribution(family, parse_word(o.word), state), o.json);
    return kOk;
  }
  if (cmd == "produce") {
    const auto family = io::parse_kraus(read_file(o.kraus));
    const auto state = io::parse_state(read_file(o.state));
    const auto t = produced_tensor(family, state);
    out << io::tensor_to_json(t, involution_if_hypergroup(t)).dump(2) << '\n';
    return kOk;
  }
  if (cmd == "verify-hb") {
    const auto family = io::parse_kraus(read_file(o.kraus));
    const auto t = io::parse_tensor(read_file(o.tensor));
    auto report = check_hb(family, t);
    if (o.tol >= 0.0) report.pass = report.max_residual <= o.tol;
    Json doc = io::report_to_json(report);
    if (o.tol >= 0.0) doc["tolerance"] = o.tol;
    print_report(out, doc, o.json);
    return report.pass ? kOk : kFailed;
  }
  if (cmd == "verify-t51") {
    const auto family = io::parse_kraus(read_file(o.kraus));
    const auto t = io::parse_tensor(read_file(o.tensor));
    const double tol = o.tol >= 0.0 ? o.tol : 10 * tol::prob;
    const auto report =
        verify_mixture_factorization(family, t, o.max_len, o.states, o.seed, tol);
    print_report(out, io::report_to_json(report), o.json);
    return report.pass ? kOk : kFailed;
  }
  if (cmd == "verify-t24") {
    const auto graph = load_graph(o.graph, o.spec);
    auto report = verify_path_sums(graph, o.max_len,
                                   o.float_mode ? Arithmetic::Float : Arithmetic::Exact);
    if (o.tol >= 0.0) {
      report.tolerance = o.tol;
      report.pass = report.max_residual <= o.tol;
    }
    print_report(out, io::report_to_json(report), o.json);
    return report.pass ? kOk : kFailed;
  }
  if (cmd == "verify-c26") {
    const auto t = io::parse_tensor(read_file(o.tensor));
    const auto report = verify_transition_products(t, o.max_len, o.tol >= 0.0 ? o.tol : 1e-12);
    print_report(out, io::report_to_json(report), o.json);
    return report.pass ? kOk : kFailed;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergroups from pointed graphs and open quantum random walks", "hyperwalk"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  const auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto* graph_hg = add("graph-hypergroup", "Wildberger constants of a pointed graph");
  auto* check = add("check-graph", "condition (S), distance regularity and sphere checks");
  auto* validate = add("validate", "validate a tensor, Kraus family or state");
  auto* realize_cmd = add("realize", "Kraus family realizing a tensor");
  auto* walk_cmd = add("walk", "distribution after a word of jumps");
  auto* produce = add("produce", "structure constants read off a walk");
  auto* hb = add("verify-hb", "check condition (HB)");
  auto* t51 = add("verify-t51", "walk distributions against multi-constant mixtures");
  auto* t24 = add("verify-t24", "path sums against multi-constants");
  auto* c26 = add("verify-c26", "transition-matrix products against multi-constants");
  auto* gen_cmd = add("gen", "emit a named fixture document");

  for (auto* c : {graph_hg, check, t24}) {
    c->add_option("--graph", o.graph, "graph document");
    c->add_option("--spec", o.spec, "generated graph, e.g. cycle(4)");
  }
  for (auto* c : {validate, realize_cmd, hb, t51, c26}) c->add_option("--tensor", o.tensor);
  for (auto* c : {validate, walk_cmd, produce, hb, t51}) c->add_option("--kraus", o.kraus);
  for (auto* c : {validate, walk_cmd, produce}) c->add_option("--state", o.state);
  walk_cmd->add_option("--word", o.word, "comma-separated jumps, applied left to right")
      ->required();
  for (auto* c : {realize_cmd, t51, gen_cmd}) {
    c->add_option("--seed", o.seed, "random seed")->each([&](const std::string&) {
      o.seed_given = true;
    });
  }
  for (auto* c : {hb, t51, t24, c26}) c->add_option("--tol", o.tol, "tolerance override");
  for (auto* c : {t51, t24, c26}) c->add_option("--max-len", o.max_len, "longest word");
  t51->add_option("--states", o.states, "number of random states");
  t24->add_flag("--float", o.float_mode, "double arithmetic instead of rationals");
  for (auto* c : {realize_cmd, gen_cmd}) c->add_option("--h-dim", o.h_dim, "dimension of H");
  realize_cmd->add_option("--kraus-out", o.kraus_out);
  realize_cmd->add_option("--state-out", o.state_out);
  gen_cmd->add_option("name", o.name,
                      "c4 z-window zn s3 s3-classes lo2 perturbed-c4 ex44 ex44-state ex45 "
                      "ex45-state ex55 ex55-state ex56 ex56-state random-state graph")
      ->required();
  gen_cmd->add_option("--radius", o.radius);
  gen_cmd->add_option("--n", o.n, "group order, or d_size for random-state");
  gen_cmd->add_option("--x", o.x);
  gen_cmd->add_option("--spec", o.spec);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return dispatch(app.get_subcommands().front()->get_name(), o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace hyperwalk::cli
