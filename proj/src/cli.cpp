// Copyright 2026 The cu-lattice Authors
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

#include "cu/cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cu/acceptance.hpp"
#include "cu/axioms.hpp"
#include "cu/fixtures.hpp"
#include "cu/functional.hpp"
#include "cu/lattice.hpp"
#include "cu/realify.hpp"
#include "cu/term.hpp"

namespace cu {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  std::uint64_t denominator = 4;
  bool force = false;
  bool json = false;
};

/// A model file, or builtin:NAME for a bundled model.
CuModel load_model(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    const std::string name = source.substr(prefix.size());
    for (auto& [n, m] : fixtures::builtin_models())
      if (n == name) return m;
    if (name == "broken_o6") return fixtures::broken_o6();
    throw Error(ErrorCode::ParseError, "no built-in model '" + name + "'");
  }
  return CuModel::load_file(source);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

json options_json(const Common& c) {
  return {{"trials", c.trials}, {"denominator_bound", c.denominator}, {"force", c.force}};
}

json report(const std::string& command, const std::string& digest, const Common& c, json checks, json witnesses,
            Clock::time_point t0) {
  return {{"schema", "cu-lattice/1"},
          {"command", command},
          {"model_digest", digest},
          {"seed", c.seed},
          {"options", options_json(c)},
          {"checks", std::move(checks)},
          {"witnesses", std::move(witnesses)},
          {"elapsed_ms", std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count()}};
}

json check(const std::string& name, bool pass, const std::string& detail = {}) {
  json j = {{"name", name}, {"status", pass ? "PASS" : "FAIL"}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

// ------------------------------------------------------------ commands

int cmd_validate(const Common& c, const std::string& path, std::ostream& out) {
  const auto t0 = Clock::now();
  const CuModel m = load_model(path);
  AxiomOptions ao;
  ao.seed = c.seed;
  ao.trials = c.trials;
  ao.force = c.force;
  const auto reps = check_axioms(m, ao);
  json checks = json::array();
  bool ok = true;
  for (const auto& r : reps) {
    checks.push_back(axiom_report_to_json(m, r));
    ok = ok && r.status != AxiomStatus::Fail;
  }
  if (c.json) {
    out << report("validate", m.digest(), c, checks, json::object(), t0).dump(2) << "\n";
  } else {
    out << "model " << to_string(m.kind()) << " digest " << m.digest() << "\n";
    for (const auto& r : reps) {
      out << r.axiom << " " << to_string(r.status) << " (" << to_string(r.method) << ", " << r.cases << " cases)";
      if (!r.counterexample.empty()) {
        out << " counterexample:";
        for (const auto& e : r.counterexample) out << " " << e.to_string();
      }
      if (!r.note.empty()) out << " " << r.note;
      out << "\n";
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_cone(const Common& c, const std::string& path, std::ostream& out) {
  const auto t0 = Clock::now();
  const CuModel m = load_model(path);
  const auto cone = compute_cone(m, c.force);
  if (c.json) {
    out << report("cone", m.digest(), c, json::array({check("cone", true)}), cone_to_json(m, cone), t0).dump(2) << "\n";
    return kExitOk;
  }
  out << cone.ideals.size() << " ideals, " << cone.representatives.size() << " representatives\n";
  for (std::size_t i = 0; i < cone.ideals.size(); ++i) {
    out << "ideal " << i << " " << cone_to_json(m, cone)["ideals"][i]["members"].dump() << ": "
        << cone.rays[i].size() << " rays\n";
    for (const auto& r : cone.rays[i]) out << "  " << functional_to_string(m, r) << "\n";
  }
  return kExitOk;
}

int cmd_compare(const Common& c, const std::string& path, const std::string& s_text, const std::string& t_text,
                std::ostream& out) {
  const auto t0 = Clock::now();
  const CuModel m = load_model(path);
  const Element s = m.parse_element(s_text), t = m.parse_element(t_text);
  const auto cone = compute_cone(m, c.force);
  const bool lp = compare_hat_lp(m, s, t, cone);
  const MnResult mn = compare_hat_mn(m, s, t);
  json w = {{"s", m.element_to_json(s)}, {"t", m.element_to_json(t)}, {"lp", lp}, {"mn", mn.verdict}};
  json mw = json::array();
  for (const auto& x : mn.witnesses)
    mw.push_back({{"s_prime", m.element_to_json(x.s_prime)}, {"eps", rational_to_string(x.eps)}, {"M", x.M}, {"N", x.N}});
  w["mn_witnesses"] = mw;
  if (mn.failing_s_prime) {
    w["failing_s_prime"] = m.element_to_json(*mn.failing_s_prime);
    w["failing_eps"] = rational_to_string(mn.failing_eps);
  }
  const bool agree = lp == mn.verdict;
  if (c.json) {
    out << report("compare", m.digest(), c, json::array({check("oracles agree", agree)}), w, t0).dump(2) << "\n";
  } else {
    out << "hat(" << s.to_string() << ") <= hat(" << t.to_string() << "): lp=" << (lp ? "true" : "false")
        << " mn=" << (mn.verdict ? "true" : "false") << (agree ? "" : "  DISAGREE") << "\n";
    if (mn.failing_s_prime)
      out << "no (M,N) for s'=" << mn.failing_s_prime->to_string() << " eps=" << rational_to_string(mn.failing_eps)
          << "\n";
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_lattice(const Common& c, const std::string& path, std::ostream& out) {
  const auto t0 = Clock::now();
  const CuModel m = load_model(path);
  const auto cone = compute_cone(m, c.force);
  const auto& reps = cone.representatives;
  LatticeOptions lo;
  lo.force = c.force;
  json table = json::array();
  bool ok = true;
  for (std::size_t p = 0; p < reps.size(); ++p)
    for (std::size_t q = p; q < reps.size(); ++q) {
      json row = {{"a", p}, {"b", q}};
      try {
        row["join"] = functional_to_json(m, join(m, reps[p], reps[q], lo));
        row["meet"] = functional_to_json(m, meet(m, reps[p], reps[q], lo));
      } catch (const Error& e) {
        ok = false;
        row["error"] = e.what();
      }
      table.push_back(row);
    }
  // laws on all triples, or a seeded sample when there are too many
  const auto ops = kantorovich_ops(m, lo);
  std::vector<std::array<std::size_t, 3>> triples;
  const std::size_t r = reps.size();
  if (r * r * r <= c.trials) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b)
        for (std::size_t d = 0; d < r; ++d) triples.push_back({a, b, d});
  } else {
    std::mt19937_64 rng(c.seed);
    for (std::uint64_t i = 0; i < c.trials; ++i) triples.push_back({rng() % r, rng() % r, rng() % r});
  }
  json failures = json::array();
  std::uint64_t laws = 0;
  for (const auto& [a, b, d] : triples) {
    try {
      const auto rep = check_lattice_identities(m, reps[a], reps[b], reps[d], ops);
      for (const auto& law : rep.laws) {
        ++laws;
        if (!law.pass) {
          ok = false;
          if (failures.size() < 10)
            failures.push_back({{"law", law.law}, {"triple", {a, b, d}}, {"witness", law.witness}});
        }
      }
    } catch (const Error& e) {
      ok = false;
      if (failures.size() < 10) failures.push_back({{"triple", {a, b, d}}, {"error", e.what()}});
    }
  }
  if (c.json) {
    json checks = json::array({check("lattice laws", ok, std::to_string(laws) + " law instances")});
    out << report("lattice", m.digest(), c, checks, {{"pairs", table}, {"failures", failures}}, t0).dump(2) << "\n";
  } else {
    for (const auto& row : table) {
      out << "rep " << row["a"] << " , rep " << row["b"];
      if (row.contains("error"))
        out << ": " << row["error"].get<std::string>() << "\n";
      else
        out << ": join " << row["join"].dump() << " meet " << row["meet"].dump() << "\n";
    }
    out << laws << " law instances on " << triples.size() << " triples, " << failures.size() << " failures shown\n";
    for (const auto& f : failures) out << "  " << f.dump() << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_realify(const Common& c, const std::string& path, const std::string& expr, std::ostream& out) {
  const auto t0 = Clock::now();
  const Realification R(load_model(path), c.force);
  const RealElement e = parse_term(R, expr, c.denominator);
  const CuModel& m = R.model();
  json reps = json::array();
  for (const auto& r : R.cone().representatives) reps.push_back(functional_to_string(m, r));
  if (c.json) {
    json w = R.to_json(e);
    w["representatives"] = reps;
    out << report("realify", m.digest(), c, json::array({check("evaluate", true)}), w, t0).dump(2) << "\n";
  } else {
    out << e.term << "\n";
    for (std::size_t i = 0; i < e.values.size(); ++i)
      out << "  " << reps[i].get<std::string>() << " -> " << e.values[i].to_string() << "\n";
  }
  return kExitOk;
}

std::vector<RealElement> term_list(const Realification& R, const json& j, const char* key, std::uint64_t d) {
  std::vector<RealElement> out;
  if (!j.contains(key) || !j.at(key).is_array()) throw Error(ErrorCode::ParseError, std::string("instance needs an array '") + key + "'");
  for (const auto& t : j.at(key)) {
    if (!t.is_string()) throw Error(ErrorCode::ParseError, std::string("entries of '") + key + "' must be term strings");
    out.push_back(parse_term(R, t.get<std::string>(), d));
  }
  return out;
}

int cmd_refine(const Common& c, bool denominator_given, const std::string& path, const std::string& inst_path,
               std::ostream& out) {
  const auto t0 = Clock::now();
  const Realification R(load_model(path), c.force);
  const json inst = read_json_file(inst_path);
  GridOptions go;
  go.denominator = c.denominator;
  try {
    if (!denominator_given && inst.contains("denominator_bound")) go.denominator = inst.at("denominator_bound").get<std::uint64_t>();
    if (inst.contains("value_bound")) go.value_bound = inst.at("value_bound").get<std::uint64_t>();
    if (inst.contains("node_cap")) go.node_cap = inst.at("node_cap").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  const auto f = term_list(R, inst, "f", go.denominator);
  const auto g = term_list(R, inst, "g", go.denominator);
  std::vector<RealElement> fp;
  if (inst.contains("f_prime")) {
    fp = term_list(R, inst, "f_prime", go.denominator);
  } else {
    for (const auto& x : f) fp.push_back(Realification::scale(Rational(3, 4), x));
  }
  Common cc = c;
  cc.denominator = go.denominator;
  json checks = json::array();
  json w = {{"denominator_bound", go.denominator}};
  int code = kExitOk;
  try {
    const auto res = R.refinement_witness(fp, f, g, go);
    w["nodes"] = res.nodes;
    if (res.status == RefinementStatus::Found) {
      const bool valid = R.refinement_valid(fp, f, g, res.h);
      json h = json::array();
      for (const auto& row : res.h) {
        json jr = json::array();
        for (const auto& x : row) jr.push_back(R.to_json(x));
        h.push_back(jr);
      }
      w["status"] = "FOUND";
      w["h"] = h;
      checks.push_back(check("hg1/hg2", valid));
      if (!valid) code = kExitCheckFailed;
    } else {
      w["status"] = "GRID_EXHAUSTED";
      checks.push_back(check("witness found", false, "grid exhausted at denominator " + std::to_string(go.denominator)));
      code = kExitCheckFailed;
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    w["status"] = std::string(to_string(e.code()));
    w["error"] = e.what();
    checks.push_back(check("witness found", false, e.what()));
    code = kExitCheckFailed;
  }
  if (c.json) {
    out << report("refine", R.model().digest(), cc, checks, w, t0).dump(2) << "\n";
  } else {
    out << w["status"].get<std::string>() << " (denominator " << go.denominator << ")\n";
    if (w.contains("h"))
      for (std::size_t i = 0; i < w["h"].size(); ++i)
        for (std::size_t j = 0; j < w["h"][i].size(); ++j)
          out << "  h[" << i << "][" << j << "] = " << w["h"][i][j]["term"].get<std::string>() << "\n";
    if (w.contains("error")) out << "  " << w["error"].get<std::string>() << "\n";
  }
  return code;
}

int cmd_glimm(const Common& c, const std::string& path, const std::string& x_text, std::ostream& out) {
  const auto t0 = Clock::now();
  const CuModel m = load_model(path);
  const Element x = m.parse_element(x_text);
  json w = {{"x", m.element_to_json(x)}};
  json checks = json::array();
  int code = kExitOk;
  try {
    const auto h = halving(m, x);
    if (h.chain_case) {
      w["result"] = "CHAIN_CASE";
      w["e"] = m.element_to_json(*h.e);
    } else {
      w["result"] = "WITNESS";
      w["z"] = m.element_to_json(*h.z);
    }
    checks.push_back(check("halving", true));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ElementModelMismatch) throw;
    w["result"] = std::string(to_string(e.code()));
    w["error"] = e.what();
    if (!e.witness().empty()) w["witness"] = e.witness();
    checks.push_back(check("halving", false, e.what()));
    code = kExitCheckFailed;
  }
  if (c.json) {
    out << report("glimm", m.digest(), c, checks, w, t0).dump(2) << "\n";
  } else {
    if (w.contains("error")) {
      out << w["error"].get<std::string>();
    } else {
      out << w["result"].get<std::string>();
      if (w.contains("z")) out << " z=" << w["z"].dump();
      if (w.contains("e")) out << " e=" << w["e"].dump();
    }
    out << "\n";
  }
  return code;
}

int cmd_selftest(const Common& c, std::ostream& out) {
  const auto t0 = Clock::now();
  acceptance::Options o;
  o.seed = c.seed;
  o.trials = c.trials;
  o.denominator = c.denominator;
  o.force = c.force;
  const auto results = acceptance::run_all(o);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (c.json) {
    out << acceptance::selftest_report(results, o, ms).dump(2) << "\n";
  } else {
    for (const auto& r : results)
      out << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.id << " (" << r.name << "): " << r.detail << "\n";
    out << (ok ? "all criteria pass" : "some criteria fail") << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with ordered semigroups, their functionals and realification", "cu-lattice"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--trials", c.trials, "Sampled trials / triple budget")->capture_default_str();
  auto* dopt = app.add_option("--denominator-bound", c.denominator, "Grid denominator bound D")->capture_default_str()
                   ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000}));
  app.add_flag("--force", c.force, "Allow exhaustive work on tables above the size limit");
  app.add_flag("--json", c.json, "Emit a cu-lattice/1 JSON report");

  std::string model, a1, a2, expr;
  bool rays = false;
  auto* validate = app.add_subcommand("validate", "Check axioms O1-O6 on a model");
  validate->add_option("model", model, "Model JSON file or builtin:NAME")->required();
  auto* cone = app.add_subcommand("cone", "Ideals and extreme rays of the functional cone");
  cone->add_option("model", model)->required();
  auto* compare = app.add_subcommand("compare", "Decide hat(s) <= hat(t) with both oracles");
  compare->add_option("model", model)->required();
  compare->add_option("s", a1)->required();
  compare->add_option("t", a2)->required();
  auto* lattice = app.add_subcommand("lattice", "Kantorovich join/meet and lattice laws");
  lattice->add_option("model", model)->required();
  lattice->add_flag("--rays", rays, "Operate on the cone representatives (rays and lambda_I)");
  auto* realify = app.add_subcommand("realify", "Evaluate a term in the realification");
  realify->add_option("model", model)->required();
  realify->add_option("--expr", expr, "Term, e.g. 1/2*hat([1])+hat([2])")->required();
  auto* refine = app.add_subcommand("refine", "Search a refinement matrix");
  refine->add_option("model", model)->required();
  refine->add_option("instance", a1, "Instance JSON with f, g and optional f_prime term arrays")->required();
  auto* glimm = app.add_subcommand("glimm", "Glimm halving for a nonzero element");
  glimm->add_option("model", model)->required();
  glimm->add_option("element", a1)->required();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite on built-in models");
  for (auto* sub : {validate, cone, compare, lattice, realify, refine, glimm, selftest}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(c, model, out);
    if (*cone) return cmd_cone(c, model, out);
    if (*compare) return cmd_compare(c, model, a1, a2, out);
    if (*lattice) {
      if (!rays) {
        err << "usage error: lattice needs --rays\n";
        return kExitUsage;
      }
      return cmd_lattice(c, model, out);
    }
    if (*realify) return cmd_realify(c, model, expr, out);
    if (*refine) return cmd_refine(c, dopt->count() > 0, model, a1, out);
    if (*glimm) return cmd_glimm(c, model, a1, out);
    if (*selftest) return cmd_selftest(c, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ParseError:
      case ErrorCode::InvariantViolation:
      case ErrorCode::ElementModelMismatch:
        return kExitUsage;
      default:
        return kExitCheckFailed;
    }
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace cu
