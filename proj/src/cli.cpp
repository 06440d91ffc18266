#include "sdt/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdt/connectivity.hpp"
#include "sdt/convolution.hpp"
#include "sdt/error.hpp"
#include "sdt/report_json.hpp"
#include "sdt/setalg.hpp"
#include "sdt/subgroup.hpp"
#include "sdt/theorems.hpp"

namespace sdt::cli {

using nlohmann::json;

namespace {

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::UsageError, message); }

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (*end != '\0' || parsed == 0) usage(std::string("environment variable ") + name + " must be a positive integer");
  return static_cast<std::size_t>(parsed);
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    usage(flag + ": " + e.what());
  }
}

const json& require_key(const json& inputs, const char* key) {
  if (!inputs.contains(key)) throw Error(ErrorCode::UsageError, std::string("missing input '") + key + "'");
  return inputs.at(key);
}

Subset input_set(const GroupTable& g, const json& inputs, const char* name) {
  return subset_from_json(g, require_key(inputs, name));
}

Rational input_rational(const json& inputs, const char* name) {
  const json& v = require_key(inputs, name);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("input '") + name + "' must be a \"p/q\" string");
  return Rational::parse(v.get<std::string>());
}

std::uint64_t input_u64(const json& inputs, const char* name) {
  const json& v = require_key(inputs, name);
  if (!v.is_number_unsigned()) throw Error(ErrorCode::ParseError, std::string("input '") + name + "' must be an unsigned integer");
  return v.get<std::uint64_t>();
}

std::string input_string(const json& inputs, const char* name) {
  const json& v = require_key(inputs, name);
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string("input '") + name + "' must be a string");
  return v.get<std::string>();
}

struct Computed {
  json result;
  bool verified = true;
};

Computed run_connectivity(const GroupTable& g, const json& in, const Caps& caps) {
  CostParams params{input_set(g, in, "S"), input_rational(in, "K")};
  const std::string solver = input_string(in, "solver");
  const bool fragments = require_key(in, "fragments").get<bool>();
  ConnectivityResult res;
  if (solver == "brute") {
    BruteForceOptions opts;
    opts.max_order = caps.bruteforce_order;
    opts.collect_fragments = fragments;
    opts.fragment_cap = caps.fragment_cap;
    opts.classify_atoms = params.K < Rational(1);
    res = connectivity_bruteforce(g, params, opts);
  } else if (solver == "subgroup") {
    if (fragments) throw Error(ErrorCode::UsageError, "--fragments needs --solver brute");
    res = connectivity_subgroup_solver(g, params);
  } else {
    throw Error(ErrorCode::UsageError, "unknown solver '" + solver + "'");
  }
  Computed c{json_out::connectivity(g, res)};
  c.verified = cost(g, params, res.identity_atom) == res.kappa && res.identity_atom.contains(g.identity());
  if (params.K < Rational(1)) c.verified = c.verified && res.atom_is_subgroup && res.identity_atom_unique;
  if (res.fragments) {
    for (const auto& f : *res.fragments) c.verified = c.verified && cost(g, params, f) == res.kappa;
  }
  return c;
}

Computed run_kind(const std::string& kind, const GroupTable& g, const json& in, const Caps& caps) {
  if (kind == "doubling") {
    return {json_out::doubling(doubling_ratio(g, input_set(g, in, "A")))};
  }
  if (kind == "connectivity") return run_connectivity(g, in, caps);
  if (kind == "atoms") {
    CostParams params{input_set(g, in, "S"), input_rational(in, "K")};
    AtomPropositionReport rep = verify_atom_proposition(g, params, caps.bruteforce_order);
    return {json_out::atoms(rep), rep.holds};
  }
  if (kind == "kneser") {
    KneserReport rep = kneser_check(g, input_set(g, in, "A"), input_set(g, in, "B"));
    return {json_out::kneser(rep), rep.holds};
  }
  if (kind == "corollary-kn") {
    CorollaryReport rep = corollary_kn_check(g, input_set(g, in, "A"), input_rational(in, "epsilon"));
    return {json_out::corollary(g, rep), rep.holds};
  }
  if (kind == "theorem-main") {
    MainTheoremReport rep =
        theorem_main_check(g, input_set(g, in, "A"), input_set(g, in, "S"), input_rational(in, "epsilon"));
    return {json_out::main_theorem(g, rep), rep.branch != MainBranch::violation};
  }
  if (kind == "petridis") {
    PetridisResult res = petridis_minimizer(g, input_set(g, in, "A"), input_set(g, in, "S"), caps.subset_search);
    const std::string mode = input_string(in, "mode");
    if (mode != "exhaustive" && mode != "sampled") throw Error(ErrorCode::UsageError, "unknown mode '" + mode + "'");
    PetridisVerification v = petridis_verify(g, res, mode == "exhaustive" ? VerifyMode::exhaustive : VerifyMode::sampled,
                                             input_u64(in, "budget"), input_u64(in, "seed"));
    bool ok = v.holds && res.X.is_subset_of(res.A) && res.K <= res.ratio_A;
    return {json_out::petridis(v), ok};
  }
  if (kind == "conv gap") {
    GapReport rep = gap_check(g, input_set(g, in, "A"));
    return {json_out::gap(rep), rep.gap_holds && rep.forbidden_interval_clean};
  }
  if (kind == "conv smooth") {
    const Subset a = input_set(g, in, "A");
    const Subset s = input_set(g, in, "S");
    GroupFunction f = autocorrelation(g, a);
    GroupFunction big_f = smoothed(g, s, f);
    bool nonnegative = std::all_of(big_f.values().begin(), big_f.values().end(),
                                   [](const Rational& v) { return v >= Rational(0); });
    json r = {{"A", json_out::subset(a)},
              {"S", json_out::subset(s)},
              {"f", json_out::function_values(f)},
              {"F", json_out::function_values(big_f)},
              {"mass_f", f.mass().str()},
              {"mass_F", big_f.mass().str()},
              {"mass_preserved", f.mass() == big_f.mass()},
              {"nonnegative", nonnegative}};
    if (in.contains("threshold")) {
      Rational t = input_rational(in, "threshold");
      r["threshold"] = t.str();
      r["level_set"] = json_out::subset(level_set(g, big_f, t));
    }
    return {r, f.mass() == big_f.mass() && nonnegative};
  }
  if (kind == "search kneser-failure") {
    const std::string strategy = input_string(in, "strategy");
    if (strategy != "exhaustive" && strategy != "random") {
      throw Error(ErrorCode::UsageError, "unknown strategy '" + strategy + "'");
    }
    KneserSearchReport rep = kneser_failure_search(
        g, strategy == "exhaustive" ? SearchStrategy::exhaustive : SearchStrategy::random, input_u64(in, "seed"),
        input_u64(in, "budget"));
    return {json_out::kneser_search(rep), rep.findings.empty()};
  }
  throw Error(ErrorCode::UsageError, "unknown certificate kind '" + kind + "'");
}

void diff_json(const json& expected, const json& found, const std::string& path, std::vector<FieldDiff>& out) {
  if (expected.type() == found.type() && expected.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      std::string p = path + "/" + it.key();
      if (!found.contains(it.key())) out.push_back({p, it.value(), json()});
      else diff_json(it.value(), found.at(it.key()), p, out);
    }
    for (auto it = found.begin(); it != found.end(); ++it) {
      if (!expected.contains(it.key())) out.push_back({path + "/" + it.key(), json(), it.value()});
    }
    return;
  }
  if (expected.type() == found.type() && expected.is_array() && expected.size() == found.size()) {
    for (std::size_t i = 0; i < expected.size(); ++i) diff_json(expected[i], found[i], path + "/" + std::to_string(i), out);
    return;
  }
  if (expected != found) out.push_back({path.empty() ? "/" : path, expected, found});
}

json recheck_result(const RecheckOutcome& o) {
  json diffs = json::array();
  for (const auto& d : o.diffs) diffs.push_back({{"path", d.path}, {"expected", d.expected}, {"found", d.found}});
  return {{"target_kind", o.kind}, {"ok", o.ok}, {"digest_ok", o.digest_ok}, {"diffs", diffs}, {"error", o.error}};
}

void render_lines(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      render_lines(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_lines(j[i], prefix + "[" + std::to_string(i) + "]", out);
    if (j.empty()) out << prefix << ": []\n";
    return;
  }
  out << prefix << ": ";
  if (j.is_string()) out << j.get<std::string>();
  else out << j.dump();
  out << "\n";
}

json make_inputs(const RunConfig& cfg, const GroupTable& g) {
  json in;
  auto set = [&](const char* name) {
    auto it = cfg.sets.find(name);
    if (it == cfg.sets.end()) usage("'" + cfg.command + "' needs --set " + name + "=...");
    in[name] = json_out::subset(parse_subset(g, it->second));
  };
  auto rational = [&](const char* flag, const char* key, const std::optional<Rational>& v) {
    if (!v) usage("'" + cfg.command + "' needs " + flag);
    in[key] = v->str();
  };
  const std::string& c = cfg.command;
  if (c == "doubling" || c == "kneser" || c == "corollary-kn" || c == "theorem-main" || c == "petridis" ||
      c == "conv gap" || c == "conv smooth") {
    set("A");
  }
  if (c == "kneser") set("B");
  if (c == "connectivity" || c == "atoms" || c == "theorem-main" || c == "petridis" || c == "conv smooth") set("S");
  if (c == "connectivity" || c == "atoms") rational("--K", "K", cfg.K);
  if (c == "corollary-kn" || c == "theorem-main") rational("--epsilon", "epsilon", cfg.epsilon);
  if (c == "connectivity") {
    in["solver"] = cfg.solver;
    in["fragments"] = cfg.fragments;
  }
  if (c == "conv smooth" && cfg.threshold) in["threshold"] = cfg.threshold->str();
  if (c == "petridis") {
    in["mode"] = cfg.mode;
    if (cfg.mode == "sampled" && (!cfg.seed || !cfg.budget)) usage("petridis --mode sampled needs --seed and --budget");
    in["budget"] = cfg.budget.value_or(std::uint64_t{1} << 20);
    in["seed"] = cfg.seed.value_or(0);
  }
  if (c == "search kneser-failure") {
    if (!cfg.budget) usage("search kneser-failure needs --budget");
    if (cfg.strategy == "random" && !cfg.seed) usage("search kneser-failure --strategy random needs --seed");
    in["strategy"] = cfg.strategy;
    in["budget"] = *cfg.budget;
    in["seed"] = cfg.seed.value_or(0);
  }
  in["caps"] = to_json(cfg.caps);
  return in;
}

json error_document(const Error& e) {
  return {{"schema_version", kSchemaVersion},
          {"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
}

void emit(const json& doc, const std::string& format, const std::string& out_path, std::ostream& out) {
  std::string text = format == "text" ? render_text(doc) : doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text << std::flush;
    return;
  }
  std::string tmp = out_path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) usage("--out: cannot write " + out_path);
    f << text;
  }
  std::filesystem::rename(tmp, out_path);
}

}  // namespace

Caps caps_from_env() {
  Caps c;
  c.group_order = env_size("SDT_MAX_ORDER", c.group_order);
  c.bruteforce_order = env_size("SDT_BRUTEFORCE_ORDER", c.bruteforce_order);
  c.subset_search = env_size("SDT_SUBSET_SEARCH", c.subset_search);
  c.fragment_cap = env_size("SDT_FRAGMENT_CAP", c.fragment_cap);
  return c;
}

json to_json(const Caps& c) {
  return {{"group_order", c.group_order},
          {"bruteforce_order", c.bruteforce_order},
          {"subset_search", c.subset_search},
          {"fragment_cap", c.fragment_cap}};
}

Caps caps_from_json(const json& j) {
  Caps c;
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "caps must be an object");
  c.group_order = input_u64(j, "group_order");
  c.bruteforce_order = input_u64(j, "bruteforce_order");
  c.subset_search = input_u64(j, "subset_search");
  c.fragment_cap = input_u64(j, "fragment_cap");
  return c;
}

json RunConfig::snapshot() const {
  json j = {{"command", command},     {"group", group_text}, {"sets", sets},
            {"format", format},       {"caps", to_json(caps)}, {"fragments", fragments},
            {"solver", solver},       {"mode", mode},        {"strategy", strategy}};
  if (group) j["group_spec"] = to_json(*group);
  if (epsilon) j["epsilon"] = epsilon->str();
  if (K) j["K"] = K->str();
  if (threshold) j["threshold"] = threshold->str();
  if (seed) j["seed"] = *seed;
  if (budget) j["budget"] = *budget;
  if (!certificate_path.empty()) j["certificate"] = certificate_path;
  return j;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  cfg.caps = caps_from_env();

  CLI::App app{"Small-doubling verification toolkit for finite groups", "sdt"};
  app.require_subcommand(1);

  std::vector<std::string> set_literals;
  std::string set_a, set_b, set_s, eps_text, k_text, threshold_text;
  std::optional<std::size_t> max_order, bf_order, subset_search, fragment_cap;

  auto add_common = [&](CLI::App* sub, bool needs_group) {
    auto* g = sub->add_option("--group,-g", cfg.group_text, "preset (cyclic:12, sym:3, dihedral:4xcyclic:2) or JSON file");
    if (needs_group) g->required();
    sub->add_option("--set", set_literals, "named set NAME=elements, e.g. A=0,1,2 (repeatable)");
    sub->add_option("--setA", set_a, "set A");
    sub->add_option("--setB", set_b, "set B");
    sub->add_option("--setS", set_s, "set S");
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out_path, "write the record to this file");
    sub->add_option("--max-order", max_order, "group order cap");
    sub->add_option("--bruteforce-order", bf_order, "brute-force connectivity cap");
    sub->add_option("--subset-search", subset_search, "largest |A| for the Petridis minimizer");
    sub->add_option("--fragment-cap", fragment_cap, "maximum fragments listed");
  };
  auto add_eps = [&](CLI::App* sub) { sub->add_option("--epsilon", eps_text, "epsilon as p/q in (0,1]"); };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--K", k_text, "K as p/q"); };
  auto add_seed_budget = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "PRNG seed (mt19937_64)");
    sub->add_option("--budget", cfg.budget, "number of candidates to test");
  };

  auto* doubling = app.add_subcommand("doubling", "doubling ratio |A*A|/|A|");
  add_common(doubling, true);
  auto* connectivity = app.add_subcommand("connectivity", "connectivity kappa and identity atom");
  add_common(connectivity, true);
  add_k(connectivity);
  connectivity->add_option("--solver", cfg.solver, "subgroup or brute")->check(CLI::IsMember({"subgroup", "brute"}));
  connectivity->add_flag("--fragments", cfg.fragments, "list every fragment (brute solver)");
  auto* atoms = app.add_subcommand("atoms", "check that the atoms are the left cosets of one subgroup");
  add_common(atoms, true);
  add_k(atoms);
  auto* kneser = app.add_subcommand("kneser", "Kneser inequality for A, B");
  add_common(kneser, true);
  auto* corollary = app.add_subcommand("corollary-kn", "coset cover of A+A by its symmetry group");
  add_common(corollary, true);
  add_eps(corollary);
  auto* theorem = app.add_subcommand("theorem-main", "weak Kneser-type theorem for A, S");
  add_common(theorem, true);
  add_eps(theorem);
  auto* petridis = app.add_subcommand("petridis", "Petridis minimizer X and its verification");
  add_common(petridis, true);
  add_seed_budget(petridis);
  petridis->add_option("--mode", cfg.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  auto* conv = app.add_subcommand("conv", "convolution tools");
  conv->require_subcommand(1);
  auto* gap = conv->add_subcommand("gap", "gap in the range of the autocorrelation of A");
  add_common(gap, true);
  auto* smooth = conv->add_subcommand("smooth", "F = (1_S/|S|) * (1_S/|S|) * f for f the autocorrelation of A");
  add_common(smooth, true);
  smooth->add_option("--threshold", threshold_text, "report {x : F(x) > threshold}");
  auto* search = app.add_subcommand("search", "counterexample searches");
  search->require_subcommand(1);
  auto* kfail = search->add_subcommand("kneser-failure", "pairs violating the Kneser inequality");
  add_common(kfail, true);
  add_seed_budget(kfail);
  kfail->add_option("--strategy", cfg.strategy, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  auto* recheck_cmd = app.add_subcommand("recheck", "recompute a certificate and diff it");
  recheck_cmd->add_option("certificate", cfg.certificate_path, "certificate or run record JSON")->required();
  recheck_cmd->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  recheck_cmd->add_option("--out", cfg.out_path, "write the record to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    cfg.command = "help";
    cfg.help_text = app.help();
    for (auto* sub : app.get_subcommands()) {
      cfg.help_text = sub->help();
      for (auto* leaf : sub->get_subcommands()) cfg.help_text = leaf->help();
    }
    return cfg;
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  for (auto* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (auto* leaf : sub->get_subcommands()) cfg.command += " " + leaf->get_name();
  }

  if (max_order) cfg.caps.group_order = *max_order;
  if (bf_order) cfg.caps.bruteforce_order = *bf_order;
  if (subset_search) cfg.caps.subset_search = *subset_search;
  if (fragment_cap) cfg.caps.fragment_cap = *fragment_cap;

  for (const auto& lit : set_literals) {
    auto eq = lit.find('=');
    if (eq == std::string::npos || eq == 0) usage("--set expects NAME=elements, got '" + lit + "'");
    std::string name = lit.substr(0, eq);
    if (name != "A" && name != "B" && name != "S") usage("--set: unknown set name '" + name + "' (use A, B or S)");
    cfg.sets[name] = lit.substr(eq + 1);
  }
  if (!set_a.empty()) cfg.sets["A"] = set_a;
  if (!set_b.empty()) cfg.sets["B"] = set_b;
  if (!set_s.empty()) cfg.sets["S"] = set_s;

  if (!eps_text.empty()) {
    Rational e = parse_rational_flag("--epsilon", eps_text);
    if (e <= Rational(0) || e > Rational(1)) usage("--epsilon: " + e.str() + " is not in (0, 1]");
    cfg.epsilon = e;
  }
  if (!k_text.empty()) cfg.K = parse_rational_flag("--K", k_text);
  if (!threshold_text.empty()) cfg.threshold = parse_rational_flag("--threshold", threshold_text);
  if (cfg.fragments && cfg.solver != "brute") {
    if (connectivity->count("--solver")) usage("--fragments needs --solver brute");
    cfg.solver = "brute";
  }

  if (!cfg.group_text.empty()) {
    GroupSpec spec;
    try {
      if (std::filesystem::exists(cfg.group_text)) {
        std::ifstream f(cfg.group_text);
        spec = group_spec_from_json(json::parse(f));
      } else {
        spec = parse_group_inline(cfg.group_text);
      }
    } catch (const json::exception& e) {
      usage("--group: " + std::string(e.what()));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UsageError || e.code() == ErrorCode::ParseError) usage(std::string("--group: ") + e.what());
      throw;
    }
    require_order(spec_order(spec), {cfg.caps.group_order}, "--group " + cfg.group_text);
    cfg.group = std::move(spec);
  }
  return cfg;
}

json RunRecord::to_json() const {
  return {{"schema_version", schema_version},
          {"tool", "sdt"},
          {"tool_version", tool_version},
          {"config", config},
          {"wall_time_ms", wall_time_ms},
          {"exit_code", exit_code},
          {"certificate", certificate}};
}

std::string certificate_digest(const json& certificate) {
  json body = certificate;
  body.erase("digest");
  const std::string text = body.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return "sha256:" + hex.str();
}

json compute_certificate(const std::string& kind, const json& group, const json& inputs) {
  json cert = {{"schema_version", kSchemaVersion}, {"kind", kind}};
  Computed c;
  if (kind == "recheck") {
    RecheckOutcome o = recheck(require_key(inputs, "target"));
    cert["group"] = nullptr;
    cert["inputs"] = inputs;
    c = {recheck_result(o), o.ok};
  } else {
    const Caps caps = caps_from_json(require_key(inputs, "caps"));
    const GroupSpec spec = group_spec_from_json(group);
    const GroupTable g = build_preset(spec, {caps.group_order});
    cert["group"] = to_json(spec);
    cert["group_name"] = g.name();
    cert["group_order"] = g.order();
    cert["inputs"] = inputs;
    c = run_kind(kind, g, inputs, caps);
  }
  cert["result"] = std::move(c.result);
  cert["verified"] = c.verified;
  cert["digest"] = certificate_digest(cert);
  return cert;
}

RecheckOutcome recheck(const json& document) {
  RecheckOutcome o;
  try {
    const json& cert = document.is_object() && document.contains("certificate") ? document.at("certificate") : document;
    if (!cert.is_object()) throw Error(ErrorCode::ParseError, "certificate must be a JSON object");
    if (!cert.contains("schema_version") || cert.at("schema_version") != kSchemaVersion) {
      throw Error(ErrorCode::ParseError, "unsupported schema_version");
    }
    o.kind = input_string(cert, "kind");
    o.digest_ok = cert.contains("digest") && cert.at("digest").is_string() &&
                  cert.at("digest").get<std::string>() == certificate_digest(cert);
    json recomputed = compute_certificate(o.kind, require_key(cert, "group"), require_key(cert, "inputs"));
    diff_json(recomputed, cert, "", o.diffs);
    o.ok = o.digest_ok && o.diffs.empty();
  } catch (const Error& e) {
    o.ok = false;
    o.error = std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const json::exception& e) {
    o.ok = false;
    o.error = std::string("ParseError: ") + e.what();
  }
  return o;
}

RunRecord dispatch(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.config = config.snapshot();
  if (config.command == "recheck") {
    std::ifstream f(config.certificate_path);
    if (!f) usage("recheck: cannot read " + config.certificate_path);
    json target;
    try {
      target = json::parse(f);
    } catch (const json::exception& e) {
      usage("recheck: " + config.certificate_path + " is not JSON: " + e.what());
    }
    rec.certificate = compute_certificate("recheck", nullptr, {{"target", target}});
  } else {
    if (!config.group) usage("'" + config.command + "' needs --group");
    const GroupTable g = build_preset(*config.group, {config.caps.group_order});
    rec.certificate = compute_certificate(config.command, to_json(*config.group), make_inputs(config, g));
  }
  rec.exit_code = rec.certificate.at("verified").get<bool>() ? kExitVerified : kExitFinding;
  rec.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::string render_text(const json& document) {
  std::ostringstream out;
  render_lines(document, "", out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::string format = "json";
  std::string out_path;
  try {
    RunConfig cfg = parse_args(args);
    if (cfg.command == "help") {
      out << cfg.help_text;
      return kExitVerified;
    }
    format = cfg.format;
    out_path = cfg.out_path;
    RunRecord rec = dispatch(cfg);
    emit(rec.to_json(), format, out_path, out);
    return rec.exit_code;
  } catch (const Error& e) {
    err << "sdt: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    out << error_document(e).dump(2) << "\n";
    return kExitUsage;
  }
}

}  // namespace sdt::cli
