#include "omq/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "omq/config.h"
#include "omq/oracle.h"
#include "omq/relax_btw.h"
#include "omq/relax_eliu.h"
#include "omq/relax_tgd.h"
#include "omq/relax_tree.h"
#include "omq/strengthen.h"
#include "omq/syntax.h"
#include "omq/typesat.h"
#include "omq/unraveling.h"

namespace omq {

namespace {

const std::vector<std::string> kModes = {"exact-beliq", "relax-eliu",     "relax-tree",    "relax-btw", "relax-tgd",
                                         "strengthen-ont", "strengthen-db", "unravel", "oracle"};

struct RunConfig {
  std::string mode;
  std::string onto_path, db_path, query_path;
  std::string answer;
  std::optional<int> l, k, kp;
  int depth = -1;
  bool json = false;
  int jobs = 1;
  std::string dump_horn;
  std::optional<int> max_adom, max_closure;
};

// The file currently being parsed, for diagnostics.
std::string g_source;

std::string load(const std::string& path) {
  g_source = path;
  std::string s = read_file(path);
  return s;
}

Tuple split_tuple(const std::string& s) {
  Tuple t;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) t.push_back(part);
  return t;
}

std::string join(const Tuple& t) {
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i];
  return s;
}

int need(const std::optional<int>& v, const char* flag, const std::string& mode) {
  if (!v) throw InputError("mode " + mode + " needs " + flag);
  if (*v < 0) throw InputError(std::string(flag) + " must be non-negative");
  return *v;
}

void forbid(const std::optional<int>& v, const char* flag, const std::string& mode) {
  if (v) throw InputError("mode " + mode + " does not take " + flag);
}

// Runs pred over the tuples with up to jobs workers.
std::set<Tuple> filter_tuples(const std::vector<Tuple>& ts, int jobs, const std::function<bool(const Tuple&)>& pred) {
  std::vector<char> keep(ts.size(), 0);
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto work = [&] {
    for (size_t i; (i = next++) < ts.size();) {
      try {
        keep[i] = pred(ts[i]);
      } catch (...) {
        std::lock_guard<std::mutex> g(mu);
        if (!err) err = std::current_exception();
        next = ts.size();
      }
    }
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(ts.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  std::set<Tuple> out;
  for (size_t i = 0; i < ts.size(); ++i)
    if (keep[i]) out.insert(ts[i]);
  return out;
}

struct Output {
  std::set<Tuple> answers;
  size_t arity = 0;
  std::optional<std::string> text;  // replaces the answer listing (unravel)
};

Output run_eval(const RunConfig& cfg) {
  const std::string& m = cfg.mode;
  if (std::find(kModes.begin(), kModes.end(), m) == kModes.end()) throw InputError("unknown mode " + m);

  bool uses_lk = m == "relax-btw" || m == "relax-tgd" || m == "unravel";
  if (!uses_lk) {
    forbid(cfg.l, "--l", m);
    forbid(cfg.k, "--k", m);
  }
  if (m != "relax-tgd") forbid(cfg.kp, "--kp", m);
  if (cfg.depth >= 0 && m != "unravel" && m != "oracle") throw InputError("mode " + m + " does not take --depth");

  Database d = parse_database(load(cfg.db_path));
  std::optional<Tuple> only;
  if (!cfg.answer.empty()) only = split_tuple(cfg.answer);

  if (m == "unravel") {
    std::set<std::string> s;
    if (only) s.insert(only->begin(), only->end());
    int n = cfg.depth < 0 ? 2 : cfg.depth;
    UnravelingPrefix p;
    if (cfg.l || cfg.k) {
      p = lk_unravel_prefix(d, s, need(cfg.l, "--l", m), need(cfg.k, "--k", m), n);
    } else {
      p = tree_unravel_prefix(d, s, n);
    }
    Output out;
    out.text = print_database(p.db);
    return out;
  }

  std::string otext = cfg.onto_path.empty() ? std::string() : load(cfg.onto_path);
  bool tgd_syntax = otext.find("->") != std::string::npos;
  std::vector<TGD> tgds;
  Ontology onto;
  if (tgd_syntax && m != "oracle") throw InputError("TGD ontologies are only accepted by the oracle mode");
  if (tgd_syntax) tgds = parse_tgds(otext);
  else onto = parse_ontology(otext);
  UCQ q = parse_query(load(cfg.query_path));
  g_source.clear();
  if (q.empty()) throw InputError("empty query");

  Output out;
  out.arity = q[0].arity();
  std::vector<Tuple> tuples;
  if (only) {
    if (only->size() != out.arity) throw InputError("--answer does not match the query arity");
    for (const auto& c : *only)
      if (!d.adom().count(c)) throw InputError("--answer constant " + c + " is not in the database");
    tuples.push_back(*only);
  } else {
    auto all = all_tuples(d, out.arity);
    tuples.assign(all.begin(), all.end());
  }

  if (m == "oracle") {
    int n = cfg.depth < 0 ? 3 : cfg.depth;
    std::set<Tuple> ans;
    if (tgd_syntax) {
      ChaseResult ch = chase_bounded(tgds, d, n);
      ans = ch.sat ? eval_ucq(ch.db, q) : all_tuples(d, out.arity);
    } else {
      ans = chase_answers(onto, d, q, n);
    }
    for (const auto& t : tuples)
      if (ans.count(t)) out.answers.insert(t);
    return out;
  }

  OMQ omq{onto, {}, q};
  omq.sigma = sig_of(d);
  std::function<bool(const Tuple&)> pred;
  if (m == "exact-beliq") {
    if (q.size() != 1 || !is_beliq(q[0])) throw InputError("exact-beliq needs a single bELIQ");
    pred = [&](const Tuple& t) { return certain_beliq(d, omq.onto, q[0], t); };
  } else if (m == "relax-eliu") {
    pred = [&](const Tuple& t) { return approx_eliu(omq, d, t); };
  } else if (m == "relax-tree") {
    pred = [&](const Tuple& t) { return approx_tree(omq, d, t); };
  } else if (m == "relax-btw") {
    int l = need(cfg.l, "--l", m), k = need(cfg.k, "--k", m);
    pred = [&, l, k](const Tuple& t) { return approx_btw(omq, d, t, l, k); };
  } else if (m == "relax-tgd") {
    TgdParams p{need(cfg.l, "--l", m), need(cfg.k, "--k", m), need(cfg.kp, "--kp", m)};
    pred = [&, p](const Tuple& t) { return approx_tgd(omq, d, t, p); };
  } else if (m == "strengthen-ont") {
    auto members = std::make_shared<std::vector<Ontology>>(exhaustive_set(omq.onto).ontologies);
    pred = [&, members](const Tuple& t) {
      for (const auto& o : *members)
        if (!eli_certain(o, d, q, t)) return false;
      return true;
    };
  } else {
    pred = [&](const Tuple& t) { return approx_up_db(omq, d, t); };
  }
  out.answers = filter_tuples(tuples, cfg.jobs, pred);
  return out;
}

void print_text(const Output& out, bool single) {
  if (out.text) {
    std::cout << *out.text;
    return;
  }
  if (out.arity == 0 || single) {
    std::cout << (out.answers.empty() ? "false" : "true") << "\n";
    return;
  }
  for (const auto& t : out.answers) std::cout << join(t) << "\n";
}

void print_json(const RunConfig& cfg, const Output& out, double ms) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["mode"] = cfg.mode;
  if (out.text) {
    j["database"] = *out.text;
  } else {
    j["answers"] = nlohmann::json::array();
    for (const auto& t : out.answers) j["answers"].push_back(t);
    if (out.arity == 0) j["holds"] = !out.answers.empty();
  }
  j["stats"] = {{"time_ms", ms}, {"horn_vars", stats().horn_vars.load()}, {"assignments", stats().assignments.load()}};
  std::cout << j.dump() << "\n";
}

void report(const char* kind, const std::string& msg) { std::cerr << "omq: " << kind << ": " << msg << "\n"; }

uint64_t env_seed() {
  const char* s = std::getenv("OMQ_SEED");
  if (!s || !*s) return 1;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError(std::string("OMQ_SEED is not a number: ") + s);
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Approximate answers to ontology-mediated queries"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* eval = app.add_subcommand("eval", "Evaluate an OMQ over a database");
  eval->add_option("--mode", cfg.mode, "Evaluation mode")->required()->check(CLI::IsMember(kModes));
  eval->add_option("-O,--ontology", cfg.onto_path, "Ontology file (concept inclusions, or TGDs for oracle)");
  eval->add_option("-D,--database", cfg.db_path, "Database file")->required();
  eval->add_option("-Q,--query", cfg.query_path, "Query file");
  eval->add_option("--answer", cfg.answer, "Only check this tuple (comma separated)");
  eval->add_option("--l", cfg.l, "Bag overlap bound");
  eval->add_option("--k", cfg.k, "Bag size bound");
  eval->add_option("--kp", cfg.kp, "Bag size bound of the chased fragments");
  eval->add_option("--depth", cfg.depth, "Prefix depth for unravel and oracle");
  eval->add_flag("--json", cfg.json, "JSON output");
  eval->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  eval->add_option("--dump-horn", cfg.dump_horn, "Write the last Horn formula to this file");
  eval->add_option("--max-adom", cfg.max_adom, "Guard on the number of constants");
  eval->add_option("--max-closure", cfg.max_closure, "Guard on the closure size");

  InstanceSpec spec;
  std::string shape = "beliq", flavour = "alci";
  auto* gen = app.add_subcommand("gen", "Print a random instance seeded by OMQ_SEED");
  gen->add_option("--shape", shape)->check(CLI::IsMember({"beliq", "cq", "ucq"}));
  gen->add_option("--flavour", flavour)->check(CLI::IsMember({"empty", "eli", "eliu", "alci"}));
  gen->add_option("--cis", spec.cis);
  gen->add_option("--constants", spec.constants);
  gen->add_option("--role-facts", spec.role_facts);
  gen->add_option("--concept-facts", spec.concept_facts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      spec.seed = env_seed();
      spec.shape = shape == "beliq" ? Shape::BELIQ : shape == "cq" ? Shape::CQ : Shape::UCQ;
      spec.flavour = flavour == "empty" ? Flavour::Empty
                     : flavour == "eli" ? Flavour::ELI_bot
                     : flavour == "eliu" ? Flavour::ELIU_bot
                                         : Flavour::ALCI;
      std::cout << instance_text(gen_instance(spec)) << "\n";
      return 0;
    }
    if (cfg.mode != "unravel" && cfg.query_path.empty()) throw InputError("mode " + cfg.mode + " needs -Q");
    if (cfg.max_adom) limits().max_adom = *cfg.max_adom;
    if (cfg.max_closure) limits().max_closure = *cfg.max_closure;
    limits().dump_horn = cfg.dump_horn;
    stats().reset();
    auto t0 = std::chrono::steady_clock::now();
    Output out = run_eval(cfg);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (cfg.json) print_json(cfg, out, ms);
    else print_text(out, !cfg.answer.empty());
    return 0;
  } catch (const GuardError& e) {
    report("guard", e.what());
    return 1;
  } catch (const InputError& e) {
    std::string where = g_source;
    if (e.line > 0) where += (where.empty() ? "" : ":") + std::to_string(e.line) + ":" + std::to_string(e.column);
    report("input error", (where.empty() ? "" : where + ": ") + e.what());
    return 2;
  } catch (const std::exception& e) {
    report("input error", e.what());
    return 2;
  }
}

}  // namespace omq
