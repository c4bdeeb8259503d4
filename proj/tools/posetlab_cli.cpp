// posetlab: batch CLI over the poset/free-set laboratory.
//
// Exit codes: 0 = computation completed within budget, 2 = usage/input error,
// 3 = budget exhausted (certified partial results are still printed).

#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetlab/cubes.hpp"
#include "posetlab/dimension.hpp"
#include "posetlab/errors.hpp"
#include "posetlab/estimates.hpp"
#include "posetlab/freeset.hpp"
#include "posetlab/io.hpp"
#include "posetlab/kur.hpp"
#include "posetlab/poset.hpp"

using json = nlohmann::ordered_json;
using namespace posetlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Ctx {
  bool json_out = false;
  Budget budget;
  std::vector<std::string> args;
};

std::uint64_t to_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgs("expected a non-negative integer for " + what +
                      ", got '" + s + "'");
  }
}

// Positional key=value arguments, e.g. `relations m=257 r=4`.
std::map<std::string, std::string> kv_args(
    const std::vector<std::string>& args,
    const std::vector<std::string>& required,
    const std::vector<std::string>& optional = {}) {
  std::map<std::string, std::string> out;
  for (const auto& a : args) {
    auto eq = a.find('=');
    if (eq == std::string::npos)
      throw InvalidArgs("expected key=value argument, got '" + a + "'");
    std::string key = a.substr(0, eq);
    bool known = false;
    for (const auto& k : required) known = known || k == key;
    for (const auto& k : optional) known = known || k == key;
    if (!known) throw InvalidArgs("unknown argument '" + key + "'");
    out[key] = a.substr(eq + 1);
  }
  for (const auto& k : required)
    if (!out.count(k)) throw InvalidArgs("missing required argument '" + k + "='");
  return out;
}

json budget_json(const Ctx& ctx, const SearchStats& stats) {
  return json{{"nodes_used", stats.nodes},
              {"ms_used", stats.ms},
              {"max_nodes", ctx.budget.max_nodes},
              {"max_ms", ctx.budget.max_ms}};
}

void emit(const Ctx& ctx, const std::string& command, const json& inputs,
          const json& result, const std::string& provenance,
          const SearchStats& stats, const std::string& human) {
  if (ctx.json_out) {
    json report{{"command", command},
                {"inputs", inputs},
                {"result", result},
                {"provenance", provenance},
                {"budget", budget_json(ctx, stats)}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_strings(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out.empty() ? "-" : out;
}

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    default: return "budget";
  }
}

int cmd_dim(const Ctx& ctx) {
  if (ctx.args.size() != 1)
    throw InvalidArgs("dim expects exactly one poset source");
  Poset p = poset_from_source(ctx.args[0]);
  DimResult d = dim_exact(p, ctx.budget);
  json realizer = json::array();
  for (const auto& ext : d.witness) realizer.push_back(ext);
  std::ostringstream human;
  if (d.exact())
    human << "dim = " << d.value() << " (exact)\n";
  else
    human << "dim in [" << d.lower << ", " << d.upper
          << "] (budget exhausted)\n";
  for (std::size_t i = 0; i < d.witness.size(); ++i)
    human << "L" << i << ": " << join_ints(d.witness[i]) << "\n";
  emit(ctx, "dim", json{{"source", ctx.args[0]}, {"n", p.size()}},
       json{{"lower", d.lower},
            {"upper", d.upper},
            {"exact", d.exact()},
            {"realizer", realizer}},
       d.exact() ? "exact" : "certified-interval", d.stats, human.str());
  return d.exact() ? kExitOk : kExitBudget;
}

int cmd_width(const Ctx& ctx) {
  if (ctx.args.size() != 1)
    throw InvalidArgs("width expects exactly one poset source");
  Poset p = poset_from_source(ctx.args[0]);
  int w = width(p);
  emit(ctx, "width", json{{"source", ctx.args[0]}, {"n", p.size()}},
       json{{"width", w}}, "exact", {},
       "width = " + std::to_string(w) + " (exact)\n");
  return kExitOk;
}

int cmd_breadth(const Ctx& ctx) {
  if (ctx.args.size() != 1)
    throw InvalidArgs("breadth expects exactly one poset source");
  Poset p = poset_from_source(ctx.args[0]);
  CountResult b = breadth(p, ctx.budget);
  bool jsl = is_join_semilattice(p);
  std::optional<int> join_variant;
  if (jsl && b.exact) {
    CountResult bj = breadth_join(p, ctx.budget);
    if (bj.exact) join_variant = bj.value;
  }
  std::ostringstream human;
  if (b.exact)
    human << "breadth = " << b.value << " (exact)\n";
  else
    human << "breadth >= " << b.value << " (budget exhausted)\n";
  if (join_variant)
    human << "join-characterization = " << *join_variant << " (exact)\n";
  json result{{"breadth", b.value}, {"exact", b.exact}};
  if (join_variant) result["join_characterization"] = *join_variant;
  emit(ctx, "breadth", json{{"source", ctx.args[0]}, {"n", p.size()}}, result,
       b.exact ? "exact" : "certified-lower", b.stats, human.str());
  return b.exact ? kExitOk : kExitBudget;
}

int cmd_kur(const Ctx& ctx, bool gch, const std::vector<std::string>& factors) {
  if (ctx.args.size() != 1)
    throw InvalidArgs("kur expects exactly one poset source");
  Poset p = poset_from_source(ctx.args[0]);
  KurOptions opts;
  opts.assume_gch = gch;
  for (const auto& f : factors) opts.factors.push_back(poset_from_source(f));
  BoundInterval b = kur_bounds(p, ctx.budget, opts);
  std::ostringstream human;
  if (b.lo == b.hi)
    human << "kur = " << b.lo << " (exact)\n";
  else
    human << "kur in [" << b.lo << ", " << b.hi << "] (certified)\n";
  human << "lower rules: " << join_strings(b.lo_rules) << "\n";
  human << "upper rules: " << join_strings(b.hi_rules)
        << (b.hi_conditional ? " (conditional)" : "") << "\n";
  emit(ctx, "kur", json{{"source", ctx.args[0]}, {"n", p.size()}},
       json{{"lo", b.lo},
            {"hi", b.hi},
            {"lo_rules", b.lo_rules},
            {"hi_rules", b.hi_rules},
            {"hi_conditional", b.hi_conditional}},
       b.lo == b.hi ? "exact" : "certified-interval", {}, human.str());
  return kExitOk;
}

int cmd_cube(const Ctx& ctx) {
  if (ctx.args.size() != 1)
    throw InvalidArgs("cube expects exactly one poset source");
  Poset p = poset_from_source(ctx.args[0]);
  int w = width(p);
  Bits j = join_irreducibles(p);
  bool lattice = is_lattice(p);
  std::ostringstream human;
  human << "elements = " << p.size() << "\n"
        << "width = " << w << " (exact)\n"
        << "least = " << (p.least() ? p.label(*p.least()) : "-") << "\n"
        << "greatest = " << (p.greatest() ? p.label(*p.greatest()) : "-")
        << "\n"
        << "lattice = " << (lattice ? "yes" : "no") << "\n"
        << "join-irreducibles = " << j.count() << "\n";
  if (p.size() <= 40) {
    human << "labels:";
    for (int i = 0; i < p.size(); ++i) human << " " << p.label(i);
    human << "\n";
  }
  json labels = json::array();
  for (int i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
  emit(ctx, "cube", json{{"source", ctx.args[0]}},
       json{{"n", p.size()},
            {"width", w},
            {"least", p.least() ? json(p.label(*p.least())) : json()},
            {"greatest", p.greatest() ? json(p.label(*p.greatest())) : json()},
            {"lattice", lattice},
            {"join_irreducibles", j.count()},
            {"labels", labels}},
       "exact", {}, human.str());
  return kExitOk;
}

json relation_json(const AlephRelation& rel) {
  return json{{"offset", rel.offset},
              {"order", rel.order},
              {"size", rel.size.str()},
              {"rule", rel.rule},
              {"conditional", rel.conditional},
              {"aleph", rel.render_aleph()},
              {"lambda", rel.render_lambda()}};
}

int cmd_relations(const Ctx& ctx) {
  auto kv = kv_args(ctx.args, {"m", "r"});
  std::uint64_t m = to_u64(kv["m"], "m");
  unsigned r = unsigned(to_u64(kv["r"], "r"));
  AlephRelation rel = best_relation(m, r, ctx.budget);
  std::ostringstream human;
  human << rel.render_aleph() << "   [rule: " << rel.rule
        << (rel.conditional ? ", conditional" : "") << "]\n"
        << rel.render_lambda() << "\n";
  emit(ctx, "relations", json{{"m", m}, {"r", r}}, relation_json(rel),
       "estimate:" + rel.rule, {}, human.str());
  return kExitOk;
}

int cmd_table_e(const Ctx& ctx) {
  auto kv = kv_args(ctx.args, {"r", "nmax"});
  unsigned r = unsigned(to_u64(kv["r"], "r"));
  std::uint64_t nmax = to_u64(kv["nmax"], "nmax");
  auto rows = table_e(r, nmax);
  std::string label_n = "n";
  std::string label_e = "E(n," + std::to_string(r) + ")";
  std::size_t lab_w = std::max(label_n.size(), label_e.size());
  std::vector<std::string> ns, es;
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    ns.push_back(std::to_string(row.n));
    es.push_back(row.e.str());
    widths.push_back(std::max(ns.back().size(), es.back().size()));
  }
  std::ostringstream human;
  auto line = [&](const std::string& lab, const std::vector<std::string>& vals) {
    human << lab << std::string(lab_w - lab.size(), ' ');
    for (std::size_t i = 0; i < vals.size(); ++i)
      human << "  " << std::string(widths[i] - vals[i].size(), ' ') << vals[i];
    human << "\n";
  };
  line(label_n, ns);
  line(label_e, es);
  json jrows = json::array();
  for (const auto& row : rows)
    jrows.push_back(json{{"n", row.n},
                         {"exponent", row.e.exponent.str()},
                         {"e", row.e.str()}});
  emit(ctx, "table-e", json{{"r", r}, {"nmax", nmax}}, json{{"rows", jrows}},
       "exact", {}, human.str());
  return kExitOk;
}

int cmd_fk(const Ctx& ctx) {
  auto kv = kv_args(ctx.args, {"m", "r"});
  std::uint64_t m = to_u64(kv["m"], "m");
  unsigned r = unsigned(to_u64(kv["r"], "r"));
  std::uint64_t d = furedi_kahn_min_d(m, r);
  AlephRelation rel;
  rel.offset = d - 1;
  rel.order = int(r);
  rel.size = Card::plain(m);
  rel.rule = "furedi-kahn";
  std::ostringstream human;
  human << "d = " << d << " (exact bound)\n" << rel.render_aleph() << "\n";
  emit(ctx, "fk", json{{"m", m}, {"r", r}},
       json{{"d", d}, {"aleph", rel.render_aleph()}}, "estimate:furedi-kahn",
       {}, human.str());
  return kExitOk;
}

int cmd_dushnik(const Ctx& ctx) {
  auto kv = kv_args(ctx.args, {"m", "k"});
  std::uint64_t m = to_u64(kv["m"], "m");
  std::uint64_t k = to_u64(kv["k"], "k");
  auto d = dushnik_dim(m, k);
  std::ostringstream human;
  json result;
  if (d) {
    AlephRelation rel;
    rel.offset = *d - 1;
    rel.order = int(k) - 1;
    rel.size = Card::plain(m);
    rel.rule = "dushnik";
    human << "dim B_" << m << "(1," << (k - 1) << ") = " << *d << " (exact)\n"
          << rel.render_aleph() << "\n";
    result = json{{"dim", *d}, {"aleph", rel.render_aleph()}};
  } else {
    human << "no window applies to (m=" << m << ", k=" << k << ")\n";
    result = json{{"dim", nullptr}};
  }
  emit(ctx, "dushnik", json{{"m", m}, {"k", k}}, result,
       d ? "exact" : "inapplicable", {}, human.str());
  return kExitOk;
}

int cmd_spencer(const Ctx& ctx) {
  auto kv = kv_args(ctx.args, {"n", "r"});
  std::uint64_t n = to_u64(kv["n"], "n");
  unsigned r = unsigned(to_u64(kv["r"], "r"));
  AlephRelation rel = spencer_relation(n, r);
  PowerOfTwo e = e_value(n, r);
  std::ostringstream human;
  human << "E(" << n << ", " << r << ") = " << e.str() << " = 2^"
        << e.exponent.str() << "\n"
        << rel.render_aleph() << "\n";
  emit(ctx, "spencer", json{{"n", n}, {"r", r}},
       json{{"exponent", e.exponent.str()},
            {"e", e.str()},
            {"aleph", rel.render_aleph()}},
       "estimate:spencer", {}, human.str());
  return kExitOk;
}

int cmd_freeset(const Ctx& ctx) {
  if (ctx.args.size() != 2)
    throw InvalidArgs("freeset expects a mapping source and m=<size>");
  auto kv = kv_args({ctx.args[1]}, {"m"});
  SetMapping f = mapping_from_source(ctx.args[0]);
  int m = int(to_u64(kv["m"], "m"));
  FindFreeResult res = find_free(f, m, ctx.budget);
  std::ostringstream human;
  json result{{"status", status_name(res.status)}};
  if (res.status == SearchStatus::Found) {
    human << "free set: " << subset_label(res.witness) << "\n";
    result["witness"] = subset_label(res.witness);
  } else if (res.status == SearchStatus::Exhausted) {
    human << "no free set of size " << m << "\n";
  } else {
    human << "budget exhausted before a decision\n";
  }
  emit(ctx, "freeset", json{{"source", ctx.args[0]}, {"m", m}}, result,
       std::string("search:") + status_name(res.status), res.stats,
       human.str());
  return res.status == SearchStatus::Budget ? kExitBudget : kExitOk;
}

json embedding_json(const FreeEmbedding& e) {
  json out{{"status", status_name(e.status)}};
  if (e.status == SearchStatus::Found) out["map"] = e.map;
  return out;
}

std::string embedding_human(const std::string& name, const FreeEmbedding& e) {
  std::ostringstream out;
  out << name << ": " << status_name(e.status);
  if (e.status == SearchStatus::Found) {
    out << "  map:";
    for (std::size_t i = 0; i < e.map.size(); ++i)
      if (e.map[i] >= 0) out << " " << i << "->" << e.map[i];
  }
  out << "\n";
  return out.str();
}

int cmd_leadsto(const Ctx& ctx, bool ji) {
  if (ctx.args.size() != 2)
    throw InvalidArgs("leadsto expects a poset source and a mapping source");
  Poset p = poset_from_source(ctx.args[0]);
  SetMapping f = mapping_from_source(ctx.args[1]);
  SearchStats stats;
  std::ostringstream human;
  json result;
  bool hit_budget = false;
  if (ji) {
    JiShadowReport rep = ji_shadow_check(p, f, ctx.budget);
    stats.nodes = rep.full.stats.nodes + rep.ji.stats.nodes;
    stats.ms = rep.full.stats.ms + rep.ji.stats.ms;
    human << embedding_human("full", rep.full)
          << embedding_human("join-irreducible", rep.ji);
    result = json{{"full", embedding_json(rep.full)},
                  {"ji", embedding_json(rep.ji)}};
    hit_budget = rep.full.status == SearchStatus::Budget ||
                 rep.ji.status == SearchStatus::Budget;
  } else {
    FreeEmbedding e = leadsto_shadow(p, f, ctx.budget);
    stats = e.stats;
    human << embedding_human("full", e);
    result = json{{"full", embedding_json(e)}};
    hit_budget = e.status == SearchStatus::Budget;
  }
  emit(ctx, "leadsto",
       json{{"poset", ctx.args[0]}, {"mapping", ctx.args[1]}, {"ji", ji}},
       result, hit_budget ? "search:budget" : "search-complete", stats,
       human.str());
  return hit_budget ? kExitBudget : kExitOk;
}

int cmd_config(const Ctx& ctx, bool stronger) {
  if (ctx.args.size() != 1)
    throw InvalidArgs("config search expects exactly one mapping source");
  SetMapping f = mapping_from_source(ctx.args[0]);
  ConfigResult res =
      stronger ? config_search_q(f, ctx.budget) : config_search_p(f, ctx.budget);
  std::ostringstream human;
  json result{{"status", status_name(res.status)}};
  if (res.status == SearchStatus::Found) {
    human << "found: xi = (" << res.xi[0] << ", " << res.xi[1] << ", "
          << res.xi[2] << "), eta = (" << res.eta[0] << ", " << res.eta[1]
          << ", " << res.eta[2] << ")\n";
    result["xi"] = res.xi;
    result["eta"] = res.eta;
  } else if (res.status == SearchStatus::Exhausted) {
    human << "no configuration\n";
  } else {
    human << "budget exhausted before a decision\n";
  }
  emit(ctx, stronger ? "config-q" : "config-p", json{{"source", ctx.args[0]}},
       result, std::string("search:") + status_name(res.status), res.stats,
       human.str());
  return res.status == SearchStatus::Budget ? kExitBudget : kExitOk;
}

int cmd_verify(const Ctx& ctx) {
  if (ctx.args.empty()) throw InvalidArgs("verify expects a check name");
  std::string check = ctx.args[0];
  std::vector<std::string> rest(ctx.args.begin() + 1, ctx.args.end());
  if (check == "dim-eq-suitable") {
    auto kv = kv_args(rest, {"m", "r"});
    int m = int(to_u64(kv["m"], "m")), r = int(to_u64(kv["r"], "r"));
    SuitableCheckReport rep = check_dim_equals_suitable(m, r, ctx.budget);
    bool pass = rep.both_exact && rep.equal;
    std::ostringstream human;
    human << "dim B_" << m << "(1," << r << ") = " << rep.dim << ", N(" << m
          << "," << (r + 1) << ") = " << rep.n_suitable << " -> "
          << (pass ? "PASS" : (rep.both_exact ? "FAIL" : "UNDECIDED")) << "\n";
    emit(ctx, "verify", json{{"check", check}, {"m", m}, {"r", r}},
         json{{"dim", rep.dim},
              {"n_suitable", rep.n_suitable},
              {"both_exact", rep.both_exact},
              {"equal", rep.equal},
              {"pass", pass}},
         rep.both_exact ? "exact" : "certified-interval", rep.stats,
         human.str());
    return rep.both_exact ? kExitOk : kExitBudget;
  }
  if (check == "dim-transfer") {
    auto kv = kv_args(rest, {"m", "r"});
    int m = int(to_u64(kv["m"], "m")), r = int(to_u64(kv["r"], "r"));
    TransferReport rep = check_dim_transfer(m, r, ctx.budget);
    bool pass = rep.both_exact && rep.equal && rep.psi_verified;
    std::ostringstream human;
    human << "dim B_" << m << "(1," << r << ") = " << rep.dim_levels
          << ", dim B_" << m << "(<=" << r << ") = " << rep.dim_upto
          << ", chain product " << rep.chain_product_size << ", psi "
          << (rep.psi_verified ? "verified" : "failed") << " -> "
          << (pass ? "PASS" : (rep.both_exact ? "FAIL" : "UNDECIDED")) << "\n";
    emit(ctx, "verify", json{{"check", check}, {"m", m}, {"r", r}},
         json{{"dim_levels", rep.dim_levels},
              {"dim_upto", rep.dim_upto},
              {"both_exact", rep.both_exact},
              {"equal", rep.equal},
              {"psi_verified", rep.psi_verified},
              {"chain_product_size", rep.chain_product_size},
              {"pass", pass}},
         rep.both_exact ? "exact" : "certified-interval", rep.stats,
         human.str());
    return rep.both_exact ? kExitOk : kExitBudget;
  }
  if (check == "free-reduction") {
    auto kv = kv_args(rest, {"map", "h"});
    SetMapping f = mapping_from_source(kv["map"]);
    std::uint64_t h = 0;
    for (const auto& part : [&] {
           std::vector<std::string> parts;
           std::stringstream ss(kv["h"]);
           std::string tok;
           while (std::getline(ss, tok, ',')) parts.push_back(tok);
           return parts;
         }())
      h |= 1ull << to_u64(part, "h");
    ReductionReport rep = check_free_reduction(f, h);
    bool pass = rep.consistent();
    std::ostringstream human;
    human << "free(<=r) = " << (rep.free_all ? "yes" : "no")
          << ", free(=r) = " << (rep.free_order_r ? "yes" : "no")
          << ", decomposition = " << (rep.decomposition_ok ? "ok" : "broken")
          << " -> " << (pass ? "PASS" : "FAIL") << "\n";
    emit(ctx, "verify",
         json{{"check", check}, {"map", kv["map"]}, {"h", subset_label(h)}},
         json{{"free_all", rep.free_all},
              {"free_order_r", rep.free_order_r},
              {"decomposition_ok", rep.decomposition_ok},
              {"pass", pass}},
         "exact", {}, human.str());
    return kExitOk;
  }
  if (check == "ji-shadow") {
    auto kv = kv_args(rest, {"poset", "map"});
    Poset p = poset_from_source(kv["poset"]);
    SetMapping f = mapping_from_source(kv["map"]);
    JiShadowReport rep = ji_shadow_check(p, f, ctx.budget);
    bool budget_hit = rep.full.status == SearchStatus::Budget ||
                      rep.ji.status == SearchStatus::Budget;
    bool agree = rep.full.status == rep.ji.status;
    std::ostringstream human;
    human << embedding_human("full", rep.full)
          << embedding_human("join-irreducible", rep.ji) << "agree = "
          << (budget_hit ? "undecided" : (agree ? "yes" : "no")) << "\n";
    SearchStats stats;
    stats.nodes = rep.full.stats.nodes + rep.ji.stats.nodes;
    stats.ms = rep.full.stats.ms + rep.ji.stats.ms;
    emit(ctx, "verify",
         json{{"check", check}, {"poset", kv["poset"]}, {"map", kv["map"]}},
         json{{"full", embedding_json(rep.full)},
              {"ji", embedding_json(rep.ji)},
              {"agree", budget_hit ? json() : json(agree)}},
         budget_hit ? "search:budget" : "search-complete", stats, human.str());
    return budget_hit ? kExitBudget : kExitOk;
  }
  throw InvalidArgs("unknown check '" + check +
                    "' (expected dim-eq-suitable, dim-transfer, "
                    "free-reduction, or ji-shadow)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posetlab: finite poset dimension, breadth and free-set lab"};
  app.require_subcommand(1);
  Ctx ctx;
  app.add_flag("--json", ctx.json_out, "machine-readable output");
  app.add_option("--ms", ctx.budget.max_ms, "time budget in ms (0 = none)");
  app.add_option("--nodes", ctx.budget.max_nodes,
                 "search-node budget (0 = none)");

  bool gch = false, ji = false;
  std::vector<std::string> factors;
  auto add = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("args", ctx.args, "arguments");
    return sub;
  };
  add("dim", "exact order dimension of a poset");
  add("width", "width (largest antichain)");
  add("breadth", "breadth via the tuple definition");
  CLI::App* kur_cmd = add("kur", "certified Kuratowski-index interval");
  kur_cmd->add_flag("--gch", gch, "apply the conditional cube upper bound");
  kur_cmd->add_option("--factor", factors,
                      "direct-product factor source (repeatable)");
  add("cube", "summary of a cube/poset source");
  add("relations", "best certified free-set relation: m=<size> r=<order>");
  add("table-e", "minimal-n table of E values: r=<order> nmax=<bound>");
  add("fk", "Furedi-Kahn dimension bound: m=<size> r=<order>");
  add("dushnik", "Dushnik exact dimension: m=<size> k=<parameter>");
  add("spencer", "Spencer exponent and relation: n=<index> r=<order>");
  add("freeset", "search a free set: <mapping source> m=<size>");
  CLI::App* leadsto_cmd =
      add("leadsto", "poset shadow embedding: <poset source> <mapping source>");
  leadsto_cmd->add_flag("--ji", ji, "also run the join-irreducible variant");
  add("config-p", "order-2 configuration search: <mapping source>");
  add("config-q", "stronger configuration search: <mapping source>");
  add("verify", "cross-checks: <check name> key=value...");

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string& name = sub->get_name();
    if (name == "dim") return cmd_dim(ctx);
    if (name == "width") return cmd_width(ctx);
    if (name == "breadth") return cmd_breadth(ctx);
    if (name == "kur") return cmd_kur(ctx, gch, factors);
    if (name == "cube") return cmd_cube(ctx);
    if (name == "relations") return cmd_relations(ctx);
    if (name == "table-e") return cmd_table_e(ctx);
    if (name == "fk") return cmd_fk(ctx);
    if (name == "dushnik") return cmd_dushnik(ctx);
    if (name == "spencer") return cmd_spencer(ctx);
    if (name == "freeset") return cmd_freeset(ctx);
    if (name == "leadsto") return cmd_leadsto(ctx, ji);
    if (name == "config-p") return cmd_config(ctx, false);
    if (name == "config-q") return cmd_config(ctx, true);
    if (name == "verify") return cmd_verify(ctx);
    throw InvalidArgs("unknown subcommand '" + name + "'");
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
