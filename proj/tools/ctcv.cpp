// ctcv: character tables, blocks, p-chains and counting checks for small
// permutation groups.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctc/blocks.hpp"
#include "ctc/chains.hpp"
#include "ctc/char_table.hpp"
#include "ctc/checks.hpp"
#include "ctc/errors.hpp"
#include "ctc/library.hpp"

using namespace ctc;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "ctcv-report/1";

struct JobSpec {
  std::string command;
  std::string group_file, lib;
  std::string ambient_file, ambient_lib;
  unsigned prime = 2;
  std::optional<std::size_t> block;
  bool all_blocks = false;
  std::optional<std::string> start;
  std::optional<unsigned> defect;
  bool max_defect = false;
  std::optional<std::string> mode;
  std::string format = "json";
  std::size_t max_order = Limits{}.max_order;
  std::uint64_t seed = 1;
  std::size_t size = 16;
  bool with_action = false;
};

GroupPtr load(const std::string& file, const std::string& lib, const Limits& limits) {
  return file.empty() ? library_group(lib, limits) : load_group_file(file, limits);
}

Mode parse_mode(const std::string& s) {
  if (s == "strict") return Mode::Strict;
  if (s == "permissive") return Mode::Permissive;
  if (s == "blockfree") return Mode::BlockFree;
  throw InputError("unknown mode: " + s);
}

std::vector<std::size_t> selected_blocks(const JobSpec& job, const LocalContext& ctx) {
  std::size_t n = ctx.top().blocks().size();
  if (job.block) {
    if (*job.block >= n) throw InputError("block index out of range");
    return {*job.block};
  }
  std::vector<std::size_t> all(n);
  for (std::size_t b = 0; b < n; ++b) all[b] = b;
  return all;
}

// ---- text rendering --------------------------------------------------------------

void print_reports_text(std::ostream& os, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    os << r.check;
    if (r.inputs.contains("block")) os << " block=" << r.inputs["block"].dump();
    if (r.inputs.contains("d")) os << " d=" << r.inputs["d"].dump();
    os << ": " << to_string(r.verdict);
    if (r.left && r.right) os << " (" << *r.left << " vs " << *r.right << ")";
    if (!r.note.empty()) os << " - " << r.note;
    os << '\n';
  }
}

void print_table_text(std::ostream& os, const CharTable& t) {
  const Group& g = t.group();
  os << "order " << g.order() << ", " << t.size() << " classes\n";
  os << "class sizes:";
  for (const auto& c : g.classes()) os << ' ' << c.size;
  os << '\n';
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    os << "chi" << chi << ':';
    for (const auto& v : t.row(chi)) os << ' ' << v.to_string();
    os << '\n';
  }
}

void print_blocks_text(std::ostream& os, const BlockSystem& bs) {
  for (const auto& b : bs.blocks()) {
    os << "block " << b.index << (b.principal ? " (principal)" : "") << ": defect " << b.defect
       << ", |D| = " << b.defect_group.order() << ", characters";
    for (auto chi : b.members) os << ' ' << chi << "[" << bs.table().degree(chi) << "]";
    os << '\n';
  }
}

void print_chains_text(std::ostream& os, const CTCSet& set) {
  for (std::size_t i = 0; i < set.orbits.size(); ++i) {
    const auto& o = set.orbits[i];
    os << "orbit " << i << ": length " << o.rep.length() << ", sign " << (o.sign > 0 ? '+' : '-')
       << ", orders";
    for (const auto& t : o.rep.terms) os << ' ' << t.order();
    os << ", |stabilizer| = " << o.stabilizer.order() << ", pairs " << set.pairs_of(i).size() << '\n';
  }
  os << "plus " << set.plus.size() << ", minus " << set.minus.size() << '\n';
}

// ---- commands ----------------------------------------------------------------------

CheckReport pairing_report(const LocalContext& ctx, std::size_t block) {
  PairingWitness w = build_pi_pairing(ctx, block);
  CheckReport r;
  r.check = "pi-pairing";
  r.inputs["block"] = block;
  r.witness = w.to_json();
  if (!w.applicable) {
    r.verdict = Verdict::NotApplicable;
    r.note = w.reason;
    return r;
  }
  r.left = w.set.plus.size() - w.c0.size();
  r.right = w.set.minus.size() - w.c1.size();
  r.verdict = w.ok() ? Verdict::Pass : Verdict::Fail;
  return r;
}

int run_repair_demo(const JobSpec& job) {
  std::mt19937_64 rng(job.seed);
  RepairInstance inst = random_repair_instance(rng, job.size, job.with_action);
  RepairResult res = repair_bijection(inst.input, inst.action ? &*inst.action : nullptr);
  std::string problem = check_repair(inst, res);
  if (job.format == "text") {
    std::cout << "size " << inst.input.omega.size() << ", chases " << res.swap_log.size() << ", longest "
              << res.max_chase << ": " << (problem.empty() ? "pass" : "fail - " + problem) << '\n';
  } else {
    json j;
    j["schema"] = kSchema;
    j["command"] = "repair-demo";
    j["seed"] = job.seed;
    j["with_action"] = job.with_action;
    json pi = json::array();
    for (const auto& y : inst.input.pi) pi.push_back(y ? json(*y) : json(nullptr));
    j["input"] = {{"c0", inst.input.c0}, {"c1", inst.input.c1}, {"omega", inst.input.omega}, {"pi", pi}};
    j["result"] = {{"map", res.map}, {"swap_log", res.swap_log}, {"max_chase", res.max_chase}};
    j["verdict"] = problem.empty() ? "pass" : "fail";
    if (!problem.empty()) j["note"] = problem;
    std::cout << j.dump(2) << '\n';
  }
  return problem.empty() ? 0 : 1;
}

int run(const JobSpec& job) {
  if (job.command == "repair-demo") return run_repair_demo(job);
  if (job.group_file.empty() == job.lib.empty()) throw InputError("give exactly one of --group and --lib");
  if (!job.ambient_file.empty() && !job.ambient_lib.empty())
    throw InputError("give at most one of --ambient and --ambient-lib");
  if (job.max_order == 0) throw InputError("--max-order must be positive");

  Limits limits;
  limits.max_order = job.max_order;
  GroupPtr g = load(job.group_file, job.lib, limits);
  GroupPtr ambient;
  if (!job.ambient_file.empty() || !job.ambient_lib.empty())
    ambient = load(job.ambient_file, job.ambient_lib, limits);

  json bundle;
  bundle["schema"] = kSchema;
  bundle["command"] = job.command;
  bundle["group"] = job.lib.empty() ? json{{"file", job.group_file}} : json{{"lib", job.lib}};

  if (job.command == "table") {
    auto t = character_table(g);
    if (job.format == "text") {
      print_table_text(std::cout, *t);
    } else {
      bundle["environment"] = {{"group_order", g->order()}, {"degree", g->degree()}, {"lift_prime", t->lift_prime()}};
      bundle["result"] = t->to_json();
      std::cout << bundle.dump(2) << '\n';
    }
    return 0;
  }

  LocalContext ctx(g, job.prime, limits);
  const Group& G = ctx.group();
  json env = ctx.environment();
  env["prime"] = job.prime;
  env["ceilings"] = {{"max_order", limits.max_order}, {"max_subgroup_classes", limits.max_subgroup_classes}};
  if (job.mode) env["mode"] = *job.mode;
  bundle["environment"] = env;

  auto start_or = [&](const char* fallback) {
    return parse_subgroup_spec(job.start.value_or(fallback), G, job.prime, limits);
  };

  if (job.command == "blocks") {
    if (job.format == "text") print_blocks_text(std::cout, ctx.top());
    else {
      bundle["result"] = ctx.top().to_json();
      std::cout << bundle.dump(2) << '\n';
    }
    return 0;
  }

  if (job.command == "chains") {
    Subgroup z = start_or("Op");
    unsigned d;
    CTCSet set;
    if (job.all_blocks || !job.block) {
      d = job.defect ? *job.defect : log_p(p_part(G.order(), job.prime), job.prime);
      set = build_ctc_set(ctx, std::optional<std::size_t>{}, z, d);
    } else {
      if (*job.block >= ctx.top().blocks().size()) throw InputError("block index out of range");
      d = job.defect ? *job.defect : ctx.top().block(*job.block).defect;
      set = build_ctc_set(ctx, job.block, z, d);
    }
    if (job.format == "text") print_chains_text(std::cout, set);
    else {
      bundle["result"] = ctc_set_json(ctx, set);
      std::cout << bundle.dump(2) << '\n';
    }
    return 0;
  }

  std::vector<CheckReport> reports;
  if (job.command == "verify-ctc") {
    Mode mode = parse_mode(job.mode.value_or(job.block ? "permissive" : "strict"));
    if (mode == Mode::BlockFree) {
      reports.push_back(verify_blockfree(ctx, start_or("trivial")));
    } else if (!job.block && !job.defect && !job.start && !job.mode) {
      reports = verify_max_defect_mode(ctx, ambient.get());
    } else {
      Subgroup z = start_or("Op");
      for (auto b : selected_blocks(job, ctx)) {
        unsigned d = job.defect && !job.max_defect ? *job.defect : ctx.top().block(b).defect;
        reports.push_back(verify_ctc_count(ctx, b, z, d, mode, ambient.get()));
      }
    }
  } else if (job.command == "verify-am") {
    for (auto b : selected_blocks(job, ctx)) reports.push_back(verify_am_count(ctx, b));
  } else if (job.command == "verify-abelian-defect") {
    auto all = verify_abelian_defect(ctx);
    for (auto b : selected_blocks(job, ctx)) reports.push_back(all[b]);
  } else if (job.command == "verify-blockfree") {
    reports.push_back(verify_blockfree(ctx, start_or("trivial")));
  } else if (job.command == "defect-scan") {
    reports.push_back(defect_support_scan(ctx, start_or("trivial")));
  } else if (job.command == "pi-pairing") {
    for (auto b : selected_blocks(job, ctx)) reports.push_back(pairing_report(ctx, b));
  } else {
    throw InputError("unknown command: " + job.command);
  }

  if (job.format == "text") {
    print_reports_text(std::cout, reports);
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    bundle["reports"] = arr;
    std::cout << bundle.dump(2) << '\n';
  }
  return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ctcv: exact checks of block and chain counting identities for finite permutation groups"};
  JobSpec job;
  app.add_option("command", job.command, "table | blocks | chains | verify-ctc | verify-am | verify-abelian-defect | "
                                         "verify-blockfree | defect-scan | pi-pairing | repair-demo")
      ->required()
      ->check(CLI::IsMember({"table", "blocks", "chains", "verify-ctc", "verify-am", "verify-abelian-defect",
                             "verify-blockfree", "defect-scan", "pi-pairing", "repair-demo"}));
  app.add_option("--group", job.group_file, "group file");
  app.add_option("--lib", job.lib, "library group name, e.g. A5, D8, SL23, S3xC2");
  app.add_option("--prime", job.prime, "the prime p")->check(CLI::PositiveNumber);
  app.add_option("--ambient", job.ambient_file, "overgroup file, same degree, normalizing G");
  app.add_option("--ambient-lib", job.ambient_lib, "overgroup from the library");
  auto* block = app.add_option("--block", job.block, "block index");
  auto* all = app.add_flag("--all-blocks", job.all_blocks, "every block");
  block->excludes(all);
  app.add_option("--start", job.start, "start subgroup: trivial | Op | center | sylow | gens:(..);(..)");
  auto* defect = app.add_option("--defect", job.defect, "defect d");
  auto* maxd = app.add_flag("--max-defect", job.max_defect, "d = d(B)");
  defect->excludes(maxd);
  app.add_option("--mode", job.mode, "strict | permissive | blockfree")
      ->check(CLI::IsMember({"strict", "permissive", "blockfree"}));
  app.add_option("--format", job.format, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-order", job.max_order, "group order ceiling");
  app.add_option("--seed", job.seed, "repair-demo seed");
  app.add_option("--size", job.size, "repair-demo instance size");
  app.add_flag("--with-action", job.with_action, "repair-demo with a C2 action");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run(job);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
