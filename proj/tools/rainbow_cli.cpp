#include "rainbow/exact.hpp"
#include "rainbow/latin.hpp"
#include "rainbow/report_json.hpp"
#include "rainbow/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using nlohmann::json;
using namespace rainbow;

namespace {

// exit codes: 0 ok, 1 theorem-bound violation, 2 input error, 3 budget exhausted
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << content;
}

// "A..B" or "A"
std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed range: " + s);
  }
}

std::string fmt_bound(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s (%.4f)", r.str().c_str(), r.to_double());
  return buf;
}

SearchLimits make_limits(int max_n, long long budget_nodes, long long budget_ms) {
  SearchLimits limits;
  limits.max_n = max_n;
  if (budget_nodes > 0) limits.node_budget = budget_nodes;
  if (budget_ms > 0) limits.time_budget_ms = budget_ms;
  return limits;
}

struct Instance {
  std::string id;
  ColoredGraph g;
};

ColoredGraph build_family(const std::string& family, int n, std::uint64_t seed) {
  if (family == "mm") {
    int m = 0;
    while ((1 << m) < n) ++m;
    if ((1 << m) != n)
      throw std::invalid_argument("mm needs a power-of-two n, got " + std::to_string(n));
    return mm_coloring(m);
  }
  if (family == "roundrobin") return round_robin_coloring(n);
  if (family == "random") return random_proper_coloring(n, seed);
  throw std::invalid_argument("unknown family: " + family);
}

std::vector<Instance> sweep_instances(const std::string& family, int n_lo, int n_hi, int trials,
                                      std::uint64_t seed_base) {
  std::vector<Instance> out;
  if (family == "random") {
    int span = n_hi - n_lo + 1;
    for (int i = 0; i < trials; ++i) {
      int n = n_lo + (i % span);
      std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
      out.push_back({"random-n" + std::to_string(n) + "-s" + std::to_string(seed),
                     random_proper_coloring(n, seed)});
    }
  } else if (family == "roundrobin") {
    for (int n = n_lo + (n_lo % 2); n <= n_hi; n += 2)
      if (n >= 2) out.push_back({"roundrobin-n" + std::to_string(n), round_robin_coloring(n)});
  } else if (family == "mm") {
    for (int m = 2; (1 << m) <= n_hi; ++m)
      if ((1 << m) >= n_lo) out.push_back({"mm-m" + std::to_string(m), mm_coloring(m)});
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  if (out.empty()) throw std::invalid_argument("empty instance sweep");
  return out;
}

// ---- gen ----

int cmd_gen(const std::string& family, int m, int n, std::uint64_t seed, const std::string& out,
            int max_n) {
  ColoredGraph g = [&] {
    if (family == "mm") {
      if (m <= 0) throw std::invalid_argument("gen mm needs --m");
      return mm_coloring(m, max_n);
    }
    if (family == "roundrobin") {
      if (n <= 0) throw std::invalid_argument("gen roundrobin needs --n");
      return round_robin_coloring(n, max_n);
    }
    if (family == "random") {
      if (n <= 0) throw std::invalid_argument("gen random needs --n");
      return random_proper_coloring(n, seed, max_n);
    }
    throw std::invalid_argument("unknown family: " + family);
  }();
  spill(out, write_coloring(g));
  std::ostream& info = (out == "-") ? std::cerr : std::cout;
  info << "palette " << g.palette_size() << "\n";
  return kExitOk;
}

// ---- solve ----

int cmd_solve(const std::string& in, int k, const std::string& method, int start, int max_n,
              long long budget_nodes, long long budget_ms, bool allow_partial, bool parallel) {
  ColoredGraph g = read_coloring(slurp(in));
  if (start < 0 || start >= g.n()) throw std::invalid_argument("start vertex out of range");

  if (method == "ladder") {
    auto reports = ladder(g, k);
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    std::cout << arr.dump(2) << "\n";
    return kExitOk;
  }

  SolveReport rep = [&] {
    if (method == "greedy") return greedy_extend(g, start, k);
    if (method == "maximalize") return maximalize(g, Path(g, {start}), k);
    if (method == "naive") return naive_recursive(g, k, start);
    if (method == "exact") {
      SearchLimits limits = make_limits(max_n, budget_nodes, budget_ms);
      limits.parallel = parallel;
      return max_k_rainbow_path_exact(g, k, limits);
    }
    throw std::invalid_argument("unknown method: " + method);
  }();

  std::cout << report_to_json(rep).dump(2) << "\n";
  if (method == "exact" && !rep.exhaustive && !allow_partial) {
    std::cerr << "search budget exhausted before the optimum was proved "
                 "(pass --allow-partial to accept the best found)\n";
    return kExitBudget;
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyTable {
  int pass = 0;
  int fail = 0;

  void row(const std::string& id, const std::string& measured, const std::string& bound,
           bool ok) {
    std::printf("%-28s %14s  %20s  %s\n", id.c_str(), measured.c_str(), bound.c_str(),
                ok ? "pass" : "FAIL");
    (ok ? pass : fail) += 1;
  }

  int finish(const std::string& name) {
    std::printf("verify %s: %d/%d pass\n", name.c_str(), pass, pass + fail);
    return fail == 0 ? kExitOk : kExitViolation;
  }
};

int cmd_verify(const std::string& bound_name, const std::string& family,
               const std::string& n_range, const std::string& m_range, const std::string& k_range,
               int t, int trials, std::uint64_t seed_base) {
  VerifyTable table;
  auto [n_lo, n_hi] = parse_range(n_range);
  auto [k_lo, k_hi] = parse_range(k_range);
  if (k_lo < 1) throw std::invalid_argument("k range must start at 1 or above");

  if (bound_name == "gm") {
    for (const auto& inst : sweep_instances(family, n_lo, n_hi, trials, seed_base)) {
      SolveReport r = maximalize(inst.g, Path(inst.g, {0}), 1);
      Rational bound(2 * inst.g.n() + 1, 3);
      table.row(inst.id, std::to_string(r.path.size()), fmt_bound(bound),
                Rational(r.path.size()) >= bound);
    }
  } else if (bound_name == "half") {
    for (const auto& inst : sweep_instances(family, n_lo, n_hi, trials, seed_base)) {
      int worst = inst.g.n();
      for (int s = 0; s < inst.g.n(); ++s)
        worst = std::min(worst, greedy_extend(inst.g, s, 1).path.size());
      Rational bound(inst.g.n() + 1, 2);
      table.row(inst.id, std::to_string(worst), fmt_bound(bound), Rational(worst) >= bound);
    }
  } else if (bound_name == "kfact") {
    for (const auto& inst : sweep_instances(family, n_lo, n_hi, trials, seed_base)) {
      auto reports = ladder(inst.g, k_hi);
      for (int k = k_lo; k <= k_hi; ++k) {
        long long fact = checked_factorial(k + 2);
        Rational bound = Rational(fact - 2, fact) * Rational(inst.g.n());
        int tk = reports[static_cast<std::size_t>(k) - 1].path.size();
        table.row(inst.id + "-k" + std::to_string(k), std::to_string(tk), fmt_bound(bound),
                  Rational(tk) >= bound);
      }
    }
  } else if (bound_name == "lemma2") {
    for (const auto& inst : sweep_instances(family, n_lo, n_hi, trials, seed_base)) {
      for (int k = k_lo; k <= k_hi; ++k) {
        SolveReport r = maximalize(inst.g, Path(inst.g, {0}), k);
        long long bound = static_cast<long long>(k + 1) * (inst.g.n() - r.path.size());
        table.row(inst.id + "-k" + std::to_string(k), std::to_string(r.c_k_size),
                  fmt_bound(Rational(bound)), r.c_k_size >= bound);
      }
    }
  } else if (bound_name == "counting") {
    Rng rng(seed_base);
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<int> subset;
      for (int i = 1; i <= t; ++i)
        if (rng.coin()) subset.push_back(i);
      for (int k = k_lo; k <= k_hi; ++k) {
        long long count = count_without_k_successor(subset, k, t);
        Rational bound = Rational(1) + Rational(t, k);
        table.row("subset-" + std::to_string(trial) + "-k" + std::to_string(k),
                  std::to_string(count), fmt_bound(bound), Rational(count) <= bound);
      }
    }
  } else if (bound_name == "mm") {
    auto [m_lo, m_hi] = parse_range(m_range);
    for (int m = m_lo; m <= m_hi; ++m) {
      ColoredGraph g = mm_coloring(m);
      auto res = has_hamiltonian_rainbow_path(g);
      const char* outcome = res.outcome == HamOutcome::exists       ? "exists"
                            : res.outcome == HamOutcome::not_exists ? "not_exists"
                                                                    : "budget_exhausted";
      table.row("mm-m" + std::to_string(m), outcome, "not_exists",
                res.outcome == HamOutcome::not_exists);
    }
  } else {
    throw std::invalid_argument("unknown bound: " + bound_name +
                                " (gm|half|kfact|lemma2|counting|mm)");
  }
  return table.finish(bound_name);
}

// ---- analyze ----

int cmd_analyze(const std::string& in, const std::string& path_file, const std::string& epsilon,
                int a, int t) {
  ColoredGraph g = read_coloring(slurp(in));
  auto [vertices, k] = path_from_json(json::parse(slurp(path_file)));
  Path p(g, vertices);
  if (!is_k_rainbow(p, 1)) throw std::invalid_argument("path is not rainbow");
  Rational eps = Rational::parse(epsilon);
  if (t <= 0) t = p.size();

  auto a_set = compute_A(p);
  auto b_set = compute_B(p);
  std::vector<int> ab;
  std::set_intersection(a_set.begin(), a_set.end(), b_set.begin(), b_set.end(),
                        std::back_inserter(ab));
  auto r_set = compute_R(p, a);

  json out{{"n", g.n()},
           {"length", p.size()},
           {"A", a_set},
           {"B", b_set},
           {"A_size", a_set.size()},
           {"B_size", b_set.size()},
           {"AB_size", ab.size()},
           {"R", r_set},
           {"R_size", r_set.size()},
           {"gamma_new_start", new_neighborhood(p, p.start()).size()},
           {"gamma_new_end", new_neighborhood(p, p.end()).size()},
           {"nice", is_nice(p, t, eps, a)},
           {"epsilon", {{"num", eps.num()}, {"den", eps.den()}}},
           {"a", a},
           {"t", t},
           {"certificate", certificate_to_json(maximality_certificate(p, std::max(1, k)))}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

// ---- latin ----

int cmd_latin(const std::string& sub, const std::string& in, const std::string& out, int max_n,
              long long budget_nodes, long long budget_ms) {
  SearchLimits limits = make_limits(max_n, budget_nodes, budget_ms);

  if (sub == "validate") {
    LatinSquare sq = read_latin(slurp(in));
    if (auto v = validate_latin(sq)) {
      // 1-based row/column rendering at the I/O boundary
      std::cout << "violation (" << (v->kind == LatinViolation::Kind::row ? "row " : "column ")
                << (v->index + 1) << ", value " << v->value << ")\n";
      return kExitInput;
    }
    std::cout << "ok\n";
    return kExitOk;
  }
  if (sub == "from-coloring") {
    ColoredGraph g = read_coloring(slurp(in));
    RelabelResult rel = relabel_palette(g);
    bool identity = true;
    for (auto [from, to] : rel.mapping) identity = identity && from == to;
    if (!identity) {
      json mapping = json::array();
      for (auto [from, to] : rel.mapping) mapping.push_back({{"from", from}, {"to", to}});
      std::cerr << json{{"palette_relabeled", mapping}}.dump() << "\n";
    }
    spill(out, write_latin(coloring_to_latin(rel.graph)));
    return kExitOk;
  }
  if (sub == "to-coloring") {
    spill(out, write_coloring(latin_to_coloring(read_latin(slurp(in)))));
    return kExitOk;
  }
  if (sub == "transversal") {
    LatinSquare sq = read_latin(slurp(in));
    TransversalResult res = find_transversal(sq, limits);
    if (res.status == SearchStatus::budget_exhausted) {
      std::cerr << "transversal search budget exhausted\n";
      return kExitBudget;
    }
    if (res.status == SearchStatus::none) {
      std::cout << "none\n";
      return kExitOk;
    }
    std::cout << transversal_to_json(sq, *res.transversal).dump(2) << "\n";
    return kExitOk;
  }
  if (sub == "partial") {
    LatinSquare sq = read_latin(slurp(in));
    PartialTransversalResult res = max_partial_transversal(sq, limits);
    json j = transversal_to_json(sq, res.transversal);
    j["size"] = res.transversal.size();
    j["exhaustive"] = res.exhaustive;
    std::cout << j.dump(2) << "\n";
    return res.exhaustive ? kExitOk : kExitBudget;
  }
  throw std::invalid_argument("unknown latin subcommand: " + sub);
}

// ---- experiment ----

int cmd_experiment(const std::string& spec_path, const std::string& out,
                   const std::string& format_flag) {
  json spec = json::parse(slurp(spec_path));
  if (!spec.is_object()) throw std::invalid_argument("experiment spec must be a JSON object");

  std::string family = spec.value("family", "random");
  auto get_list = [&](const char* key) {
    std::vector<long long> vals;
    if (spec.contains(key))
      for (const auto& v : spec[key]) vals.push_back(v.get<long long>());
    return vals;
  };
  std::vector<long long> ns = get_list("n");
  std::vector<long long> seeds = get_list("seeds");
  std::vector<long long> ks = get_list("k");
  std::vector<std::string> methods;
  if (spec.contains("methods"))
    for (const auto& m : spec["methods"]) methods.push_back(m.get<std::string>());

  if (ns.empty()) throw std::invalid_argument("spec has an empty n list");
  if (ks.empty()) ks = {1};
  if (methods.empty()) throw std::invalid_argument("spec has an empty method list");
  if (family != "random")
    seeds = {0};  // mm and roundrobin are deterministic per n
  else if (seeds.empty())
    throw std::invalid_argument("spec has an empty seed list");

  for (const auto& m : methods)
    if (m != "greedy" && m != "maximalize" && m != "ladder" && m != "naive" && m != "exact")
      throw std::invalid_argument("unknown method in spec: " + m);

  std::string format = format_flag.empty() ? spec.value("format", "csv") : format_flag;
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format must be csv or json");

  SearchLimits limits = make_limits(spec.value("max_n", 11), spec.value("budget_nodes", 0LL),
                                    spec.value("budget_ms", 0LL));

  std::ostringstream csv;
  csv << "family,n,seed,k,method,length,bound_num,bound_den,ratio,exhaustive,runtime_ms\n";
  json rows = json::array();

  for (long long n : ns) {
    for (long long seed : seeds) {
      ColoredGraph g =
          build_family(family, static_cast<int>(n), static_cast<std::uint64_t>(seed));
      for (long long k : ks) {
        for (const auto& method : methods) {
          auto t0 = std::chrono::steady_clock::now();
          SolveReport rep = [&]() -> SolveReport {
            int kk = static_cast<int>(k);
            if (method == "greedy") return greedy_extend(g, 0, kk);
            if (method == "maximalize") return maximalize(g, Path(g, {0}), kk);
            if (method == "ladder") return ladder(g, kk).back();
            if (method == "naive") return naive_recursive(g, kk, 0);
            return max_k_rainbow_path_exact(g, kk, limits);
          }();
          double ms =
              std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
          double ratio = static_cast<double>(rep.path.size()) / static_cast<double>(g.n());
          char ratio_buf[32];
          std::snprintf(ratio_buf, sizeof(ratio_buf), "%.6f", ratio);

          csv << family << "," << n << "," << seed << "," << k << "," << method << ","
              << rep.path.size() << "," << rep.guaranteed_bound.num() << ","
              << rep.guaranteed_bound.den() << "," << ratio_buf << ","
              << (rep.exhaustive ? "true" : "false") << "," << ms << "\n";
          rows.push_back(
              {{"family", family},
               {"n", n},
               {"seed", seed},
               {"k", k},
               {"method", method},
               {"length", rep.path.size()},
               {"bound", {{"num", rep.guaranteed_bound.num()}, {"den", rep.guaranteed_bound.den()}}},
               {"ratio", ratio},
               {"exhaustive", rep.exhaustive},
               {"runtime_ms", ms}});
        }
      }
    }
  }

  spill(out, format == "csv" ? csv.str() : rows.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"properly edge-colored complete graphs: rainbow path solvers, exact oracles "
               "and Latin square tooling"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a coloring file");
  std::string gen_family;
  int gen_m = 0, gen_n = 0, gen_max_n = kDefaultSizeCap;
  std::uint64_t gen_seed = 0;
  std::string gen_out = "-";
  gen->add_option("family", gen_family, "mm | roundrobin | random")->required();
  gen->add_option("--m", gen_m, "exponent for mm (n = 2^m)");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--seed", gen_seed, "seed for random");
  gen->add_option("--out", gen_out, "output path, - for stdout");
  gen->add_option("--max-n", gen_max_n, "size cap");

  // solve
  auto* solve = app.add_subcommand("solve", "run a solver on a coloring");
  std::string solve_in = "-", solve_method;
  int solve_k = 1, solve_start = 0, solve_max_n = 11;
  long long solve_bnodes = 0, solve_bms = 0;
  bool solve_partial = false, solve_parallel = false;
  solve->add_option("--in", solve_in, "coloring file, - for stdin");
  solve->add_option("--k", solve_k, "multiplicity bound (k_max for ladder)");
  solve->add_option("--method", solve_method, "greedy | maximalize | ladder | naive | exact")
      ->required();
  solve->add_option("--start", solve_start, "start vertex");
  solve->add_option("--max-n", solve_max_n, "exhaustive-search size cap (exact)");
  solve->add_option("--budget-nodes", solve_bnodes, "node budget (exact)");
  solve->add_option("--budget-ms", solve_bms, "time budget in ms (exact)");
  solve->add_flag("--allow-partial", solve_partial, "accept a budget-truncated exact result");
  solve->add_flag("--parallel", solve_parallel, "split the exact search across threads");

  // verify
  auto* verify = app.add_subcommand("verify", "check a proved bound over an instance sweep");
  std::string verify_bound, verify_family = "random", verify_n = "10..40", verify_m = "2..3",
                            verify_k = "1..4";
  int verify_t = 60, verify_trials = 20;
  std::uint64_t verify_seed = 1000;
  verify->add_option("bound", verify_bound, "gm | half | kfact | lemma2 | counting | mm")
      ->required();
  verify->add_option("--family", verify_family, "mm | roundrobin | random");
  verify->add_option("--n", verify_n, "n range, e.g. 30..60");
  verify->add_option("--m", verify_m, "m range for mm");
  verify->add_option("--k", verify_k, "k range");
  verify->add_option("--t", verify_t, "path length for counting");
  verify->add_option("--trials", verify_trials, "instances per sweep");
  verify->add_option("--seed", verify_seed, "base seed");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "structural diagnostics for a rainbow path");
  std::string an_in = "-", an_path, an_eps = "1";
  int an_a = 0, an_t = 0;
  analyze->add_option("--in", an_in, "coloring file, - for stdin");
  analyze->add_option("--path", an_path, "path JSON file")->required();
  analyze->add_option("--epsilon", an_eps, "rational, e.g. 1/2");
  analyze->add_option("--a", an_a, "new-neighbor threshold");
  analyze->add_option("--t", an_t, "reference path length (default: the path's)");

  // latin
  auto* latin = app.add_subcommand("latin", "Latin square tooling");
  std::string lat_sub, lat_in = "-", lat_out = "-";
  int lat_max_n = 9;
  long long lat_bnodes = 0, lat_bms = 0;
  latin
      ->add_option("sub", lat_sub,
                   "validate | from-coloring | to-coloring | transversal | partial")
      ->required();
  latin->add_option("--in", lat_in, "input file, - for stdin");
  latin->add_option("--out", lat_out, "output path, - for stdout");
  latin->add_option("--max-n", lat_max_n, "exhaustive-search order cap");
  latin->add_option("--budget-nodes", lat_bnodes, "node budget");
  latin->add_option("--budget-ms", lat_bms, "time budget in ms");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "sweep solvers over an instance family");
  std::string exp_spec, exp_out = "-", exp_format;
  experiment->add_option("--spec", exp_spec, "experiment spec JSON")->required();
  experiment->add_option("--out", exp_out, "output path, - for stdout");
  experiment->add_option("--format", exp_format, "csv | json (overrides the spec)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) return cmd_gen(gen_family, gen_m, gen_n, gen_seed, gen_out, gen_max_n);
    if (*solve)
      return cmd_solve(solve_in, solve_k, solve_method, solve_start, solve_max_n, solve_bnodes,
                       solve_bms, solve_partial, solve_parallel);
    if (*verify)
      return cmd_verify(verify_bound, verify_family, verify_n, verify_m, verify_k, verify_t,
                        verify_trials, verify_seed);
    if (*analyze) return cmd_analyze(an_in, an_path, an_eps, an_a, an_t);
    if (*latin) return cmd_latin(lat_sub, lat_in, lat_out, lat_max_n, lat_bnodes, lat_bms);
    if (*experiment) return cmd_experiment(exp_spec, exp_out, exp_format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    // a failed internal theorem check signals an implementation bug
    std::cerr << "bound violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
