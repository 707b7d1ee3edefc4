#include "rtvd/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rtvd/alpha_kernel.hpp"
#include "rtvd/alt_solver.hpp"
#include "rtvd/bounded_core.hpp"
#include "rtvd/generators.hpp"
#include "rtvd/hitting.hpp"
#include "rtvd/instance_io.hpp"

namespace rtvd::cli {

namespace {

// Maps the library's exception types onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapExceededError& e) {
    err << "error: resource cap: " << e.what() << '\n';
    return kExitCap;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid argument: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
}

std::string join_ids(const std::vector<Vertex>& ids) {
  std::string s;
  for (Vertex v : ids) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v + 1);
  }
  return s;
}

std::string join_arcs(const std::vector<Arc>& arcs) {
  std::string s;
  for (const Arc& a : arcs) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) + ")";
  }
  return s;
}

struct Outcome {
  bool yes = false;
  std::optional<Solution> solution;  // witness when yes, minimum when known
};

// Sum of C(n, r) for r <= cap, the number of retained sets the bounded-core
// search may visit.
double retained_candidates(int n, int cap) {
  double total = 0;
  double term = 1;
  for (int r = 0; r <= std::min(n, cap); ++r) {
    total += term;
    term = term * (n - r) / (r + 1);
  }
  return total;
}

constexpr double kAutoAlphaBudget = 1 << 22;

Outcome from_minimum(Solution sol, const Instance& inst) {
  Outcome out;
  out.yes = static_cast<int>(sol.size()) <= inst.k;
  out.solution = std::move(sol);
  return out;
}

Outcome run_engine(const std::string& engine, const Instance& inst, const SolveOptions& opts) {
  const Digraph& d = inst.digraph;
  if (engine == "oracle") {
    Decision dec = decide_rtvd_oracle(inst, opts.oracle_cap);
    return Outcome{dec.yes, std::move(dec.witness)};
  }
  if (engine == "tournament") return from_minimum(solve_tournament(d, inst.ell), inst);
  if (engine == "alt") return from_minimum(min_rtvd_alt(d, inst.ell), inst);
  if (engine == "alpha") {
    const bool computable = d.num_vertices() <= kDefaultIndependenceCap;
    int alpha = opts.alpha ? *opts.alpha : std::max(1, independence_number(d));
    return from_minimum(solve_alpha_bounded(d, alpha, inst.ell, {computable}), inst);
  }
  if (engine == "hitting") {
    if (inst.ell != 0) throw PreconditionError("hitting engine handles ell = 0 only");
    auto sol = tvd_in_tournament(d, inst.k);
    return Outcome{sol.has_value(), std::move(sol)};
  }
  throw std::invalid_argument("unknown engine '" + engine + "'");
}

void print_report(std::ostream& out, const std::string& status, const std::string& engine, const Instance& inst,
                  const std::optional<Solution>& sol, bool yes, double elapsed_ms) {
  out << "status: " << status << '\n';
  out << "engine: " << engine << '\n';
  out << "n: " << inst.digraph.num_vertices() << '\n';
  out << "m: " << inst.digraph.num_arcs() << '\n';
  out << "k: " << inst.k << '\n';
  out << "ell: " << inst.ell << '\n';
  if (sol && !yes) out << "optimum: " << sol->size() << '\n';
  if (sol && yes) {
    out << "size: " << sol->size() << '\n';
    out << "remaining: " << sol->remaining_transitive.size() << '\n';
    out << "transitive: " << join_arcs(sol->remaining_transitive) << '\n';
  }
  out << "elapsed_ms: " << std::fixed << std::setprecision(3) << elapsed_ms << '\n';
  out << "deleted: " << (sol && yes ? join_ids(sol->deleted) : "") << '\n';
}

std::vector<Vertex> parse_id_list(const std::string& text) {
  std::vector<Vertex> ids;
  std::string s = text;
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || used == 0) throw ParseError(1, "bad vertex id '" + tok + "'");
    ids.push_back(static_cast<Vertex>(v - 1));
  }
  return ids;
}

Instance with_overrides(Instance inst, std::optional<int> k, std::optional<int> ell) {
  if (k) inst.k = *k;
  if (ell) inst.ell = *ell;
  inst.validate();
  return inst;
}

}  // namespace

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = with_overrides(read_instance_file(opts.path).instance, opts.k, opts.ell);
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    std::vector<std::string> plan;
    if (opts.engine == "auto") {
      const Digraph& d = inst.digraph;
      if (is_tournament(d)) plan.push_back("tournament");
      plan.push_back("alt");
      if (inst.ell == 0 && (is_in_tournament(d) || is_out_tournament(d))) plan.push_back("hitting");
      if (d.num_vertices() <= kDefaultIndependenceCap) {
        int alpha = independence_number(d);
        int cap = alpha_retain_cap(std::max(alpha, 1), inst.ell).cap;
        if (retained_candidates(d.num_vertices(), cap) <= kAutoAlphaBudget) plan.push_back("alpha");
      }
      plan.push_back("oracle");
    } else {
      plan.push_back(opts.engine);
    }

    for (const std::string& engine : plan) {
      Outcome outcome;
      try {
        outcome = run_engine(engine, inst, opts);
      } catch (const PreconditionError& e) {
        if (opts.engine != "auto") throw;
        out << "note: " << engine << ": " << e.what() << '\n';
        continue;
      } catch (const CapExceededError& e) {
        if (opts.engine != "auto") throw;
        out << "note: " << engine << ": " << e.what() << '\n';
        continue;
      }
      if (outcome.yes) {
        Verification check = verify_solution(inst, outcome.solution->deleted);
        if (!check.ok) throw std::logic_error("engine " + engine + " returned an infeasible solution");
      }
      print_report(out, outcome.yes ? "YES" : "NO", engine, inst, outcome.solution, outcome.yes, elapsed());
      return outcome.yes ? kExitYes : kExitNo;
    }
    out << "note: no exact engine applies within the configured caps; the problem is NP-hard on general "
           "digraphs\n";
    print_report(out, "UNKNOWN", "none", inst, std::nullopt, false, elapsed());
    return kExitCap;
  });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = with_overrides(read_instance_file(opts.path).instance, opts.k, opts.ell);
    std::vector<Vertex> ids = parse_id_list(opts.solution);
    Verification v = verify_solution(inst, ids);
    std::sort(ids.begin(), ids.end());
    out << "status: " << (v.ok ? "YES" : "NO") << '\n';
    out << "size: " << ids.size() << '\n';
    out << "k: " << inst.k << '\n';
    out << "ell: " << inst.ell << '\n';
    out << "remaining: " << v.remaining_transitive.size() << '\n';
    out << "transitive: " << join_arcs(v.remaining_transitive) << '\n';
    out << "deleted: " << join_ids(ids) << '\n';
    return v.ok ? kExitYes : kExitNo;
  });
}

int cmd_kernelize(const KernelizeOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = read_instance_file(opts.path).instance;
    std::unique_ptr<CutPreservingProvider> provider;
    if (opts.provider == "trivial") {
      provider = std::make_unique<WholeGraphProvider>();
    } else if (opts.provider == "flow") {
      provider = std::make_unique<FlowPathProvider>();
    } else {
      throw std::invalid_argument("unknown provider '" + opts.provider + "'");
    }
    AlphaKernel kernel = assemble_kernel(inst.digraph, inst.k, inst.ell, *provider);
    if (kernel.no_instance) {
      out << "status: NO\n";
      out << "packed: " << kernel.stats.packed << '\n';
      return kExitNo;
    }
    std::vector<std::string> comments = {
        "kernel provider " + opts.provider,
        "packed " + std::to_string(kernel.stats.packed),
        "one-point " + std::to_string(kernel.stats.one_point),
        "two-point " + std::to_string(kernel.stats.two_point),
        "catalog-vertices " + std::to_string(kernel.stats.catalog_vertices),
        "kept " + join_ids(kernel.kept),
    };
    write_instance(out, kernel.instance, comments);
    return kExitYes;
  });
}

int cmd_reduce(const ReduceOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::istringstream in(read_text_file(opts.path));
    if (opts.from == "vc") {
      UndirectedGraph g = read_graph(in);
      Instance inst = vc_to_rtvd(g, opts.k, opts.ell);
      inst.validate();
      write_instance(out, inst,
                     {"reduction vertex-cover", "source " + opts.path,
                      "source-n " + std::to_string(g.n) + " source-m " + std::to_string(g.edges.size()),
                      "k " + std::to_string(opts.k) + " ell " + std::to_string(opts.ell)});
      return kExitYes;
    }
    if (opts.from == "multicut") {
      MulticutInstance mc = read_multicut(in);
      mc.k = opts.k;
      Instance inst = multicut_to_tvd(mc);
      inst.validate();
      write_instance(out, inst,
                     {"reduction multicut", "source " + opts.path,
                      "source-n " + std::to_string(mc.dag.num_vertices()) + " terminals " +
                          std::to_string(mc.terminals.size()),
                      "k " + std::to_string(opts.k)});
      return kExitYes;
    }
    throw std::invalid_argument("unknown reduction source '" + opts.from + "'");
  });
}

int cmd_generate(const GenerateOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Digraph d;
    std::string detail = "n " + std::to_string(opts.n) + " seed " + std::to_string(opts.seed);
    if (opts.graph_class == "tournament") {
      d = gen_tournament(opts.n, opts.seed);
    } else if (opts.graph_class == "alt") {
      ReachFunction reach;
      if (!opts.reach.empty()) {
        for (Vertex r : parse_id_list(opts.reach)) reach.r.push_back(r);
        detail = "reach " + opts.reach;
      } else {
        reach = random_reach_function(opts.n, opts.width, opts.seed);
        detail += " width " + std::to_string(opts.width);
      }
      d = gen_acyclic_local_tournament(reach);
    } else if (opts.graph_class == "in" || opts.graph_class == "out") {
      LocalTournamentOptions lo;
      lo.p = opts.p;
      lo.max_width = opts.width;
      if (opts.mode == "rejection") {
        lo.mode = LocalMode::kRejection;
      } else if (opts.mode == "structured") {
        lo.mode = LocalMode::kStructured;
      } else if (opts.mode == "thinned") {
        lo.mode = LocalMode::kThinned;
      } else {
        throw std::invalid_argument("unknown mode '" + opts.mode + "'");
      }
      d = opts.graph_class == "in" ? gen_in_tournament(opts.n, opts.seed, lo)
                                   : gen_out_tournament(opts.n, opts.seed, lo);
      detail += " mode " + opts.mode + " p " + std::to_string(opts.p);
    } else if (opts.graph_class == "dag") {
      d = gen_dag(opts.n, opts.p, opts.seed);
      detail += " p " + std::to_string(opts.p);
    } else {
      throw std::invalid_argument("unknown class '" + opts.graph_class + "'");
    }
    Instance inst{std::move(d), opts.k, opts.ell};
    inst.validate();
    write_instance(out, inst, {"generated " + opts.graph_class + " " + detail});
    return kExitYes;
  });
}

int cmd_recognize(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = read_instance_file(path).instance;
    const Digraph& d = inst.digraph;
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    bool alt = true;
    try {
      reach_profile(d);
    } catch (const PreconditionError&) {
      alt = false;
    }
    out << "n: " << d.num_vertices() << '\n';
    out << "m: " << d.num_arcs() << '\n';
    out << "tournament: " << yes_no(is_tournament(d)) << '\n';
    out << "in-tournament: " << yes_no(is_in_tournament(d)) << '\n';
    out << "out-tournament: " << yes_no(is_out_tournament(d)) << '\n';
    out << "local-tournament: " << yes_no(is_local_tournament(d)) << '\n';
    out << "acyclic: " << yes_no(is_acyclic(d)) << '\n';
    out << "weakly-connected: " << yes_no(is_weakly_connected(d)) << '\n';
    out << "connected-acyclic-local-tournament: " << yes_no(alt) << '\n';
    out << "singly-connected: " << yes_no(is_singly_connected(d)) << '\n';
    out << "transitive-arcs: " << count_transitive_arcs(d) << '\n';
    if (d.num_vertices() <= kDefaultIndependenceCap) {
      out << "independence-number: " << independence_number(d) << '\n';
    } else {
      out << "independence-number: unknown\n";
    }
    return kExitYes;
  });
}

}  // namespace rtvd::cli
