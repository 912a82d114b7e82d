#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subsum/digraph.hpp"
#include "subsum/expressions.hpp"
#include "subsum/instance.hpp"
#include "subsum/oracle.hpp"
#include "subsum/render.hpp"
#include "subsum/ssg.hpp"
#include "subsum/ssgw.hpp"

namespace subsum::cli {

namespace {

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const InapplicableError& e) {
    err << "error: " << e.what() << '\n';
    return inapplicable;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
}

void print_solution(std::ostream& out, const Solution& solution) {
  out << "SOLUTION";
  for (ItemId id : solution.chosen) out << ' ' << id;
  out << '\n';
}

struct Solved {
  Weight opt = 0;
  Solution solution;
  std::vector<RenderedTable> tables;
};

template <typename Op>
Solved solve_expression(const Instance& inst, const Expression<Op>& x, bool want_tables) {
  const SizeMap& sizes = inst.sizes();
  const Weight c = inst.capacity();
  Solved solved;
  switch (inst.kind()) {
    case ProblemKind::ssg: {
      SsgDpResult result;
      if constexpr (std::is_same_v<Op, DiCoOp>) {
        result = solve_ssg_cograph(x, sizes, c);
      } else {
        result = solve_ssg_msp(x, sizes, c);
      }
      if (want_tables) solved.tables.push_back(render_ssg(x, result.tables, c));
      solved.opt = result.opt;
      solved.solution = std::move(result.solution);
      break;
    }
    case ProblemKind::ssgw: {
      SsgwDpResult result;
      if constexpr (std::is_same_v<Op, DiCoOp>) {
        result = solve_ssgw_cograph(x, sizes, c);
      } else {
        result = solve_ssgw_msp(x, sizes, c);
      }
      if (want_tables) {
        solved.tables.push_back(render_ssp(x, result.ssp, c));
        solved.tables.push_back(render_ssgw(x, result.tables, c));
      }
      solved.opt = result.opt;
      solved.solution = std::move(result.solution);
      break;
    }
    case ProblemKind::ssp: {
      if (want_tables) solved.tables.push_back(render_ssp(x, ssp_tables(x, sizes, c), c));
      auto result = solve_ssp(sizes, c);
      solved.opt = result.opt;
      solved.solution = std::move(result.solution);
      break;
    }
  }
  return solved;
}

/// Edge-list instances: special classes first, then the series-parallel
/// pipeline, then condensation enumeration.
SolveResult solve_edges(const Instance& inst, const Digraph& g) {
  const SizeMap& sizes = inst.sizes();
  const Weight c = inst.capacity();
  switch (inst.kind()) {
    case ProblemKind::ssp:
      return solve_ssp(sizes, c);
    case ProblemKind::ssg:
      if (is_bioriented_clique(g)) return solve_ssg_bioriented_clique(g, sizes, c);
      if (is_transitive_tournament(g)) return solve_ssg_transitive_tournament(g, sizes, c);
      if (is_acyclic(g)) {
        try {
          return solve_ssg_sp(g, sizes, c);
        } catch (const NotSeriesParallelError&) {
        }
      }
      return solve_ssg_general(g, sizes, c);
    case ProblemKind::ssgw: {
      MspExpr x;
      try {
        x = decompose_msp(g);
      } catch (const InapplicableError&) {
        throw InapplicableError(
            "no ssgw solver for this digraph (not minimal series-parallel)");
      }
      auto result = solve_ssgw_msp(x, sizes, c);
      return {result.opt, std::move(result.solution)};
    }
  }
  throw InputError("unknown problem kind");
}

std::vector<ItemId> parse_id_list(std::string_view text) {
  std::vector<ItemId> ids;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string token(text.substr(start, comma - start));
    start = comma + 1;
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    token = token.substr(first, token.find_last_not_of(" \t") - first + 1);
    if (!token.empty() && token.front() == 'v') token.erase(0, 1);
    std::size_t used = 0;
    unsigned long long id = 0;
    try {
      id = std::stoull(token, &used);
    } catch (const std::exception&) {
      throw InputError("bad item id '" + token + "'");
    }
    if (used != token.size()) throw InputError("bad item id '" + token + "'");
    ids.push_back(static_cast<ItemId>(id));
  }
  return ids;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Tracked tracked_for(const Instance& inst) {
  return std::holds_alternative<MspExpr>(inst.graph()) ? Tracked::sinks : Tracked::sources;
}

void write_linear(std::ostream& out, const std::vector<std::pair<Weight, ItemId>>& terms) {
  bool first = true;
  for (const auto& [coef, id] : terms) {
    if (!first) out << " + ";
    out << coef << " x" << id;
    first = false;
  }
}

}  // namespace

int cmd_solve(std::string_view text, const SolveFlags& flags, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(text);
    Solved solved = std::visit(
        [&](const auto& g) -> Solved {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, EdgeList>) {
            if (flags.emit_tables) {
              throw InapplicableError("--emit-tables requires a dico or msp expression");
            }
            auto result = solve_edges(inst, g.graph);
            return {result.opt, std::move(result.solution), {}};
          } else {
            return solve_expression(inst, g, flags.emit_tables);
          }
        },
        inst.graph());
    out << "OPT " << solved.opt << '\n';
    if (flags.emit_solution) print_solution(out, solved.solution);
    for (const auto& table : solved.tables) out << table.to_tsv();
    return int{ok};
  });
}

int cmd_oracle(std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(text);
    const Spectrum spectrum = brute_force(inst.digraph(), inst.sizes(), inst.capacity(),
                                          inst.kind(), tracked_for(inst));
    out << "SPECTRUM";
    for (Weight s : spectrum.sizes) out << ' ' << s;
    out << '\n';
    if (inst.kind() == ProblemKind::ssgw) {
      out << "PAIRS";
      for (const auto& [s, t] : spectrum.pairs) out << " (" << s << ',' << t << ')';
      out << '\n';
    }
    out << "OPT " << spectrum.opt << '\n';
    return int{ok};
  });
}

int cmd_check(std::string_view text, std::string_view set, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(text);
    const auto ids = parse_id_list(set);
    for (ItemId id : ids) {
      if (id < 1 || id > inst.item_count()) {
        throw InputError("unknown item id " + std::to_string(id));
      }
    }
    const Verdict verdict =
        check_subset(inst.digraph(), inst.sizes(), inst.capacity(), inst.kind(), ids);
    if (verdict.feasible()) {
      out << "FEASIBLE " << verdict.total << '\n';
    } else if (verdict.witness) {
      out << "INFEASIBLE " << to_string(verdict.violation) << " v" << *verdict.witness << '\n';
    } else {
      out << "INFEASIBLE " << to_string(verdict.violation) << " total=" << verdict.total << '\n';
    }
    return int{ok};
  });
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << serialize(generate_instance(options));
    return int{ok};
  });
}

int cmd_export_ip(std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(text);
    const Digraph g = inst.digraph();
    const std::size_t n = inst.item_count();
    std::vector<std::pair<Weight, ItemId>> weights;
    for (ItemId j = 1; j <= n; ++j) weights.emplace_back(inst.sizes()[j], j);

    out << "/* " << to_string(inst.kind()) << ": " << n << " binary variables */\n";
    out << "max: ";
    write_linear(out, weights);
    out << ";\n\n";
    out << "cap: ";
    write_linear(out, weights);
    out << " <= " << inst.capacity() << ";\n";

    if (inst.kind() == ProblemKind::ssg) {
      // x_i <= x_j for every arc (a_i, a_j).
      std::size_t row = 0;
      for (const auto& [u, v] : g.arcs()) {
        out << "a" << ++row << ": x" << u << " - x" << v << " <= 0;\n";
      }
    } else if (inst.kind() == ProblemKind::ssgw) {
      // sum of predecessors <= x_j + indegree(a_j) - 1.
      for (ItemId j = 1; j <= n; ++j) {
        auto preds = g.predecessors(j);
        if (preds.empty()) continue;
        out << "w" << j << ": ";
        for (std::size_t k = 0; k < preds.size(); ++k) {
          out << (k ? " + " : "") << "x" << preds[k];
        }
        out << " - x" << j << " <= " << preds.size() - 1 << ";\n";
      }
    }
    out << "\nbin ";
    for (ItemId j = 1; j <= n; ++j) out << (j > 1 ? ", " : "") << "x" << j;
    out << ";\n";
    return int{ok};
  });
}

int cmd_decompose(std::string_view text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Instance inst = parse_instance(text);
    out << print(decompose_msp(inst.digraph())) << '\n';
    return int{ok};
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subset sum with digraph constraints: solvers, oracle and tools"};
  app.require_subcommand(1);

  std::string file;
  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Solve an instance and print OPT");
  solve->add_option("file", file, "Instance file ('-' for stdin)")->required();
  solve->add_flag("--emit-tables", solve_flags.emit_tables, "Print the DP tables (TSV)");
  solve->add_flag("--emit-solution", solve_flags.emit_solution, "Print the chosen items");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive enumeration (n <= 24)");
  oracle->add_option("file", file, "Instance file ('-' for stdin)")->required();

  std::string set;
  auto* check = app.add_subcommand("check", "Check feasibility of an item set");
  check->add_option("file", file, "Instance file ('-' for stdin)")->required();
  check->add_option("--set", set, "Comma-separated item ids (may be empty)");

  GenOptions gen_options;
  std::string gen_class = "dico";
  std::string gen_problem = "ssg";
  long long gen_n = 1;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--class", gen_class, "dico or msp")->check(CLI::IsMember({"dico", "msp"}));
  gen->add_option("--problem", gen_problem, "ssp, ssg or ssgw")
      ->check(CLI::IsMember({"ssp", "ssg", "ssgw"}));
  gen->add_option("--n", gen_n, "Number of items")->required();
  gen->add_option("--c", gen_options.capacity, "Capacity")->required();
  gen->add_option("--max-size", gen_options.max_size, "Largest item size")->required();
  gen->add_option("--seed", gen_options.seed, "Random seed");

  auto* export_ip = app.add_subcommand("export-ip", "Write the binary IP in LP format");
  export_ip->add_option("file", file, "Instance file ('-' for stdin)")->required();

  auto* decompose = app.add_subcommand("decompose", "Print an msp-expression for a DAG");
  decompose->add_option("file", file, "Instance file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{ok} : int{input_error};
  }

  std::string text;
  if (!gen->parsed()) {
    try {
      text = read_file(file);
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
  }
  if (solve->parsed()) return cmd_solve(text, solve_flags, out, err);
  if (oracle->parsed()) return cmd_oracle(text, out, err);
  if (check->parsed()) return cmd_check(text, set, out, err);
  if (export_ip->parsed()) return cmd_export_ip(text, out, err);
  if (decompose->parsed()) return cmd_decompose(text, out, err);
  if (gen_n < 1) {
    err << "error: --n must be at least 1\n";
    return input_error;
  }
  gen_options.n = static_cast<std::size_t>(gen_n);
  gen_options.graph_class = gen_class == "msp" ? GraphClass::msp : GraphClass::dico;
  gen_options.kind = parse_problem_kind(gen_problem);
  return cmd_gen(gen_options, out, err);
}

}  // namespace subsum::cli
