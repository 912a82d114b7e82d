#include "subsum/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace subsum {

namespace {

std::size_t graph_order(const GraphSpec& graph) {
  return std::visit(
      [](const auto& g) -> std::size_t {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, EdgeList>) {
          return g.graph.order();
        } else {
          return g.leaf_count();
        }
      },
      graph);
}

template <typename Op>
bool leaves_are_one_to_n(const Expression<Op>& x, std::size_t n) {
  if (x.leaf_count() != n) return false;
  for (const auto& node : x.nodes()) {
    if (node.is_leaf() && node.item > n) return false;
  }
  return true;  // distinctness is an Expression invariant
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

Weight to_number(std::string_view word, std::size_t line) {
  Weight value = 0;
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(word) + "'");
  }
  return value;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace

Instance::Instance(ProblemKind kind, SizeMap sizes, Weight capacity, GraphSpec graph)
    : kind_(kind), sizes_(std::move(sizes)), capacity_(capacity), graph_(std::move(graph)) {
  if (capacity_ < 1) throw InputError("capacity must be at least 1");
  if (sizes_.size() == 0) throw InputError("an instance needs at least one item");
  for (ItemId id = 1; id <= sizes_.size(); ++id) {
    if (sizes_[id] > capacity_) {
      throw InputError("size out of range [1, " + std::to_string(capacity_) + "] for item " +
                       std::to_string(id));
    }
  }
  const bool matches = std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, EdgeList>) {
          return g.graph.order() == sizes_.size();
        } else {
          return leaves_are_one_to_n(g, sizes_.size());
        }
      },
      graph_);
  if (!matches) {
    throw InputError("leaf/item mismatch: graph has " + std::to_string(graph_order(graph_)) +
                     " vertices, instance has " + std::to_string(sizes_.size()) + " items");
  }
}

Digraph Instance::digraph() const {
  return std::visit(
      [](const auto& g) -> Digraph {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, EdgeList>) {
          return g.graph;
        } else if constexpr (std::is_same_v<T, DiCoExpr>) {
          return eval_dico(g);
        } else {
          return eval_msp(g);
        }
      },
      graph_);
}

Instance parse_instance(std::string_view text) {
  std::optional<ProblemKind> kind;
  std::optional<Weight> capacity;
  std::optional<std::size_t> items;
  std::vector<std::pair<Weight, std::size_t>> sizes;  // (size, line), 0 line = unset
  std::optional<GraphSpec> graph;
  std::size_t graph_line = 0;

  std::vector<Arc> arcs;
  bool in_edges = false;
  std::size_t line_no = 0;

  auto require_items = [&](std::size_t line) {
    if (!items) throw ParseError(line, "'items' must be declared before this line");
    return *items;
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string_view line = strip_comment(raw);
    const auto words = split_words(line);
    if (words.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string_view key = words[0];

    if (in_edges) {
      if (key == "end" && words.size() == 1) {
        const std::size_t n = require_items(line_no);
        try {
          graph = EdgeList{Digraph(n, std::move(arcs))};
        } catch (const InputError& e) {
          throw ParseError(line_no, e.what());
        }
        in_edges = false;
      } else if (key == "arc" && words.size() == 3) {
        const std::size_t n = require_items(line_no);
        const Weight u = to_number(words[1], line_no);
        const Weight v = to_number(words[2], line_no);
        for (Weight w : {u, v}) {
          if (w < 1 || static_cast<std::size_t>(w) > n) {
            throw ParseError(line_no, "unknown item id " + std::to_string(w));
          }
        }
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
      } else {
        throw ParseError(line_no, "syntax error: expected 'arc <u> <v>' or 'end'");
      }
    } else if (key == "problem" && words.size() == 2) {
      if (kind) throw ParseError(line_no, "duplicate 'problem' declaration");
      try {
        kind = parse_problem_kind(words[1]);
      } catch (const InputError& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (key == "capacity" && words.size() == 2) {
      if (capacity) throw ParseError(line_no, "duplicate 'capacity' declaration");
      capacity = to_number(words[1], line_no);
      if (*capacity < 1) throw ParseError(line_no, "capacity must be at least 1");
    } else if (key == "items" && words.size() == 2) {
      if (items) throw ParseError(line_no, "duplicate 'items' declaration");
      const Weight n = to_number(words[1], line_no);
      if (n < 1) throw ParseError(line_no, "items must be at least 1");
      items = static_cast<std::size_t>(n);
      sizes.assign(*items, {0, 0});
    } else if (key == "size" && words.size() == 3) {
      const std::size_t n = require_items(line_no);
      const Weight id = to_number(words[1], line_no);
      const Weight s = to_number(words[2], line_no);
      if (id < 1 || static_cast<std::size_t>(id) > n) {
        throw ParseError(line_no, "unknown item id " + std::to_string(id));
      }
      auto& slot = sizes[static_cast<std::size_t>(id) - 1];
      if (slot.second != 0) {
        throw ParseError(line_no, "duplicate size declaration for item " + std::to_string(id));
      }
      if (s < 1) throw ParseError(line_no, "size out of range for item " + std::to_string(id));
      slot = {s, line_no};
    } else if (key == "graph" && words.size() >= 2) {
      if (graph || in_edges) throw ParseError(line_no, "duplicate 'graph' declaration");
      graph_line = line_no;
      const std::string_view form = words[1];
      if (form == "edges" && words.size() == 2) {
        in_edges = true;
        arcs.clear();
        continue;
      }
      if (form != "dico" && form != "msp") {
        throw ParseError(line_no, "syntax error: expected 'graph dico|msp <expr>' or 'graph edges'");
      }
      const std::size_t offset = static_cast<std::size_t>(form.data() + form.size() - line.data());
      const std::string_view payload = line.substr(offset);
      try {
        if (form == "dico") {
          graph = parse_dico(payload);
        } else {
          graph = parse_msp(payload);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const InputError& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "syntax error near '" + std::string(key) + "'");
    }
    if (end == text.size()) break;
  }

  if (in_edges) throw ParseError(line_no, "unterminated 'graph edges' block (missing 'end')");
  if (!kind) throw ParseError(line_no, "missing 'problem' declaration");
  if (!capacity) throw ParseError(line_no, "missing 'capacity' declaration");
  if (!items) throw ParseError(line_no, "missing 'items' declaration");
  if (!graph) throw ParseError(line_no, "missing 'graph' declaration");

  std::vector<Weight> values(*items);
  for (std::size_t i = 0; i < *items; ++i) {
    const auto [s, line] = sizes[i];
    if (line == 0) throw ParseError(line_no, "missing size for item " + std::to_string(i + 1));
    if (s > *capacity) {
      throw ParseError(line, "size out of range [1, " + std::to_string(*capacity) +
                                 "] for item " + std::to_string(i + 1));
    }
    values[i] = s;
  }
  if (graph_order(*graph) != *items) {
    throw ParseError(graph_line, "leaf/item mismatch: graph has " +
                                     std::to_string(graph_order(*graph)) + " vertices, " +
                                     std::to_string(*items) + " items declared");
  }
  try {
    return Instance(*kind, SizeMap(std::move(values)), *capacity, std::move(*graph));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(graph_line, e.what());
  }
}

std::string serialize(const Instance& inst) {
  std::ostringstream out;
  out << "problem " << to_string(inst.kind()) << '\n';
  out << "capacity " << inst.capacity() << '\n';
  out << "items " << inst.item_count() << '\n';
  for (ItemId id = 1; id <= inst.item_count(); ++id) {
    out << "size " << id << ' ' << inst.sizes()[id] << '\n';
  }
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, EdgeList>) {
          out << "graph edges\n";
          for (const auto& [u, v] : g.graph.arcs()) out << "arc " << u << ' ' << v << '\n';
          out << "end\n";
        } else if constexpr (std::is_same_v<T, DiCoExpr>) {
          out << "graph dico " << print(g) << '\n';
        } else {
          out << "graph msp " << print(g) << '\n';
        }
      },
      inst.graph());
  return out.str();
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none:
      return "none";
    case Violation::capacity:
      return "capacity";
    case Violation::digraph_constraint:
      return "digraph-constraint";
    case Violation::weak_digraph_constraint:
      return "weak-digraph-constraint";
  }
  return "?";
}

Verdict check_subset(const Digraph& g, const SizeMap& sizes, Weight capacity, ProblemKind kind,
                     std::span<const ItemId> chosen) {
  Verdict verdict;
  for (ItemId id : chosen) {
    if (id < 1 || id > sizes.size()) {
      throw InputError("unknown item id " + std::to_string(id));
    }
    verdict.total += sizes[id];
  }
  if (kind == ProblemKind::ssg) {
    if (auto w = digraph_constraint_witness(g, chosen)) {
      verdict.violation = Violation::digraph_constraint;
      verdict.witness = w;
      return verdict;
    }
  } else if (kind == ProblemKind::ssgw) {
    if (auto w = weak_digraph_constraint_witness(g, chosen)) {
      verdict.violation = Violation::weak_digraph_constraint;
      verdict.witness = w;
      return verdict;
    }
  }
  if (verdict.total > capacity) verdict.violation = Violation::capacity;
  return verdict;
}

InfeasibleError::InfeasibleError(Verdict verdict)
    : std::runtime_error(
          "infeasible: " + std::string(to_string(verdict.violation)) +
          (verdict.witness ? " at v" + std::to_string(*verdict.witness)
                           : " (total " + std::to_string(verdict.total) + ")")),
      verdict_(verdict) {}

Solution certify(const Digraph& g, const SizeMap& sizes, Weight capacity, ProblemKind kind,
                 std::vector<ItemId> chosen) {
  std::sort(chosen.begin(), chosen.end());
  if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end()) {
    throw InputError("duplicate item in chosen set");
  }
  const Verdict verdict = check_subset(g, sizes, capacity, kind, chosen);
  if (!verdict.feasible()) throw InfeasibleError(verdict);
  return Solution{std::move(chosen), verdict.total, kind};
}

Solution validate_solution(const Instance& inst, std::vector<ItemId> chosen) {
  return certify(inst.digraph(), inst.sizes(), inst.capacity(), inst.kind(), std::move(chosen));
}

}  // namespace subsum
