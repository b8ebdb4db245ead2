#include "cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kchoose/choosability.hpp"
#include "kchoose/facts.hpp"
#include "kchoose/gadgets.hpp"
#include "kchoose/io.hpp"
#include "kchoose/listcolor.hpp"
#include "kchoose/structure.hpp"

namespace kchoose::cli {
namespace {

struct Globals {
  int jobs = 1;
  std::uint64_t budget = 100'000'000;

  DeciderOptions decider(bool symmetry = true) const {
    DeciderOptions d;
    d.jobs = jobs;
    d.budget = budget;
    d.symmetry = symmetry;
    return d;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);)
    if (!item.empty()) parts.push_back(item);
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be an integer, got '" + text + "'");
}

VertexId vertex_named(const Graph& g, const std::string& name) {
  const auto v = g.find(name);
  if (!v) throw DataError("unknown vertex '" + name + "'");
  return *v;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw DataError("cannot write '" + path + "'");
  file << text;
}

Json names_of(const Graph& g, std::span<const VertexId> vs) {
  Json arr = Json::array();
  for (VertexId v : vs) arr.push_back(g.name(v));
  return arr;
}

bool stderr_colored() { return std::getenv("NO_COLOR") == nullptr && ::isatty(STDERR_FILENO); }

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Choosable: return kYes;
    case Verdict::NotChoosable: return kNo;
    case Verdict::BudgetExceeded: return kBudget;
  }
  return kError;
}

// ---- color ---------------------------------------------------------------

struct ColorArgs {
  std::string graph, lists;
  std::vector<std::string> pins;
};

int cmd_color(const ColorArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const ListAssignment lists = lists_from_json(read_json_file(a.lists), g);
  std::vector<Pin> pins;
  for (const std::string& p : a.pins) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw UsageError("--pin expects vertex=color, got '" + p + "'");
    pins.push_back({vertex_named(g, p.substr(0, eq)), parse_int(p.substr(eq + 1), "pin color")});
  }
  const auto coloring = solve(g, lists, pins);
  if (!coloring) {
    emit(out, Json{{"feasible", false}});
    return kNo;
  }
  emit(out, coloring_to_json(*coloring, g));
  return kYes;
}

// ---- choosable -----------------------------------------------------------

struct ChoosableArgs {
  std::string graph, sizes;
  int uniform = 0;
  int palette = 0;
  bool no_symmetry = false;
};

int cmd_choosable(const ChoosableArgs& a, const Globals& globals, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const SizeFunction f = a.sizes.empty() ? SizeFunction::uniform(g, a.uniform) : sizes_from_json(read_json_file(a.sizes), g);
  const auto v = is_fk_choosable(g, f, a.palette, globals.decider(!a.no_symmetry));
  Json j{{"verdict", to_string(v.verdict)}, {"examined", v.examined}};
  if (v.witness) j["witness"] = lists_to_json(*v.witness, g);
  emit(out, j);
  return verdict_code(v.verdict);
}

// ---- critical ------------------------------------------------------------

struct CriticalArgs {
  std::string graph, sizes, subset;
  int palette = 0;
};

int cmd_critical(const CriticalArgs& a, const Globals& globals, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const SizeFunction f = sizes_from_json(read_json_file(a.sizes), g);
  std::vector<VertexId> subset;
  for (const std::string& name : split(a.subset, ',')) subset.push_back(vertex_named(g, name));
  const auto report = is_critical(g, f, a.palette, subset, globals.decider());
  Json j{{"status", to_string(report.status)}, {"examined", report.examined}};
  if (report.witness) j["witness"] = lists_to_json(*report.witness, g);
  if (report.failed_bump)
    j["failed_bump"] = {{"vertex", g.name(report.failed_bump->vertex)},
                        {"counterexample", lists_to_json(report.failed_bump->counterexample, g)}};
  emit(out, j);
  switch (report.status) {
    case CriticalStatus::Critical: return kYes;
    case CriticalStatus::NotCritical: return kNo;
    case CriticalStatus::BudgetExceeded: return kBudget;
  }
  return kError;
}

// ---- recognize / core / blocks -------------------------------------------

int cmd_recognize(const std::string& graph, const std::string& problem, std::ostream& out) {
  const Graph g = load_graph(graph);
  bool yes = false;
  if (problem == "2ch")
    yes = recognize_2_choosable(g);
  else if (problem == "23ch")
    yes = recognize_23_choosable(g);
  else
    throw UsageError("--problem must be 2ch or 23ch");
  Json classes = Json::array();
  for (const CoreClass& c : core_classes(g)) classes.push_back(to_string(c));
  emit(out, Json{{"problem", problem}, {"choosable", yes}, {"core_classes", classes}});
  return yes ? kYes : kNo;
}

int cmd_core(const std::string& graph, std::ostream& out) {
  emit(out, graph_to_json(compute_core(load_graph(graph)).core));
  return kYes;
}

int cmd_blocks(const std::string& graph, std::ostream& out) {
  const Graph g = load_graph(graph);
  const auto d = block_decomposition(g);
  Json blocks = Json::array();
  for (const auto& block : d.blocks)
    blocks.push_back({{"vertices", names_of(g, block)}, {"class", to_string(classify_block(g.induced(block)))}});
  emit(out, Json{{"blocks", blocks},
                 {"cut_vertices", names_of(g, d.cut_vertices)},
                 {"isolated", names_of(g, d.isolated)},
                 {"quasi_line_perfect", is_quasi_line_perfect(g)},
                 {"block_cactus", is_block_cactus(g)}});
  return kYes;
}

// ---- gadget --------------------------------------------------------------

struct GadgetArgs {
  std::string name;
  std::vector<std::string> params;
  std::string out_path, lists_path;
};

GadgetWithRoles build_gadget(const GadgetArgs& a) {
  const auto& p = a.params;
  auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
    if (p.size() < lo || p.size() > hi) throw UsageError("usage: gadget " + a.name + " " + usage);
  };
  auto glue = [&]() {
    need(0, 2, "[left right]");
    GlueSpec spec;
    if (p.size() == 2) spec = {p[0], p[1]};
    else if (p.size() == 1) throw UsageError("glue needs both vertex labels");
    return spec;
  };
  if (a.name == "forall") return need(0, 0, ""), forall_variable_gadget();
  if (a.name == "transmitter") {
    need(2, 2, "<length> <target>");
    return path_transmitter(parse_int(p[0], "length"), parse_int(p[1], "target"));
  }
  if (a.name == "diamond") return need(1, 1, "<palette>"), diamond_gadget(parse_int(p[0], "palette"));
  if (a.name == "H") return need(0, 0, ""), gadget_H();
  if (a.name == "G3") return need(0, 0, ""), gadget_G3();
  if (a.name == "G") return gadget_G(glue());
  if (a.name == "candidate148") return candidate148(glue());
  if (a.name == "bipcrit") return need(1, 1, "<ell>"), bipartite_critical_gadget(parse_int(p[0], "ell"));
  if (a.name == "hyperred") {
    need(1, 1, "<hypergraph.json>");
    return hypergraph_reduction(hypergraph_from_json(read_json_file(p[0])));
  }
  if (a.name == "c6preext") {
    need(4, 4, "<graph> <v1> <v2> <v3>");
    const Graph g = load_graph(p[0]);
    return c6_preext_reduction(g, vertex_named(g, p[1]), vertex_named(g, p[2]), vertex_named(g, p[3]));
  }
  if (a.name == "padgrid") {
    need(2, 3, "<graph> <sizes.json> [palette]");
    const Graph g = load_graph(p[0]);
    return pad_subgrid_to_grid(g, sizes_from_json(read_json_file(p[1]), g), p.size() == 3 ? parse_int(p[2], "palette") : 5);
  }
  if (a.name == "listcol34") {
    need(2, 2, "<graph> <lists.json>");
    const Graph g = load_graph(p[0]);
    return listcol_reduction_34(g, lists_from_json(read_json_file(p[1]), g));
  }
  if (a.name == "bipchred") {
    need(3, 3, "<graph> <sizes.json> <ell>");
    const Graph g = load_graph(p[0]);
    return bipartite_ch_reduction(g, sizes_from_json(read_json_file(p[1]), g), parse_int(p[2], "ell"));
  }
  if (a.name == "attachH") {
    need(1, 2, "<graph> [v1,v2,...]");
    const Graph g = load_graph(p[0]);
    std::vector<VertexId> two;
    if (p.size() == 2)
      for (const std::string& name : split(p[1], ',')) two.push_back(vertex_named(g, name));
    return attach_H_everywhere(g, two);
  }
  throw UsageError("unknown gadget '" + a.name +
                   "' (forall, transmitter, diamond, H, G3, G, candidate148, bipcrit, hyperred, c6preext, padgrid, "
                   "listcol34, bipchred, attachH)");
}

int cmd_gadget(const GadgetArgs& a, std::ostream& out, std::ostream& err) {
  const GadgetWithRoles gadget = build_gadget(a);
  Json j = gadget_summary_json(gadget);
  if (a.out_path.empty())
    j["graph"] = graph_to_json(gadget.graph);
  else
    write_file(a.out_path, graph_to_json(gadget.graph).dump(2) + "\n");
  if (!a.lists_path.empty()) {
    if (gadget.canonical)
      write_file(a.lists_path, lists_to_json(*gadget.canonical, gadget.graph).dump(2) + "\n");
    else
      err << "warning: gadget " << gadget.name << " has no canonical list assignment; " << a.lists_path
          << " not written\n";
  }
  emit(out, j);
  return kYes;
}

// ---- fact runner ---------------------------------------------------------

struct VerifyArgs {
  std::string filter;
  int sweep_order = 7;
};

int cmd_verify(const VerifyArgs& a, const Globals& globals, std::ostream& out, std::ostream& err) {
  const auto selected = select_facts(a.filter);
  if (selected.empty()) err << "warning: no fact matches '" << a.filter << "'\n";
  FactOptions options;
  options.jobs = globals.jobs;
  options.budget = globals.budget;
  options.sweep_order = a.sweep_order;
  const bool color = stderr_colored();
  Json facts = Json::array();
  bool any_fail = false, any_budget = false;
  for (const Fact* fact : selected) {
    const auto start = std::chrono::steady_clock::now();
    const FactResult r = fact->check(options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    any_fail |= r.status == FactStatus::Fail;
    any_budget |= r.status == FactStatus::BudgetExceeded;
    facts.push_back({{"id", fact->id}, {"description", fact->description}, {"status", to_string(r.status)},
                     {"detail", r.detail}});
    const char* paint = r.status == FactStatus::Pass ? "\033[32m" : r.status == FactStatus::Fail ? "\033[31m" : "\033[33m";
    err << std::left << std::setw(4) << fact->id << ' ' << (color ? paint : "") << std::setw(6)
        << to_string(r.status) << (color ? "\033[0m" : "") << ' ' << std::fixed << std::setprecision(2) << seconds
        << "s  " << r.detail << '\n';
  }
  emit(out, Json{{"facts", facts}, {"all_passed", !any_fail && !any_budget}});
  return any_fail ? kNo : any_budget ? kBudget : kYes;
}

// ---- export-dot ----------------------------------------------------------

struct DotArgs {
  std::string graph, lists, coloring;
};

int cmd_dot(const DotArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  std::optional<ListAssignment> lists;
  std::optional<Coloring> coloring;
  if (!a.lists.empty()) lists = lists_from_json(read_json_file(a.lists), g);
  if (!a.coloring.empty()) coloring = coloring_from_json(read_json_file(a.coloring), g);
  out << to_dot(g, lists ? &*lists : nullptr, coloring ? &*coloring : nullptr);
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List-coloring and choosability toolkit", "kchoose"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--jobs", globals.jobs, "Worker threads for exhaustive searches")->check(CLI::Range(1, 1024));
  app.add_option("--budget", globals.budget, "Maximum number of list assignments examined per search");

  ColorArgs color_args;
  auto* color = app.add_subcommand("color", "Find the canonical list coloring, if any");
  color->add_option("graph", color_args.graph, "Graph JSON file or named graph")->required();
  color->add_option("lists", color_args.lists, "List assignment JSON file")->required();
  color->add_option("--pin", color_args.pins, "Precolor a vertex (vertex=color); repeatable");

  ChoosableArgs ch_args;
  auto* choosable = app.add_subcommand("choosable", "Decide [f,k]-choosability exhaustively");
  choosable->add_option("graph", ch_args.graph)->required();
  auto* uniform = choosable->add_option("--uniform", ch_args.uniform, "Same list size everywhere")->check(CLI::PositiveNumber);
  auto* sizes = choosable->add_option("--sizes", ch_args.sizes, "Size function JSON file");
  uniform->excludes(sizes);
  choosable->add_option("--palette", ch_args.palette)->required();
  choosable->add_flag("--no-symmetry", ch_args.no_symmetry, "Disable palette symmetry pruning");

  CriticalArgs cr_args;
  auto* critical = app.add_subcommand("critical", "Check ([f,k],S)-criticality");
  critical->add_option("graph", cr_args.graph)->required();
  critical->add_option("sizes", cr_args.sizes, "Size function JSON file")->required();
  critical->add_option("--palette", cr_args.palette)->required();
  critical->add_option("--subset", cr_args.subset, "Comma-separated vertices")->required();

  std::string rec_graph, problem;
  auto* recognize = app.add_subcommand("recognize", "Structural choosability recognition");
  recognize->add_option("graph", rec_graph)->required();
  recognize->add_option("--problem", problem, "2ch or 23ch")->required();

  std::string core_graph;
  auto* core = app.add_subcommand("core", "Print the core (pendant vertices stripped)");
  core->add_option("graph", core_graph)->required();

  std::string blocks_graph;
  auto* blocks = app.add_subcommand("blocks", "Block decomposition with block classes");
  blocks->add_option("graph", blocks_graph)->required();

  GadgetArgs gadget_args;
  auto* gadget = app.add_subcommand("gadget", "Build a gadget or reduction instance");
  gadget->add_option("name", gadget_args.name)->required();
  gadget->add_option("params", gadget_args.params, "Gadget parameters");
  gadget->add_option("--out", gadget_args.out_path, "Write the graph JSON here");
  gadget->add_option("--lists", gadget_args.lists_path, "Write the canonical list assignment here");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify-paper", "Run the registered fact checks");
  verify->add_option("--filter", verify_args.filter, "Regular expression over fact ids");
  verify->add_option("--sweep-order", verify_args.sweep_order, "Largest order for the exhaustive graph sweep")
      ->check(CLI::Range(1, 8));

  DotArgs dot_args;
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("graph", dot_args.graph)->required();
  dot->add_option("--lists", dot_args.lists);
  dot->add_option("--coloring", dot_args.coloring);

  std::vector<char*> argv;
  std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"kchoose"} : args;
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  try {
    if (choosable->parsed() && ch_args.sizes.empty() && ch_args.uniform == 0)
      throw UsageError("choosable needs --uniform or --sizes");
    if (color->parsed()) return cmd_color(color_args, out);
    if (choosable->parsed()) return cmd_choosable(ch_args, globals, out);
    if (critical->parsed()) return cmd_critical(cr_args, globals, out);
    if (recognize->parsed()) return cmd_recognize(rec_graph, problem, out);
    if (core->parsed()) return cmd_core(core_graph, out);
    if (blocks->parsed()) return cmd_blocks(blocks_graph, out);
    if (gadget->parsed()) return cmd_gadget(gadget_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, globals, out, err);
    if (dot->parsed()) return cmd_dot(dot_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace kchoose::cli
