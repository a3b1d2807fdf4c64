#include "mwp/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mwp/frontend.hpp"
#include "mwp/jk_oracle.hpp"
#include "mwp/json_io.hpp"

namespace mwp::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& text) {
  if (text.empty()) return 0;
  std::size_t n = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  if (text.back() != '\n') ++n;
  return n;
}

struct Options {
  std::string file;
  bool fast = false;
  std::string format = "text";
  std::string witnesses = "first";
  bool dumpDeltaGraph = false;
  bool oracleCheck = false;
  bool timings = false;
};

struct Witness {
  Assignment assignment;
  CoeffMatrix matrix;
  std::vector<std::pair<std::string, std::string>> bounds;  // var -> rendered bound
};

struct FunctionVerdict {
  std::string name;
  std::vector<std::string> vars;
  std::vector<std::uint32_t> domains;
  bool bound = false;
  const PolyMatrix* matrix = nullptr;
  std::vector<Witness> witnesses;
  std::vector<std::string> diagnostics;
  Json deltaGraph;
  double deriveMs = 0, decideMs = 0, evaluateMs = 0;
};

constexpr std::size_t kWitnessCap = 10000;

std::vector<Witness> collect_witnesses(const FunctionAnalysis& fa,
                                       const std::string& policy,
                                       std::vector<std::string>& diags) {
  std::vector<Witness> out;
  if (policy == "none") return out;
  std::optional<Assignment> a = dg_next_assignment(fa.graph, fa.result.domains, {});
  while (a) {
    CoeffMatrix m = mat_eval(fa.result.matrix, *a);
    if (!m.contains_inf()) {
      Witness w;
      w.assignment = *a;
      for (std::size_t j = 0; j < fa.result.vars.size(); ++j) {
        std::vector<Coeff> col(fa.result.vars.size());
        for (std::size_t i = 0; i < col.size(); ++i) col[i] = m.at(i, j);
        w.bounds.emplace_back(fa.result.vars[j], render_bound(col, fa.result.vars));
      }
      w.matrix = std::move(m);
      out.push_back(std::move(w));
      if (policy == "first") break;
      if (out.size() >= kWitnessCap) {
        diags.push_back("witness enumeration truncated at " +
                        std::to_string(kWitnessCap));
        break;
      }
    }
    a = dg_next_assignment(fa.graph, fa.result.domains, a);
  }
  return out;
}

void print_text(std::ostream& out, const FunctionVerdict& v, double parseMs,
                bool showTimings) {
  out << "function " << v.name << " (vars:";
  for (const std::string& s : v.vars) out << " " << s;
  out << "; choices:";
  for (std::uint32_t d : v.domains) out << " " << d;
  if (v.domains.empty()) out << " none";
  out << ")\n";
  out << "  bound: " << (v.bound ? "yes" : "no") << "\n";
  if (v.matrix != nullptr) {
    std::istringstream rows(v.matrix->str());
    std::string line;
    out << "  matrix:\n";
    while (std::getline(rows, line)) out << "    " << line << "\n";
  }
  for (const Witness& w : v.witnesses) {
    out << "  witness: (";
    for (std::size_t i = 0; i < w.assignment.size(); ++i)
      out << (i ? "," : "") << w.assignment[i];
    out << ")\n";
    std::istringstream rows(w.matrix.str(v.vars));
    std::string line;
    while (std::getline(rows, line)) out << "    " << line << "\n";
    for (const auto& [var, bound] : w.bounds)
      out << "    " << var << "' <= " << bound << "\n";
  }
  for (const std::string& d : v.diagnostics) out << "  note: " << d << "\n";
  if (!v.deltaGraph.is_null()) out << "  delta graph: " << v.deltaGraph.dump() << "\n";
  if (showTimings) {
    out << std::fixed << std::setprecision(3);
    out << "  time: parse " << parseMs << "ms, derive " << v.deriveMs
        << "ms, decide " << v.decideMs << "ms, evaluate " << v.evaluateMs << "ms\n";
    out.unsetf(std::ios::fixed);
  }
}

int run_analyze(const Options& opt, std::ostream& out, std::ostream& err) {
  std::string source;
  try {
    source = read_file(opt.file);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const auto parseStart = Clock::now();
  Program prog;
  try {
    prog = parse(source, opt.file);
  } catch (const ParseError& e) {
    err << opt.file << ":" << e.what() << "\n";
    return 1;
  }
  const double parseMs = ms_since(parseStart);

  try {
    Analyzer analyzer(prog);
    std::vector<FunctionVerdict> verdicts;
    bool allBounded = true;

    for (const FunDecl& decl : analyzer.program().decls) {
      FunctionVerdict v;
      v.name = decl.name;

      const auto deriveStart = Clock::now();
      const FunctionAnalysis& fa = analyzer.function(decl.name);
      v.deriveMs = ms_since(deriveStart);

      const auto decideStart = Clock::now();
      const bool graphComplete = fa.graph.complete();
      v.decideMs = ms_since(decideStart);

      v.vars = fa.result.vars;
      v.domains = fa.result.domains.sizes();
      v.matrix = &fa.result.matrix;
      v.diagnostics = fa.diagnostics;
      v.bound = !graphComplete;

      const auto evalStart = Clock::now();
      if (!opt.fast)
        v.witnesses = collect_witnesses(fa, opt.witnesses, v.diagnostics);
      v.evaluateMs = ms_since(evalStart);

      if (opt.dumpDeltaGraph) v.deltaGraph = delta_graph_json(fa.graph, fa.result.domains);

      if (opt.oracleCheck) {
        try {
          const bool ok = jk_equals_deterministic(decl);
          v.diagnostics.push_back(std::string("oracle check: ") +
                                  (ok ? "passed" : "FAILED"));
          if (!ok) {
            err << decl.name << ": oracle disagrees with the deterministic result\n";
            return 1;
          }
        } catch (const std::exception& e) {
          err << decl.name << ": oracle check refused: " << e.what() << "\n";
          return 1;
        }
      }
      allBounded &= v.bound;
      verdicts.push_back(std::move(v));
    }

    if (opt.format == "json") {
      Json functions = Json::array();
      for (const FunctionVerdict& v : verdicts) {
        Json fj{{"name", v.name},
                {"vars", v.vars},
                {"domains", v.domains},
                {"bound", v.bound},
                {"matrix", to_json(*v.matrix)}};
        Json ws = Json::array();
        for (const Witness& w : v.witnesses) {
          Json bounds = Json::object();
          for (const auto& [var, b] : w.bounds) bounds[var] = b;
          ws.push_back(Json{{"assignment", w.assignment},
                            {"matrix", to_json(w.matrix)},
                            {"bounds", std::move(bounds)}});
        }
        fj["witnesses"] = std::move(ws);
        if (!v.diagnostics.empty()) fj["diagnostics"] = v.diagnostics;
        if (!v.deltaGraph.is_null()) fj["delta_graph"] = v.deltaGraph;
        if (opt.timings)
          fj["timing_ms"] = Json{{"parse", parseMs},
                                 {"derive", v.deriveMs},
                                 {"decide", v.decideMs},
                                 {"evaluate", v.evaluateMs}};
        functions.push_back(std::move(fj));
      }
      out << Json{{"functions", std::move(functions)}}.dump(2) << "\n";
    } else {
      for (const FunctionVerdict& v : verdicts) print_text(out, v, parseMs, opt.timings);
    }
    return allBounded ? 0 : 2;
  } catch (const AnalysisError& e) {
    err << opt.file << ":" << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_bench(const std::string& dir, const std::string& format, std::ostream& out,
              std::ostream& err) {
  if (!fs::exists(dir) || !fs::is_directory(dir)) {
    err << "error: not a directory: " << dir << "\n";
    return 1;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  struct Row {
    std::string name;
    std::size_t variables = 0, loc = 0;
    double timeMs = 0;
    std::string verdict;  // "yes" | "no" | "error"
    std::string note;
  };
  std::vector<Row> rows;
  for (const fs::path& f : files) {
    Row row;
    row.name = f.stem().string();
    try {
      const std::string source = read_file(f.string());
      row.loc = count_lines(source);
      const auto start = Clock::now();
      Analyzer analyzer(parse(source, f.string()));
      bool all = true;
      for (const std::string& name : analyzer.function_names()) {
        const FunctionAnalysis& fa = analyzer.function(name);
        row.variables += fa.result.vars.size();
        all &= !fa.graph.complete();
      }
      row.timeMs = ms_since(start);
      row.verdict = all ? "yes" : "no";
    } catch (const std::exception& e) {
      row.verdict = "error";
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }

  std::ostringstream times;
  times << std::fixed << std::setprecision(1);
  if (format == "csv") {
    out << "name,variables,loc,time_ms,bound\n";
    for (const Row& r : rows) {
      times.str("");
      times << r.timeMs;
      out << r.name << "," << r.variables << "," << r.loc << "," << times.str() << ","
          << r.verdict << "\n";
    }
  } else {
    out << "| Program | Variables | LOC | Time (ms) | Bound |\n";
    out << "|---|---|---|---|---|\n";
    for (const Row& r : rows) {
      times.str("");
      times << r.timeMs;
      const std::string mark =
          r.verdict == "yes" ? "✓" : (r.verdict == "no" ? "∞" : "error");
      out << "| " << r.name << " | " << r.variables << " | " << r.loc << " | "
          << times.str() << " | " << mark << " |\n";
    }
  }
  for (const Row& r : rows)
    if (!r.note.empty()) err << r.name << ": " << r.note << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mwp-flow polynomial growth certifier"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* analyze = app.add_subcommand("analyze", "analyze one source file");
  analyze->add_option("file", opt.file, "source file")->required();
  analyze->add_flag("--fast", opt.fast, "decide bound existence without evaluating");
  analyze->add_option("--format", opt.format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--witnesses", opt.witnesses, "all|first|none")
      ->check(CLI::IsMember({"all", "first", "none"}));
  analyze->add_flag("--dump-delta-graph", opt.dumpDeltaGraph, "include the delta graph");
  analyze->add_flag("--oracle-check", opt.oracleCheck,
                    "compare against the nondeterministic reference calculus");
  analyze->add_flag("--timings", opt.timings, "include wall-clock timings");

  std::string benchDir, benchFormat = "markdown";
  CLI::App* bench = app.add_subcommand("bench", "analyze a directory of sources");
  bench->add_option("dir", benchDir, "corpus directory")->required();
  bench->add_option("--format", benchFormat, "csv|markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));

  std::vector<const char*> argv;
  argv.push_back("mwpflow");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (analyze->parsed()) return run_analyze(opt, out, err);
  return run_bench(benchDir, benchFormat, out, err);
}

}  // namespace mwp::cli
