#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwp/ast.hpp"
#include "mwp/deltagraph.hpp"
#include "mwp/matrix.hpp"

namespace mwp {

struct AnalysisError : std::runtime_error {
  AnalysisError(SourcePos p, const std::string& msg)
      : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.col) +
                           ": " + msg),
        pos(p) {}
  SourcePos pos;
};

// Which AST node allocated a choice position.
struct ChoiceProvenance {
  SourcePos pos;
  std::string kind;  // "expr" or "call"
};

struct AnalysisResult {
  PolyMatrix matrix;
  ChoiceDomains domains;
  std::vector<std::string> vars;
  std::vector<ChoiceProvenance> provenance;
};

// One Inf-free projected return column of a callee.
struct SummaryVector {
  std::vector<Coeff> paramFlows;   // over the callee's parameters, in order
  Coeff returnFlow = Coeff::Zero;  // the return variable's own row
  Assignment witness;              // a callee assignment producing this vector

  friend bool operator==(const SummaryVector&, const SummaryVector&) = default;
};

struct FunctionSummary {
  std::vector<SummaryVector> vectors;  // pairwise distinct, first-seen order
  bool infinityFallback = false;       // callee has no Inf-free assignment
  bool fromRecursion = false;
  // For recursive functions: the minimal fixpoint solutions per body
  // assignment, before dominated ones are dropped.
  std::vector<std::pair<std::vector<Coeff>, Assignment>> recursionSolutions;
};

struct FunctionAnalysis {
  AnalysisResult result;
  DeltaGraph graph;
  std::vector<std::string> diagnostics;
};

using SummaryLookup =
    std::function<const FunctionSummary&(const std::string& callee, SourcePos at)>;

struct AnalysisContext {
  const std::vector<std::string>& vars;
  ChoiceDomains& domains;
  std::vector<ChoiceProvenance>& provenance;
  DeltaGraph& graph;
  SummaryLookup lookup;  // resolves callee summaries (including self)
  std::vector<std::string>* diagnostics = nullptr;
};

// Expression rules. Bare variable: unit m-vector. Multiplication: w at both
// operands, no choice. Addition/subtraction: a fresh ternary choice between
// (m,p), (p,m) and (w,w); the operand equal to the assignment target takes m
// at choice 0.
PolyVector analyze_expr(const Expr& e, const std::vector<std::string>& vars,
                        ChoiceDomains& domains,
                        std::optional<std::size_t> target = std::nullopt,
                        std::vector<ChoiceProvenance>* provenance = nullptr);

PolyMatrix analyze_cmd(const Cmd& c, AnalysisContext& ctx);
PolyMatrix analyze_seq(const CmdSeq& seq, AnalysisContext& ctx);

// Caps for the enumeration-heavy steps.
struct AnalysisLimits {
  std::uint64_t summaryEnumeration = 1u << 18;
  std::size_t recursionParams = 6;
};

// Whole-program driver: analyses in declaration order, summaries computed on
// demand, direct self-recursion solved by the fixpoint search.
class Analyzer {
 public:
  explicit Analyzer(Program parsed, AnalysisLimits limits = {});

  const Program& program() const { return program_; }
  std::vector<std::string> function_names() const;

  const FunctionAnalysis& function(const std::string& name);
  const FunctionSummary& summary(const std::string& name);

  // Analyzes every declaration; exactly one result per function.
  void analyze_all();

 private:
  const FunDecl& decl(const std::string& name) const;
  FunctionAnalysis analyze_function(const FunDecl& f);
  FunctionSummary summarize(const FunDecl& f);
  FunctionSummary solve_recursion(const FunDecl& f);
  SummaryLookup lookup_for(const FunDecl& f, const FunctionSummary* selfSummary);

  Program program_;
  AnalysisLimits limits_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, FunctionAnalysis> analyses_;
  std::map<std::string, FunctionSummary> summaries_;
};

// Renders an Inf-free flow vector as the bound shape max(x..., p1(y...)) +
// p2(z...) over the m-, w- and p-graded variables.
std::string render_bound(const std::vector<Coeff>& flows,
                         const std::vector<std::string>& vars);

// Choice bookkeeping of one call site, relating a caller assignment to the
// assignment of the program with that call inlined.
struct CallChoiceMap {
  std::optional<std::uint32_t> callerPosition;  // absent when the callee has one vector
  std::uint32_t inlinedBlockStart = 0;
  std::uint32_t inlinedBlockLen = 0;
  std::vector<Assignment> tagToCalleeAssignment;
};

Assignment map_assignment_psi(const Assignment& caller, const CallChoiceMap& m);

}  // namespace mwp
