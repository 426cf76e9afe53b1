#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minsing/blowup.hpp"
#include "minsing/catalog.hpp"
#include "minsing/poly.hpp"

namespace minsing {

/// One replayable computation: variable declarations, an initial object, a
/// script of operations, and assertions with anchors. Loaded from JSON files
/// shipped with the repository.
struct Scenario {
  std::string id;
  std::string description;
  Rat trunc{12};
  VarTablePtr vt;
  DivisorState divisors;
  std::variant<PuiseuxPoly, ProductForm> initial;
  struct Op;
  std::vector<Op> script;

  struct Op {
    std::string kind;  // blowup | classify_point | classify_form | pinch |
                       // expand_equals | min_split | split_check | cubic_chain |
                       // order_check
    // blowup
    TraceStep step;
    // ops addressing a chart by path ([] = initial object)
    std::vector<std::string> path;
    std::string anchor;
    // classify/pinch/expand/order
    std::string expect;
    unsigned expect_field = 0;
    std::vector<std::string> nonzero;
    std::vector<std::string> op_vars;   // order_check vars / split wvars
    std::string zvar = "z";
    // splitting
    std::vector<unsigned> cover;
    unsigned bound = 3;
    std::optional<std::vector<unsigned>> expect_cover;
    bool expect_pass = true;
    std::string phi;
    std::string supplied_sqrt;  // cubic_chain: explicit A when extraction cannot
    std::vector<long> expect_alpha;
  };
};

struct RunReport {
  struct Item {
    std::string anchor;
    bool pass = false;
    std::string expected;
    std::string got;
  };
  std::string scenario;
  std::vector<Item> items;
  double seconds = 0.0;
  Rat trunc{12};
  std::string error;  // fatal script error, when nonempty

  bool ok() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Parses one scenario object (already-parsed JSON text).
Scenario parse_scenario_json(const std::string& text);
/// Loads every scenario from a file ({"scenarios": [...]} or a single one).
std::vector<Scenario> load_scenario_file(const std::string& path);
/// Loads a standalone blow-up trace file: {vars, initial, steps}.
BlowupTrace load_trace_file(const std::string& path);
/// Loads the shipped corpus: every *.json under dir/scenarios.
std::vector<Scenario> load_corpus(const std::string& data_dir);
Catalog load_catalog(const std::string& data_dir);

/// Executes the script sequentially; never short-circuits on assertion
/// failures (script errors abort the scenario with an error report).
RunReport run_scenario(const Scenario& s, const Catalog& catalog);

/// Runs many scenarios, optionally on several threads; reports come back in
/// input order regardless of scheduling.
std::vector<RunReport> run_scenarios(const std::vector<Scenario>& list,
                                     const Catalog& catalog, unsigned jobs);

/// Default data directory: $MINSING_DATA if set, else the compiled-in path.
std::string default_data_dir();

}  // namespace minsing
