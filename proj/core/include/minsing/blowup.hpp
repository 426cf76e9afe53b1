#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minsing/circulant_fwd.hpp"
#include "minsing/poly.hpp"

namespace minsing {

/// Coordinate-subspace centre {v = 0 : v in vars}; nontrivial blow-ups need
/// codimension >= 2.
struct Centre {
  VarSet vars;
};

/// Which variable carries which exceptional-divisor label in a chart.
struct DivisorState {
  std::map<int, std::string> labels;  // variable index -> label
  int next_fresh = 1;

  std::string fresh_label() const { return "D" + std::to_string(next_fresh); }
  /// Variable carrying `label`, or -1.
  int var_of(const std::string& label) const;
  std::map<std::string, std::string> named(const VarTablePtr& vt) const;
};

/// One chart of a blow-up: the chart variable stays, every other centre
/// variable v becomes chart_var * v, and the chart variable picks up the
/// fresh exceptional label (dropping any label it carried).
struct Chart {
  int chart_var = -1;
  DivisorState divisors;
  Rat multiplicity{0};  // exponent of the chart variable divided out
  PuiseuxPoly total;
  PuiseuxPoly strict;
  std::optional<ProductForm> strict_form;  // factored route only
};

/// Order of f along the centre: min over terms of the centre-variable degree.
Rat order_along(const PuiseuxPoly& f, const Centre& c);

/// One chart per centre variable; total = f(chart map), strict =
/// total / chart_var^m with m = order_along(f, c).
std::vector<Chart> blow_up(const PuiseuxPoly& f, const Centre& c,
                           const DivisorState& d);

/// Factored analogue: substitutes into every block argument and the
/// prefactor, divides each block's arguments by their common chart-variable
/// content and the prefactor by its own. Cross-checks that the expansion of
/// the result equals the strict transform of the expansion.
std::vector<Chart> blow_up_factored(const ProductForm& p, const Centre& c,
                                    const DivisorState& d);

/// Drops unit blocks (blocks with a constant argument, nonzero at the
/// origin); the local singularity is unchanged.
ProductForm reduced_form(const ProductForm& p);

/// Common weighted degree of all terms, if one exists.
std::optional<Rat> weighted_homogeneous_degree(const PuiseuxPoly& f,
                                               const std::vector<Rat>& weights);

// ---- Scripted sequences ----------------------------------------------------

struct ChartRequest {
  std::vector<std::string> path;  // chart-variable names from the root
  std::optional<std::string> expect_form;  // polynomial or Delta grammar
  std::optional<std::map<std::string, std::string>> expect_divisors;
  bool asserted = true;
  std::string anchor;
};

struct TraceStep {
  std::vector<std::string> centre;  // variable names and/or divisor labels
  std::optional<std::string> fresh_label;
  std::vector<ChartRequest> charts;
};

struct BlowupTrace {
  VarTablePtr vt;
  std::variant<PuiseuxPoly, ProductForm> initial;
  DivisorState divisors;
  std::vector<TraceStep> steps;
};

struct ChartOutcome {
  std::string path;
  std::string computed_form;
  std::map<std::string, std::string> divisors;
  Rat order_after{0};
  bool checked = false;
  bool pass = true;
  std::string expected;
  std::string anchor;
};

/// State of one chart during replay, addressable by path.
struct TraceNode {
  std::variant<PuiseuxPoly, ProductForm> form;
  DivisorState divisors;
};

struct TraceReport {
  std::vector<ChartOutcome> charts;
  std::map<std::string, TraceNode> nodes;  // key: joined path
  bool all_passed() const;
};

/// Replays a scripted blow-up sequence, recording every requested chart and
/// evaluating the attached expectations (never short-circuits).
TraceReport run_sequence(const BlowupTrace& trace);

std::string join_path(const std::vector<std::string>& path);

}  // namespace minsing
