#pragma once

#include <map>
#include <vector>

#include "degen/curve_graph.hpp"
#include "degen/lift.hpp"

namespace degen {

/// One branch's share of a node's first-order obstruction value.
struct LineContribution {
    int plane = -1;  ///< the plane carrying the branch's line
    Scalar value;
};

struct NodeContribution {
    int edge = -1;  ///< edge of X₀ carrying the node
    ProjPoint point;
    std::vector<LineContribution> lines;  ///< two branches
    Scalar value;                         ///< their sum
};

struct ObstructionReport {
    std::vector<NodeContribution> nodes;  ///< canonical edge order
    /// Summed-across-nodes contribution of each monomial of f.
    std::map<Exp4, Scalar> per_monomial;
    Scalar total;
};

/// The branch's obstruction share at one node: the residue-pairing weight
/// σ/b times the a₁-coefficient of the solved branch lift.  σ is the sign of
/// the coordinate permutation (pivot, run, cross, plane) and b the node's
/// run-coordinate in the chart.
Scalar branch_contribution(const QuarticForm& f, const LineInPlane& line, const ProjPoint& node,
                           int order = 1);

/// First-order obstruction of the hyperplane section by H (all coefficients
/// nonzero): per-node and per-monomial exact values.  The report satisfies
/// total = Σ node values = Σ per-monomial values, and the total vanishes
/// identically for every quartic.  The per-(monomial, node, branch) lift
/// solves run through the parallel executor.
ObstructionReport first_order_obstruction(const QuarticForm& f, const std::array<Scalar, 4>& H,
                                          int order = 1);

/// The obstruction with all 35 quartic coefficients replaced by independent
/// unit markers: per-monomial cancellation certificates.  Returns the report
/// for Σ (one report whose per_monomial map has one entry per basis
/// monomial, each identically zero when summed over nodes).
ObstructionReport symbolic_obstruction(const std::array<Scalar, 4>& H, int order = 1);

/// Closed-form node contribution, available for the three nodes on the line
/// the hyperplane cuts in the plane {w = 0} (edges {z,w}, {y,w}, {x,w}):
/// a direct evaluation of one chart decomposition of f, bypassing the series
/// solver.  Independent cross-check: must equal the matching node value of
/// first_order_obstruction(f, H).
Scalar node_contribution_reference(const QuarticForm& f, const std::array<Scalar, 4>& H, int edge);

}  // namespace degen
