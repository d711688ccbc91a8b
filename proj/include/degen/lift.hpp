#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degen/chart.hpp"

namespace degen {

/// A truncated lift of a curve branch over the base with parameter t.  Three
/// coordinate tracks (for a node lift: the chart coordinates in slot order;
/// for the local model: X, Y, Z), each a list of Laurent polynomials in the
/// branch coordinate u (slot 0), one per power of t up to `order`.
///
/// Conventions enforced by check():
///  - tracks have exactly order+1 entries;
///  - poles in u have order at most 1 and occur only at t-power >= 1.
struct LiftSeries {
    int order = 0;
    std::array<std::string, 3> names{{"", "", ""}};
    std::array<std::vector<Poly>, 3> tracks;

    /// Track i assembled as a polynomial in u (slot 0) and t (slot 1).
    Poly track_poly(int i) const;
    bool check() const;
};

/// Coefficient table of a Laurent polynomial in u (slot 0) and t (slot 1):
/// key = (t-power, u-power), zero coefficients absent.
std::map<std::pair<int, int>, Scalar> series_collect(const Poly& p);

/// Substitutes the lift's tracks into an equation written in chart
/// coordinates (slots 0..2) and t (slot 3), then tabulates the coefficients
/// with t-power <= order.  Requires lift.order >= order.
std::map<std::pair<int, int>, Scalar> series_collect(const Poly& equation, const LiftSeries& lift,
                                                     int order);

/// A solved first-order lift of the branch of a hyperplane-section curve
/// along `line` at a node of the coordinate tetrahedron.  In the chart at the
/// node (pivot ρ), with u = x_{c'}/ρ for the vanishing coordinate c' NOT cut
/// out by the line's plane c, the ansatz is
///
///     run  = b + λu + t·δ(u),   c' = u,   c = t·μ·δ(u),
///     δ(u) = ε₁/u + a₁ + b₁u + ... ,
///
/// where λ = -h_{c'}/h_run, μ = -h_run/h_c from the hyperplane coefficients.
/// The t¹-coefficient equations of the family in u^0..u^k are triangular in
/// the δ-coefficients and are solved in order.
struct NodeBranchLift {
    ChartDecomposition chart;
    LineInPlane line;
    int plane_coord = -1;  ///< c: vanishing coordinate cut out by the line's plane
    int cross_coord = -1;  ///< c': the other vanishing coordinate (branch direction)
    Scalar lambda;
    Scalar mu;
    /// delta[j] = coefficient of u^(j-1) in δ; delta[0] = ε₁, delta[1] = a₁.
    std::vector<Scalar> delta;
    LiftSeries series;

    Scalar eps1() const { return delta.at(0); }
    Scalar a1() const { return delta.at(1); }
};

/// Solves the branch lift at `node` along `line` for δ-coefficients up to
/// u^(order-1) (order >= 1, so ε₁ and a₁ are always present).  Preconditions:
/// the node lies on an edge interior, the line's plane vanishes there, the
/// line passes through the node, and the pivot/run/plane coefficients of the
/// line's hyperplane are nonzero.
NodeBranchLift local_lift_solve(const QuarticForm& f, const LineInPlane& line, const ProjPoint& node,
                                int order);

/// First-order lifts of the two branches (X,Y,Z) = (u, 0, p(u)) and
/// (0, v, q(v)) in the local model XY + tZ = 0 of a node, sharing the
/// smoothing constant r₀.  p and q are given by their coefficients of
/// u^1..u^n (no constant term).  The node smooths at first order exactly
/// when r₀ ≠ 0.
struct LocalModelLift {
    LiftSeries branch1;
    LiftSeries branch2;
    bool smoothes_node = false;
};

LocalModelLift local_model_lift(const std::vector<Scalar>& p, const std::vector<Scalar>& q,
                                const Scalar& r0, int order);

}  // namespace degen
