#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "degen/quartic.hpp"
#include "degen/roots.hpp"
#include "degen/scalar.hpp"

namespace degen {

/// Coordinate names "x","y","z","w" for indices 0..3.
const char* coord_name(int i);
/// Index for a coordinate name; -1 if not a coordinate.
int coord_index(const std::string& name);

/// The fixed combinatorics of the union of the four coordinate planes in
/// projective 3-space: component i is the plane {x_i = 0}; an edge is a line
/// {x_a = x_b = 0} (indexed by its pair of vanishing coordinates, in
/// lexicographic order); a vertex is a coordinate point, identified by its
/// single nonvanishing coordinate.  The incidence complex is the boundary of
/// a tetrahedron.
struct CentralFiber {
    static constexpr int kComponents = 4;
    static constexpr int kEdges = 6;
    static constexpr int kVertices = 4;

    /// Vanishing coordinate pairs, lexicographic: {0,1},{0,2},...,{2,3}.
    static const std::array<std::pair<int, int>, 6>& edges();
    static int edge_index(int a, int b);
    /// The two coordinates that survive on an edge, ascending.
    static std::pair<int, int> surviving(int edge);
    /// The three edges touching a plane, in canonical edge order.
    static std::array<int, 3> plane_edges(int plane);
    /// The two vertices on an edge (a vertex is its nonzero coordinate id).
    static std::array<int, 2> edge_vertices(int edge);
    /// The three non-plane coordinates, ascending.
    static std::array<int, 3> plane_coords(int plane);
    /// Structural self-check: incidence counts and the Euler count 4-6+4=2.
    static bool check();
};

/// A point of projective 3-space with exact coordinates.
struct ProjPoint {
    std::array<Scalar, 4> x;

    bool is_rational() const;
    std::vector<int> zero_coords() const;
    std::string str() const;
};

/// Equality as projective points (all 2x2 minors vanish).
bool proj_equal(const ProjPoint& a, const ProjPoint& b);

/// A line inside one component plane.  h holds the four coefficients of an
/// ambient hyperplane cutting the line: the in-plane linear form is
/// Σ_{i≠plane} h[i]·x_i, and h[plane] is kept because downstream lift
/// normalizations need the full ambient hyperplane, not just the line.
struct LineInPlane {
    int plane = -1;
    std::array<Scalar, 4> h{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};

    /// The in-plane form is not identically zero.
    bool well_formed() const;
    /// Exact vanishing of the ambient hyperplane at a point.
    Scalar form_at(const ProjPoint& p) const;
};

LineInPlane line_in_plane(const std::array<Scalar, 4>& hyperplane, int plane);

/// True iff the line avoids the three coordinate points of its plane, i.e.
/// all three in-plane coefficients are nonzero.
bool check_torically_transverse(const LineInPlane& line);

/// Intersection of the line with the edge {line.plane, other_plane}: with
/// surviving coordinates (k, l), the point has x_k = h[l], x_l = -h[k].
/// Requires the two relevant coefficients not both zero.
ProjPoint line_edge_point(const LineInPlane& line, int other_plane);

/// Per-edge restriction data of a quartic: the binary form on the edge and
/// its exact rational roots.
struct SingularEdge {
    int edge = -1;
    /// Integer coefficients of the restricted form: coeff[d] multiplies
    /// u^d·v^(4-d) where (u,v) are the surviving coordinates, ascending.
    std::vector<mpz_class> form;
    /// Rational roots [a:b] (u/v = a/b), repeated with multiplicity.
    std::vector<ProjRoot> roots;
    bool complete = false;
};

struct SingularLocus {
    std::array<SingularEdge, 6> edges;
    /// All 24 points found rational.
    bool complete = false;
};

/// Restriction of f to every edge plus exact rational root extraction.
/// Requires plain-rational coefficients.  Throws precondition_error when a
/// restricted form has degree < 4 or a root at a vertex (naming the edge).
SingularLocus singular_locus(const QuarticForm& f);

/// Exact test for membership of a point in the singular set of the family:
/// the point must lie on an edge interior (exactly two zero coordinates) and
/// the restricted quartic must vanish there.  Works for symbolic points too.
bool on_singular_locus(const QuarticForm& f, const ProjPoint& p);

/// The point of the edge's line determined by a root [a:b]: surviving
/// coordinates take values (a, b), vanishing ones 0.
ProjPoint edge_point(int edge, const ProjRoot& root);

/// Prescribed singular points for the designer: 4 roots per edge, 24 total.
struct Prescription {
    struct Point {
        int edge = -1;
        ProjRoot root;
    };
    std::vector<Point> points;
};

struct DesignResult {
    QuarticForm f;
    /// Edge scales: restriction of f to edge e equals lambda[e] times the
    /// prescribed form.
    std::array<Scalar, 6> lambda;
    /// Dimension of the full solution space (coefficients plus scales).
    int solution_dim = 0;
};

/// Solves for a quartic whose edge restrictions have exactly the prescribed
/// roots: linear system in the 35 coefficients and 6 edge scales λₑ (5
/// equations per edge), returning a solution with every λₑ ≠ 0 and the
/// solution-space dimension.  Throws precondition_error on malformed
/// prescriptions (vertex roots, repeats, wrong counts) and when no solution
/// with all λₑ ≠ 0 exists.
DesignResult design_f(const Prescription& prescription);

/// Deterministic generator of realizable prescriptions (same seed, same
/// output): per-edge root sets chosen so the induced constraints on the four
/// pure fourth-power coefficients are consistent around every triangle of
/// edges.
Prescription realizable_prescription(std::uint64_t seed);

/// A prescription that is NOT realizable: the same four roots on every edge.
/// The induced triangle constraints conflict, so design_f must reject it.
Prescription symmetric_prescription();

struct HyperplaneThroughResult {
    /// Basis of the space of hyperplane coefficient vectors through the
    /// points, exact, in deterministic order.
    std::vector<std::array<mpq_class, 4>> basis;
    /// When exactly 3 points were supplied: true iff no single plane
    /// contains them all.  False (and unchecked) otherwise.
    bool spread_checked = false;
    bool spread_ok = false;
};

/// Hyperplanes through up to 3 rational points.  Throws precondition_error
/// when more than 3 points are given or the solution space is degenerate for
/// the supplied count (e.g. 3 collinear points on one edge).
HyperplaneThroughResult hyperplane_through(const std::vector<ProjPoint>& points);

/// Deterministic pick from a hyperplane solution space with all four
/// coefficients nonzero (needed for torically transverse sections); throws
/// precondition_error if no such element exists in the span.
std::array<Scalar, 4> pick_hyperplane(const HyperplaneThroughResult& solutions);

}  // namespace degen
