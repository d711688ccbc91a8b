#pragma once

#include <string>
#include <vector>

#include "degen/central_fiber.hpp"
#include "degen/quartic.hpp"

namespace degen {

/// Display aliases of the four component planes: the line cut out in {w=0}
/// is "l", in {x=0} "m", in {y=0} "n", in {z=0} "k".
const char* plane_alias(int plane);
int plane_from_alias(const std::string& alias);
/// Position of a plane in the display order (l, m, n, k).
int alias_rank(int plane);
/// Display name of the intersection of the lines in two planes, e.g. "l^k".
std::string node_display_name(int plane_a, int plane_b);
/// Parses "l^k" (either order) into the two plane ids, smaller id first.
std::pair<int, int> parse_node_name(const std::string& name);

/// A curve component: a line of multiplicity 1 in one plane of X₀.
struct CurveVertex {
    int plane = -1;
    LineInPlane line;
};

/// A node of the domain curve: two branches glued over one image point.
struct NodeEdge {
    int v1 = -1;
    int v2 = -1;
    ProjPoint point;
    int w1 = 1;  ///< intersection weight of the branch on v1
    int w2 = 1;  ///< intersection weight of the branch on v2
};

/// A smooth domain point mapped to the singular locus of the family; NOT a
/// node.  Two unglued branches over the same image point are recorded as a
/// partnered pair of marks.
struct SMark {
    int vertex = -1;
    ProjPoint point;
    int weight = 1;
    int edge = -1;     ///< edge of X₀ carrying the image point
    int partner = -1;  ///< index of the paired mark, or -1
};

struct CurveGraph {
    std::vector<CurveVertex> vertices;
    std::vector<NodeEdge> nodes;
    std::vector<SMark> smarks;

    /// Structural well-formedness: indices in range, lines well-formed and in
    /// their vertices' planes, node images on both incident lines (and on the
    /// planes' common edge when the planes differ), S-mark images on their
    /// component lines, partner relation symmetric with equal image points.
    /// Throws precondition_error on violation.
    void check_structure() const;

    /// Connectivity through node-edges (S-marks do not glue).
    bool connected() const;
    /// First Betti number #nodes - #vertices + 1; requires connectivity.
    int genus() const;
    /// Total degree: every component is a line.
    int degree() const;
};

/// Validity flags; each level includes the previous one.
struct ValidityReport {
    bool torically_transverse = false;
    bool pre_log = false;
    bool pre_smoothable = false;
    bool simply_pre_smoothable = false;
    std::vector<std::string> violations;
};

/// Checks, in order: (a) every component line torically transverse; (b) every
/// node joins different planes with equal branch weights; (c) node images
/// stay off the singular locus while S-marks land on it at distinct smooth
/// points; (d) every component has degree 1.  Failures are report entries,
/// never exceptions.
ValidityReport validate(const CurveGraph& curve, const QuarticForm& f);

/// The section of X₀ by the hyperplane H: one line per plane and the six
/// pairwise intersections, each classified exactly against {f = 0} on its
/// edge.  Intersections on the singular locus become partnered S-mark pairs
/// unless keep_s_nodes is set (then they stay node-edges).  Requires all four
/// coefficients of H nonzero (H misses the vertices and edge lines of X₀).
CurveGraph hyperplane_section(const std::array<Scalar, 4>& H, const QuarticForm& f,
                              bool keep_s_nodes = false);

/// Graphviz export; S-marks are drawn as cross-marked leaves.
std::string to_dot(const CurveGraph& curve);

}  // namespace degen
