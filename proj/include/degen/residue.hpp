#pragma once

#include <vector>

#include "degen/curve_graph.hpp"
#include "degen/linalg.hpp"

namespace degen {

/// Toric frame of one plane of X₀: the three boundary lines (= edges of the
/// tetrahedron through the plane) correspond to the rays of the fan of ℙ²,
/// with primitive generators e summing to 0, and dual covectors f, one per
/// ray, satisfying f·e = 0 and Σf = 0.  The covector of a ray is the residue
/// datum of the plane's standard meromorphic form along that boundary line.
struct PlaneResidueFrame {
    int plane = -1;
    std::array<int, 3> edges{};                       ///< edge ids, canonical order
    std::array<std::array<int, 2>, 3> rays{};         ///< e for each edge
    std::array<std::array<int, 2>, 3> covectors{};    ///< f for each edge

    static PlaneResidueFrame standard(int plane);
    bool check() const;
};

/// The frame covector of (plane, edge) expressed in the ambient exponent
/// lattice of ℙ³ (functionals modulo the all-ones vector), with a global
/// sign convention making the two planes through an edge land on opposite
/// vectors: ambient_covector(j, e) = -ambient_covector(i, e) for an edge e
/// between planes i and j.
std::array<int, 4> ambient_covector(int plane, int edge);

/// One unknown scalar per curve component (the multiple of the component's
/// standard form), one row per node-edge from the residue-matching condition
/// r' + r'' = 0 after the ambient identification; entries are 0 or ±1.
struct ResidueSystem {
    linalg::Matrix<mpq_class> rows;
    int unknowns = 0;
};

ResidueSystem residue_system(const CurveGraph& curve);

struct DualObstruction {
    int dimension = 0;
    /// Kernel basis: assignments of one rational per component.
    std::vector<std::vector<mpq_class>> basis;
};

/// Kernel of the residue system.  Requires the curve to validate at
/// pre-smoothable level against f.
DualObstruction dual_obstruction_dim(const CurveGraph& curve, const QuarticForm& f);

/// True when the dual-space generators of the two curves restrict to the
/// same data on matching components.  The curves must have identical
/// component lists (same planes, projectively equal lines), both validate at
/// pre-log level against f, and both have one-dimensional dual spaces; the
/// generators are normalized at the first component before comparison.
bool generator_restriction_compare(const CurveGraph& a, const CurveGraph& b, const QuarticForm& f);

}  // namespace degen
