#pragma once

#include <string>

#include "degen/curve_graph.hpp"

namespace degen {

/// Degree-4 rational curve: the section by the hyperplane through three
/// singular points of the family that do not all lie in one plane.  Result: 4
/// components, 3 node-edges, 6 S-marks, genus 0, simply pre-smoothable.
CurveGraph degree4_rational(const QuarticForm& f, const std::array<ProjPoint, 3>& s_points);

/// Degree-4 elliptic curve: the section by the hyperplane through two
/// singular points and one prescribed node position (an edge-interior point
/// off the singular locus).  Result: 4 components, 4 node-edges, 4 S-marks,
/// genus 1.
CurveGraph degree4_elliptic(const QuarticForm& f, const std::array<ProjPoint, 2>& s_points,
                            const ProjPoint& through_node);

/// Degree-4 genus-2 curve: the section by a hyperplane through one singular
/// point and one prescribed node position.  Result: 4 components, 5
/// node-edges, 2 S-marks, genus 2.
CurveGraph degree4_genus2(const QuarticForm& f, const ProjPoint& s_point,
                          const ProjPoint& through_node);

/// Cyclic r-fold cover of a genus-1 curve graph: all data is replicated r
/// times and one cycle edge (the first one, in edge order) is rewired across
/// consecutive copies.  Component/node/mark counts multiply by r; genus stays
/// 1; image data is unchanged.
CurveGraph cover(const CurveGraph& curve, int r);

/// As cover(), but rewiring the given cycle edge.
CurveGraph cover_at(const CurveGraph& curve, int r, int rewire_edge);

/// Everything needed to graft an auxiliary curve into a base rational curve
/// at a shared node.
struct GraftRecipe {
    QuarticForm f;              ///< the ambient quartic (validation context)
    CurveGraph base;            ///< degree-4 rational curve, genus 0
    CurveGraph aux;             ///< auxiliary curve, genus 1 (rational graft) or 2 (genus graft)
    int base_node = -1;         ///< index of the shared node in base.nodes
    int aux_node = -1;          ///< index of the node of aux over the same image point
    int r = 1;                  ///< covering degree / number of copies
    std::array<int, 2> cut_copies{{0, 1}};  ///< which copies of the shared node to cut in the cover
};

struct GraftResult {
    CurveGraph curve;
    /// Defining equation of the image inside the central fiber.
    std::string image_equation;
};

/// The degree-4r rational graft: covers the genus-1 auxiliary r-fold, cuts
/// two copies of the shared node, keeps the long piece, cuts the base at the
/// shared node and re-glues with two new node-edges over the shared point.
/// Asserts the outcome: connected, genus 0, 4r components, 4r+2 S-marks,
/// simply pre-smoothable.  r = 1 returns the base unchanged.
GraftResult graft_rational(const GraftRecipe& recipe);

/// The genus-r graft: cuts the shared node in each of r copies of the
/// genus-2 auxiliary, chains the copies, and attaches the two halves of the
/// cut base at the ends.  Asserts: connected, genus r, 4r+4 components,
/// 2r+6 S-marks, pre-smoothable.
GraftResult graft_genus(const GraftRecipe& recipe);

/// Builds a rational-graft recipe from scratch: base through the three given
/// singular points, auxiliary elliptic curve through the two others and
/// through the base node chosen by `base_node_index` (0..2).
GraftRecipe make_rational_recipe(const QuarticForm& f, const std::array<ProjPoint, 3>& base_points,
                                 const std::array<ProjPoint, 2>& aux_points, int base_node_index,
                                 int r);

/// Same with a genus-2 auxiliary through one singular point.
GraftRecipe make_genus_recipe(const QuarticForm& f, const std::array<ProjPoint, 3>& base_points,
                              const ProjPoint& aux_point, int base_node_index, int r);

}  // namespace degen
