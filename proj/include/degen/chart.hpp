#pragma once

#include "degen/central_fiber.hpp"
#include "degen/mpoly.hpp"
#include "degen/quartic.hpp"

namespace degen {

/// A quartic written out in the affine chart at a node of the coordinate
/// tetrahedron.  With pivot coordinate ρ the chart coordinates are x_j/ρ for
/// the three j ≠ ρ, placed in slots 0..2 in ascending coordinate order.  The
/// node has two zero coordinates (`lo` < `hi`, the planes meeting along its
/// edge) and two nonzero ones (ρ and `run`).  The dehomogenized quartic is
/// split as
///
///     f/ρ⁴ = c₀ + (run − b)·g₁ + lo·g₂ + hi·g₃
///
/// with the monomial routing fixed once and for all: g₃ takes everything
/// divisible by hi, g₂ takes the rest divisible by lo, and what remains is a
/// univariate polynomial in run, divided at the base value b.
struct ChartDecomposition {
    int pivot = -1;  ///< coordinate set to 1 in the chart
    int run = -1;    ///< the other coordinate that survives at the node
    int lo = -1;     ///< smaller vanishing coordinate
    int hi = -1;     ///< larger vanishing coordinate
    ProjPoint base;  ///< the node, rescaled so the pivot coordinate is 1
    Scalar b;        ///< run-coordinate of the node in the chart
    Scalar c0;       ///< value of the run-only remainder at b
    Poly g1;         ///< (remainder − c₀)/(run − b), univariate in run
    Poly g2;         ///< multiplies lo
    Poly g3;         ///< multiplies hi

    /// Chart slot (0..2) of a non-pivot coordinate.
    int slot_of(int coord) const;
    /// Coordinate occupying a chart slot.
    int coord_of(int slot) const;
};

/// f/pivot⁴ as a polynomial in the chart coordinates (slots 0..2, ascending
/// coordinate order; slot 3 unused).
Poly dehomogenize(const QuarticForm& f, int pivot);

/// Splits f in the chart at `base`, which must have exactly two zero
/// coordinates with `pivot` among the nonzero ones.
ChartDecomposition chart_decompose(const QuarticForm& f, int pivot, const ProjPoint& base);

/// Rebuilds c₀ + (run−b)g₁ + lo·g₂ + hi·g₃; equals dehomogenize(f, pivot).
Poly chart_reassemble(const ChartDecomposition& d);

/// The family equation in the chart at `pivot`: the product of the three
/// chart coordinates plus t·(f/pivot⁴).  Slots 0..2 are the chart
/// coordinates, slot 3 is t.
Poly chart_equation(const QuarticForm& f, int pivot);

}  // namespace degen
