#include "degen/chart.hpp"

#include "degen/errors.hpp"

namespace degen {

int ChartDecomposition::slot_of(int coord) const {
    int slot = 0;
    for (int j = 0; j < 4; ++j) {
        if (j == pivot) continue;
        if (j == coord) return slot;
        ++slot;
    }
    throw precondition_error("slot_of: coordinate is the pivot");
}

int ChartDecomposition::coord_of(int slot) const {
    int s = 0;
    for (int j = 0; j < 4; ++j) {
        if (j == pivot) continue;
        if (s == slot) return j;
        ++s;
    }
    throw precondition_error("coord_of: bad slot");
}

Poly dehomogenize(const QuarticForm& f, int pivot) {
    if (pivot < 0 || pivot > 3) throw precondition_error("dehomogenize: bad pivot");
    Poly r;
    for (const auto& [e, c] : f.coeffs()) {
        Exp4 out{0, 0, 0, 0};
        int slot = 0;
        for (int j = 0; j < 4; ++j) {
            if (j == pivot) continue;
            out[static_cast<std::size_t>(slot++)] = e[static_cast<std::size_t>(j)];
        }
        r += Poly::term(out, c);
    }
    return r;
}

ChartDecomposition chart_decompose(const QuarticForm& f, int pivot, const ProjPoint& base) {
    const auto zeros = base.zero_coords();
    if (zeros.size() != 2) throw precondition_error("chart_decompose: base point not on an edge interior");
    if (pivot < 0 || pivot > 3 || base.x[static_cast<std::size_t>(pivot)].is_zero())
        throw precondition_error("chart_decompose: pivot coordinate vanishes at the base point");

    ChartDecomposition d;
    d.pivot = pivot;
    d.lo = zeros[0];
    d.hi = zeros[1];
    for (int j = 0; j < 4; ++j)
        if (j != pivot && j != d.lo && j != d.hi) d.run = j;
    const Scalar& scale = base.x[static_cast<std::size_t>(pivot)];
    for (int j = 0; j < 4; ++j)
        d.base.x[static_cast<std::size_t>(j)] = base.x[static_cast<std::size_t>(j)] / scale;
    d.b = d.base.x[static_cast<std::size_t>(d.run)];

    const int srun = d.slot_of(d.run), slo = d.slot_of(d.lo), shi = d.slot_of(d.hi);

    // Route monomials: anything with the hi coordinate goes to g3, anything
    // left with the lo coordinate goes to g2; the rest is univariate in run.
    Poly rem;
    const Poly dehom = dehomogenize(f, pivot);
    for (const auto& [e, c] : dehom.terms()) {
        Exp4 e2 = e;
        if (e[static_cast<std::size_t>(shi)] > 0) {
            e2[static_cast<std::size_t>(shi)] -= 1;
            d.g3 += Poly::term(e2, c);
        } else if (e[static_cast<std::size_t>(slo)] > 0) {
            e2[static_cast<std::size_t>(slo)] -= 1;
            d.g2 += Poly::term(e2, c);
        } else {
            rem += Poly::term(e2, c);
        }
    }

    // rem(run) = c0 + (run - b)·g1 by synthetic division at b.
    const int deg = rem.degree(srun);
    Scalar acc(0);
    for (int k = deg; k >= 1; --k) {
        acc = acc * d.b + rem.coeff_of(srun, k).coeff({0, 0, 0, 0});
        d.g1 += Poly::var(srun, k - 1) * acc;
    }
    acc = acc * d.b + rem.coeff_of(srun, 0).coeff({0, 0, 0, 0});
    d.c0 = acc;
    return d;
}

Poly chart_reassemble(const ChartDecomposition& d) {
    Poly r(d.c0);
    r += (Poly::var(d.slot_of(d.run)) - Poly(d.b)) * d.g1;
    r += Poly::var(d.slot_of(d.lo)) * d.g2;
    r += Poly::var(d.slot_of(d.hi)) * d.g3;
    return r;
}

Poly chart_equation(const QuarticForm& f, int pivot) {
    Poly r = Poly::var(0) * Poly::var(1) * Poly::var(2);
    r += Poly::var(3) * dehomogenize(f, pivot);
    return r;
}

}  // namespace degen
