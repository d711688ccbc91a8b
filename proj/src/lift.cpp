#include "degen/lift.hpp"

#include <stdexcept>

#include "degen/errors.hpp"

namespace degen {

Poly LiftSeries::track_poly(int i) const {
    Poly r;
    const auto& tr = tracks[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < tr.size(); ++j) r += Poly::var(1, static_cast<int>(j)) * tr[j];
    return r;
}

bool LiftSeries::check() const {
    for (const auto& tr : tracks) {
        if (tr.size() != static_cast<std::size_t>(order) + 1) return false;
        for (std::size_t j = 0; j < tr.size(); ++j) {
            for (const auto& [e, c] : tr[j].terms()) {
                if (e[1] != 0 || e[2] != 0 || e[3] != 0) return false;  // u only
                if (e[0] < -1) return false;                            // pole order <= 1
                if (e[0] < 0 && j == 0) return false;                   // poles need t >= 1
            }
        }
    }
    return true;
}

std::map<std::pair<int, int>, Scalar> series_collect(const Poly& p) {
    std::map<std::pair<int, int>, Scalar> out;
    for (const auto& [e, c] : p.terms()) out[{e[1], e[0]}] = c;
    return out;
}

std::map<std::pair<int, int>, Scalar> series_collect(const Poly& equation, const LiftSeries& lift,
                                                     int order) {
    if (lift.order < order) throw precondition_error("series_collect: lift truncated below requested order");
    const std::array<Poly, 4> values{lift.track_poly(0), lift.track_poly(1), lift.track_poly(2),
                                     Poly::var(1)};
    std::map<std::pair<int, int>, Scalar> out;
    for (const auto& [key, c] : series_collect(equation.subst_all(values)))
        if (key.first <= order) out.emplace(key, c);
    return out;
}

namespace {

/// Tracks of the node-lift ansatz for a given δ.
LiftSeries assemble_node_series(const ChartDecomposition& chart, const Scalar& lambda, const Scalar& mu,
                                int cross_coord, int plane_coord, const Poly& delta) {
    LiftSeries s;
    s.order = 1;
    const int srun = chart.slot_of(chart.run);
    const int scross = chart.slot_of(cross_coord);
    const int splane = chart.slot_of(plane_coord);
    s.tracks[static_cast<std::size_t>(srun)] = {Poly(chart.b) + Poly::var(0) * lambda, delta};
    s.tracks[static_cast<std::size_t>(scross)] = {Poly::var(0), Poly()};
    s.tracks[static_cast<std::size_t>(splane)] = {Poly(), delta * mu};
    for (int i = 0; i < 3; ++i) {
        const int c = chart.coord_of(i);
        s.names[static_cast<std::size_t>(i)] =
            std::string(coord_name(c)) + "/" + coord_name(chart.pivot);
    }
    return s;
}

}  // namespace

NodeBranchLift local_lift_solve(const QuarticForm& f, const LineInPlane& line, const ProjPoint& node,
                                int order) {
    if (order < 1) throw precondition_error("local_lift_solve: order must be >= 1");
    if (!line.well_formed()) throw precondition_error("local_lift_solve: malformed line");
    if (!line.form_at(node).is_zero()) throw precondition_error("local_lift_solve: node not on the line");
    const auto zeros = node.zero_coords();
    if (zeros.size() != 2) throw precondition_error("local_lift_solve: node not on an edge interior");
    if (line.plane != zeros[0] && line.plane != zeros[1])
        throw precondition_error("local_lift_solve: line's plane does not vanish at the node");

    NodeBranchLift out;
    out.line = line;
    out.plane_coord = line.plane;
    out.cross_coord = zeros[0] == line.plane ? zeros[1] : zeros[0];

    int pivot = -1;
    for (int i = 0; i < 4 && pivot < 0; ++i)
        if (!node.x[static_cast<std::size_t>(i)].is_zero()) pivot = i;
    out.chart = chart_decompose(f, pivot, node);

    const Scalar& h_run = line.h[static_cast<std::size_t>(out.chart.run)];
    const Scalar& h_cross = line.h[static_cast<std::size_t>(out.cross_coord)];
    const Scalar& h_plane = line.h[static_cast<std::size_t>(line.plane)];
    if (h_run.is_zero() || h_plane.is_zero())
        throw precondition_error("local_lift_solve: degenerate hyperplane coefficients at the node");
    out.lambda = -(h_cross / h_run);
    out.mu = -(h_run / h_plane);

    const Poly equation = chart_equation(f, pivot);
    Poly delta;
    // One unknown per pass: the t¹·u^j coefficient is affine in the next
    // δ-coefficient (of u^(j-1)), so two probes determine it.
    for (int j = 0; j <= order; ++j) {
        auto coeff_with = [&](const Scalar& guess) {
            const Poly d = delta + Poly::var(0, j - 1) * guess;
            const LiftSeries s =
                assemble_node_series(out.chart, out.lambda, out.mu, out.cross_coord, out.plane_coord, d);
            const auto table = series_collect(equation, s, 1);
            const auto it = table.find({1, j});
            return it == table.end() ? Scalar(0) : it->second;
        };
        const Scalar at0 = coeff_with(Scalar(0));
        const Scalar at1 = coeff_with(Scalar(1));
        const Scalar divisor = at0 - at1;
        if (divisor.is_zero())
            throw precondition_error("local_lift_solve: singular coefficient equation");
        const Scalar solved = at0 / divisor;
        out.delta.push_back(solved);
        delta += Poly::var(0, j - 1) * solved;
    }

    out.series = assemble_node_series(out.chart, out.lambda, out.mu, out.cross_coord, out.plane_coord, delta);
    if (!out.series.check()) throw std::logic_error("local_lift_solve: malformed series");
    // The solved series must kill every collected t^0 and t^1·u^(<=order) term.
    for (const auto& [key, c] : series_collect(equation, out.series, 1)) {
        if (key.first == 0 && !c.is_zero()) throw std::logic_error("local_lift_solve: t^0 residual");
        if (key.first == 1 && key.second <= order && !c.is_zero())
            throw std::logic_error("local_lift_solve: unsolved coefficient survived");
    }
    return out;
}

LocalModelLift local_model_lift(const std::vector<Scalar>& p, const std::vector<Scalar>& q,
                                const Scalar& r0, int order) {
    if (order < 1) throw precondition_error("local_model_lift: order must be >= 1");
    LocalModelLift out;
    // Branch through (X, Z) = (u, p(u)):  X = u,  Z = p(u) + t·r₀,
    // Y = -t·p(u)/u - t²·r₀/u gives XY + tZ = 0 exactly; the second branch is
    // symmetric in (v, q) and shares the constant r₀.
    auto build = [&](const std::vector<Scalar>& series, bool swap_xy) {
        LiftSeries s;
        s.order = order;
        Poly val, val_over_u;  // p(u) and p(u)/u
        for (std::size_t i = 0; i < series.size(); ++i) {
            val += Poly::var(0, static_cast<int>(i) + 1) * series[i];
            val_over_u += Poly::var(0, static_cast<int>(i)) * series[i];
        }
        const std::size_t len = static_cast<std::size_t>(order) + 1;
        std::vector<Poly> x(len), y(len), z(len);
        x[0] = Poly::var(0);
        y[1] = -val_over_u;
        if (order >= 2) y[2] = Poly::var(0, -1) * -r0;
        z[0] = val;
        z[1] = Poly(r0);
        s.tracks[0] = swap_xy ? y : x;
        s.tracks[1] = swap_xy ? x : y;
        s.tracks[2] = z;
        s.names = {"X", "Y", "Z"};
        return s;
    };
    out.branch1 = build(p, false);
    out.branch2 = build(q, true);
    out.smoothes_node = !r0.is_zero();
    return out;
}

}  // namespace degen
