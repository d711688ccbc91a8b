#include "degen/obstruction.hpp"

#include <stdexcept>

#include "degen/errors.hpp"
#include "degen/exec.hpp"

namespace degen {

namespace {

int permutation_sign(const std::array<int, 4>& p) {
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) sign = -sign;
    return sign;
}

Scalar weighted_a1(const QuarticForm& f, const LineInPlane& line, const ProjPoint& node,
                   int order) {
    const NodeBranchLift lift = local_lift_solve(f, line, node, order);
    const int sigma = permutation_sign(
        {lift.chart.pivot, lift.chart.run, lift.cross_coord, lift.plane_coord});
    return Scalar(sigma) / lift.chart.b * lift.a1();
}

}  // namespace

Scalar branch_contribution(const QuarticForm& f, const LineInPlane& line, const ProjPoint& node,
                           int order) {
    return weighted_a1(f, line, node, order);
}

ObstructionReport first_order_obstruction(const QuarticForm& f, const std::array<Scalar, 4>& H,
                                          int order) {
    for (int i = 0; i < 4; ++i)
        if (H[static_cast<std::size_t>(i)].is_zero())
            throw precondition_error(std::string("first_order_obstruction: coefficient of ") +
                                     coord_name(i) + " vanishes");

    std::vector<Exp4> monos;
    for (const auto& [e, c] : f.coeffs()) monos.push_back(e);
    const std::size_t nm = monos.size();

    // Task grid: 12 branches (6 nodes x 2 lines) for the full f plus for each
    // single-monomial piece; every task solves one branch lift.
    struct Branch {
        int edge;
        int plane;
        ProjPoint point;
        LineInPlane line;
    };
    std::vector<Branch> branches;
    for (int e = 0; e < CentralFiber::kEdges; ++e) {
        const auto [i, j] = CentralFiber::edges()[static_cast<std::size_t>(e)];
        const LineInPlane li = line_in_plane(H, i), lj = line_in_plane(H, j);
        const ProjPoint pt = line_edge_point(li, j);
        branches.push_back({e, i, pt, li});
        branches.push_back({e, j, pt, lj});
    }

    const std::size_t tasks = branches.size() * (nm + 1);
    std::vector<Scalar> values(tasks);
    exec::parallel_for(tasks, [&](std::size_t t) {
        const Branch& br = branches[t % branches.size()];
        const std::size_t part = t / branches.size();
        if (part == nm) {
            values[t] = weighted_a1(f, br.line, br.point, order);
        } else {
            QuarticForm piece;
            piece.set(monos[part], f.coeff(monos[part]));
            values[t] = weighted_a1(piece, br.line, br.point, order);
        }
    });

    ObstructionReport report;
    report.total = Scalar(0);
    for (std::size_t b = 0; b < branches.size(); b += 2) {
        NodeContribution node;
        node.edge = branches[b].edge;
        node.point = branches[b].point;
        node.value = Scalar(0);
        for (std::size_t side = 0; side < 2; ++side) {
            const std::size_t t = nm * branches.size() + b + side;
            node.lines.push_back({branches[b + side].plane, values[t]});
            node.value += values[t];
        }
        report.total += node.value;
        report.nodes.push_back(std::move(node));
    }
    for (std::size_t m = 0; m < nm; ++m) {
        Scalar sum(0);
        for (std::size_t b = 0; b < branches.size(); ++b) sum += values[m * branches.size() + b];
        report.per_monomial.emplace(monos[m], sum);
    }

    // Linearity cross-check: the monomial pieces must reassemble both the
    // branch values and the total.
    for (std::size_t b = 0; b < branches.size(); ++b) {
        Scalar sum(0);
        for (std::size_t m = 0; m < nm; ++m) sum += values[m * branches.size() + b];
        if (!(sum == values[nm * branches.size() + b]))
            throw std::logic_error("first_order_obstruction: linearity cross-check failed");
    }
    Scalar mono_total(0);
    for (const auto& [e, v] : report.per_monomial) mono_total += v;
    if (!(mono_total == report.total))
        throw std::logic_error("first_order_obstruction: per-monomial totals disagree");
    return report;
}

ObstructionReport symbolic_obstruction(const std::array<Scalar, 4>& H, int order) {
    QuarticForm all;
    for (const auto& e : QuarticForm::monomial_basis()) all.set(e, Scalar(1));
    return first_order_obstruction(all, H, order);
}

Scalar node_contribution_reference(const QuarticForm& f, const std::array<Scalar, 4>& H,
                                   int edge) {
    for (int i = 0; i < 4; ++i)
        if (H[static_cast<std::size_t>(i)].is_zero())
            throw precondition_error(std::string("node_contribution_reference: coefficient of ") +
                                     coord_name(i) + " vanishes");
    // Contributions are invariant under rescaling of H; normalize the w
    // coefficient away so the three formulas read off the remaining ratios.
    const Scalar al = H[0] / H[3], be = H[1] / H[3], ga = H[2] / H[3];
    const Scalar zero(0);
    if (edge == CentralFiber::edge_index(2, 3)) {
        const ProjPoint p{{be, -al, zero, zero}};
        const ChartDecomposition d = chart_decompose(f, 0, p);
        const std::array<Scalar, 4> at{d.b, zero, zero, zero};
        return be / (al * al) * d.g2.eval(at) - be * ga / (al * al) * d.g3.eval(at);
    }
    if (edge == CentralFiber::edge_index(1, 3)) {
        const ProjPoint p{{-ga, zero, al, zero}};
        const ChartDecomposition d = chart_decompose(f, 0, p);
        const std::array<Scalar, 4> at{zero, d.b, zero, zero};
        return -(ga / (al * al)) * d.g2.eval(at) + be * ga / (al * al) * d.g3.eval(at);
    }
    if (edge == CentralFiber::edge_index(0, 3)) {
        const ProjPoint p{{zero, -ga, be, zero}};
        const ChartDecomposition d = chart_decompose(f, 1, p);
        const std::array<Scalar, 4> at{zero, d.b, zero, zero};
        return ga / (be * be) * d.g2.eval(at) - al * ga / (be * be) * d.g3.eval(at);
    }
    throw precondition_error(
        "node_contribution_reference: closed forms exist only for the nodes on the {w=0} line "
        "(edges {z,w}, {y,w}, {x,w})");
}

}  // namespace degen
