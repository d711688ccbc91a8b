#include "degen/residue.hpp"

#include <stdexcept>

#include "degen/errors.hpp"

namespace degen {

PlaneResidueFrame PlaneResidueFrame::standard(int plane) {
    if (plane < 0 || plane > 3) throw precondition_error("residue frame: bad plane");
    PlaneResidueFrame fr;
    fr.plane = plane;
    fr.edges = CentralFiber::plane_edges(plane);
    // The fan of the plane, its rays listed against the plane's three edges
    // in canonical order.
    fr.rays = {{{-1, -1}, {1, 0}, {0, 1}}};
    fr.covectors = {{{1, -1}, {0, 1}, {-1, 0}}};
    return fr;
}

bool PlaneResidueFrame::check() const {
    int re0 = 0, re1 = 0, rf0 = 0, rf1 = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& e = rays[static_cast<std::size_t>(i)];
        const auto& f = covectors[static_cast<std::size_t>(i)];
        if (e[0] * f[0] + e[1] * f[1] != 0) return false;
        re0 += e[0];
        re1 += e[1];
        rf0 += f[0];
        rf1 += f[1];
    }
    return re0 == 0 && re1 == 0 && rf0 == 0 && rf1 == 0;
}

std::array<int, 4> ambient_covector(int plane, int edge) {
    const auto [a, b] = CentralFiber::edges()[static_cast<std::size_t>(edge)];
    if (plane != a && plane != b) throw precondition_error("ambient_covector: edge not on plane");
    // The covector lifts to the difference of the two exponent functionals
    // that survive on the edge; the sign depends on the edge's position in
    // the plane's canonical edge list, with an alternating per-plane twist
    // making the two sides of each edge opposite.
    const auto [k, l] = CentralFiber::surviving(edge);
    int position = -1;
    const auto pe = CentralFiber::plane_edges(plane);
    for (int i = 0; i < 3; ++i)
        if (pe[static_cast<std::size_t>(i)] == edge) position = i;
    if (position < 0) throw std::logic_error("ambient_covector: edge lookup failed");
    const int sigma = position == 1 ? -1 : 1;
    const int tau = plane % 2 == 0 ? 1 : -1;
    std::array<int, 4> out{0, 0, 0, 0};
    out[static_cast<std::size_t>(k)] = sigma * tau;
    out[static_cast<std::size_t>(l)] = -sigma * tau;
    return out;
}

ResidueSystem residue_system(const CurveGraph& curve) {
    ResidueSystem sys;
    sys.unknowns = static_cast<int>(curve.vertices.size());
    for (const auto& n : curve.nodes) {
        const int p1 = curve.vertices[static_cast<std::size_t>(n.v1)].plane;
        const int p2 = curve.vertices[static_cast<std::size_t>(n.v2)].plane;
        const int e = CentralFiber::edge_index(p1, p2);
        if (e < 0) throw precondition_error("residue system: node between non-adjacent planes");
        const auto c1 = ambient_covector(p1, e);
        const auto c2 = ambient_covector(p2, e);
        // r' + r'' = 0 with r = c_v * covector; the two ambient covectors are
        // negatives of each other, so the row is c_{v1} - c_{v2}.
        int rel = 0;  // c2 = rel * c1
        for (int i = 0; i < 4; ++i) {
            if (c1[static_cast<std::size_t>(i)] == 0) continue;
            rel = c2[static_cast<std::size_t>(i)] / c1[static_cast<std::size_t>(i)];
        }
        if (rel != 1 && rel != -1) throw std::logic_error("residue system: frames not aligned");
        std::vector<mpq_class> row(static_cast<std::size_t>(sys.unknowns), 0);
        row[static_cast<std::size_t>(n.v1)] += 1;
        row[static_cast<std::size_t>(n.v2)] += rel;
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

DualObstruction dual_obstruction_dim(const CurveGraph& curve, const QuarticForm& f) {
    const ValidityReport report = validate(curve, f);
    if (!report.pre_smoothable) {
        std::string msg = "dual_obstruction_dim: curve not pre-smoothable";
        for (const auto& v : report.violations) msg += "; " + v;
        throw precondition_error(msg);
    }
    if (!curve.connected()) throw precondition_error("dual_obstruction_dim: disconnected curve");
    const ResidueSystem sys = residue_system(curve);
    DualObstruction out;
    out.basis = linalg::kernel_basis(sys.rows, static_cast<std::size_t>(sys.unknowns));
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

bool generator_restriction_compare(const CurveGraph& a, const CurveGraph& b, const QuarticForm& f) {
    for (const CurveGraph* c : {&a, &b}) {
        const ValidityReport report = validate(*c, f);
        if (!report.pre_log) throw precondition_error("generator comparison needs pre-log curves");
        if (!c->connected()) throw precondition_error("generator comparison needs connected curves");
    }
    if (a.vertices.size() != b.vertices.size()) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        if (a.vertices[i].plane != b.vertices[i].plane) return false;
        // Lines must agree as projective hyperplane classes.
        const auto& ha = a.vertices[i].line.h;
        const auto& hb = b.vertices[i].line.h;
        for (int s = 0; s < 4; ++s)
            for (int t = s + 1; t < 4; ++t) {
                const Scalar m = ha[static_cast<std::size_t>(s)] * hb[static_cast<std::size_t>(t)] -
                                 ha[static_cast<std::size_t>(t)] * hb[static_cast<std::size_t>(s)];
                if (!m.is_zero()) return false;
            }
    }
    auto normalized_generator = [](const CurveGraph& c) {
        const auto basis = linalg::kernel_basis(residue_system(c).rows, c.vertices.size());
        if (basis.size() != 1)
            throw precondition_error("generator comparison needs a one-dimensional dual space");
        std::vector<mpq_class> g = basis[0];
        mpq_class lead = 0;
        for (const auto& x : g)
            if (x != 0) {
                lead = x;
                break;
            }
        if (lead == 0) throw std::logic_error("zero kernel vector");
        for (auto& x : g) x /= lead;
        return g;
    };
    return normalized_generator(a) == normalized_generator(b);
}

}  // namespace degen
