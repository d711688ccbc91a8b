#include "degen/curve_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "degen/errors.hpp"

namespace degen {

namespace {
// Plane ids are the vanishing coordinates: 0 = {x=0} = "m", 1 = {y=0} = "n",
// 2 = {z=0} = "k", 3 = {w=0} = "l".
const char* kAlias[4] = {"m", "n", "k", "l"};
const int kAliasRank[4] = {1, 2, 3, 0};  // display order l, m, n, k
}  // namespace

const char* plane_alias(int plane) { return kAlias[plane]; }

int plane_from_alias(const std::string& alias) {
    for (int i = 0; i < 4; ++i)
        if (alias == kAlias[i]) return i;
    return -1;
}

int alias_rank(int plane) { return kAliasRank[plane]; }

std::string node_display_name(int plane_a, int plane_b) {
    if (alias_rank(plane_a) > alias_rank(plane_b)) std::swap(plane_a, plane_b);
    return std::string(plane_alias(plane_a)) + "^" + plane_alias(plane_b);
}

std::pair<int, int> parse_node_name(const std::string& name) {
    const auto sep = name.find('^');
    if (sep == std::string::npos) throw parse_error("node name must look like l^k");
    const int a = plane_from_alias(name.substr(0, sep));
    const int b = plane_from_alias(name.substr(sep + 1));
    if (a < 0 || b < 0 || a == b) throw parse_error("unknown node name: " + name);
    return {std::min(a, b), std::max(a, b)};
}

void CurveGraph::check_structure() const {
    const int nv = static_cast<int>(vertices.size());
    for (const auto& v : vertices) {
        if (v.plane < 0 || v.plane > 3) throw precondition_error("curve: bad plane id");
        if (v.line.plane != v.plane) throw precondition_error("curve: line not in its vertex's plane");
        if (!v.line.well_formed()) throw precondition_error("curve: degenerate line form");
    }
    for (const auto& n : nodes) {
        if (n.v1 < 0 || n.v1 >= nv || n.v2 < 0 || n.v2 >= nv || n.v1 == n.v2)
            throw precondition_error("curve: bad node incidence");
        if (n.w1 < 1 || n.w2 < 1) throw precondition_error("curve: node weights must be positive");
        if (n.point.zero_coords().size() == 4) throw precondition_error("curve: zero node point");
        for (int v : {n.v1, n.v2})
            if (!vertices[static_cast<std::size_t>(v)].line.form_at(n.point).is_zero())
                throw precondition_error("curve: node image off its component line");
        const int p1 = vertices[static_cast<std::size_t>(n.v1)].plane;
        const int p2 = vertices[static_cast<std::size_t>(n.v2)].plane;
        if (p1 != p2) {
            if (!n.point.x[static_cast<std::size_t>(p1)].is_zero() ||
                !n.point.x[static_cast<std::size_t>(p2)].is_zero())
                throw precondition_error("curve: node image off the planes' common edge");
        }
    }
    const int ns = static_cast<int>(smarks.size());
    for (int i = 0; i < ns; ++i) {
        const auto& s = smarks[static_cast<std::size_t>(i)];
        if (s.vertex < 0 || s.vertex >= nv) throw precondition_error("curve: bad mark incidence");
        if (s.weight < 1) throw precondition_error("curve: mark weight must be positive");
        if (s.point.zero_coords().size() == 4) throw precondition_error("curve: zero mark point");
        if (!vertices[static_cast<std::size_t>(s.vertex)].line.form_at(s.point).is_zero())
            throw precondition_error("curve: mark image off its component line");
        if (s.partner >= 0) {
            if (s.partner >= ns || s.partner == i)
                throw precondition_error("curve: bad mark partner index");
            const auto& o = smarks[static_cast<std::size_t>(s.partner)];
            if (o.partner != i) throw precondition_error("curve: mark partner relation not symmetric");
            if (!proj_equal(s.point, o.point))
                throw precondition_error("curve: partnered marks with different image points");
        }
    }
}

bool CurveGraph::connected() const {
    if (vertices.size() <= 1) return true;
    std::vector<int> root(vertices.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int a) {
        while (root[static_cast<std::size_t>(a)] != a) {
            root[static_cast<std::size_t>(a)] =
                root[static_cast<std::size_t>(root[static_cast<std::size_t>(a)])];
            a = root[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (const auto& n : nodes) root[static_cast<std::size_t>(find(n.v1))] = find(n.v2);
    const int r0 = find(0);
    for (int v = 1; v < static_cast<int>(vertices.size()); ++v)
        if (find(v) != r0) return false;
    return true;
}

int CurveGraph::genus() const {
    if (!connected()) throw precondition_error("genus: curve graph is disconnected");
    return static_cast<int>(nodes.size()) - static_cast<int>(vertices.size()) + 1;
}

int CurveGraph::degree() const { return static_cast<int>(vertices.size()); }

namespace {

/// Exact test for an edge-interior point lying on {f = 0}.
bool point_on_locus(const QuarticForm& f, const ProjPoint& p) { return f.eval(p.x).is_zero(); }

}  // namespace

ValidityReport validate(const CurveGraph& curve, const QuarticForm& f) {
    curve.check_structure();
    ValidityReport report;
    auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    bool ok_tt = true;
    for (std::size_t i = 0; i < curve.vertices.size(); ++i) {
        const auto& v = curve.vertices[i];
        if (!check_torically_transverse(v.line)) {
            ok_tt = false;
            fail("component " + std::to_string(i) + " (" + plane_alias(v.plane) +
                 "): line passes through a coordinate point of its plane");
        }
    }

    bool ok_prelog = true;
    for (std::size_t i = 0; i < curve.nodes.size(); ++i) {
        const auto& n = curve.nodes[i];
        const int p1 = curve.vertices[static_cast<std::size_t>(n.v1)].plane;
        const int p2 = curve.vertices[static_cast<std::size_t>(n.v2)].plane;
        if (p1 == p2) {
            ok_prelog = false;
            fail("node " + std::to_string(i) + ": branches map to the same plane " +
                 plane_alias(p1));
        }
        if (n.w1 != n.w2) {
            ok_prelog = false;
            fail("node " + std::to_string(i) + ": weight mismatch " + std::to_string(n.w1) +
                 " != " + std::to_string(n.w2));
        }
    }

    bool ok_presmooth = true;
    for (std::size_t i = 0; i < curve.nodes.size(); ++i) {
        const auto& n = curve.nodes[i];
        if (n.point.zero_coords().size() == 2 && point_on_locus(f, n.point)) {
            ok_presmooth = false;
            fail("node " + std::to_string(i) + ": image " + n.point.str() +
                 " lies on the singular locus");
        }
    }
    for (std::size_t i = 0; i < curve.smarks.size(); ++i) {
        const auto& s = curve.smarks[i];
        if (s.point.zero_coords().size() != 2 || !point_on_locus(f, s.point)) {
            ok_presmooth = false;
            fail("mark " + std::to_string(i) + ": image " + s.point.str() +
                 " is not on the singular locus");
        }
        // Regularity on the component: distinct from node images and from
        // other marks on the same vertex.
        for (std::size_t j = 0; j < curve.nodes.size(); ++j) {
            const auto& n = curve.nodes[j];
            if ((n.v1 == s.vertex || n.v2 == s.vertex) && proj_equal(n.point, s.point)) {
                ok_presmooth = false;
                fail("mark " + std::to_string(i) + ": image coincides with node " +
                     std::to_string(j) + " on the same component");
            }
        }
        for (std::size_t j = i + 1; j < curve.smarks.size(); ++j) {
            const auto& o = curve.smarks[j];
            if (o.vertex == s.vertex && proj_equal(o.point, s.point)) {
                ok_presmooth = false;
                fail("marks " + std::to_string(i) + " and " + std::to_string(j) +
                     ": coincident on the same component");
            }
        }
    }

    // Degree-1 components are built into the representation; report stays
    // for the hierarchy's sake.
    const bool ok_simple = true;

    report.torically_transverse = ok_tt;
    report.pre_log = ok_tt && ok_prelog;
    report.pre_smoothable = report.pre_log && ok_presmooth;
    report.simply_pre_smoothable = report.pre_smoothable && ok_simple;
    return report;
}

CurveGraph hyperplane_section(const std::array<Scalar, 4>& H, const QuarticForm& f,
                              bool keep_s_nodes) {
    for (int i = 0; i < 4; ++i)
        if (H[static_cast<std::size_t>(i)].is_zero())
            throw precondition_error(std::string("hyperplane_section: coefficient of ") +
                                     coord_name(i) +
                                     " vanishes (hyperplane meets a vertex of the tetrahedron)");
    CurveGraph g;
    for (int p = 0; p < 4; ++p) g.vertices.push_back({p, line_in_plane(H, p)});
    for (int e = 0; e < CentralFiber::kEdges; ++e) {
        const auto [i, j] = CentralFiber::edges()[static_cast<std::size_t>(e)];
        const ProjPoint pt = line_edge_point(g.vertices[static_cast<std::size_t>(i)].line, j);
        if (point_on_locus(f, pt) && !keep_s_nodes) {
            const int first = static_cast<int>(g.smarks.size());
            g.smarks.push_back({i, pt, 1, e, first + 1});
            g.smarks.push_back({j, pt, 1, e, first});
        } else {
            g.nodes.push_back({i, j, pt, 1, 1});
        }
    }
    g.check_structure();
    return g;
}

std::string to_dot(const CurveGraph& curve) {
    std::ostringstream out;
    out << "graph curve {\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < curve.vertices.size(); ++i)
        out << "  v" << i << " [label=\"" << plane_alias(curve.vertices[i].plane) << i << "\"];\n";
    for (std::size_t i = 0; i < curve.smarks.size(); ++i)
        out << "  s" << i << " [shape=none, label=\"x\"];\n";
    for (const auto& n : curve.nodes) {
        const int p1 = curve.vertices[static_cast<std::size_t>(n.v1)].plane;
        const int p2 = curve.vertices[static_cast<std::size_t>(n.v2)].plane;
        out << "  v" << n.v1 << " -- v" << n.v2 << " [label=\"" << node_display_name(p1, p2)
            << "\"];\n";
    }
    for (std::size_t i = 0; i < curve.smarks.size(); ++i)
        out << "  v" << curve.smarks[i].vertex << " -- s" << i << " [style=dashed];\n";
    out << "}\n";
    return out.str();
}

}  // namespace degen
