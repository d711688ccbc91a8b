#include "degen/graft.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "degen/errors.hpp"

namespace degen {

namespace {

void require_singular_point(const QuarticForm& f, const ProjPoint& p, const std::string& who) {
    if (!p.is_rational())
        throw precondition_error(who + ": point " + p.str() + " is not rational");
    if (!on_singular_locus(f, p))
        throw precondition_error(who + ": point " + p.str() + " is not a singular point of the family");
}

void require_node_position(const QuarticForm& f, const ProjPoint& p, const std::string& who) {
    if (!p.is_rational())
        throw precondition_error(who + ": point " + p.str() + " is not rational");
    if (p.zero_coords().size() != 2)
        throw precondition_error(who + ": point " + p.str() + " is not interior to an edge");
    if (on_singular_locus(f, p))
        throw precondition_error(who + ": prescribed node position " + p.str() +
                                 " lies on the singular locus");
}

CurveGraph section_through(const QuarticForm& f, const std::vector<ProjPoint>& points,
                           const std::string& who) {
    HyperplaneThroughResult sols = hyperplane_through(points);
    if (sols.spread_checked && !sols.spread_ok)
        throw precondition_error(who + ": the three points lie in a single component plane");
    return hyperplane_section(pick_hyperplane(sols), f);
}

void require_shape(const CurveGraph& c, const QuarticForm& f, std::size_t nodes, std::size_t marks,
                   int genus, bool simply, const std::string& who) {
    if (!c.connected()) throw claim_error(who + ": section is disconnected");
    if (c.nodes.size() != nodes || c.smarks.size() != marks || c.genus() != genus) {
        std::ostringstream os;
        os << who << ": section has " << c.nodes.size() << " nodes, " << c.smarks.size()
           << " marks, genus " << c.genus() << "; expected " << nodes << ", " << marks << ", "
           << genus << " (non-generic incidence)";
        throw claim_error(os.str());
    }
    ValidityReport v = validate(c, f);
    bool ok = simply ? v.simply_pre_smoothable : v.pre_smoothable;
    if (!ok) {
        std::string msg = who + ": section fails validity:";
        for (const auto& viol : v.violations) msg += " [" + viol + "]";
        throw claim_error(msg);
    }
}

// Union-find components over the node-edges listed in `edges`.
struct Components {
    std::vector<int> parent;
    explicit Components(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::string hyperplane_str(const std::array<Scalar, 4>& h) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (h[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + h[i].str() + ")*" + coord_name(i);
    }
    return out.empty() ? "0" : out;
}

// The image of a graft is the base hyperplane section plus the auxiliary one
// taken with multiplicity `aux_mult`, inside the central fiber.
std::string image_equation_str(const CurveGraph& base, const CurveGraph& aux, int aux_mult) {
    std::string eq = "(" + hyperplane_str(base.vertices[0].line.h) + ")";
    if (aux_mult >= 1) {
        eq += " * (" + hyperplane_str(aux.vertices[0].line.h) + ")";
        if (aux_mult > 1) eq += "^" + std::to_string(aux_mult);
    }
    return eq + " = 0 on x*y*z*w = 0";
}

void require_recipe_curve(const CurveGraph& c, std::size_t vertices, std::size_t nodes,
                          std::size_t marks, int genus, const std::string& who,
                          const std::string& role) {
    c.check_structure();
    bool ok = c.vertices.size() == vertices && c.nodes.size() == nodes &&
              c.smarks.size() == marks && c.connected() && c.genus() == genus;
    if (!ok) {
        std::ostringstream os;
        os << who << ": " << role << " curve must have " << vertices << " components, " << nodes
           << " nodes, " << marks << " marks and genus " << genus;
        throw precondition_error(os.str());
    }
}

// Shared checks of a graft recipe; returns the common image point of the two
// designated nodes.
ProjPoint check_recipe_common(const GraftRecipe& recipe, int aux_nodes, int aux_marks,
                              int aux_genus, const std::string& who) {
    if (recipe.r < 1) throw precondition_error(who + ": covering degree must be at least 1");
    require_recipe_curve(recipe.base, 4, 3, 6, 0, who, "base");
    require_recipe_curve(recipe.aux, 4, aux_nodes, aux_marks, aux_genus, who, "auxiliary");
    if (recipe.base_node < 0 || recipe.base_node >= (int)recipe.base.nodes.size())
        throw precondition_error(who + ": base node index out of range");
    if (recipe.aux_node < 0 || recipe.aux_node >= (int)recipe.aux.nodes.size())
        throw precondition_error(who + ": auxiliary node index out of range");
    const NodeEdge& bn = recipe.base.nodes[recipe.base_node];
    const NodeEdge& an = recipe.aux.nodes[recipe.aux_node];
    if (!proj_equal(bn.point, an.point))
        throw precondition_error(who + ": base and auxiliary curves do not share the graft point (" +
                                 bn.point.str() + " vs " + an.point.str() + ")");
    if (on_singular_locus(recipe.f, bn.point))
        throw precondition_error(who + ": graft point " + bn.point.str() +
                                 " lies on the singular locus");
    // Both nodes must join the same pair of planes, or the re-gluing cannot
    // alternate planes.
    int bp1 = recipe.base.vertices[bn.v1].plane, bp2 = recipe.base.vertices[bn.v2].plane;
    int ap1 = recipe.aux.vertices[an.v1].plane, ap2 = recipe.aux.vertices[an.v2].plane;
    if (std::minmax(bp1, bp2) != std::minmax(ap1, ap2))
        throw precondition_error(who + ": the two graft nodes join different pairs of planes");
    return bn.point;
}

}  // namespace

CurveGraph degree4_rational(const QuarticForm& f, const std::array<ProjPoint, 3>& s_points) {
    const std::string who = "degree4_rational";
    for (const auto& p : s_points) require_singular_point(f, p, who);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (proj_equal(s_points[i], s_points[j]))
                throw precondition_error(who + ": the three singular points must be distinct");
    CurveGraph c = section_through(f, {s_points[0], s_points[1], s_points[2]}, who);
    require_shape(c, f, 3, 6, 0, /*simply=*/true, who);
    return c;
}

CurveGraph degree4_elliptic(const QuarticForm& f, const std::array<ProjPoint, 2>& s_points,
                            const ProjPoint& through_node) {
    const std::string who = "degree4_elliptic";
    for (const auto& p : s_points) require_singular_point(f, p, who);
    if (proj_equal(s_points[0], s_points[1]))
        throw precondition_error(who + ": the two singular points must be distinct");
    require_node_position(f, through_node, who);
    CurveGraph c = section_through(f, {s_points[0], s_points[1], through_node}, who);
    require_shape(c, f, 4, 4, 1, /*simply=*/false, who);
    return c;
}

CurveGraph degree4_genus2(const QuarticForm& f, const ProjPoint& s_point,
                          const ProjPoint& through_node) {
    const std::string who = "degree4_genus2";
    require_singular_point(f, s_point, who);
    require_node_position(f, through_node, who);
    CurveGraph c = section_through(f, {s_point, through_node}, who);
    require_shape(c, f, 5, 2, 2, /*simply=*/false, who);
    return c;
}

CurveGraph cover_at(const CurveGraph& curve, int r, int rewire_edge) {
    const std::string who = "cover";
    if (r < 1) throw precondition_error(who + ": covering degree must be at least 1");
    curve.check_structure();
    if (!curve.connected() || curve.genus() != 1)
        throw precondition_error(who + ": input must be a connected curve of genus 1");
    if (rewire_edge < 0 || rewire_edge >= (int)curve.nodes.size())
        throw precondition_error(who + ": rewire edge index out of range");
    {
        CurveGraph probe = curve;
        probe.nodes.erase(probe.nodes.begin() + rewire_edge);
        if (!probe.connected())
            throw precondition_error(who + ": chosen edge is not on the cycle (cutting it disconnects)");
    }

    const std::size_t V = curve.vertices.size();
    const std::size_t E = curve.nodes.size();
    const std::size_t S = curve.smarks.size();
    CurveGraph out;
    out.vertices.reserve(V * r);
    out.nodes.reserve(E * r);
    out.smarks.reserve(S * r);
    for (int c = 0; c < r; ++c)
        for (const auto& v : curve.vertices) out.vertices.push_back(v);
    for (int c = 0; c < r; ++c) {
        for (std::size_t k = 0; k < E; ++k) {
            NodeEdge n = curve.nodes[k];
            int off2 = ((int)k == rewire_edge) ? (int)(((c + 1) % r) * V) : (int)(c * V);
            n.v1 += (int)(c * V);
            n.v2 += off2;
            out.nodes.push_back(n);
        }
    }
    for (int c = 0; c < r; ++c) {
        for (const auto& m : curve.smarks) {
            SMark mm = m;
            mm.vertex += (int)(c * V);
            if (mm.partner >= 0) mm.partner += (int)(c * S);
            out.smarks.push_back(mm);
        }
    }
    out.check_structure();
    if (!out.connected() || out.genus() != 1)
        throw claim_error(who + ": cover lost connectivity or genus (internal bookkeeping error)");
    return out;
}

CurveGraph cover(const CurveGraph& curve, int r) {
    curve.check_structure();
    if (!curve.connected() || curve.genus() != 1)
        throw precondition_error("cover: input must be a connected curve of genus 1");
    for (std::size_t k = 0; k < curve.nodes.size(); ++k) {
        CurveGraph probe = curve;
        probe.nodes.erase(probe.nodes.begin() + k);
        if (probe.connected()) return cover_at(curve, r, (int)k);
    }
    throw precondition_error("cover: no cycle edge found");  // unreachable for genus 1
}

GraftResult graft_rational(const GraftRecipe& recipe) {
    const std::string who = "graft_rational";
    ProjPoint nu = check_recipe_common(recipe, 4, 4, 1, who);
    const int r = recipe.r;
    if (recipe.cut_copies[0] == recipe.cut_copies[1] && r > 1)
        throw precondition_error(who + ": the two cut copies must be distinct");
    for (int c : recipe.cut_copies)
        if (r > 1 && (c < 0 || c >= r))
            throw precondition_error(who + ": cut copy index out of range");

    if (r == 1) return {recipe.base, image_equation_str(recipe.base, recipe.aux, 0)};

    CurveGraph cov = cover_at(recipe.aux, r, recipe.aux_node);
    const std::size_t Va = recipe.aux.vertices.size();  // 4
    const std::size_t Ea = recipe.aux.nodes.size();     // 4
    const int c0 = std::min(recipe.cut_copies[0], recipe.cut_copies[1]);
    const int c1 = std::max(recipe.cut_copies[0], recipe.cut_copies[1]);
    const std::size_t cut0 = (std::size_t)c0 * Ea + (std::size_t)recipe.aux_node;
    const std::size_t cut1 = (std::size_t)c1 * Ea + (std::size_t)recipe.aux_node;

    // Components of the cover after severing the two chosen copies of the
    // graft node.
    Components comp(cov.vertices.size());
    for (std::size_t k = 0; k < cov.nodes.size(); ++k) {
        if (k == cut0 || k == cut1) continue;
        comp.unite(cov.nodes[k].v1, cov.nodes[k].v2);
    }
    const int av1 = recipe.aux.nodes[recipe.aux_node].v1;
    const int av2 = recipe.aux.nodes[recipe.aux_node].v2;
    // Stubs left dangling on the kept side of each cut.
    const int stub_a = (int)((std::size_t)c0 * Va) + av1;
    const int stub_b = (int)((std::size_t)((c1 + 1) % r) * Va) + av2;
    const int keep = comp.find(stub_a);

    std::vector<int> new_index(cov.vertices.size(), -1);
    CurveGraph out;
    out.vertices = recipe.base.vertices;  // base components first
    for (std::size_t v = 0; v < cov.vertices.size(); ++v) {
        if (comp.find((int)v) != keep) continue;
        new_index[v] = (int)out.vertices.size();
        out.vertices.push_back(cov.vertices[v]);
    }
    if (out.vertices.size() != 4 + 4 * (std::size_t)(r - 1))
        throw claim_error(who + ": cutting left a piece of the wrong size (cut copies must be adjacent)");
    if (new_index[stub_b] < 0)
        throw claim_error(who + ": the two stubs ended up in different pieces");

    for (std::size_t k = 0; k < recipe.base.nodes.size(); ++k)
        if ((int)k != recipe.base_node) out.nodes.push_back(recipe.base.nodes[k]);
    for (std::size_t k = 0; k < cov.nodes.size(); ++k) {
        if (k == cut0 || k == cut1) continue;
        NodeEdge n = cov.nodes[k];
        if (new_index[n.v1] < 0) continue;  // whole edge lives in the discarded piece
        n.v1 = new_index[n.v1];
        n.v2 = new_index[n.v2];
        out.nodes.push_back(n);
    }

    // Two new node-edges over the graft point, each joining the base half to
    // the cover stub sitting in the other plane.
    const NodeEdge& bn = recipe.base.nodes[recipe.base_node];
    const int plane_p = recipe.base.vertices[bn.v1].plane;
    const int plane_a = recipe.aux.vertices[av1].plane;
    int to_stub_a = (plane_p == plane_a) ? bn.v2 : bn.v1;
    int to_stub_b = (plane_p == plane_a) ? bn.v1 : bn.v2;
    out.nodes.push_back(NodeEdge{to_stub_a, new_index[stub_a], nu, 1, 1});
    out.nodes.push_back(NodeEdge{to_stub_b, new_index[stub_b], nu, 1, 1});

    out.smarks = recipe.base.smarks;
    std::vector<int> mark_index(cov.smarks.size(), -1);
    for (std::size_t m = 0; m < cov.smarks.size(); ++m) {
        if (new_index[cov.smarks[m].vertex] < 0) continue;
        mark_index[m] = (int)out.smarks.size();
        SMark mm = cov.smarks[m];
        mm.vertex = new_index[mm.vertex];
        out.smarks.push_back(mm);
    }
    for (std::size_t m = 0; m < cov.smarks.size(); ++m) {
        if (mark_index[m] < 0) continue;
        SMark& mm = out.smarks[(std::size_t)mark_index[m]];
        if (mm.partner >= 0) {
            if (mark_index[(std::size_t)mm.partner] < 0)
                throw claim_error(who + ": a partnered mark pair was split by the cut");
            mm.partner = mark_index[(std::size_t)mm.partner];
        }
    }

    out.check_structure();
    bool counts_ok = out.connected() && out.genus() == 0 &&
                     out.vertices.size() == 4 * (std::size_t)r &&
                     out.nodes.size() == 4 * (std::size_t)r - 1 &&
                     out.smarks.size() == 4 * (std::size_t)r + 2 && out.degree() == 4 * r;
    if (!counts_ok) {
        std::ostringstream os;
        os << who << ": result has " << out.vertices.size() << " components, " << out.nodes.size()
           << " nodes, " << out.smarks.size() << " marks, genus "
           << (out.connected() ? out.genus() : -1) << "; expected " << 4 * r << ", " << 4 * r - 1
           << ", " << 4 * r + 2 << ", genus 0";
        throw claim_error(os.str());
    }
    ValidityReport v = validate(out, recipe.f);
    if (!v.simply_pre_smoothable) {
        std::string msg = who + ": result fails validity:";
        for (const auto& viol : v.violations) msg += " [" + viol + "]";
        throw claim_error(msg);
    }
    return {out, image_equation_str(recipe.base, recipe.aux, r - 1)};
}

GraftResult graft_genus(const GraftRecipe& recipe) {
    const std::string who = "graft_genus";
    ProjPoint nu = check_recipe_common(recipe, 5, 2, 2, who);
    const int r = recipe.r;

    const int av1 = recipe.aux.nodes[recipe.aux_node].v1;
    const int av2 = recipe.aux.nodes[recipe.aux_node].v2;
    const std::size_t Va = recipe.aux.vertices.size();  // 4
    const std::size_t Sa = recipe.aux.smarks.size();    // 2

    CurveGraph out;
    out.vertices = recipe.base.vertices;
    for (int c = 0; c < r; ++c)
        for (const auto& v : recipe.aux.vertices) out.vertices.push_back(v);
    auto copy_vertex = [&](int c, int v) { return (int)(4 + (std::size_t)c * Va) + v; };

    for (std::size_t k = 0; k < recipe.base.nodes.size(); ++k)
        if ((int)k != recipe.base_node) out.nodes.push_back(recipe.base.nodes[k]);
    for (int c = 0; c < r; ++c) {
        for (std::size_t k = 0; k < recipe.aux.nodes.size(); ++k) {
            if ((int)k == recipe.aux_node) continue;  // cut in every copy
            NodeEdge n = recipe.aux.nodes[k];
            n.v1 = copy_vertex(c, n.v1);
            n.v2 = copy_vertex(c, n.v2);
            out.nodes.push_back(n);
        }
    }
    // Chain the copies through the graft point, alternating planes.
    for (int c = 0; c + 1 < r; ++c)
        out.nodes.push_back(NodeEdge{copy_vertex(c, av1), copy_vertex(c + 1, av2), nu, 1, 1});
    // Attach the two halves of the cut base at the free ends of the chain.
    const NodeEdge& bn = recipe.base.nodes[recipe.base_node];
    const int plane_a1 = recipe.aux.vertices[av1].plane;
    int base_like_a1 = (recipe.base.vertices[bn.v1].plane == plane_a1) ? bn.v1 : bn.v2;
    int base_like_a2 = (base_like_a1 == bn.v1) ? bn.v2 : bn.v1;
    out.nodes.push_back(NodeEdge{base_like_a1, copy_vertex(0, av2), nu, 1, 1});
    out.nodes.push_back(NodeEdge{base_like_a2, copy_vertex(r - 1, av1), nu, 1, 1});

    out.smarks = recipe.base.smarks;
    const int base_marks = (int)recipe.base.smarks.size();
    for (int c = 0; c < r; ++c) {
        for (const auto& m : recipe.aux.smarks) {
            SMark mm = m;
            mm.vertex = copy_vertex(c, mm.vertex);
            if (mm.partner >= 0) mm.partner += base_marks + (int)((std::size_t)c * Sa);
            out.smarks.push_back(mm);
        }
    }

    out.check_structure();
    bool counts_ok = out.connected() && out.genus() == r &&
                     out.vertices.size() == 4 * (std::size_t)r + 4 &&
                     out.nodes.size() == 5 * (std::size_t)r + 3 &&
                     out.smarks.size() == 2 * (std::size_t)r + 6;
    if (!counts_ok) {
        std::ostringstream os;
        os << who << ": result has " << out.vertices.size() << " components, " << out.nodes.size()
           << " nodes, " << out.smarks.size() << " marks, genus "
           << (out.connected() ? out.genus() : -1) << "; expected " << 4 * r + 4 << ", "
           << 5 * r + 3 << ", " << 2 * r + 6 << ", genus " << r;
        throw claim_error(os.str());
    }
    ValidityReport v = validate(out, recipe.f);
    if (!v.pre_smoothable) {
        std::string msg = who + ": result fails validity:";
        for (const auto& viol : v.violations) msg += " [" + viol + "]";
        throw claim_error(msg);
    }
    return {out, image_equation_str(recipe.base, recipe.aux, r)};
}

namespace {

int node_at_point(const CurveGraph& c, const ProjPoint& p, const std::string& who) {
    for (std::size_t k = 0; k < c.nodes.size(); ++k)
        if (proj_equal(c.nodes[k].point, p)) return (int)k;
    throw claim_error(who + ": auxiliary curve has no node over the graft point " + p.str());
}

}  // namespace

GraftRecipe make_rational_recipe(const QuarticForm& f, const std::array<ProjPoint, 3>& base_points,
                                 const std::array<ProjPoint, 2>& aux_points, int base_node_index,
                                 int r) {
    const std::string who = "make_rational_recipe";
    GraftRecipe recipe;
    recipe.f = f;
    recipe.base = degree4_rational(f, base_points);
    if (base_node_index < 0 || base_node_index >= (int)recipe.base.nodes.size())
        throw precondition_error(who + ": base node index out of range");
    recipe.base_node = base_node_index;
    const ProjPoint& nu = recipe.base.nodes[(std::size_t)base_node_index].point;
    recipe.aux = degree4_elliptic(f, aux_points, nu);
    recipe.aux_node = node_at_point(recipe.aux, nu, who);
    recipe.r = r;
    recipe.cut_copies = {0, 1};
    return recipe;
}

GraftRecipe make_genus_recipe(const QuarticForm& f, const std::array<ProjPoint, 3>& base_points,
                              const ProjPoint& aux_point, int base_node_index, int r) {
    const std::string who = "make_genus_recipe";
    GraftRecipe recipe;
    recipe.f = f;
    recipe.base = degree4_rational(f, base_points);
    if (base_node_index < 0 || base_node_index >= (int)recipe.base.nodes.size())
        throw precondition_error(who + ": base node index out of range");
    recipe.base_node = base_node_index;
    const ProjPoint& nu = recipe.base.nodes[(std::size_t)base_node_index].point;
    recipe.aux = degree4_genus2(f, aux_point, nu);
    recipe.aux_node = node_at_point(recipe.aux, nu, who);
    recipe.r = r;
    recipe.cut_copies = {0, 1};
    return recipe;
}

}  // namespace degen
