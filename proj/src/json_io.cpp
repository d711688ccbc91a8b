#include "degen/json_io.hpp"

#include <numeric>

#include "degen/errors.hpp"

namespace degen::io {

namespace {

// Readers below access fields naively; this wrapper turns every json-level
// failure (missing key, wrong type, bad number) into our parse_error.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw parse_error(std::string(what) + ": " + e.what());
    }
}

mpz_class mpz_from(const json& j, const char* what) {
    std::string s = j.get<std::string>();
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw parse_error(std::string(what) + ": not an integer: " + s);
    }
}

}  // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid json: ") + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json scalar_json(const Scalar& s) { return s.str(); }

Scalar scalar_from(const json& j) {
    return guarded("scalar", [&] { return Scalar::parse(j.get<std::string>()); });
}

json point_json(const ProjPoint& p) {
    json out = json::array();
    for (const auto& c : p.x) out.push_back(scalar_json(c));
    return out;
}

ProjPoint point_from(const json& j) {
    return guarded("point", [&] {
        if (!j.is_array() || j.size() != 4)
            throw parse_error("point: expected an array of 4 coordinates");
        ProjPoint p;
        for (int i = 0; i < 4; ++i) p.x[(std::size_t)i] = scalar_from(j[(std::size_t)i]);
        return p;
    });
}

json edge_json(int edge) {
    auto [a, b] = CentralFiber::edges()[(std::size_t)edge];
    return json::array({coord_name(a), coord_name(b)});
}

int edge_from(const json& j) {
    return guarded("edge", [&] {
        if (!j.is_array() || j.size() != 2)
            throw parse_error("edge: expected a pair of coordinate names");
        int a = coord_index(j[0].get<std::string>());
        int b = coord_index(j[1].get<std::string>());
        if (a < 0 || b < 0 || a == b)
            throw parse_error("edge: expected two distinct coordinate names, got " + j.dump());
        return CentralFiber::edge_index(a, b);
    });
}

json quartic_json(const QuarticForm& f) {
    json coeffs = json::array();
    for (const auto& [e, c] : f.coeffs()) {
        json entry;
        entry["exp"] = json::array({e[0], e[1], e[2], e[3]});
        entry["num"] = c.num().str();
        entry["den"] = c.den().str();
        coeffs.push_back(std::move(entry));
    }
    return json{{"coeffs", std::move(coeffs)}};
}

QuarticForm quartic_from(const json& j) {
    return guarded("quartic", [&] {
        QuarticForm f;
        for (const auto& entry : j.at("coeffs")) {
            const json& je = entry.at("exp");
            if (!je.is_array() || je.size() != 4)
                throw parse_error("quartic: exp must be an array of 4 exponents");
            Exp4 e{};
            int total = 0;
            for (int i = 0; i < 4; ++i) {
                e[(std::size_t)i] = (std::int16_t)je[(std::size_t)i].get<int>();
                if (e[(std::size_t)i] < 0) throw parse_error("quartic: negative exponent");
                total += e[(std::size_t)i];
            }
            if (total != 4) throw parse_error("quartic: exponents of " + je.dump() + " do not sum to 4");
            if (!f.coeff(e).is_zero()) throw parse_error("quartic: duplicate monomial " + je.dump());
            ParamPoly num = ParamPoly::parse(entry.at("num").get<std::string>());
            ParamPoly den = ParamPoly::parse(entry.at("den").get<std::string>());
            if (den.is_zero()) throw parse_error("quartic: zero denominator");
            f.set(e, Scalar(num, den));
        }
        return f;
    });
}

json prescription_json(const Prescription& p) {
    json out = json::array();
    for (const auto& pt : p.points) {
        json entry;
        entry["edge"] = edge_json(pt.edge);
        entry["root"] = json::array({pt.root.first.get_str(), pt.root.second.get_str()});
        out.push_back(std::move(entry));
    }
    return out;
}

Prescription prescription_from(const json& j) {
    return guarded("prescription", [&] {
        if (!j.is_array()) throw parse_error("prescription: expected a top-level array of points");
        Prescription p;
        for (const auto& entry : j) {
            Prescription::Point pt;
            pt.edge = edge_from(entry.at("edge"));
            const json& root = entry.at("root");
            if (!root.is_array() || root.size() != 2)
                throw parse_error("prescription: root must be a pair [a, b]");
            pt.root = {mpz_from(root[0], "prescription root"), mpz_from(root[1], "prescription root")};
            p.points.push_back(std::move(pt));
        }
        return p;
    });
}

json locus_json(const SingularLocus& loc) {
    json edges = json::array();
    for (const auto& se : loc.edges) {
        json entry;
        entry["edge"] = edge_json(se.edge);
        json form = json::array();
        for (const auto& c : se.form) form.push_back(c.get_str());
        entry["form"] = std::move(form);
        json roots = json::array();
        for (const auto& r : se.roots) roots.push_back(json::array({r.first.get_str(), r.second.get_str()}));
        entry["roots"] = std::move(roots);
        entry["complete"] = se.complete;
        edges.push_back(std::move(entry));
    }
    return json{{"complete", loc.complete}, {"edges", std::move(edges)}};
}

json design_json(const DesignResult& d) {
    json lambda = json::array();
    for (int e = 0; e < CentralFiber::kEdges; ++e) {
        lambda.push_back(json{{"edge", edge_json(e)}, {"scale", scalar_json(d.lambda[(std::size_t)e])}});
    }
    return json{{"f", quartic_json(d.f)},
                {"solution_dim", d.solution_dim},
                {"lambda", std::move(lambda)}};
}

json curve_json(const CurveGraph& c) {
    json vertices = json::array();
    for (const auto& v : c.vertices) {
        json h = json::array();
        for (const auto& x : v.line.h) h.push_back(scalar_json(x));
        vertices.push_back(json{{"plane", coord_name(v.plane)}, {"h", std::move(h)}});
    }
    json nodes = json::array();
    for (const auto& n : c.nodes) {
        nodes.push_back(json{{"v1", n.v1},
                             {"v2", n.v2},
                             {"point", point_json(n.point)},
                             {"w1", n.w1},
                             {"w2", n.w2}});
    }
    json smarks = json::array();
    for (const auto& m : c.smarks) {
        smarks.push_back(json{{"vertex", m.vertex},
                              {"point", point_json(m.point)},
                              {"weight", m.weight},
                              {"edge", edge_json(m.edge)},
                              {"partner", m.partner}});
    }
    return json{{"vertices", std::move(vertices)},
                {"nodes", std::move(nodes)},
                {"smarks", std::move(smarks)}};
}

CurveGraph curve_from(const json& j) {
    return guarded("curve", [&] {
        CurveGraph c;
        for (const auto& jv : j.at("vertices")) {
            CurveVertex v;
            v.plane = coord_index(jv.at("plane").get<std::string>());
            if (v.plane < 0) throw parse_error("curve: unknown plane " + jv.at("plane").dump());
            const json& jh = jv.at("h");
            if (!jh.is_array() || jh.size() != 4)
                throw parse_error("curve: h must be an array of 4 coefficients");
            std::array<Scalar, 4> h;
            for (int i = 0; i < 4; ++i) h[(std::size_t)i] = scalar_from(jh[(std::size_t)i]);
            v.line = line_in_plane(h, v.plane);
            c.vertices.push_back(std::move(v));
        }
        for (const auto& jn : j.at("nodes")) {
            NodeEdge n;
            n.v1 = jn.at("v1").get<int>();
            n.v2 = jn.at("v2").get<int>();
            n.point = point_from(jn.at("point"));
            n.w1 = jn.value("w1", 1);
            n.w2 = jn.value("w2", 1);
            c.nodes.push_back(std::move(n));
        }
        for (const auto& jm : j.at("smarks")) {
            SMark m;
            m.vertex = jm.at("vertex").get<int>();
            m.point = point_from(jm.at("point"));
            m.weight = jm.value("weight", 1);
            m.edge = edge_from(jm.at("edge"));
            m.partner = jm.value("partner", -1);
            c.smarks.push_back(std::move(m));
        }
        return c;
    });
}

json validity_json(const ValidityReport& v) {
    return json{{"torically_transverse", v.torically_transverse},
                {"pre_log", v.pre_log},
                {"pre_smoothable", v.pre_smoothable},
                {"simply_pre_smoothable", v.simply_pre_smoothable},
                {"violations", v.violations}};
}

json obstruction_json(const ObstructionReport& r) {
    json nodes = json::array();
    for (const auto& n : r.nodes) {
        json lines = json::array();
        for (const auto& l : n.lines)
            lines.push_back(json{{"plane", coord_name(l.plane)}, {"value", scalar_json(l.value)}});
        json entry;
        entry["edge"] = edge_json(n.edge);
        auto [p1, p2] = CentralFiber::edges()[(std::size_t)n.edge];
        entry["name"] = node_display_name(p1, p2);
        entry["point"] = point_json(n.point);
        entry["lines"] = std::move(lines);
        entry["value"] = scalar_json(n.value);
        nodes.push_back(std::move(entry));
    }
    json per_monomial = json::array();
    for (const auto& [e, val] : r.per_monomial) {
        per_monomial.push_back(
            json{{"exp", json::array({e[0], e[1], e[2], e[3]})}, {"value", scalar_json(val)}});
    }
    return json{{"total", scalar_json(r.total)},
                {"nodes", std::move(nodes)},
                {"per_monomial", std::move(per_monomial)}};
}

json recipe_json(const GraftRecipe& r) {
    return json{{"f", quartic_json(r.f)},
                {"base", curve_json(r.base)},
                {"aux", curve_json(r.aux)},
                {"base_node", r.base_node},
                {"aux_node", r.aux_node},
                {"r", r.r},
                {"cut_copies", json::array({r.cut_copies[0], r.cut_copies[1]})}};
}

GraftRecipe recipe_from(const json& j) {
    return guarded("recipe", [&] {
        GraftRecipe r;
        r.f = quartic_from(j.at("f"));
        r.base = curve_from(j.at("base"));
        r.aux = curve_from(j.at("aux"));
        r.base_node = j.at("base_node").get<int>();
        r.aux_node = j.at("aux_node").get<int>();
        r.r = j.at("r").get<int>();
        if (j.contains("cut_copies")) {
            const json& cc = j.at("cut_copies");
            if (!cc.is_array() || cc.size() != 2)
                throw parse_error("recipe: cut_copies must be a pair of copy indices");
            r.cut_copies = {cc[0].get<int>(), cc[1].get<int>()};
        }
        return r;
    });
}

json graft_json(const GraftResult& g) {
    return json{{"curve", curve_json(g.curve)}, {"image_equation", g.image_equation}};
}

}  // namespace degen::io
