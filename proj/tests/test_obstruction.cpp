// First-order obstruction of hyperplane sections: per-node and per-monomial
// values, closed-form cross-checks, residue frames, and the dual space.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "degen/errors.hpp"
#include "degen/exec.hpp"
#include "degen/obstruction.hpp"
#include "degen/residue.hpp"

using namespace degen;

namespace {

Scalar A() { return Scalar::alpha(); }
Scalar B() { return Scalar::beta(); }
Scalar G() { return Scalar::gamma(); }

std::array<Scalar, 4> symbolic_h() { return {A(), B(), G(), Scalar(1)}; }

QuarticForm fermat() {
    QuarticForm f;
    for (int i = 0; i < 4; ++i) {
        Exp4 e{0, 0, 0, 0};
        e[(std::size_t)i] = 4;
        f.set(e, Scalar(1));
    }
    return f;
}

// Fixed six-term quartic used for the chart-level node oracles.
QuarticForm six_term() {
    QuarticForm f;
    f.set({4, 0, 0, 0}, Scalar(3));
    f.set({2, 1, 1, 0}, Scalar(-7));
    f.set({1, 1, 1, 1}, Scalar(2));
    f.set({0, 2, 0, 2}, Scalar(5));
    f.set({1, 0, 3, 0}, Scalar(-1));
    f.set({0, 0, 1, 3}, Scalar(11));
    return f;
}

QuarticForm random_quartic(std::mt19937_64& rng) {
    QuarticForm f;
    for (const auto& e : QuarticForm::monomial_basis()) {
        if (rng() % 4 == 0) continue;
        long num = (long)(rng() % 19) - 9;
        if (num == 0) num = 1;
        mpq_class q(num);
        q /= (long)(1 + rng() % 4);
        f.set(e, Scalar(q));
    }
    if (f.is_zero()) f.set({4, 0, 0, 0}, Scalar(1));
    return f;
}

Scalar node_value(const ObstructionReport& rep, const std::string& name) {
    for (const auto& n : rep.nodes) {
        const auto [i, j] = CentralFiber::edges()[(std::size_t)n.edge];
        if (node_display_name(i, j) == name) return n.value;
    }
    throw std::logic_error("node not found: " + name);
}

bool reports_equal(const ObstructionReport& a, const ObstructionReport& b) {
    if (!(a.total == b.total)) return false;
    if (a.nodes.size() != b.nodes.size() || a.per_monomial.size() != b.per_monomial.size())
        return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        if (a.nodes[i].edge != b.nodes[i].edge) return false;
        if (!(a.nodes[i].value == b.nodes[i].value)) return false;
        if (a.nodes[i].lines.size() != b.nodes[i].lines.size()) return false;
        for (std::size_t j = 0; j < a.nodes[i].lines.size(); ++j)
            if (!(a.nodes[i].lines[j].value == b.nodes[i].lines[j].value)) return false;
    }
    for (const auto& [e, v] : a.per_monomial) {
        const auto it = b.per_monomial.find(e);
        if (it == b.per_monomial.end() || !(it->second == v)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("x^3 w produces the signed pair at l^k and l^n") {
    QuarticForm f;
    f.set({3, 0, 0, 1}, Scalar(1));
    const ObstructionReport rep = first_order_obstruction(f, symbolic_h());
    CHECK(rep.total.is_zero());
    const Scalar expect = B() * G() / (A() * A());
    CHECK(node_value(rep, "l^k") == -expect);
    CHECK(node_value(rep, "l^n") == expect);
    for (const std::string& name : {"l^m", "m^n", "m^k", "n^k"})
        CHECK(node_value(rep, name).is_zero());
    // each node value is the sum of its two branch shares
    for (const auto& n : rep.nodes) {
        REQUIRE(n.lines.size() == 2);
        CHECK(n.value == n.lines[0].value + n.lines[1].value);
    }
}

TEST_CASE("x y^2 z cancels between exactly two nodes") {
    QuarticForm f;
    f.set({1, 2, 1, 0}, Scalar(1));
    const ObstructionReport rep = first_order_obstruction(f, symbolic_h());
    CHECK(rep.total.is_zero());
    CHECK(node_value(rep, "l^m") == -(Scalar(1) / B()));
    CHECK(node_value(rep, "l^k") == Scalar(1) / B());
    int nonzero = 0;
    for (const auto& n : rep.nodes)
        if (!n.value.is_zero()) ++nonzero;
    CHECK(nonzero == 2);
}

TEST_CASE("x y z w contributes nothing anywhere") {
    QuarticForm f;
    f.set({1, 1, 1, 1}, Scalar(1));
    const ObstructionReport rep = first_order_obstruction(f, symbolic_h());
    CHECK(rep.total.is_zero());
    for (const auto& n : rep.nodes) {
        CHECK(n.value.is_zero());
        for (const auto& l : n.lines) CHECK(l.value.is_zero());
    }
}

TEST_CASE("node values match direct chart evaluation") {
    const QuarticForm f = six_term();
    const ObstructionReport rep = first_order_obstruction(f, symbolic_h());
    CHECK(rep.total.is_zero());

    // l^k: chart x at [beta : -alpha : 0 : 0].
    {
        const ProjPoint p{{B(), -A(), Scalar(0), Scalar(0)}};
        const auto d = chart_decompose(f, 0, p);
        const std::array<Scalar, 4> at{d.b, Scalar(0), Scalar(0), Scalar(0)};
        const Scalar want =
            B() / (A() * A()) * d.g2.eval(at) - B() * G() / (A() * A()) * d.g3.eval(at);
        CHECK(node_value(rep, "l^k") == want);
    }
    // l^n: chart x at [-gamma : 0 : alpha : 0]; the run coordinate is z.
    {
        const ProjPoint p{{-G(), Scalar(0), A(), Scalar(0)}};
        const auto d = chart_decompose(f, 0, p);
        const std::array<Scalar, 4> at{Scalar(0), d.b, Scalar(0), Scalar(0)};
        const Scalar want =
            -(G() / (A() * A())) * d.g2.eval(at) + B() * G() / (A() * A()) * d.g3.eval(at);
        CHECK(node_value(rep, "l^n") == want);
    }
    // l^m: chart y at [0 : -gamma : beta : 0].
    {
        const ProjPoint p{{Scalar(0), -G(), B(), Scalar(0)}};
        const auto d = chart_decompose(f, 1, p);
        const std::array<Scalar, 4> at{Scalar(0), d.b, Scalar(0), Scalar(0)};
        const Scalar want =
            G() / (B() * B()) * d.g2.eval(at) - A() * G() / (B() * B()) * d.g3.eval(at);
        CHECK(node_value(rep, "l^m") == want);
    }
}

TEST_CASE("closed-form reference agrees with the series solver") {
    const std::array<Scalar, 4> Hr{Scalar(3), Scalar(-2), Scalar(5), Scalar(7)};
    const QuarticForm f = six_term();
    const ObstructionReport rep = first_order_obstruction(f, Hr);
    // pinned exact values for this f and hyperplane
    CHECK(node_contribution_reference(f, Hr, 5) == Scalar(mpq_class(49) / 3));
    CHECK(node_contribution_reference(f, Hr, 4) == Scalar(mpq_class(-49) / 3));
    CHECK(node_contribution_reference(f, Hr, 2) == Scalar(mpq_class(-14) / 25));
    for (int e : {2, 4, 5}) {
        const Scalar ref = node_contribution_reference(f, Hr, e);
        for (const auto& n : rep.nodes)
            if (n.edge == e) CHECK(n.value == ref);
    }

    // scale invariance of the reference in H
    std::array<Scalar, 4> H2 = Hr;
    for (auto& h : H2) h = h * Scalar(-6);
    for (int e : {2, 4, 5}) CHECK(node_contribution_reference(f, H2, e) ==
                                  node_contribution_reference(f, Hr, e));

    // randomized cross-check
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const QuarticForm g = random_quartic(rng);
        const ObstructionReport rg = first_order_obstruction(g, Hr);
        CHECK(rg.total.is_zero());
        for (int e : {2, 4, 5}) {
            const Scalar ref = node_contribution_reference(g, Hr, e);
            for (const auto& n : rg.nodes)
                if (n.edge == e) CHECK(n.value == ref);
        }
    }

    // only the three {*, w} edges have a closed form; H must avoid zeros
    CHECK_THROWS_AS(node_contribution_reference(f, Hr, 0), precondition_error);
    CHECK_THROWS_AS(node_contribution_reference(f, {Scalar(0), Scalar(1), Scalar(1), Scalar(1)}, 5),
                    precondition_error);
}

TEST_CASE("symbolic per-monomial cancellation") {
    const ObstructionReport rep = symbolic_obstruction(symbolic_h());
    CHECK(rep.total.is_zero());
    CHECK(rep.per_monomial.size() == 35);
    for (const auto& [e, v] : rep.per_monomial) CHECK(v.is_zero());
}

TEST_CASE("parallel and serial executors produce identical reports") {
    const bool was = exec::parallel_enabled();
    const QuarticForm f = six_term();

    exec::set_parallel(false);
    const ObstructionReport serial = first_order_obstruction(f, symbolic_h());
    const ObstructionReport serial_sym = symbolic_obstruction(symbolic_h());
    exec::set_parallel(true);
    const ObstructionReport parallel = first_order_obstruction(f, symbolic_h());
    const ObstructionReport parallel_sym = symbolic_obstruction(symbolic_h());
    exec::set_parallel(was);

    CHECK(reports_equal(serial, parallel));
    CHECK(reports_equal(serial_sym, parallel_sym));
}

TEST_CASE("higher truncation order changes nothing at first order") {
    const QuarticForm f = six_term();
    const ObstructionReport o1 = first_order_obstruction(f, symbolic_h(), 1);
    const ObstructionReport o2 = first_order_obstruction(f, symbolic_h(), 2);
    CHECK(reports_equal(o1, o2));
}

TEST_CASE("plane residue frames and ambient covectors") {
    for (int p = 0; p < 4; ++p) CHECK(PlaneResidueFrame::standard(p).check());

    // The two planes through an edge get opposite ambient covectors.
    for (int e = 0; e < 6; ++e) {
        const auto [i, j] = CentralFiber::edges()[(std::size_t)e];
        const auto ci = ambient_covector(i, e);
        const auto cj = ambient_covector(j, e);
        for (int c = 0; c < 4; ++c) CHECK(ci[(std::size_t)c] == -cj[(std::size_t)c]);
    }
    // Within one plane the three covectors sum to zero.
    for (int p = 0; p < 4; ++p) {
        std::array<int, 4> sum{0, 0, 0, 0};
        for (int e : CentralFiber::plane_edges(p)) {
            const auto c = ambient_covector(p, e);
            for (int i = 0; i < 4; ++i) sum[(std::size_t)i] += c[(std::size_t)i];
        }
        for (int i = 0; i < 4; ++i) CHECK(sum[(std::size_t)i] == 0);
    }
}

TEST_CASE("dual space of a section is one-dimensional") {
    const QuarticForm f = fermat();
    const CurveGraph g = hyperplane_section(symbolic_h(), f);
    const ResidueSystem sys = residue_system(g);
    CHECK(sys.unknowns == 4);
    CHECK(sys.rows.size() == 6);

    const DualObstruction dual = dual_obstruction_dim(g, f);
    CHECK(dual.dimension == 1);
    REQUIRE(dual.basis.size() == 1);
    bool nonzero = false;
    for (const auto& c : dual.basis[0]) nonzero = nonzero || c != 0;
    CHECK(nonzero);

    // The marked (nodes-on-locus removed) section of a designed quartic also
    // has a one-dimensional dual space.
    const QuarticForm fd = design_f(realizable_prescription(7)).f;
    const SingularLocus loc = singular_locus(fd);
    std::vector<ProjPoint> pts;
    for (int e : {5, 2, 0}) pts.push_back(edge_point(e, loc.edges[(std::size_t)e].roots[0]));
    const std::array<Scalar, 4> H = pick_hyperplane(hyperplane_through(pts));
    const CurveGraph marked = hyperplane_section(H, fd);
    CHECK(dual_obstruction_dim(marked, fd).dimension == 1);

    // Dual-space computation requires pre-smoothable input: the keep-nodes
    // variant has nodes on the singular locus and is rejected.
    const CurveGraph nodal = hyperplane_section(H, fd, true);
    CHECK_THROWS_AS(dual_obstruction_dim(nodal, fd), precondition_error);
}

TEST_CASE("generators restrict compatibly from the nodal to the marked curve") {
    const QuarticForm f = design_f(realizable_prescription(7)).f;
    const SingularLocus loc = singular_locus(f);
    std::vector<ProjPoint> pts;
    for (int e : {5, 2, 0}) pts.push_back(edge_point(e, loc.edges[(std::size_t)e].roots[0]));
    const std::array<Scalar, 4> H = pick_hyperplane(hyperplane_through(pts));

    const CurveGraph marked = hyperplane_section(H, f);        // marks at the locus
    const CurveGraph nodal = hyperplane_section(H, f, true);   // nodes kept
    CHECK(generator_restriction_compare(marked, nodal, f));
    CHECK(generator_restriction_compare(nodal, marked, f));

    // Sections by different hyperplanes have different component lines, so
    // their generators are not comparable.
    const QuarticForm ff = fermat();
    const CurveGraph a = hyperplane_section({Scalar(1), Scalar(2), Scalar(3), Scalar(4)}, ff);
    const CurveGraph b = hyperplane_section({Scalar(1), Scalar(2), Scalar(3), Scalar(5)}, ff);
    CHECK_FALSE(generator_restriction_compare(a, b, ff));
}
