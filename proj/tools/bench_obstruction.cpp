// Times the obstruction kernel on the serial reference path and the parallel
// path and checks that the two reports agree entry for entry.
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "degen/central_fiber.hpp"
#include "degen/exec.hpp"
#include "degen/obstruction.hpp"

using namespace degen;

namespace {

double run_ms(bool parallel, ObstructionReport& out) {
    exec::set_parallel(parallel);
    const std::array<Scalar, 4> H{Scalar::alpha(), Scalar::beta(), Scalar::gamma(), Scalar(1)};
    const auto t0 = std::chrono::steady_clock::now();
    out = symbolic_obstruction(H);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool reports_equal(const ObstructionReport& a, const ObstructionReport& b) {
    if (!(a.total == b.total) || a.nodes.size() != b.nodes.size() ||
        a.per_monomial.size() != b.per_monomial.size())
        return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        if (a.nodes[i].edge != b.nodes[i].edge || !(a.nodes[i].value == b.nodes[i].value))
            return false;
        for (std::size_t l = 0; l < 2; ++l)
            if (!(a.nodes[i].lines[l].value == b.nodes[i].lines[l].value)) return false;
    }
    return a.per_monomial == b.per_monomial;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 1;
    if (argc > 1) reps = std::max(1, std::atoi(argv[1]));

    std::cout << "obstruction kernel: 35 symbolic monomials x 12 branch lifts per run, " << reps
              << " run(s) per path\n";

    ObstructionReport serial, parallel;
    double t_serial = 0, t_parallel = 0;
    for (int i = 0; i < reps; ++i) t_serial += run_ms(false, serial);
    for (int i = 0; i < reps; ++i) t_parallel += run_ms(true, parallel);
    t_serial /= reps;
    t_parallel /= reps;

    const bool equal = reports_equal(serial, parallel);
    std::cout << "serial reference : " << t_serial << " ms\n";
    std::cout << "parallel path    : " << t_parallel << " ms"
              << (exec::parallel_enabled() ? "" : "  (built without OpenMP: same serial loop)")
              << "\n";
    std::cout << "speedup          : " << (t_parallel > 0 ? t_serial / t_parallel : 0) << "x\n";
    std::cout << "reports identical: " << (equal ? "yes" : "NO") << "\n";
    std::cout << "total vanishes   : " << (serial.total.is_zero() ? "yes" : "NO") << "\n";
    return (equal && serial.total.is_zero()) ? 0 : 1;
}
