// Compares the serial and OpenMP verification paths on scalable families:
//   - fan checks on r = 2 blocks of size s, one torus factor, k rays
//     (-1, -j, 1); cone count k*s^2, pair count ~ (k*s^2)^2 / 2;
//   - tropical piece enumeration on sum_k (S[1,2k-1]^2 + S[1,2k]^2) *
//     T[1]^k * T[2]^(k^2): s weight classes of multiplicity 2, so the locus
//     is all of N_Q and the s + s(s-1)/2 pieces still get enumerated.
#include <chrono>
#include <iostream>
#include <sstream>
#include <string>

#include "sphcox/datum.hpp"
#include "sphcox/fan.hpp"
#include "sphcox/tropical.hpp"

using namespace sphcox;
using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int s = argc > 1 ? std::stoi(argv[1]) : 4;
    int k = argc > 2 ? std::stoi(argv[2]) : 3;
    if (s < 2 || k < 1) {
        std::cerr << "usage: bench_fan [block_size >= 2] [ray_count >= 1]\n";
        return 1;
    }
    int st = 8 * s;  // tropical family size; pieces grow as st^2 / 2

    std::ostringstream rel;
    rel << "S[1,1]*S[2,1]";
    for (int j = 2; j <= s; ++j) rel << " + S[1," << j << "]*S[2," << j << "]";
    rel << " - T[1]";
    SphericalDatum d = make_spherical_datum(2, {s, s}, 1, true, {rel.str()});

    std::vector<Vec> rays;
    for (int j = 1; j <= k; ++j) rays.push_back({Int(-1), Int(-j), Int(1)});

    Fan fan = fan_of_embedding(d, rays);
    std::cout << "blocks 2x" << s << ", rays " << k << " -> " << fan.max_cones.size()
              << " maximal cones of dimension " << fan.max_cones.front().dim() << "\n";

    auto t0 = Clock::now();
    FanCheckReport serial = verify_fan(fan, false);
    double t_serial = seconds_since(t0);

    t0 = Clock::now();
    FanCheckReport parallel = verify_fan(fan, true);
    double t_parallel = seconds_since(t0);

    if (serial.ok() != parallel.ok() || serial.non_smooth != parallel.non_smooth ||
        serial.bad_pairs != parallel.bad_pairs) {
        std::cerr << "MISMATCH between serial and parallel fan verification\n";
        return 1;
    }

    std::ostringstream rel2;
    for (int j = 1; j <= st; ++j) {
        if (j != 1) rel2 << " + ";
        rel2 << "(S[1," << 2 * j - 1 << "]^2 + S[1," << 2 * j << "]^2)"
             << "*T[1]^" << j << "*T[2]^" << j * j;
    }
    SphericalDatum d2 = make_spherical_datum(1, {2 * st}, 2, true, {rel2.str()});

    t0 = Clock::now();
    ValuationCone vc_serial = valuation_cone(d2, d2.relations.front(), false);
    double t_vc_serial = seconds_since(t0);

    t0 = Clock::now();
    ValuationCone vc_parallel = valuation_cone(d2, d2.relations.front(), true);
    double t_vc_parallel = seconds_since(t0);

    if (!(vc_serial.cone == vc_parallel.cone)) {
        std::cerr << "MISMATCH between serial and parallel valuation cones\n";
        return 1;
    }

    std::cout << "fan verification: serial " << t_serial << " s, parallel " << t_parallel
              << " s, speedup " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";
    std::cout << "valuation cone (" << vc_serial.pieces.size() << " pieces): serial "
              << t_vc_serial << " s, parallel " << t_vc_parallel << " s, speedup "
              << (t_vc_parallel > 0 ? t_vc_serial / t_vc_parallel : 0.0) << "x\n";
    std::cout << "check result: " << (serial.ok() ? "ok" : "FAIL") << "\n";
    return serial.ok() ? 0 : 1;
}
