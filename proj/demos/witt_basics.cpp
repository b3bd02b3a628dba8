// Tour of the Witt vector layer: Teichmueller lifts, ghost coordinates,
// Frobenius and Verschiebung, and the cyclotomic element Phi_p.

#include <iostream>

#include "wittlab/io.hpp"

using namespace wittlab;

int main() {
    auto Z = RingDescriptor::integers();

    auto two = teichmuller(Z.from_int(2), Z, 6);
    auto three = teichmuller(Z.from_int(3), Z, 6);
    std::cout << "[2]        = " << format_witt(two) << "\n";
    std::cout << "[2] (+) [3] = " << format_witt(witt_add(two, three)) << "\n";
    std::cout << "[2] (.) [3] = " << format_witt(witt_mul(two, three)) << "\n";
    std::cout << "ghost [2]  = " << format_ghost(ghost(two)) << "\n";
    std::cout << "F_2 [2]    = " << format_witt(frobenius(2, two)) << "\n";
    std::cout << "V_2 [2]    = " << format_witt(verschiebung(2, two)) << "\n\n";

    auto p3 = phi_p(BigInt(3));
    std::cout << "Phi_3                 = " << format_wrat(p3) << "\n";
    std::cout << "ghost(Phi_3) depth 6  = " << format_ghost(wr_ghost(p3, 6)) << "\n";
    std::cout << "ghost(Phi_3 - 2[1])   = " << format_ghost(phi_p_minus_scalar_check(BigInt(3), 6))
              << "\n\n";

    auto u = parse_wrat(Z, "(1 - 2t)/(1 - 3t)");
    auto v = parse_wrat(Z, "1 - 5t");
    std::cout << "u = " << format_wrat(u) << ", v = " << format_wrat(v) << "\n";
    std::cout << "u (.) v = " << format_wrat(wr_mul(u, v)) << "\n";
    return 0;
}
