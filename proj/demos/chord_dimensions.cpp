// Chord (secant) dimensions by exact tangent-space arithmetic: the rank-one
// locus, the osculating family, and the two-factor surfaces, with the fill
// table for chords of the osculating family.

#include <iostream>

#include "superfat/superfat.hpp"

using namespace superfat;

int main() {
    Fp::set_modulus(32003);
    const std::uint64_t seed = 7;

    std::cout << "single tangent spaces (projective dimensions)\n";
    const auto single = [&](const secants::ParamMap<Fp>& map) {
        const auto est = secants::secant_dimension(map, 1, seed);
        std::cout << "  " << map.name << ": " << est.projective_dimension
                  << " in ambient " << map.piece.dim() - 1 << "\n";
    };
    single(secants::veronese<Fp>(2, 4));
    single(secants::tau2<Fp>(4));
    single(secants::qq<Fp>(4));
    single(secants::segre_veronese<Fp>(3));
    single(secants::q2<Fp>(3));
    single(secants::qq2<Fp>(3));

    std::cout << "\ntwo chords of the bilinear surfaces\n";
    for (unsigned d = 2; d <= 5; ++d) {
        const auto q2 = secants::secant_dimension(secants::q2<Fp>(d), 2, seed);
        const auto qq2 = secants::secant_dimension(secants::qq2<Fp>(d), 2, seed);
        std::cout << "  d = " << d << ": q2 -> " << q2.projective_dimension
                  << ", qq2 -> " << qq2.projective_dimension << "\n";
    }

    std::cout << "\nchords needed to fill the osculating family's span\n";
    for (unsigned d = 3; d <= 8; ++d) {
        const auto r = secants::fill_degree_check<Fp>(d, seed + d);
        std::cout << "  d = " << d << ": fills with s = " << r.s_fill << " in dim "
                  << r.ambient << " (one fewer chord reaches " << r.dim_below_fill
                  << ")" << (r.verified ? "" : "  UNEXPECTED") << "\n";
    }
    return 0;
}
