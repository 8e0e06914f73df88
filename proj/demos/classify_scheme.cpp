// Walkthrough of the zero-dimensional toolkit: classify a scheme at the
// origin, cross-check the symmetry degree on explicit lines, and grow the
// scheme to a superfat hull.

#include <iostream>

#include "superfat/superfat.hpp"

using namespace superfat;

int main() {
    const polyring::RingPtr R = PolyRing::standard({"x", "y"});

    // A length-8 scheme cut by two cubics and a quartic.
    const auto I = ioparse::parse_ideal<Rational>("[x^3, y^3, x^2*y^2]", R);
    std::cout << "ideal: " << ioparse::print_ideal(I) << "\n";

    const auto report = zerodim::symmetry_degree(I);
    std::cout << "symmetric: " << (report.symmetric ? "yes" : "no") << "\n"
              << "symmetry degree m: " << report.m << "\n"
              << "length: " << report.length << "\n"
              << "superfat: " << (report.superfat ? "yes" : "no") << "\n\n";

    // Every line through the origin meets the scheme with length m.
    for (long long slope = -2; slope <= 2; ++slope) {
        const auto len =
            zerodim::line_intersection_length(I, {Rational(1), Rational(slope)});
        std::cout << "line y = " << slope << "x meets with length " << *len << "\n";
    }

    // The scheme is not maximal: it embeds in a 3-superfat scheme of length 9.
    const auto hull = zerodim::superfat_hull(I, /*seed=*/1);
    std::cout << "\nsuperfat hull: " << ioparse::print_ideal(hull) << "\n"
              << "hull length: " << zerodim::length_at_origin(hull) << "\n";
    return 0;
}
