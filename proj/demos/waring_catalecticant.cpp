// Apolarity in action: catalecticant ranks of a quartic across all splits,
// and the four-dimensional annihilator of a pair of squared variables.

#include <iostream>

#include "superfat/superfat.hpp"

using namespace superfat;

int main() {
    const polyring::RingPtr R = PolyRing::standard({"x0", "x1", "x2"});

    // A quartic with border structure: x2^2 times a full rank-4 conic block.
    const auto f = ioparse::parse_polynomial<Rational>(
        "x2^2*(2*x0*x2 + 3*x1*x2 + 5*x2^2 + 7*x0*x1)", R);
    std::cout << "form: " << ioparse::print_polynomial(f) << "\n";
    for (unsigned split = 0; split <= 4; ++split) {
        const auto cat = apolarity::catalecticant(f, split);
        std::cout << "catalecticant at split (" << split << ", " << 4 - split
                  << "): " << cat.matrix.rows() << " x " << cat.matrix.cols()
                  << ", rank " << cat.rank() << "\n";
    }

    // The annihilator of (x0^2, x1^2) in each degree is spanned by the four
    // monomials x2^d, x0 x2^(d-1), x1 x2^(d-1), x0 x1 x2^(d-2).
    const auto squares = ioparse::parse_ideal<Rational>("[x0^2, x1^2]", R);
    for (unsigned d = 2; d <= 5; ++d) {
        const auto space = apolarity::perp_space(squares, polyring::GradedPiece(R, d));
        std::cout << "\ndegree-" << d << " annihilator (dim " << space.dim() << "):";
        for (const auto& b : space.basis)
            std::cout << "  " << ioparse::print_polynomial(b);
    }
    std::cout << "\n";
    return 0;
}
