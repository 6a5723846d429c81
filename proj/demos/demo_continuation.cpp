// Builds the symplectic continuation matrix, prints it with its z-grading,
// and runs the structural checks.

#include <cstdio>

#include "lgcy/continuation.hpp"

int main() {
    auto u = lgcy::build_u_matrix();
    for (unsigned r = 0; r < 4; ++r) {
        for (unsigned k = 0; k < 4; ++k) {
            const auto& e = u.entries[r][k];
            std::printf("(%+.6f%+.6fi) z^%-2d  ", e.coeff.real(), e.coeff.imag(), e.zPower);
        }
        std::printf("\n");
    }
    std::printf("symplectic deviation : %.3e\n",
                lgcy::check_symplectic(u, lgcy::default_gram_fjrw(), lgcy::default_gram_gw()));
    std::printf("quadrature deviation : %.3e\n", lgcy::continuation_consistency());
    std::printf("|det U(z=1)|         : %.6f\n", lgcy::u_determinant_magnitude(u));
    return 0;
}
