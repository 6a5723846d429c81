#pragma once

// Grothendieck-Riemann-Roch coefficient tables for ch_h(R pi_* L_j) on the
// moduli of W-curves: a kappa_h term, one psi_i^h term per marking, and one
// boundary term per phase on the 1/dbar grid.  Everything is an exact
// rational; boundary classes stay symbolic (coefficient + label).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgcy/exact.hpp"
#include "lgcy/singularity.hpp"

namespace lgcy {

struct RamondSector : std::domain_error {
    using std::domain_error::domain_error;
};

struct GrrCoefficients {
    unsigned h = 0;
    Rational kappa;                         // multiplies kappa_h
    std::vector<Rational> psi;              // psi[i] multiplies psi_i^h
    std::map<Rational, Rational> boundary;  // phase Theta -> coefficient
    std::string boundaryLabel;              // the class each boundary coefficient multiplies
};

// kappa coefficient B_{h+1}(q)/(h+1)!; psi_i coefficient -B_{h+1}(Theta_i)/(h+1)!;
// boundary coefficient at Theta on the 1/dbar grid: (d/2) B_{h+1}(Theta)/(h+1)!.
// At h = 0 the boundary sum over a+a' = h-1 is empty, so no boundary terms.
inline GrrCoefficients grr_coefficients(unsigned h, const Rational& q,
                                        const std::vector<Rational>& thetas, unsigned dbar,
                                        unsigned d) {
    GrrCoefficients out;
    out.h = h;
    Rational fact = Rational(factorial(h + 1));
    out.kappa = bernoulli_polynomial(h + 1, q) / fact;
    for (const auto& th : thetas) out.psi.push_back(-bernoulli_polynomial(h + 1, th) / fact);
    if (h >= 1) {
        for (unsigned k = 0; k < dbar; ++k) {
            Rational th(static_cast<int>(k), static_cast<int>(dbar));
            out.boundary[th] = Rational(static_cast<int>(d), 2) * bernoulli_polynomial(h + 1, th) / fact;
        }
        out.boundaryLabel = "j_* sum_{a+a'=" + std::to_string(h - 1) + "} psi^a (-psi')^{a'}";
    }
    return out;
}

// ch_0 acts as multiplication by a number; the Riemann-Roch form of that
// number, for cross-checking the h = 0 coefficients.
inline Rational riemann_roch_multiplicity(unsigned g, unsigned n, const Rational& q,
                                          const std::vector<Rational>& thetas) {
    int euler = 2 * static_cast<int>(g) - 2 + static_cast<int>(n);
    Rational out = (Rational(-1, 2) + q) * Rational(euler);
    for (const auto& th : thetas) out -= Rational(-1, 2) + th;
    return out;
}

// (g-1) c_W + sum iota(gamma_i): the failure of the virtual dimension to match
// 3g-3+n, defined only when every sector is narrow.
inline Rational euler_characteristic_deficit(const SingularityProfile& p, unsigned g, unsigned n,
                                             const std::vector<BigInt>& ms) {
    if (ms.size() != n)
        throw std::invalid_argument("euler_characteristic_deficit: need one sector per marking");
    Rational out = Rational(static_cast<int>(g) - 1) * p.centralCharge;
    for (const auto& m : ms) {
        Sector s = sector_data(p, m);
        if (!s.narrow) throw RamondSector("sector J^" + s.m.str() + " has a zero phase");
        out += s.iota;
    }
    return out;
}

}  // namespace lgcy
