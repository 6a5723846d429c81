#pragma once

// The two I-functions for the Fermat quintic and their Picard-Fuchs checks.
//
// FJRW side: omega_k(t) = (1/(k-1)!) sum_l ([k/5]_l)^5 / [k]_{5l} t^{k+5l},
// annihilated by D_t^4 - 5^5 t^-5 prod_{m=1}^4 (D_t - m z), D_t = z t d/dt.
//
// GW side: I = sum_d z q^{H/z+d} prod_{k<=5d}(5H+kz) / prod_{k<=d}(H+kz)^5
// mod H^4; writing u = H/z the degree-d factor R_d(u) is homogeneous of
// degree zero, so its u-expansion rho_{d,r} carries everything.  Component
// k = m+1 is the log-polynomial sum_j (L^j/j!) sum_d rho_{d,m-j} q^d, killed
// by D_q^4 - 5 q prod_{m=1}^4 (5 D_q + m z).

#include <array>
#include <vector>

#include "lgcy/exact.hpp"
#include "lgcy/logseries.hpp"
#include "lgcy/series.hpp"
#include "lgcy/zpoly.hpp"

namespace lgcy {

struct IFunctionFJRW {
    std::array<RationalSeries, 4> omega;  // omega[k-1] = omega_k, valuation k
    unsigned order = 0;
    // component k pairs with basis element phi_{k-1} at z-power 2-k
    static int z_power(unsigned k) { return 2 - static_cast<int>(k); }
    static unsigned basis_index(unsigned k) { return k - 1; }
};

struct IFunctionGW {
    std::array<RationalLogSeries, 4> omega;  // omega[k-1], log-degree k-1
    unsigned order = 0;
    static int z_power(unsigned k) { return 2 - static_cast<int>(k); }  // H^{k-1} slot
};

inline IFunctionFJRW build_fjrw_omegas(unsigned order) {
    IFunctionFJRW out;
    out.order = order;
    for (unsigned k = 1; k <= 4; ++k) {
        RationalSeries s(order);
        Rational gammaK(factorial(k - 1));
        for (unsigned l = 0; k + 5 * l < order; ++l) {
            Rational num = rational_pow(pochhammer(Rational(k, 5), l), 5);
            Rational den = gammaK * pochhammer(Rational(k), 5 * l);
            s.set(k + 5 * l, num / den);
        }
        out.omega[k - 1] = s;
    }
    return out;
}

namespace detail {

// arithmetic mod u^4
using U4 = std::array<Rational, 4>;

inline U4 u4_one() { return {Rational(1), Rational(0), Rational(0), Rational(0)}; }

inline U4 u4_mul(const U4& a, const U4& b) {
    U4 c{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (unsigned i = 0; i < 4; ++i)
        for (unsigned j = 0; i + j < 4; ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline U4 u4_inv(const U4& a) {
    U4 b{Rational(1) / a[0], Rational(0), Rational(0), Rational(0)};
    for (unsigned r = 1; r < 4; ++r) {
        Rational acc(0);
        for (unsigned i = 1; i <= r; ++i) acc += a[i] * b[r - i];
        b[r] = -acc / a[0];
    }
    return b;
}

// rho[d][r] = [u^r] prod_{k<=5d}(k+5u) / prod_{k<=d}(k+u)^5, for d < dmax
inline std::vector<U4> gw_rho_table(unsigned dmax) {
    std::vector<U4> rho;
    U4 num = u4_one(), den = u4_one();
    for (unsigned d = 0; d < dmax; ++d) {
        if (d > 0) {
            for (unsigned k = 5 * d - 4; k <= 5 * d; ++k)
                num = u4_mul(num, U4{Rational(k), Rational(5), Rational(0), Rational(0)});
            U4 lin{Rational(d), Rational(1), Rational(0), Rational(0)};
            U4 pw = u4_mul(u4_mul(lin, lin), u4_mul(u4_mul(lin, lin), lin));
            den = u4_mul(den, pw);
        }
        rho.push_back(u4_mul(num, u4_inv(den)));
    }
    return rho;
}

}  // namespace detail

inline IFunctionGW build_gw_omegas(unsigned order) {
    IFunctionGW out;
    out.order = order;
    auto rho = detail::gw_rho_table(order);
    for (unsigned k = 1; k <= 4; ++k) {
        unsigned m = k - 1;
        RationalLogSeries s(order);
        for (unsigned j = 0; j <= m; ++j) {
            RationalSeries f(order);
            for (unsigned d = 0; d < order; ++d) f.set(d, rho[d][m - j]);
            s.comp[j] = f;
        }
        out.omega[k - 1] = s;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Picard-Fuchs residuals

// Applies D_t^4 - 5^5 t^-5 prod_{m=1}^4 (D_t - m z) exactly.  The t^-5 is an
// index shift: the residual coefficient at t^b reads the product term at
// t^{b+5}, so the result's order drops by 5 and no Laurent series appears.
// Exponents 1..4 are annihilated by the matching factor (D_t - m z); a
// constant term would genuinely produce t^-5 and is rejected.
inline ZSeries pf_residual_fjrw(const RationalSeries& f) {
    if (!(f.coeff(0) == Rational(0)))
        throw BadValuation("pf_residual_fjrw: input must have positive valuation");
    ZSeries lifted = lift_to_z(f);
    ZSeries a = apply_Dt(apply_Dt(apply_Dt(apply_Dt(lifted))));
    ZSeries b = lifted;
    for (unsigned m = 1; m <= 4; ++m)
        b = apply_Dt(b) - b.scaled(ZPoly::z_power(1, Rational(m)));
    unsigned order = f.order() >= 5 ? f.order() - 5 : 0;
    ZSeries res(order);
    for (unsigned e = 0; e < order; ++e)
        res.set(e, a.coeff(e) - ZPoly(Rational(3125)) * b.coeff(e + 5));
    return res;
}

// Applies D_q^4 - 5 q prod_{m=1}^4 (5 D_q + m z) to a log-polynomial series.
inline LogSeries<ZPoly> pf_residual_gw(const RationalLogSeries& f) {
    LogSeries<ZPoly> lifted = lift_to_z(f);
    LogSeries<ZPoly> a = apply_Dq(apply_Dq(apply_Dq(apply_Dq(lifted))));
    LogSeries<ZPoly> b = lifted;
    for (unsigned m = 1; m <= 4; ++m) {
        LogSeries<ZPoly> db = apply_Dq(b);
        b = db.scaled(ZPoly(Rational(5))) + b.scaled(ZPoly::z_power(1, Rational(m)));
    }
    TruncatedSeries<ZPoly> fiveQ =
        TruncatedSeries<ZPoly>::monomial(ZPoly(Rational(5)), 1, f.order() + 1);
    return a - b.times(fiveQ);
}

// ---------------------------------------------------------------------------
// Operator coincidence under q = t^-5

// Under q = t^-5 the chain rule gives D_q = -D_t/5, and the two hypergeometric
// operators agree up to the overall factor 5^-4.  Verified exactly on the
// monomials t^a z^b: each operator sends t^a z^b to a pair of coefficients,
// one at t^a and one at t^{a-5} (z-exponent b+4 for both).  Returns the
// largest rational deviation, which should be exactly zero.
inline Rational operator_transform_check(unsigned a_max = 20, unsigned b_max = 4) {
    Rational worst(0);
    for (unsigned a = 0; a <= a_max; ++a) {
        for (unsigned b = 0; b <= b_max; ++b) {
            (void)b;  // z^b rides along; both sides pick up exactly z^4
            Rational aa(a);
            // coefficient at t^a
            Rational fjrw_same = rational_pow(aa, 4);
            Rational gw_same = rational_pow(-aa / Rational(5), 4);
            Rational d1(abs(gw_same - fjrw_same / Rational(625)));
            if (d1 > worst) worst = d1;
            // coefficient at t^{a-5}
            Rational fjrw_shift(3125), gw_shift(5);
            for (unsigned m = 1; m <= 4; ++m) {
                fjrw_shift *= aa - Rational(m);
                gw_shift *= Rational(5) * (-aa / Rational(5)) + Rational(m);
            }
            Rational d2(abs(gw_shift - fjrw_shift / Rational(625)));
            if (d2 > worst) worst = d2;
        }
    }
    return worst;
}

}  // namespace lgcy
