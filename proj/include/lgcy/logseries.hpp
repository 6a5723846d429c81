#pragma once

// A log-polynomial in L = log q of degree at most 3 whose coefficients are
// truncated q-series: f = sum_j (L^j / j!) f_j(q).  Degree 3 suffices because
// H^4 = 0 kills everything beyond.  The factorial is part of the basis, so
// component j stores f_j, not f_j/j!.

#include <array>

#include "lgcy/series.hpp"
#include "lgcy/zpoly.hpp"

namespace lgcy {

inline constexpr unsigned kLogDegreeBound = 4;  // components j = 0..3

template <class R>
struct LogSeries {
    std::array<TruncatedSeries<R>, kLogDegreeBound> comp;

    explicit LogSeries(unsigned order = 0) {
        for (auto& c : comp) c = TruncatedSeries<R>(order);
    }

    unsigned order() const { return comp[0].order(); }

    // Highest j with a nonzero component, or -1 if all vanish.
    int log_degree() const {
        for (int j = kLogDegreeBound - 1; j >= 0; --j)
            if (!comp[j].known_zero()) return j;
        return -1;
    }

    bool known_zero() const { return log_degree() < 0; }

    bool operator==(const LogSeries& o) const { return comp == o.comp; }
    bool operator!=(const LogSeries& o) const { return !(*this == o); }

    friend LogSeries operator+(const LogSeries& a, const LogSeries& b) {
        LogSeries s;
        for (unsigned j = 0; j < kLogDegreeBound; ++j) s.comp[j] = a.comp[j] + b.comp[j];
        return s;
    }
    friend LogSeries operator-(const LogSeries& a, const LogSeries& b) {
        LogSeries s;
        for (unsigned j = 0; j < kLogDegreeBound; ++j) s.comp[j] = a.comp[j] - b.comp[j];
        return s;
    }

    LogSeries scaled(const R& c) const {
        LogSeries s;
        for (unsigned j = 0; j < kLogDegreeBound; ++j) s.comp[j] = comp[j].scaled(c);
        return s;
    }

    // Multiply every component by a plain series (e.g. q, or 1/omega_1).
    LogSeries times(const TruncatedSeries<R>& m) const {
        LogSeries s;
        for (unsigned j = 0; j < kLogDegreeBound; ++j) s.comp[j] = comp[j] * m;
        return s;
    }
};

template <class R>
LogSeries<ZPoly> lift_to_z(const LogSeries<R>& a) {
    LogSeries<ZPoly> s(a.order());
    for (unsigned j = 0; j < kLogDegreeBound; ++j) s.comp[j] = lift_to_z(a.comp[j]);
    return s;
}

// D = z q d/dq.  Since d/dq (L^j/j!) = (L^{j-1}/(j-1)!)/q, the operator sends
// component j to z (theta f_j + f_{j+1}); the top component loses nothing
// because the degree bound is also the bound for the input.
inline LogSeries<ZPoly> apply_Dq(const LogSeries<ZPoly>& a) {
    LogSeries<ZPoly> s(a.order());
    ZPoly z = ZPoly::z_power(1);
    for (unsigned j = 0; j < kLogDegreeBound; ++j) {
        TruncatedSeries<ZPoly> t = theta(a.comp[j]);
        if (j + 1 < kLogDegreeBound) t += a.comp[j + 1];
        s.comp[j] = t.scaled(z);
    }
    return s;
}

using RationalLogSeries = LogSeries<Rational>;

}  // namespace lgcy
