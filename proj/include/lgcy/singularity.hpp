#pragma once

// Quasihomogeneous singularity analysis: parse W, solve the charge system
// M q = 1, take the Smith normal form of the exponent matrix to present the
// diagonal symmetry group, and derive the sector/moduli combinatorics.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgcy/exact.hpp"

namespace lgcy {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonUniqueCharges : std::domain_error {
    using std::domain_error::domain_error;
};
struct NoSolution : std::domain_error {
    using std::domain_error::domain_error;
};
struct NonPositiveCharge : std::domain_error {
    using std::domain_error::domain_error;
};
struct EmptyModuli : std::domain_error {
    using std::domain_error::domain_error;
};

using IntMatrix = std::vector<std::vector<BigInt>>;

inline IntMatrix identity_matrix(size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    IntMatrix m(r, std::vector<BigInt>(c, 0));
    for (size_t i = 0; i < r; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < c; ++j) m[i][j] += a[i][l] * b[l][j];
        }
    return m;
}

// Exact determinant by rational elimination (matrices here are tiny).
inline Rational matdet(const IntMatrix& a) {
    size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    Rational det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && m[p][k] == Rational(0)) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            Rational f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// Polynomial input

struct QuasihomPolynomial {
    std::vector<std::string> variables;   // in order of first appearance
    std::vector<Rational> coefficients;   // one per monomial
    IntMatrix exponents;                  // s x N exponent matrix M
};

// Grammar: term ('+'|'-') term ...; term = [coefficient '*'] power ('*' power)*;
// power = identifier ['^' natural]; coefficient = natural ['/' natural].
inline QuasihomPolynomial parse_polynomial(const std::string& text) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_nat = [&]() -> BigInt {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected number at position " + std::to_string(pos));
        return BigInt(text.substr(start, pos - start));
    };
    auto read_ident = [&]() -> std::string {
        size_t start = pos;
        if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected variable name at position " + std::to_string(pos));
        ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    };

    std::vector<Rational> coefs;
    std::vector<std::map<std::string, BigInt>> terms;
    std::vector<std::string> variables;
    std::map<std::string, size_t> index;

    skip_ws();
    if (pos >= text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;
        skip_ws();
        if (pos >= text.size()) throw ParseError("dangling sign at end of input");

        Rational coef(sign);
        std::map<std::string, BigInt> powers;
        bool expectFactor = true;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            BigInt num = read_nat();
            BigInt den = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                skip_ws();
                den = read_nat();
                if (den == 0) throw ParseError("zero denominator in coefficient");
                skip_ws();
            }
            coef *= Rational(num, den);
            expectFactor = false;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                expectFactor = true;
            }
        }
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            std::string name = read_ident();
            BigInt e = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                e = read_nat();
                skip_ws();
            }
            powers[name] += e;
            if (index.emplace(name, index.size()).second) variables.push_back(name);
            expectFactor = false;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
                expectFactor = true;
            } else {
                break;
            }
        }
        if (expectFactor) throw ParseError("incomplete term at position " + std::to_string(pos));
        if (coef == Rational(0)) throw ParseError("zero coefficient");
        if (powers.empty()) throw ParseError("constant term is not allowed");
        coefs.push_back(coef);
        terms.push_back(std::move(powers));
        skip_ws();
    }

    QuasihomPolynomial poly;
    poly.variables = variables;
    poly.coefficients = coefs;
    poly.exponents.assign(terms.size(), std::vector<BigInt>(variables.size(), 0));
    for (size_t i = 0; i < terms.size(); ++i)
        for (const auto& [name, e] : terms[i]) poly.exponents[i][index[name]] = e;

    std::set<std::vector<BigInt>> seen;
    for (const auto& r : poly.exponents)
        if (!seen.insert(r).second) throw ParseError("monomials must have distinct exponents");
    return poly;
}

// ---------------------------------------------------------------------------
// Charges

struct ChargeData {
    std::vector<Rational> charges;  // q_j in (0,1)
    std::vector<BigInt> weights;    // coprime integer weights c_j
    BigInt degree;                  // d with q_j = c_j / d
};

// Unique rational solution of M q = (1,...,1); errors follow the charge rules.
inline ChargeData solve_charges(const IntMatrix& M) {
    size_t s = M.size();
    if (s == 0) throw NoSolution("empty exponent matrix");
    size_t n = M[0].size();
    std::vector<std::vector<Rational>> a(s, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < s; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(M[i][j]);
        a[i][n] = Rational(1);
    }
    size_t rank = 0;
    std::vector<size_t> pivotCol;
    for (size_t col = 0; col < n && rank < s; ++col) {
        size_t p = rank;
        while (p < s && a[p][col] == Rational(0)) ++p;
        if (p == s) continue;
        std::swap(a[p], a[rank]);
        Rational inv = Rational(1) / a[rank][col];
        for (size_t j = col; j <= n; ++j) a[rank][j] *= inv;
        for (size_t i = 0; i < s; ++i) {
            if (i == rank || a[i][col] == Rational(0)) continue;
            Rational f = a[i][col];
            for (size_t j = col; j <= n; ++j) a[i][j] -= f * a[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }
    for (size_t i = rank; i < s; ++i)
        if (a[i][n] != Rational(0)) throw NoSolution("charge system is inconsistent");
    if (rank < n)
        throw NonUniqueCharges("exponent matrix has rank " + std::to_string(rank) + " < " +
                               std::to_string(n) + "; charges are not unique");

    ChargeData cd;
    cd.charges.assign(n, Rational(0));
    for (size_t i = 0; i < rank; ++i) cd.charges[pivotCol[i]] = a[i][n];
    BigInt d = 1;
    for (const auto& q : cd.charges) {
        if (!(q > Rational(0)))
            throw NonPositiveCharge("charge " + to_fraction_string(q) + " is not positive");
        if (!(q < Rational(1)))
            throw NonPositiveCharge("charge " + to_fraction_string(q) + " is not below 1");
        d = lcm(d, denominator_of(q));
    }
    cd.degree = d;
    for (const auto& q : cd.charges) cd.weights.push_back(numerator_of(q) * (d / denominator_of(q)));
    return cd;
}

// ---------------------------------------------------------------------------
// Smith normal form with tracked unimodular factors

struct SmithData {
    IntMatrix T;     // s x s unimodular
    IntMatrix D;     // s x N diagonal, positive invariant factors d_i | d_{i+1}
    IntMatrix S;     // N x N unimodular
    IntMatrix Tinv;  // exact inverse of T, maintained alongside
};

// M = T D S by integer row/column elimination with smallest-pivot selection;
// a post-check enforces the divisibility chain and positive diagonal.
inline SmithData smith_normal_form(const IntMatrix& M) {
    size_t s = M.size();
    size_t n = s == 0 ? 0 : M[0].size();
    IntMatrix a = M;
    SmithData r;
    r.T = identity_matrix(s);
    r.Tinv = identity_matrix(s);
    r.S = identity_matrix(n);

    // elementary moves, each mirrored on T (inverse op, column side) and Tinv / S
    auto row_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        std::swap(r.Tinv[i], r.Tinv[j]);
        for (size_t k = 0; k < s; ++k) std::swap(r.T[k][i], r.T[k][j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < s; ++k) std::swap(a[k][i], a[k][j]);
        std::swap(r.S[i], r.S[j]);
    };
    auto row_add = [&](size_t i, size_t j, const BigInt& m) {  // row i += m * row j
        if (m == 0) return;
        for (size_t k = 0; k < n; ++k) a[i][k] += m * a[j][k];
        for (size_t k = 0; k < s; ++k) r.Tinv[i][k] += m * r.Tinv[j][k];
        for (size_t k = 0; k < s; ++k) r.T[k][j] -= m * r.T[k][i];
    };
    auto col_add = [&](size_t j, size_t i, const BigInt& m) {  // col j += m * col i
        if (m == 0) return;
        for (size_t k = 0; k < s; ++k) a[k][j] += m * a[k][i];
        for (size_t k = 0; k < n; ++k) r.S[i][k] -= m * r.S[j][k];
    };
    auto row_negate = [&](size_t i) {
        for (size_t k = 0; k < n; ++k) a[i][k] = -a[i][k];
        for (size_t k = 0; k < s; ++k) r.Tinv[i][k] = -r.Tinv[i][k];
        for (size_t k = 0; k < s; ++k) r.T[k][i] = -r.T[k][i];
    };

    size_t rank = std::min(s, n);
    for (size_t k = 0; k < rank; ++k) {
        while (true) {
            // smallest-magnitude nonzero pivot in the trailing block
            size_t pi = k, pj = k;
            BigInt best = 0;
            for (size_t i = k; i < s; ++i)
                for (size_t j = k; j < n; ++j) {
                    if (a[i][j] == 0) continue;
                    BigInt v = abs(a[i][j]);
                    if (best == 0 || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) {
                rank = k;  // trailing block vanished
                break;
            }
            row_swap(k, pi);
            col_swap(k, pj);
            if (a[k][k] < 0) row_negate(k);

            bool reduced = true;
            for (size_t i = k + 1; i < s; ++i) {
                if (a[i][k] == 0) continue;
                row_add(i, k, -(a[i][k] / a[k][k]));
                if (a[i][k] != 0) reduced = false;  // remainder: pivot will shrink
            }
            for (size_t j = k + 1; j < n; ++j) {
                if (a[k][j] == 0) continue;
                col_add(j, k, -(a[k][j] / a[k][k]));
                if (a[k][j] != 0) reduced = false;
            }
            if (!reduced) continue;

            // pivot must divide every remaining entry for the chain to hold
            bool divides = true;
            for (size_t i = k + 1; i < s && divides; ++i)
                for (size_t j = k + 1; j < n && divides; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        row_add(k, i, 1);  // drag the offending row up, retry
                        divides = false;
                    }
            if (divides) break;
        }
        if (rank == k) break;
    }

    r.D.assign(s, std::vector<BigInt>(n, 0));
    for (size_t k = 0; k < std::min(s, n); ++k) r.D[k][k] = a[k][k];
    return r;
}

// ---------------------------------------------------------------------------
// Profile

struct SingularityProfile {
    QuasihomPolynomial poly;
    std::vector<Rational> charges;         // q_j
    std::vector<BigInt> weights;           // c_j, gcd(c_1..c_N, d) = 1
    BigInt degree;                         // d
    SmithData smith;                       // of the exponent matrix
    std::vector<BigInt> invariantFactors;  // d_1 | ... | d_N
    BigInt groupOrder;                     // |G_W| = prod d_i
    BigInt exponent;                       // dbar = d_N
    std::vector<BigInt> scaledWeights;     // cbar_j = c_j dbar / d
    Rational milnor;                       // prod(1/q_i - 1)
    bool milnorIntegral = true;
    Rational centralCharge;                // sum(1 - 2 q_i)
    std::vector<Rational> J;               // phases (c_j / d)
    std::string shape;                     // fermat / chain / loop / sum of those
    bool criticalPointUnverified = false;
};

namespace detail {

// Recognize Fermat / chain / loop building blocks on each connected group of
// variables; anything else leaves the isolated-critical-point question open.
inline std::pair<std::string, bool> classify_shape(const QuasihomPolynomial& poly) {
    size_t s = poly.exponents.size();
    size_t n = poly.variables.size();
    std::vector<size_t> comp(n);
    for (size_t j = 0; j < n; ++j) comp[j] = j;
    std::function<size_t(size_t)> find = [&](size_t x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    std::vector<std::vector<size_t>> support(s);
    for (size_t i = 0; i < s; ++i) {
        for (size_t j = 0; j < n; ++j)
            if (poly.exponents[i][j] != 0) support[i].push_back(j);
        for (size_t k = 1; k < support[i].size(); ++k)
            comp[find(support[i][k])] = find(support[i][0]);
    }

    std::map<size_t, std::vector<size_t>> monosByComp;  // root -> monomial ids
    std::map<size_t, std::set<size_t>> varsByComp;
    for (size_t i = 0; i < s; ++i) {
        if (support[i].empty()) return {"unrecognized", true};
        monosByComp[find(support[i][0])].push_back(i);
    }
    for (size_t j = 0; j < n; ++j) varsByComp[find(j)].insert(j);

    std::vector<std::string> parts;
    for (const auto& [root, vars] : varsByComp) {
        auto mit = monosByComp.find(root);
        if (mit == monosByComp.end()) return {"unrecognized", true};
        const auto& monos = mit->second;
        if (monos.size() != vars.size()) return {"unrecognized", true};

        // single variable, single monomial x^a, a >= 2: Fermat atom
        if (vars.size() == 1) {
            size_t j = *vars.begin();
            if (support[monos[0]].size() == 1 && poly.exponents[monos[0]][j] >= 2)
                parts.push_back("fermat");
            else
                return {"unrecognized", true};
            continue;
        }

        // otherwise every monomial must be x_u^a (pure) or x_u^a * x_v (link)
        std::map<size_t, size_t> next;  // u -> v along x_u^a x_v
        std::vector<size_t> pure;
        bool ok = true;
        for (size_t i : monos) {
            if (support[i].size() == 1) {
                size_t u = support[i][0];
                if (poly.exponents[i][u] < 2) ok = false;
                pure.push_back(u);
            } else if (support[i].size() == 2) {
                size_t u = support[i][0], v = support[i][1];
                if (poly.exponents[i][v] == 1 && poly.exponents[i][u] >= 1) {
                    // u^a * v
                } else if (poly.exponents[i][u] == 1 && poly.exponents[i][v] >= 1) {
                    std::swap(u, v);
                } else {
                    ok = false;
                    break;
                }
                if (!next.emplace(u, v).second) ok = false;
            } else {
                ok = false;
                break;
            }
        }
        if (!ok) return {"unrecognized", true};

        if (pure.empty()) {
            // loop: next is a single cycle through all variables
            if (next.size() != vars.size()) return {"unrecognized", true};
            size_t start = *vars.begin(), cur = start, steps = 0;
            std::set<size_t> seen;
            while (steps < vars.size()) {
                if (!next.count(cur) || !seen.insert(cur).second) return {"unrecognized", true};
                cur = next[cur];
                ++steps;
            }
            if (cur != start || seen.size() != vars.size()) return {"unrecognized", true};
            parts.push_back("loop");
        } else if (pure.size() == 1) {
            // chain: a path x_1 -> x_2 -> ... -> x_m with the pure power at the end
            size_t tail = pure[0];
            if (next.count(tail)) return {"unrecognized", true};
            std::map<size_t, size_t> indeg;
            for (const auto& [u, v] : next) ++indeg[v];
            size_t head = n;
            for (size_t j : vars)
                if (!indeg.count(j) && j != tail) {
                    if (head != n) return {"unrecognized", true};
                    head = j;
                } else if (indeg[j] > 1) {
                    return {"unrecognized", true};
                }
            if (head == n) return {"unrecognized", true};
            size_t cur = head, steps = 1;
            while (next.count(cur)) {
                cur = next[cur];
                ++steps;
            }
            if (cur != tail || steps != vars.size()) return {"unrecognized", true};
            parts.push_back("chain");
        } else {
            return {"unrecognized", true};
        }
    }

    std::sort(parts.begin(), parts.end());
    if (parts.empty()) return {"unrecognized", true};
    bool allSame = std::equal(parts.begin() + 1, parts.end(), parts.begin());
    if (allSame && parts[0] == "fermat") return {"fermat", false};
    if (parts.size() == 1) return {parts[0], false};
    std::string label = "sum:" + parts[0];
    for (size_t i = 1; i < parts.size(); ++i) label += "+" + parts[i];
    return {label, false};
}

}  // namespace detail

inline SingularityProfile analyze(const QuasihomPolynomial& poly) {
    SingularityProfile p;
    p.poly = poly;
    ChargeData cd = solve_charges(poly.exponents);
    p.charges = cd.charges;
    p.weights = cd.weights;
    p.degree = cd.degree;
    p.smith = smith_normal_form(poly.exponents);

    size_t n = poly.variables.size();
    p.groupOrder = 1;
    for (size_t i = 0; i < n; ++i) {
        BigInt di = i < p.smith.D.size() && i < p.smith.D[i].size() ? p.smith.D[i][i] : BigInt(0);
        p.invariantFactors.push_back(di);
        p.groupOrder *= di;
    }
    p.exponent = p.invariantFactors.empty() ? BigInt(1) : p.invariantFactors.back();

    for (size_t j = 0; j < n; ++j) {
        p.scaledWeights.push_back(p.weights[j] * p.exponent / p.degree);
        p.J.push_back(Rational(p.weights[j], p.degree));
    }

    p.milnor = Rational(1);
    p.centralCharge = Rational(0);
    for (const auto& q : p.charges) {
        p.milnor *= Rational(1) / q - Rational(1);
        p.centralCharge += Rational(1) - Rational(2) * q;
    }
    p.milnorIntegral = is_integer(p.milnor) && p.milnor > Rational(0);

    auto [shape, unverified] = detail::classify_shape(poly);
    p.shape = shape;
    p.criticalPointUnverified = unverified;
    return p;
}

inline SingularityProfile analyze(const std::string& text) {
    return analyze(parse_polynomial(text));
}

// ---------------------------------------------------------------------------
// Sectors

struct Sector {
    BigInt m;                    // the sector is gamma = J^m
    std::vector<Rational> theta;  // phases in [0,1)
    unsigned fixedDim = 0;        // N_gamma = #{j : theta_j = 0}
    Rational iota;                // sum(theta_j - q_j)
    bool narrow = false;          // NS iff N_gamma = 0
    Rational stateDegree;         // 2 iota + N_gamma
    std::optional<BigInt> invariantDimension;  // 1 for NS; Fermat monomial count when gamma = id
};

inline Sector sector_data(const SingularityProfile& p, const BigInt& m) {
    Sector s;
    size_t n = p.charges.size();
    s.m = ((m % p.degree) + p.degree) % p.degree;
    s.iota = Rational(0);
    for (size_t j = 0; j < n; ++j) {
        Rational th = fractional_part(Rational(s.m * p.weights[j], p.degree));
        s.theta.push_back(th);
        if (th == Rational(0)) ++s.fixedDim;
        s.iota += th - p.charges[j];
    }
    s.narrow = s.fixedDim == 0;
    s.stateDegree = Rational(2) * s.iota + Rational(s.fixedDim);
    if (s.narrow) {
        s.invariantDimension = BigInt(1);
    } else if (s.fixedDim == n && p.shape == "fermat") {
        // gamma acts trivially: count local-algebra monomials x^a, 0 <= a_j <= k_j - 2,
        // whose associated form has integral total phase sum (a_j + 1) c_j / d.
        std::vector<BigInt> kexp(n, 0);
        for (size_t i = 0; i < p.poly.exponents.size(); ++i)
            for (size_t j = 0; j < n; ++j)
                if (p.poly.exponents[i][j] != 0) kexp[j] = p.poly.exponents[i][j];
        BigInt count = 0;
        std::vector<BigInt> a(n, 0);
        while (true) {
            BigInt phase = 0;
            for (size_t j = 0; j < n; ++j) phase += (a[j] + 1) * p.weights[j];
            if (phase % p.degree == 0) ++count;
            size_t j = 0;
            while (j < n) {
                if (++a[j] <= kexp[j] - 2) break;
                a[j] = 0;
                ++j;
            }
            if (j == n) break;
        }
        s.invariantDimension = count;
    }
    return s;
}

inline std::vector<Sector> all_sectors(const SingularityProfile& p) {
    std::vector<Sector> out;
    for (BigInt m = 0; m < p.degree; ++m) out.push_back(sector_data(p, m));
    return out;
}

// ---------------------------------------------------------------------------
// Moduli combinatorics

// Nonemptiness of the moduli of c-spin structures with markings gamma_i = J^{m_i}:
// for every variable, q_j c (2g-2+n) - sum_i Theta_j(gamma_i) must be integral.
inline bool nonempty_check(const SingularityProfile& p, unsigned g, unsigned n, unsigned c,
                           const std::vector<BigInt>& ms) {
    if (ms.size() != n) throw std::invalid_argument("nonempty_check: need one sector per marking");
    int euler = 2 * static_cast<int>(g) - 2 + static_cast<int>(n);
    for (size_t j = 0; j < p.charges.size(); ++j) {
        Rational lhs = p.charges[j] * Rational(c) * Rational(euler);
        for (const auto& m : ms) {
            BigInt mm = ((m % p.degree) + p.degree) % p.degree;
            lhs -= fractional_part(Rational(mm * p.weights[j], p.degree));
        }
        if (!is_integer(lhs)) return false;
    }
    return true;
}

// Degree of the forgetful map to the moduli of curves: |G_W|^{2g-1+n} / dbar^N.
inline Rational moduli_degree(const SingularityProfile& p, unsigned g, unsigned n, unsigned c = 1) {
    if (n == 0) {
        BigInt need = BigInt(c) * (2 * static_cast<int>(g) - 2);
        if (need % p.degree != 0)
            throw EmptyModuli("no markings and c(2g-2) is not a multiple of d");
    }
    int e = 2 * static_cast<int>(g) - 1 + static_cast<int>(n);
    Rational num = rational_pow(Rational(p.groupOrder), e);
    Rational den = rational_pow(Rational(p.exponent), static_cast<int>(p.charges.size()));
    return num / den;
}

// Degree of a single group-orbit component: |G_W|^{2g} / dbar^N.
inline Rational component_degree(const SingularityProfile& p, unsigned g) {
    Rational num = rational_pow(Rational(p.groupOrder), 2 * static_cast<int>(g));
    Rational den = rational_pow(Rational(p.exponent), static_cast<int>(p.charges.size()));
    return num / den;
}

inline long virtual_codim(unsigned g, unsigned n, const std::vector<unsigned>& ms) {
    long sum = 0;
    for (unsigned m : ms) sum += m;
    return 3L * g - 3L - static_cast<long>(n) + sum;
}

}  // namespace lgcy
