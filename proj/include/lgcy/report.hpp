#pragma once

// JSON / CSV / pretty emission for every report type, plus the parsers that
// make the JSON forms round-trip.

#include <sstream>
#include <string>

#include "json.hpp"
#include "lgcy/continuation.hpp"
#include "lgcy/grr.hpp"
#include "lgcy/mirror.hpp"
#include "lgcy/series.hpp"
#include "lgcy/singularity.hpp"

namespace lgcy {

using Json = nlohmann::json;

// {"var": "t", "order": N, "coeffs": {"k": "num/den"}}
inline Json series_to_json(const RationalSeries& s, const std::string& var) {
    Json coeffs = Json::object();
    for (const auto& [e, c] : s.coefficients()) coeffs[std::to_string(e)] = to_fraction_string(c);
    return Json{{"var", var}, {"order", s.order()}, {"coeffs", coeffs}};
}

inline RationalSeries series_from_json(const Json& j, std::string* var = nullptr) {
    if (var != nullptr) *var = j.at("var").get<std::string>();
    RationalSeries s(j.at("order").get<unsigned>());
    for (const auto& [key, val] : j.at("coeffs").items())
        s.set(static_cast<unsigned>(std::stoul(key)), rational_from_string(val.get<std::string>()));
    return s;
}

inline std::string series_pretty(const RationalSeries& s, const std::string& var) {
    if (s.known_zero()) return "0 + O(" + var + "^" + std::to_string(s.order()) + ")";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : s.coefficients()) {
        Rational a = c;
        if (first) {
            if (a < Rational(0)) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < Rational(0) ? " - " : " + ");
            if (a < Rational(0)) a = -a;
        }
        first = false;
        if (e == 0) {
            out << to_fraction_string(a);
        } else {
            if (a != Rational(1)) out << to_fraction_string(a) << "*";
            out << var;
            if (e > 1) out << "^" << e;
        }
    }
    out << " + O(" << var << "^" << s.order() << ")";
    return out.str();
}

inline Json sector_to_json(const Sector& s) {
    Json thetas = Json::array();
    for (const auto& th : s.theta) thetas.push_back(to_fraction_string(th));
    Json j{{"m", s.m.str()},
           {"theta", thetas},
           {"fixedDim", s.fixedDim},
           {"iota", to_fraction_string(s.iota)},
           {"type", s.narrow ? "NS" : "R"},
           {"degree", to_fraction_string(s.stateDegree)}};
    if (s.invariantDimension) j["invariantDimension"] = s.invariantDimension->str();
    return j;
}

inline Json profile_to_json(const SingularityProfile& p) {
    Json charges = Json::array();
    for (const auto& q : p.charges) charges.push_back(to_fraction_string(q));
    Json factors = Json::array();
    for (const auto& f : p.invariantFactors) factors.push_back(f.str());
    Json jphases = Json::array();
    for (const auto& q : p.J) jphases.push_back(to_fraction_string(q));
    Json sectors = Json::array();
    for (const auto& s : all_sectors(p)) sectors.push_back(sector_to_json(s));
    return Json{{"variables", p.poly.variables},
                {"charges", charges},
                {"d", p.degree.str()},
                {"invariantFactors", factors},
                {"groupOrder", p.groupOrder.str()},
                {"exponent", p.exponent.str()},
                {"milnor", to_fraction_string(p.milnor)},
                {"centralCharge", to_fraction_string(p.centralCharge)},
                {"J", jphases},
                {"shape", p.shape},
                {"criticalPointUnverified", p.criticalPointUnverified},
                {"sectors", sectors}};
}

inline std::string profile_pretty(const SingularityProfile& p) {
    std::ostringstream out;
    out << "variables:";
    for (const auto& v : p.poly.variables) out << " " << v;
    out << "\ncharges:";
    for (const auto& q : p.charges) out << " " << to_fraction_string(q);
    out << "\nd = " << p.degree.str() << "\ninvariant factors:";
    for (const auto& f : p.invariantFactors) out << " " << f.str();
    out << "\n|G_W| = " << p.groupOrder.str() << ", exponent = " << p.exponent.str();
    out << "\nmilnor = " << to_fraction_string(p.milnor)
        << ", central charge = " << to_fraction_string(p.centralCharge);
    out << "\nshape: " << p.shape;
    if (p.criticalPointUnverified) out << " (critical point unverified)";
    out << "\nsectors (m: type degree iota):";
    for (const auto& s : all_sectors(p)) {
        out << "\n  " << s.m.str() << ": " << (s.narrow ? "NS" : "R ") << " "
            << to_fraction_string(s.stateDegree) << " " << to_fraction_string(s.iota);
        if (s.invariantDimension) out << "  dim " << s.invariantDimension->str();
    }
    return out.str();
}

inline Json table_to_json(const InvariantTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back(Json{{"n", r.n}, {"value", to_fraction_string(r.value)}});
    return Json{{"kind", t.kind}, {"rows", rows}};
}

inline InvariantTable table_from_json(const Json& j) {
    InvariantTable t;
    t.kind = j.at("kind").get<std::string>();
    for (const auto& r : j.at("rows"))
        t.rows.push_back(
            {r.at("n").get<unsigned>(), rational_from_string(r.at("value").get<std::string>())});
    return t;
}

inline std::string table_to_csv(const InvariantTable& t) {
    std::ostringstream out;
    out << "kind,n,value\n";
    for (const auto& r : t.rows)
        out << t.kind << "," << r.n << "," << to_fraction_string(r.value) << "\n";
    return out.str();
}

inline Json u_matrix_to_json(const ContinuationMatrix& u) {
    Json rows = Json::array();
    for (unsigned r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (unsigned k = 0; k < 4; ++k)
            row.push_back(Json{{"re", u.entries[r][k].coeff.real()},
                               {"im", u.entries[r][k].coeff.imag()},
                               {"zPower", u.entries[r][k].zPower}});
        rows.push_back(row);
    }
    return rows;
}

inline ContinuationMatrix u_matrix_from_json(const Json& j) {
    ContinuationMatrix u;
    for (unsigned r = 0; r < 4; ++r)
        for (unsigned k = 0; k < 4; ++k) {
            const Json& e = j.at(r).at(k);
            u.entries[r][k].coeff = Complex(e.at("re").get<double>(), e.at("im").get<double>());
            u.entries[r][k].zPower = e.at("zPower").get<int>();
        }
    return u;
}

inline Json grr_to_json(const GrrCoefficients& g) {
    Json psi = Json::array();
    for (const auto& c : g.psi) psi.push_back(to_fraction_string(c));
    Json boundary = Json::array();
    for (const auto& [th, c] : g.boundary)
        boundary.push_back(Json{{"theta", to_fraction_string(th)}, {"coeff", to_fraction_string(c)}});
    return Json{{"h", g.h},
                {"kappa", to_fraction_string(g.kappa)},
                {"psi", psi},
                {"boundary", boundary},
                {"boundaryLabel", g.boundaryLabel}};
}

inline std::string grr_to_csv(const GrrCoefficients& g) {
    std::ostringstream out;
    out << "term,key,value\n";
    out << "kappa," << g.h << "," << to_fraction_string(g.kappa) << "\n";
    for (size_t i = 0; i < g.psi.size(); ++i)
        out << "psi," << (i + 1) << "," << to_fraction_string(g.psi[i]) << "\n";
    for (const auto& [th, c] : g.boundary)
        out << "boundary," << to_fraction_string(th) << "," << to_fraction_string(c) << "\n";
    return out.str();
}

}  // namespace lgcy
