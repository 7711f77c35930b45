#include "fermatlab/verify/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "fermatlab/version.hpp"

namespace fermatlab::verify {

namespace {

std::string number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write(std::ostringstream& out, const Json& v, int indent, int depth) {
    const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    const char* nl = indent > 0 ? "\n" : "";
    switch (v.type()) {
        case Json::value_t::number_float:
            out << number(v.get<double>());
            return;
        case Json::value_t::array: {
            if (v.empty()) {
                out << "[]";
                return;
            }
            out << "[" << nl;
            bool first = true;
            for (const auto& e : v) {
                if (!first) out << "," << nl;
                first = false;
                out << pad;
                write(out, e, indent, depth + 1);
            }
            out << nl << close << "]";
            return;
        }
        case Json::value_t::object: {
            if (v.empty()) {
                out << "{}";
                return;
            }
            out << "{" << nl;
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out << "," << nl;
                first = false;
                out << pad << Json(it.key()).dump() << (indent > 0 ? ": " : ":");
                write(out, it.value(), indent, depth + 1);
            }
            out << nl << close << "}";
            return;
        }
        default:
            out << v.dump();
    }
}

Json windowJson(const ScanWindow& w) {
    return Json{{"re_min", w.reMin},
                {"re_max", w.reMax},
                {"im_min", w.imMin},
                {"im_max", w.imMax},
                {"density", w.density},
                {"soft_exclusion_radius", w.softExclusionRadius}};
}

Json paramsJson(const std::vector<std::pair<std::string, std::string>>& params) {
    Json out = Json::object();
    for (const auto& [k, v] : params) out[k] = v;
    return out;
}

}  // namespace

std::string dumpJson(const Json& value, int indent) {
    std::ostringstream out;
    write(out, value, indent, 0);
    return out.str();
}

Json complexJson(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json polynomialJson(const symbolic::Polynomial& p, const std::string& variable) {
    Json degrees = Json::array();
    Json coeffs = Json::array();
    for (int d = p.degree(); d >= 0; --d) {
        degrees.push_back(d);
        coeffs.push_back(p.coefficient(d).toString());
    }
    return Json{{"degrees", degrees}, {"coefficients", coeffs}, {"text", p.isZero() ? "0" : p.toString(variable)}};
}

Json reportJson(const Report& r) {
    Json failures = Json::array();
    for (const auto& f : r.failures) failures.push_back(Json{{"z", complexJson(f.z)}, {"residual", f.residual}});
    return Json{{"tool_version", kToolVersion},
                {"command", r.command},
                {"family", r.familyId},
                {"params", paramsJson(r.params)},
                {"window", windowJson(r.window)},
                {"grid", Json{{"columns", r.window.columns()}, {"rows", r.window.rows()}}},
                {"tolerance", r.tolerance},
                {"points_total", r.pointsTotal},
                {"points_excluded", r.pointsExcluded},
                {"max_residual", r.maxResidual},
                {"p95_residual", r.p95Residual},
                {"verdict", toString(r.verdict)},
                {"failures", failures}};
}

std::string pointsCsv(const Report& r) {
    std::ostringstream out;
    out << "z_re,z_im,residual_abs,residual_rel,excluded\n";
    for (const auto& p : r.points) {
        out << number(p.z.real()) << "," << number(p.z.imag()) << "," << number(p.residualAbs) << ","
            << number(p.residualRel) << "," << (p.excluded ? 1 : 0) << "\n";
    }
    return out.str();
}

Json verdictJson(const families::Verdict& v) {
    Json out{{"family", v.familyId}, {"verdict", toString(v.outcome)}, {"method", toString(v.method)}};
    if (v.quotient) {
        out["variable"] = v.variable;
        out["residual"] = Json{{"even", polynomialJson(v.quotient->even, v.variable)},
                               {"odd", polynomialJson(v.quotient->odd, v.variable)}};
        out["canonical_residual"] = Json{{"even", polynomialJson(*v.canonicalEven, v.variable)},
                                         {"odd", polynomialJson(*v.canonicalOdd, v.variable)}};
    }
    if (v.seriesOutcome) {
        Json s{{"verdict", toString(*v.seriesOutcome)}, {"mode", v.exactSeries ? "exact" : "float"}};
        if (v.exactSeries && !v.exactSeries->isZero()) {
            s["valuation"] = v.exactSeries->valuation();
            s["leading_coefficient"] = v.exactSeries->coefficient(v.exactSeries->valuation()).toString();
        }
        if (v.floatSeries) s["max_coefficient"] = v.floatSeries->maxMagnitude();
        out["series"] = s;
    }
    if (v.routesAgree) out["routes_agree"] = *v.routesAgree;
    out["notes"] = v.notes;
    return out;
}

Json zeroSetJson(const ZeroSet& set) {
    auto points = [](const std::vector<CriticalPoint>& pts) {
        Json a = Json::array();
        for (const auto& p : pts) {
            a.push_back(Json{{"z", complexJson(p.location)}, {"multiplicity", p.multiplicity}, {"winding", p.windingRaw}});
        }
        return a;
    };
    return Json{{"window", windowJson(set.window)},
                {"roots", points(set.roots)},
                {"poles", points(set.poles)},
                {"zero_count", set.zeroCount()},
                {"pole_count", set.poleCount()},
                {"window_total", set.windowTotal},
                {"window_total_raw", set.windowTotalRaw}};
}

Json comparisonJson(const Comparison& c, Relation relation, MultiplicityMode mode) {
    Json w = Json::array();
    for (const Complex z : c.witnesses) w.push_back(complexJson(z));
    return Json{{"relation", toString(relation)},
                {"mode", toString(mode)},
                {"holds", c.holds},
                {"witnesses", w},
                {"detail", c.detail}};
}

Json attainmentJson(const std::vector<Attainment>& rows) {
    Json out = Json::array();
    for (const auto& a : rows) {
        out.push_back(Json{{"target", complexJson(a.target)},
                           {"grid_min_distance", a.gridMinDistance},
                           {"grid_argmin", complexJson(a.gridArgmin)},
                           {"newton_converged", a.newtonConverged},
                           {"preimage", complexJson(a.preimage)},
                           {"preimage_distance", a.preimageDistance},
                           {"preimage_in_window", a.preimageInWindow}});
    }
    return out;
}

Json diagnosticJson(const DiagnosticReport& r) {
    Json out{{"kind", toString(r.kind)}, {"context", r.context}};
    if (r.limit) {
        Json samples = Json::array();
        for (const auto& s : r.limit->samples) samples.push_back(Json{{"radius", s.radius}, {"ratio", complexJson(s.value)}});
        out["limit"] = Json{{"power", r.limit->power},
                            {"expected", complexJson(r.limit->expected)},
                            {"samples", samples},
                            {"extrapolated", complexJson(r.limit->extrapolated)},
                            {"error", r.limit->error}};
    }
    if (r.cellMinimum) {
        Json m{{"min_modulus", r.cellMinimum->minModulus}, {"argmin", complexJson(r.cellMinimum->argmin)}};
        if (r.cellMinimum->zero) {
            m["zero"] = complexJson(*r.cellMinimum->zero);
            m["modulus_at_zero"] = r.cellMinimum->modulusAtZero;
        }
        out["cell_minimum"] = m;
    }
    if (r.kind == DiagnosticKind::H0) {
        out["grid"] = Json{{"points", r.gridPoints},
                           {"finite", r.gridFinite},
                           {"max_modulus", r.gridMaxModulus},
                           {"median_modulus", r.gridMedianModulus}};
        Json near = Json::array();
        for (const auto& b : r.nearPoints) {
            near.push_back(Json{{"center", complexJson(b.center)},
                                {"max_at_radius_1e-2", b.maxAtOuter},
                                {"max_at_radius_1e-3", b.maxAtInner}});
        }
        out["near_denominator_zeros"] = near;
    }
    out["notes"] = r.notes;
    return out;
}

}  // namespace fermatlab::verify
