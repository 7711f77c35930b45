#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "fermatlab/acceptance.hpp"
#include "fermatlab/errors.hpp"
#include "fermatlab/families/adjudicate.hpp"
#include "fermatlab/families/catalog.hpp"
#include "fermatlab/verify/diagnostics.hpp"
#include "fermatlab/verify/report.hpp"
#include "fermatlab/verify/scan.hpp"
#include "fermatlab/verify/zeros.hpp"
#include "fermatlab/version.hpp"

namespace fermatlab::cli {

namespace {

using families::Expr;
using families::SolutionFamily;
using verify::Json;

struct FamilyArgs {
    std::string id = "case1";
    int variant = 1;
    int eta = 0;
    int zeta = 0;
    int m = 3;
    int n = 2;
    int ell = 1;
    std::string rho = "5/4";
    std::string tau = "0";
    std::string sign = "plus";
    std::string alpha = "exp";
    std::string alphaConstant = "2";
    std::string beta = "identity";
    std::string gamma = "1/2+1/2i";

    void attach(CLI::App* app) {
        app->add_option("--family", id, "Family id")->capture_default_str();
        app->add_option("--variant", variant, "Case IV/VI variant (1 or 2)")->capture_default_str();
        app->add_option("--eta", eta, "Cube root of unity index 0..2")->capture_default_str();
        app->add_option("--zeta", zeta, "Fourth root of unity index 0..3")->capture_default_str();
        app->add_option("--m", m, "Exponent m (m-one, picard-pair)")->capture_default_str();
        app->add_option("--n", n, "Exponent n (picard-pair)")->capture_default_str();
        app->add_option("--ell", ell, "Derivative power of the corollary witness")->capture_default_str();
        app->add_option("--rho", rho, "Quadratic cross coefficient")->capture_default_str();
        app->add_option("--tau", tau, "Cubic parameter")->capture_default_str();
        app->add_option("--sign", sign, "Quadratic sign convention: plus|minus")->capture_default_str();
        app->add_option("--alpha", alpha, "Case I inner function: exp|identity|tan-half|const")->capture_default_str();
        app->add_option("--alpha-constant", alphaConstant, "Value for --alpha const")->capture_default_str();
        app->add_option("--beta", beta, "Substitution w -> beta(w): identity|exp")->capture_default_str();
        app->add_option("--gamma", gamma, "Picard pair parameter")->capture_default_str();
    }

    SolutionFamily build() const {
        families::FamilyParams p;
        p.variant = variant;
        p.etaIndex = eta;
        p.zetaIndex = zeta;
        p.m = m;
        p.n = n;
        p.ell = ell;
        p.rho = parseNumber(rho);
        p.tau = parseNumber(tau);
        p.sign = families::parseSignConvention(sign);
        p.alpha = families::parseAlphaKind(alpha);
        p.alphaConstant = parseNumber(alphaConstant);
        p.beta = families::parseBetaKind(beta);
        p.gamma = parseNumber(gamma);
        return families::buildFamily(id, p);
    }
};

struct WindowArgs {
    std::string rect = "-2,2,-2,2";
    double density = 20.0;
    double exclusion = 0.05;

    void attach(CLI::App* app) {
        app->add_option("--window", rect, "reMin,reMax,imMin,imMax")
            ->capture_default_str()
            ->delimiter(',')
            ->multi_option_policy(CLI::MultiOptionPolicy::Join);
        app->add_option("--density", density, "Grid points per unit length")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_option("--exclusion", exclusion, "Soft exclusion radius")->capture_default_str()->check(CLI::NonNegativeNumber);
    }

    verify::ScanWindow build() const {
        verify::ScanWindow w = verify::parseWindow(rect);
        w.density = density;
        w.softExclusionRadius = exclusion;
        w.validate();
        return w;
    }
};

void emit(std::ostream& out, const Json& value) { out << verify::dumpJson(value) << "\n"; }

void writeFile(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot write " + path);
    file << text;
    if (!file) throw InvalidInput("write failed: " + path);
}

int verdictExit(verify::ScanVerdict v) {
    switch (v) {
        case verify::ScanVerdict::Pass: return kExitOk;
        case verify::ScanVerdict::Fail: return kExitFail;
        case verify::ScanVerdict::Inconclusive: return kExitInconclusive;
    }
    return kExitFail;
}

/// f, g, f', g', h, h' of one family.
Expr namedExpression(const SolutionFamily& family, const std::string& name) {
    if (name == "f") return family.f;
    if (name == "g") return family.g;
    if (name == "f'" || name == "fprime") return family.f.derivative();
    if (name == "g'" || name == "gprime") return family.g.derivative();
    if (name == "h" || name == "h'" || name == "hprime") {
        if (!family.h) throw InvalidInput("family " + family.id + " has no h");
        return name == "h" ? *family.h : family.h->derivative();
    }
    if (name == "residual") return family.residual();
    throw InvalidInput("unknown expression '" + name + "' (f, g, f', g', h, h', residual)");
}

Json invariantsJson(const wp::Invariants& inv) {
    Json out{{"g2", verify::complexJson(inv.g2)}, {"g3", verify::complexJson(inv.g3)}};
    if (inv.isExact()) {
        out["g2_exact"] = inv.exactG2->toString();
        out["g3_exact"] = inv.exactG3->toString();
    }
    return out;
}

// Each command returns its exit code; exceptions are mapped in run().

struct WpEvalArgs {
    std::optional<std::string> g2, g3, tau, caseId;
    std::string z;
};

int wpEval(const WpEvalArgs& a, std::ostream& out) {
    const int sources = (a.g2 || a.g3 ? 1 : 0) + (a.tau ? 1 : 0) + (a.caseId ? 1 : 0);
    if (sources != 1) throw CLI::ValidationError("wp-eval", "give exactly one of --g2/--g3, --tau, --case");
    wp::Invariants inv;
    if (a.g2 || a.g3) {
        if (!a.g2 || !a.g3) throw CLI::ValidationError("wp-eval", "--g2 and --g3 go together");
        const ParsedNumber g2 = parseNumber(*a.g2);
        const ParsedNumber g3 = parseNumber(*a.g3);
        inv = g2.exact && g3.exact ? wp::Invariants::exact(*g2.exact, *g3.exact) : wp::Invariants::approx(g2.value, g3.value);
    } else if (a.tau) {
        const ParsedNumber tau = parseNumber(*a.tau);
        inv = wp::invariantsFromTau(tau.value, tau.exact);
    } else {
        inv = wp::invariantsFromCase(wp::parseCaseId(*a.caseId));
    }
    inv.requireNondegenerate();
    const wp::Weierstrass engine(inv);
    const Complex z = parseNumber(a.z).value;
    const auto v = engine.evaluate(z);
    const Complex ode = v.wpPrime * v.wpPrime - 4.0 * v.wp * v.wp * v.wp + inv.g2 * v.wp + inv.g3;
    emit(out, Json{{"tool_version", kToolVersion},
                   {"command", "wp-eval"},
                   {"invariants", invariantsJson(inv)},
                   {"omega1", verify::complexJson(engine.halfPeriods().omega1)},
                   {"omega3", verify::complexJson(engine.halfPeriods().omega3)},
                   {"z", verify::complexJson(z)},
                   {"wp", verify::complexJson(v.wp)},
                   {"wpPrime", verify::complexJson(v.wpPrime)},
                   {"wpPrimePrime", verify::complexJson(v.wpPrimePrime)},
                   {"odeResidual", std::abs(ode)}});
    return kExitOk;
}

int adjudicateCmd(const FamilyArgs& fa, int order, std::ostream& out) {
    const auto family = fa.build();
    families::AdjudicateOptions options;
    options.order = order;
    const auto v = families::adjudicate(family, options);
    Json j = verify::verdictJson(v);
    j["params"] = Json::object();
    for (const auto& [k, val] : family.paramList) j["params"][k] = val;
    j["printed_form"] = family.printedForm;
    emit(out, Json{{"tool_version", kToolVersion}, {"command", "adjudicate"}, {"result", j}});
    return v.zero() ? kExitOk : kExitFail;
}

struct VerifyArgs {
    double tol = 1e-8;
    std::string out;
    std::string csv;
    bool derivative = false;
};

int verifyCmd(const FamilyArgs& fa, const WindowArgs& wa, const VerifyArgs& a, std::ostream& out) {
    const auto family = fa.build();
    const auto window = wa.build();
    const auto report = a.derivative ? verify::derivativeIdentityScan(family, window, a.tol)
                                     : verify::residualScan(family, window, a.tol);
    const std::string json = verify::dumpJson(verify::reportJson(report)) + "\n";
    if (a.out.empty()) {
        out << json;
    } else {
        writeFile(a.out, json);
        out << "verdict " << toString(report.verdict) << ", report written to " << a.out << "\n";
    }
    if (!a.csv.empty()) writeFile(a.csv, verify::pointsCsv(report));
    return verdictExit(report.verdict);
}

struct ZerosArgs {
    std::string expr = "f";
    std::string compare;
    std::string relation = "subset";
    std::string mode = "counting";
    int seedDensity = 5;
};

int zerosCmd(const FamilyArgs& fa, const WindowArgs& wa, const ZerosArgs& a, std::ostream& out) {
    const auto family = fa.build();
    const auto window = wa.build();
    verify::ZeroScanOptions options;
    options.seedDensity = a.seedDensity;
    const auto first = verify::zeroScan(namedExpression(family, a.expr), window, options);
    Json j{{"tool_version", kToolVersion}, {"command", "zeros"}, {"family", family.id}, {"expr", a.expr},
           {"zeros", verify::zeroSetJson(first)}};
    int code = kExitOk;
    if (!a.compare.empty()) {
        const auto relation = verify::parseRelation(a.relation);
        const auto mode = verify::parseMultiplicityMode(a.mode);
        const auto second = verify::zeroScan(namedExpression(family, a.compare), window, options);
        const auto cmp = verify::zeroSetCompare(first, second, relation, mode);
        j["compare"] = a.compare;
        j["compare_zeros"] = verify::zeroSetJson(second);
        j["comparison"] = verify::comparisonJson(cmp, relation, mode);
        code = cmp.holds ? kExitOk : kExitFail;
    }
    emit(out, j);
    return code;
}

int discriminantCmd(const std::string& tauText, std::ostream& out) {
    const ParsedNumber tau = parseNumber(tauText);
    const auto d = wp::discriminantOfTau(tau.value, tau.exact);
    Json j{{"tool_version", kToolVersion},
           {"command", "discriminant"},
           {"tau", verify::complexJson(tau.value)},
           {"exact", d.exactBraceForm.has_value()},
           {"delta_brace_form", verify::complexJson(d.braceForm)},
           {"delta_factored", verify::complexJson(d.factoredForm)},
           {"difference", verify::complexJson(d.difference())}};
    if (const auto diff = d.exactDifference()) {
        j["delta_brace_form_exact"] = d.exactBraceForm->toString();
        j["delta_factored_exact"] = d.exactFactoredForm->toString();
        j["difference_exact"] = diff->toString();
    }
    emit(out, j);
    return kExitOk;
}

struct SuiteArgs {
    bool acceptance = false;
    bool json = false;
    bool mutate = false;
    int criterion = 0;
    std::string artifacts;
};

int suiteCmd(const SuiteArgs& a, std::ostream& out) {
    const auto constants = a.mutate ? acceptance::Constants::corrupted() : acceptance::Constants::standard();
    std::vector<acceptance::CriterionResult> results;
    if (a.criterion > 0) {
        results.push_back(acceptance::runCriterion(a.criterion, constants));
    } else {
        results = acceptance::runAcceptance(constants);
    }
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (!a.artifacts.empty()) writeFile(a.artifacts, acceptance::artifactsJson(results) + "\n");
    if (a.json) {
        Json j = acceptance::summaryJson(results);
        j["tool_version"] = kToolVersion;
        j["mutated"] = a.mutate;
        emit(out, j);
    } else {
        out << acceptance::summaryTable(results);
        out << (all ? "all criteria passed\n" : "some criteria failed\n");
    }
    return all ? kExitOk : kExitFail;
}

int catalogCmd(const std::string& path, std::ostream& out) {
    const std::string text = families::catalogMarkdown(families::catalogEntries());
    if (path.empty() || path == "-") {
        out << text;
    } else {
        writeFile(path, text);
        out << "catalog written to " << path << "\n";
    }
    return kExitOk;
}

int attainCmd(const FamilyArgs& fa, const WindowArgs& wa, const std::string& expr,
              const std::vector<std::string>& targetText, std::ostream& out) {
    const auto family = fa.build();
    const auto window = wa.build();
    std::vector<Complex> targets;
    for (const auto& t : targetText) targets.push_back(parseNumber(t).value);
    const auto rows = verify::valueAttainmentScan(namedExpression(family, expr), targets, window);
    emit(out, Json{{"tool_version", kToolVersion}, {"command", "attain"}, {"family", family.id}, {"expr", expr},
                   {"targets", verify::attainmentJson(rows)}});
    return kExitOk;
}

int diagnoseCmd(const FamilyArgs& fa, const WindowArgs& wa, const std::string& kindText, std::ostream& out) {
    const auto kind = verify::parseDiagnosticKind(kindText);
    const auto report = kind == verify::DiagnosticKind::H0 ? verify::diagnoseH0(fa.build(), wa.build())
                                                           : verify::diagnoseTau(kind, parseNumber(fa.tau));
    emit(out, Json{{"tool_version", kToolVersion}, {"command", "diagnose"}, {"report", verify::diagnosticJson(report)}});
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical and exact checks for Weierstrass-function solutions of f^m + g^n = 1", "fermatlab"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.set_config("--config", "", "Defaults file: key=value lines, [subcommand] sections");
    app.require_subcommand(1);

    std::function<int()> action;

    WpEvalArgs wpArgs;
    auto* wpCmd = app.add_subcommand("wp-eval", "Evaluate wp, wp', wp'' and the ODE residual at z");
    wpCmd->add_option("--g2", wpArgs.g2, "Invariant g2");
    wpCmd->add_option("--g3", wpArgs.g3, "Invariant g3");
    wpCmd->add_option("--tau", wpArgs.tau, "Cubic parameter tau (invariants from tau)");
    wpCmd->add_option("--case", wpArgs.caseId, "II, III or IV");
    wpCmd->add_option("--z", wpArgs.z, "Evaluation point a+bi")->required();
    wpCmd->callback([&] { action = [&] { return wpEval(wpArgs, out); }; });

    FamilyArgs adjFamily;
    int order = 40;
    auto* adjCmd = app.add_subcommand("adjudicate", "Exact ZERO/NONZERO verdict for a family");
    adjFamily.attach(adjCmd);
    adjCmd->add_option("--order", order, "Series truncation order N")->capture_default_str()->check(CLI::Range(10, 400));
    adjCmd->callback([&] { action = [&] { return adjudicateCmd(adjFamily, order, out); }; });

    FamilyArgs verFamily;
    WindowArgs verWindow;
    VerifyArgs verArgs;
    auto* verCmd = app.add_subcommand("verify", "Residual scan of a family over a window");
    verFamily.attach(verCmd);
    verWindow.attach(verCmd);
    verCmd->add_option("--tol", verArgs.tol, "Relative residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    verCmd->add_option("--out", verArgs.out, "Report JSON path (stdout when omitted)");
    verCmd->add_option("--csv", verArgs.csv, "Per-point CSV path");
    verCmd->add_flag("--derivative", verArgs.derivative, "Scan m f^{m-1} f' + n g^{n-1} g' instead");
    verCmd->callback([&] { action = [&] { return verifyCmd(verFamily, verWindow, verArgs, out); }; });

    FamilyArgs zFamily;
    WindowArgs zWindow;
    ZerosArgs zArgs;
    auto* zCmd = app.add_subcommand("zeros", "Zeros with multiplicity of a named expression, optionally compared");
    zFamily.attach(zCmd);
    zWindow.attach(zCmd);
    zCmd->add_option("--expr", zArgs.expr, "f, g, f', g', h, h' or residual")->capture_default_str();
    zCmd->add_option("--compare", zArgs.compare, "Second named expression");
    zCmd->add_option("--relation", zArgs.relation, "subset|superset|equal|strict-subset|strict-superset")->capture_default_str();
    zCmd->add_option("--mode", zArgs.mode, "counting|ignoring")->capture_default_str();
    zCmd->add_option("--seed-density", zArgs.seedDensity, "Newton seeds per unit length")
        ->capture_default_str()
        ->check(CLI::Range(1, 100));
    zCmd->callback([&] { action = [&] { return zerosCmd(zFamily, zWindow, zArgs, out); }; });

    std::string discTau;
    auto* discCmd = app.add_subcommand("discriminant", "Both forms of the modular discriminant at tau");
    discCmd->add_option("--tau", discTau, "tau as p/q, a+bi or decimal")->required();
    discCmd->callback([&] { action = [&] { return discriminantCmd(discTau, out); }; });

    SuiteArgs suiteArgs;
    auto* suiteCmdApp = app.add_subcommand("suite", "Run the acceptance criteria");
    suiteCmdApp->add_flag("--acceptance", suiteArgs.acceptance, "Run every acceptance criterion (default)");
    suiteCmdApp->add_flag("--json", suiteArgs.json, "Machine-readable summary");
    suiteCmdApp->add_flag("--mutate", suiteArgs.mutate, "Corrupt g3 of the (0,1) invariants; the suite must fail");
    suiteCmdApp->add_option("--criterion", suiteArgs.criterion, "Run one criterion only")
        ->check(CLI::Range(1, acceptance::kCriterionCount));
    suiteCmdApp->add_option("--artifacts", suiteArgs.artifacts, "Write the per-criterion evidence JSON (timing-free)");
    suiteCmdApp->callback([&] { action = [&] { return suiteCmd(suiteArgs, out); }; });

    std::string catalogPath = "-";
    auto* catCmd = app.add_subcommand("catalog", "Markdown catalog of every family and its verdict");
    catCmd->add_option("--out", catalogPath, "Output path, - for stdout")->capture_default_str();
    catCmd->callback([&] { action = [&] { return catalogCmd(catalogPath, out); }; });

    FamilyArgs atFamily;
    WindowArgs atWindow;
    std::string atExpr = "f";
    std::vector<std::string> atTargets;
    auto* atCmd = app.add_subcommand("attain", "Search a window for preimages of target values");
    atFamily.attach(atCmd);
    atWindow.attach(atCmd);
    atCmd->add_option("--expr", atExpr, "Named expression")->capture_default_str();
    atCmd->add_option("--targets", atTargets, "Comma-separated values")->delimiter(',')->required();
    atCmd->callback([&] { action = [&] { return attainCmd(atFamily, atWindow, atExpr, atTargets, out); }; });

    FamilyArgs dgFamily;
    WindowArgs dgWindow;
    std::string dgKind = "H1";
    auto* dgCmd = app.add_subcommand("diagnose", "Evaluate H0 for a family or H1/H2 for tau");
    dgFamily.attach(dgCmd);
    dgWindow.attach(dgCmd);
    dgCmd->add_option("--kind", dgKind, "H0, H1 or H2")->capture_default_str();
    dgCmd->callback([&] { action = [&] { return diagnoseCmd(dgFamily, dgWindow, dgKind, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }
    if (!action) return kExitUsage;

    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateLattice& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotExact& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PoleProximity& e) {
        err << "pole: " << e.what() << "\n";
        return kExitFail;
    } catch (const AnalyzerFailure& e) {
        err << "analyzer failure: " << e.what() << "\n";
        return kExitFail;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kExitFail;
    }
}

}  // namespace fermatlab::cli
