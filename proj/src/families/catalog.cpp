#include "fermatlab/families/catalog.hpp"

#include <sstream>

namespace fermatlab::families {

std::string renderQuotient(const symbolic::Polynomial& even, const symbolic::Polynomial& odd,
                           const std::string& variable) {
    if (odd.isZero()) return even.isZero() ? "0" : even.toString(variable);
    const std::string x = "X*(" + odd.toString(variable) + ")";
    return even.isZero() ? x : even.toString(variable) + " + " + x;
}

std::vector<CatalogEntry> catalogEntries(const AdjudicateOptions& options) {
    std::vector<SolutionFamily> fams;
    for (AlphaKind a : {AlphaKind::Exp, AlphaKind::TanHalf, AlphaKind::Constant}) fams.push_back(buildCaseI(a));
    fams.push_back(buildCaseII(0));
    fams.push_back(buildCaseIII(0));
    fams.push_back(buildCaseIV(1, 0));
    fams.push_back(buildCaseIV(2, 0));
    fams.push_back(buildCaseV(0));
    fams.push_back(buildCaseVI(1, 0));
    const FamilyParams defaults;
    fams.push_back(buildQuadratic(defaults.rho, SignConvention::Plus));
    fams.push_back(buildQuadratic(defaults.rho, SignConvention::Minus));
    fams.push_back(buildCubic(parseNumber("0")));
    fams.push_back(buildCubic(parseNumber("1")));
    fams.push_back(buildUnitUnit());
    fams.push_back(buildMOne(3));
    fams.push_back(buildPicardPair(defaults.m, defaults.n, defaults.gamma));
    fams.push_back(buildCorollaryWitness());

    std::vector<CatalogEntry> out;
    for (auto& f : fams) {
        Verdict v = adjudicate(f, options);
        out.push_back({std::move(f), std::move(v)});
    }
    return out;
}

std::string catalogMarkdown(const std::vector<CatalogEntry>& entries) {
    std::ostringstream md;
    md << "# Family catalog\n\n"
       << "Generated by `fermatlab catalog`. P stands for wp(beta) and X for wp'(beta) unless a page says "
          "otherwise; residuals live in Q(i)[P, X]/(X^2 - cubic).\n";
    for (const auto& [fam, v] : entries) {
        md << "\n## " << fam.title << "\n\n";
        md << "- id: `" << fam.id << "`\n";
        md << "- equation: " << toString(fam.kind) << ", (m, n) = (" << fam.m << ", " << fam.n << ")\n";
        if (!fam.paramList.empty()) {
            md << "- parameters:";
            for (const auto& [k, val] : fam.paramList) md << " " << k << "=" << val;
            md << "\n";
        }
        md << "- formula: " << fam.printedForm << "\n";
        md << "- f = `" << fam.f.toString() << "`\n";
        md << "- g = `" << fam.g.toString() << "`\n";
        if (fam.crossCoefficient) md << "- cross coefficient: `" << fam.crossCoefficient->toString() << "`\n";
        if (fam.degenerate) md << "- degenerate (constant) solution\n";
        if (fam.rationalized) {
            const auto& r = *fam.rationalized;
            if (!r.odeCubic().isZero()) {
                md << "- reduction: X^2 -> " << r.odeCubic().toString(fam.rationalizedVariable) << "\n";
            }
        }
        md << "\n" << fam.rationalizationNote << "\n\n";
        md << "**Verdict: " << toString(v.outcome) << "** (" << toString(v.method) << ")";
        if (v.quotient) {
            md << ", reduced residual `" << renderQuotient(v.quotient->even, v.quotient->odd, v.variable) << "`";
        }
        if (v.seriesOutcome) {
            md << "; series route " << toString(*v.seriesOutcome) << (v.exactSeries ? " (exact)" : " (float)");
        }
        md << "\n";
        for (const auto& n : v.notes) md << "\n> " << n << "\n";
    }
    return md.str();
}

}  // namespace fermatlab::families
