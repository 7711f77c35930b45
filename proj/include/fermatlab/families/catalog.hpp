#pragma once

#include <string>
#include <vector>

#include "fermatlab/families/adjudicate.hpp"

namespace fermatlab::families {

/// One catalog page: a family instance and its adjudication.
struct CatalogEntry {
    SolutionFamily family;
    Verdict verdict;
};

/// The stock instances shown in the catalog (every constructor, both
/// case IV variants, both quadratic signs, τ = 0 and τ = 1).
std::vector<CatalogEntry> catalogEntries(const AdjudicateOptions& options = {});

/// Markdown: per family the printed formula, the rationalized residual, how
/// it was cleared, and the verdict.
std::string catalogMarkdown(const std::vector<CatalogEntry>& entries);

/// "even + X*(odd)" in the family's rationalized variable.
std::string renderQuotient(const symbolic::Polynomial& even, const symbolic::Polynomial& odd,
                           const std::string& variable);

}  // namespace fermatlab::families
