#pragma once

#include <string>
#include <utility>
#include <vector>

#include "srtop/classify.hpp"

namespace srtop {

inline constexpr int kReportSchemaVersion = 1;

// Facet-list document: optional "m=N" header line, one facet per line as
// whitespace-separated 1-based vertex indices, '#' starts a comment.
SimplicialComplex parse_facet_text(const std::string& text,
                                   SimplicialComplex::Mode mode = SimplicialComplex::Mode::Facets);

// Records of the form name=[[a,b,...],[...],...], whitespace/newline tolerant.
std::vector<std::pair<std::string, SimplicialComplex>> parse_lutz_library(const std::string& text);

std::string render_facets(const SimplicialComplex& K);

// Macaulay2-style layout: header row of homological degrees, rows labeled
// j-i, '.' for zeros; all-zero rows are skipped.
std::string render_betti_table(const GradedBettiTable& T);

std::string betti_table_to_json(const GradedBettiTable& T);
std::string report_to_json(const ClassificationReport& rep);
std::string report_to_text(const ClassificationReport& rep);

struct SurveyOptions {
    std::vector<CoefficientSpec> coeffs = {CoefficientSpec::rationals()};
    int jobs = 1;
    int max_m = kDefaultHochsterCap;
    int gen_cap = kDefaultGeneratorCap;
};

struct SurveyResult {
    std::string csv;      // fixed header, one row per record, input order
    std::string summary;  // per-predicate counts
    int failures = 0;     // records that raised an error, reported in-row
};

extern const char* const kSurveyCsvHeader;

SurveyResult survey(const std::vector<std::pair<std::string, SimplicialComplex>>& records,
                    const SurveyOptions& opt);

}  // namespace srtop
