#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ssg/budget.hpp"
#include "ssg/coloring.hpp"

namespace ssg {

struct SurveyOptions {
    ColoringKind kind = ColoringKind::semistrong();
    SearchBudget budget{10'000'000, 60.0, false};
    int jobs = 1;
};

struct SurveyRecord {
    std::string graph6;
    int n = 0;
    int m = 0;
    int max_degree = 0;
    bool budget_exceeded = false;
    int value = -1; // valid when !budget_exceeded
    uint64_t nodes = 0;
    bool exceeds_thm_main = false;     // value > max_degree^2
    bool exceeds_conj_general = false; // value > max_degree^2 - 1 and not K_{n,n}
    bool exceeds_conj_subcubic = false; // max_degree = 3, value > 7, not K_{3,3} or the 5-prism
};

struct SurveySummary {
    int count = 0;
    int budget_exceeded = 0;
    int exceeds_thm_main = 0;
    int exceeds_conj_general = 0;
    int exceeds_conj_subcubic = 0;
    std::map<int, int> max_value_per_degree;
};

struct SurveyReport {
    ColoringKind kind = ColoringKind::semistrong();
    std::vector<SurveyRecord> records;
    SurveySummary summary;
};

/// Processes one graph6 line per input line (blank lines skipped). With
/// jobs > 1 graphs are solved on a worker pool; output order always equals
/// input order. When `progress` is given, one line per record is streamed
/// to it as results complete.
SurveyReport run_survey(std::istream& input, const SurveyOptions& options,
                        std::ostream* progress = nullptr);

SurveyRecord survey_one(const std::string& graph6_line, const SurveyOptions& options);

std::string survey_report_to_json(const SurveyReport& report);
std::string survey_record_line(const SurveyRecord& r);

} // namespace ssg
