#include "ssg/survey.hpp"

#include <condition_variable>
#include <deque>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ssg/errors.hpp"
#include "ssg/families.hpp"
#include "ssg/graph6.hpp"
#include "ssg/isomorphism.hpp"
#include "ssg/solver.hpp"

namespace ssg {

namespace {

bool is_five_prism(const Graph& g) {
    if (g.vertex_count() != 10 || g.edge_count() != 15 || g.max_degree() != 3) return false;
    return isomorphic(g, prism_graph(5));
}

bool is_k33(const Graph& g) {
    return g.vertex_count() == 6 && is_balanced_complete_bipartite(g);
}

} // namespace

SurveyRecord survey_one(const std::string& line, const SurveyOptions& options) {
    Graph g = parse_graph6(line);
    SurveyRecord rec;
    rec.graph6 = emit_graph6(g);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.max_degree = g.max_degree();

    SolveResult solved = chromatic_index(g, options.kind, options.budget);
    rec.nodes = solved.stats.nodes;
    if (solved.status == SolveStatus::BudgetExceeded) {
        rec.budget_exceeded = true;
        return rec;
    }
    rec.value = solved.value;

    const int dd = rec.max_degree * rec.max_degree;
    rec.exceeds_thm_main = rec.value > dd;
    rec.exceeds_conj_general = rec.value > dd - 1 && !is_balanced_complete_bipartite(g);
    rec.exceeds_conj_subcubic =
        rec.max_degree == 3 && rec.value > 7 && !is_k33(g) && !is_five_prism(g);
    return rec;
}

namespace {

void fold_into_summary(SurveySummary& s, const SurveyRecord& r) {
    ++s.count;
    s.budget_exceeded += r.budget_exceeded;
    s.exceeds_thm_main += r.exceeds_thm_main;
    s.exceeds_conj_general += r.exceeds_conj_general;
    s.exceeds_conj_subcubic += r.exceeds_conj_subcubic;
    if (!r.budget_exceeded) {
        auto [it, fresh] = s.max_value_per_degree.try_emplace(r.max_degree, r.value);
        if (!fresh) it->second = std::max(it->second, r.value);
    }
}

std::vector<std::string> read_lines(std::istream& input) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(input, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace

std::string survey_record_line(const SurveyRecord& r) {
    std::ostringstream out;
    out << r.graph6 << " n=" << r.n << " m=" << r.m << " delta=" << r.max_degree;
    if (r.budget_exceeded)
        out << " value=? budget_exceeded";
    else
        out << " value=" << r.value;
    if (r.exceeds_thm_main) out << " !thm_main";
    if (r.exceeds_conj_general) out << " !conj_general";
    if (r.exceeds_conj_subcubic) out << " !conj_subcubic";
    return out.str();
}

SurveyReport run_survey(std::istream& input, const SurveyOptions& options, std::ostream* progress) {
    SurveyReport report;
    report.kind = options.kind;

    const auto lines = read_lines(input);
    const int jobs = std::max(1, options.jobs);

    report.records.resize(lines.size());
    if (jobs == 1) {
        for (size_t i = 0; i < lines.size(); ++i) {
            report.records[i] = survey_one(lines[i], options);
            if (progress) *progress << survey_record_line(report.records[i]) << '\n';
        }
    } else {
        std::mutex mu;
        std::condition_variable done_cv;
        size_t next_task = 0;
        size_t emitted = 0;
        std::vector<char> ready(lines.size(), 0);
        std::exception_ptr failure;

        auto worker = [&] {
            while (true) {
                size_t task;
                {
                    std::lock_guard lock(mu);
                    if (failure || next_task >= lines.size()) return;
                    task = next_task++;
                }
                try {
                    SurveyRecord rec = survey_one(lines[task], options);
                    std::lock_guard lock(mu);
                    report.records[task] = std::move(rec);
                    ready[task] = 1;
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!failure) failure = std::current_exception();
                }
                done_cv.notify_all();
            }
        };

        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);

        {
            // Reorder buffer: emit strictly in input order.
            std::unique_lock lock(mu);
            while (emitted < lines.size() && !failure) {
                done_cv.wait(lock, [&] { return failure || ready[emitted]; });
                while (emitted < lines.size() && ready[emitted]) {
                    if (progress) *progress << survey_record_line(report.records[emitted]) << '\n';
                    ++emitted;
                }
            }
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    for (const auto& rec : report.records) fold_into_summary(report.summary, rec);
    return report;
}

std::string survey_report_to_json(const SurveyReport& report) {
    using nlohmann::json;
    json records = json::array();
    for (const auto& r : report.records) {
        json rec;
        rec["graph6"] = r.graph6;
        rec["n"] = r.n;
        rec["m"] = r.m;
        rec["delta"] = r.max_degree;
        rec["kind"] = to_string(report.kind);
        if (r.budget_exceeded)
            rec["value"] = nullptr;
        else
            rec["value"] = r.value;
        rec["budget_exceeded"] = r.budget_exceeded;
        rec["nodes"] = r.nodes;
        rec["flags"] = {{"exceeds_thm_main", r.exceeds_thm_main},
                        {"exceeds_conj_general", r.exceeds_conj_general},
                        {"exceeds_conj_subcubic", r.exceeds_conj_subcubic}};
        records.push_back(std::move(rec));
    }

    json per_degree = json::object();
    for (const auto& [deg, value] : report.summary.max_value_per_degree)
        per_degree[std::to_string(deg)] = value;

    json doc;
    doc["format"] = "ss-survey/1";
    doc["records"] = std::move(records);
    doc["summary"] = {{"count", report.summary.count},
                      {"budget_exceeded", report.summary.budget_exceeded},
                      {"violations",
                       {{"exceeds_thm_main", report.summary.exceeds_thm_main},
                        {"exceeds_conj_general", report.summary.exceeds_conj_general},
                        {"exceeds_conj_subcubic", report.summary.exceeds_conj_subcubic}}},
                      {"max_value_per_delta", std::move(per_degree)}};
    return doc.dump(2);
}

} // namespace ssg
