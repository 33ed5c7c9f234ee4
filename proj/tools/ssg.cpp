#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssg/errors.hpp"
#include "ssg/families.hpp"
#include "ssg/graph6.hpp"
#include "ssg/heuristics.hpp"
#include "ssg/io.hpp"
#include "ssg/matching.hpp"
#include "ssg/solver.hpp"
#include "ssg/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMalformed = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ssg::MatchingKind parse_matching_kind(const std::string& s) {
    if (s == "plain") return ssg::MatchingKind::plain();
    if (s == "induced" || s == "strong") return ssg::MatchingKind::induced();
    if (s == "semistrong") return ssg::MatchingKind::semistrong();
    if (s.rfind("degenerate:", 0) == 0) return ssg::MatchingKind::degenerate(std::stoi(s.substr(11)));
    throw UsageError("unknown matching kind '" + s +
                     "' (plain | induced | semistrong | degenerate:<r>)");
}

ssg::ColoringKind parse_coloring_kind(const std::string& s) {
    if (s == "proper") return ssg::ColoringKind::proper();
    if (s == "strong") return ssg::ColoringKind::strong();
    if (s == "semistrong") return ssg::ColoringKind::semistrong();
    if (s.rfind("degenerate:", 0) == 0)
        return ssg::ColoringKind::degenerate_classes(std::stoi(s.substr(11)));
    if (s.rfind("relaxed:", 0) == 0) {
        auto rest = s.substr(8);
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw UsageError("relaxed kind needs relaxed:<s>,<t>");
        return ssg::ColoringKind::relaxed(std::stoi(rest.substr(0, comma)),
                                          std::stoi(rest.substr(comma + 1)));
    }
    throw UsageError("unknown coloring kind '" + s +
                     "' (proper | strong | semistrong | degenerate:<r> | relaxed:<s>,<t>)");
}

std::string slurp(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

ssg::Graph read_graph(const std::string& format, const std::string& file) {
    std::ifstream fstream;
    std::istream* in = &std::cin;
    if (!file.empty()) {
        fstream.open(file);
        if (!fstream) throw ssg::MalformedInputError("cannot open " + file);
        in = &fstream;
    }
    if (format == "json") return ssg::graph_from_json(slurp(*in));
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) return ssg::parse_graph6(line);
    }
    throw ssg::MalformedInputError("no graph on input");
}

struct GraphInput {
    std::string format = "g6";
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--in", format, "input format")->check(CLI::IsMember({"g6", "json"}));
        cmd->add_option("--file", file, "read the graph from a file instead of stdin");
    }
    ssg::Graph read() const { return read_graph(format, file); }
};

struct BudgetInput {
    uint64_t nodes = 10'000'000;
    double seconds = 60.0;
    bool deterministic = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-nodes", nodes, "search node limit");
        cmd->add_option("--budget-secs", seconds, "wall-clock limit per solve");
        cmd->add_flag("--deterministic", deterministic,
                      "node-budget only; results independent of the clock");
    }
    ssg::SearchBudget budget() const { return {nodes, seconds, deterministic}; }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ssg::MalformedInputError("cannot write " + path);
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"semistrong edge-coloring workbench"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    std::string family;
    std::vector<int> params;
    uint64_t seed = 0;
    std::string gen_format = "graph6";
    gen->add_option("family", family,
                    "complete | complete_bipartite | path | cycle | prism | hypercube | kneser | "
                    "subset | h_gadget | triangle_pendants | random_tree")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed, "seed for random families");
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"graph6", "json", "dot"}));

    // nu
    auto* nu = app.add_subcommand("nu", "maximum matching size of a kind");
    std::string nu_kind;
    bool nu_json = false;
    GraphInput nu_in;
    BudgetInput nu_budget;
    nu->add_option("kind", nu_kind, "plain | induced | semistrong | degenerate:<r>")->required();
    nu_in.attach(nu);
    nu_budget.attach(nu);
    nu->add_flag("--json", nu_json, "emit a JSON result with the witness");

    // chi
    auto* chi = app.add_subcommand("chi", "exact chromatic index of a kind");
    std::string chi_kind;
    bool chi_json = false;
    std::string chi_dot;
    GraphInput chi_in;
    BudgetInput chi_budget;
    chi->add_option("kind", chi_kind,
                    "proper | strong | semistrong | degenerate:<r> | relaxed:<s>,<t>")
        ->required();
    chi_in.attach(chi);
    chi_budget.attach(chi);
    chi->add_flag("--json", chi_json, "emit a JSON result with the witness coloring");
    chi->add_option("--dot", chi_dot, "write the witness as DOT with color labels");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify a coloring document");
    std::string verify_kind;
    std::string coloring_path;
    bool verify_json = false;
    verify_cmd->add_option("kind", verify_kind,
                           "proper | strong | semistrong | degenerate:<r> | relaxed:<s>,<t>")
        ->required();
    verify_cmd->add_option("--coloring", coloring_path, "ss-coloring/1 JSON file")->required();
    verify_cmd->add_flag("--json", verify_json, "emit a JSON verdict");

    // heuristic
    auto* heur = app.add_subcommand("heuristic", "constructive colorings");
    std::string heur_algo;
    bool heur_trace = false;
    std::string heur_dot;
    GraphInput heur_in;
    heur->add_option("algorithm", heur_algo, "delta2 | tree")->required();
    heur_in.attach(heur);
    heur->add_flag("--trace", heur_trace, "write descent steps to stderr");
    heur->add_option("--dot", heur_dot, "write the coloring as DOT");

    // survey
    auto* survey_cmd = app.add_subcommand("survey", "batch-solve a graph6 stream");
    std::string survey_kind;
    std::string report_path;
    int jobs = 1;
    bool stdin_g6 = false;
    BudgetInput survey_budget;
    survey_cmd->add_option("kind", survey_kind, "coloring kind to survey")->required();
    survey_cmd->add_flag("--stdin-g6", stdin_g6, "read graph6 lines from stdin");
    survey_cmd->add_option("--report", report_path, "write the ss-survey/1 JSON report here");
    survey_cmd->add_option("--jobs", jobs, "worker threads (order of output is preserved)");
    survey_budget.attach(survey_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (gen->parsed()) {
        ssg::FamilySpec spec;
        spec.seed = seed;
        auto need = [&](size_t count) {
            if (params.size() != count)
                throw UsageError("family '" + family + "' takes " + std::to_string(count) +
                                 " parameter(s)");
        };
        if (family == "complete") need(1), spec.tag = ssg::FamilyTag::Complete;
        else if (family == "complete_bipartite") need(2), spec.tag = ssg::FamilyTag::CompleteBipartite;
        else if (family == "path") need(1), spec.tag = ssg::FamilyTag::Path;
        else if (family == "cycle") need(1), spec.tag = ssg::FamilyTag::Cycle;
        else if (family == "prism") need(1), spec.tag = ssg::FamilyTag::Prism;
        else if (family == "hypercube") need(1), spec.tag = ssg::FamilyTag::Hypercube;
        else if (family == "kneser") need(2), spec.tag = ssg::FamilyTag::Kneser;
        else if (family == "subset") need(3), spec.tag = ssg::FamilyTag::Subset;
        else if (family == "h_gadget") need(0), spec.tag = ssg::FamilyTag::HGadget;
        else if (family == "triangle_pendants") need(0), spec.tag = ssg::FamilyTag::TrianglePendants;
        else if (family == "random_tree") need(1), spec.tag = ssg::FamilyTag::RandomTree;
        else throw UsageError("unknown family '" + family + "'");
        if (params.size() > 0) spec.a = params[0];
        if (params.size() > 1) spec.b = params[1];
        if (params.size() > 2) spec.c = params[2];

        ssg::Graph g = ssg::generate(spec);
        if (gen_format == "graph6") std::cout << ssg::emit_graph6(g) << '\n';
        else if (gen_format == "json") std::cout << ssg::graph_to_json(g) << '\n';
        else std::cout << ssg::graph_to_dot(g);
        return kExitOk;
    }

    if (nu->parsed()) {
        ssg::MatchingKind kind = parse_matching_kind(nu_kind);
        ssg::Graph g = nu_in.read();
        ssg::MatchingResult res = ssg::max_matching(g, kind, nu_budget.budget());
        if (res.status == ssg::MatchingResult::Status::BudgetExceeded)
            throw BudgetError("matching search budget exceeded after " + std::to_string(res.nodes) +
                              " nodes");
        if (nu_json) {
            nlohmann::json doc;
            doc["kind"] = to_string(kind);
            doc["size"] = res.size;
            doc["nodes"] = res.nodes;
            nlohmann::json witness = nlohmann::json::array();
            res.witness.for_each([&](ssg::EdgeId e) {
                witness.push_back({g.edges()[e].u, g.edges()[e].v});
            });
            doc["witness"] = witness;
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << res.size << '\n';
        }
        return kExitOk;
    }

    if (chi->parsed()) {
        ssg::ColoringKind kind = parse_coloring_kind(chi_kind);
        ssg::Graph g = chi_in.read();
        ssg::SolveResult res = ssg::chromatic_index(g, kind, chi_budget.budget());
        if (res.status == ssg::SolveStatus::BudgetExceeded)
            throw BudgetError("chromatic search budget exceeded after " +
                              std::to_string(res.stats.nodes) + " nodes");
        if (!chi_dot.empty()) write_file(chi_dot, ssg::graph_to_dot(g, &res.witness));
        if (chi_json) {
            nlohmann::json doc;
            doc["kind"] = to_string(kind);
            doc["value"] = res.value;
            doc["lower_bound_method"] =
                res.lower_bound_method == ssg::LowerBoundMethod::TrivialBound
                    ? "trivial_bound"
                    : "exhausted_at_" + std::to_string(res.exhausted_at);
            doc["nodes"] = res.stats.nodes;
            doc["seconds"] = res.stats.seconds;
            doc["witness"] = nlohmann::json::parse(ssg::coloring_to_json(g, res.witness));
            std::cout << doc.dump() << '\n';
        } else {
            std::cout << res.value << '\n';
        }
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        ssg::ColoringKind kind = parse_coloring_kind(verify_kind);
        std::ifstream in(coloring_path);
        if (!in) throw ssg::MalformedInputError("cannot open " + coloring_path);
        ssg::ColoringDocument doc = ssg::coloring_from_json(slurp(in));
        ssg::VerifyResult res = ssg::verify(doc.graph, doc.coloring, kind);
        if (verify_json) {
            nlohmann::json out;
            out["kind"] = to_string(kind);
            out["valid"] = res.ok;
            if (res.violation) {
                const auto& v = *res.violation;
                out["violation"] = {{"edge", {doc.graph.edges()[v.edge].u, doc.graph.edges()[v.edge].v}},
                                    {"color", v.color},
                                    {"message", v.message}};
                if (v.partner)
                    out["violation"]["partner"] = {doc.graph.edges()[*v.partner].u,
                                                   doc.graph.edges()[*v.partner].v};
            }
            std::cout << out.dump() << '\n';
        } else {
            std::cout << (res.ok ? "true" : "false") << '\n';
            if (res.violation) std::cerr << res.violation->message << '\n';
        }
        return kExitOk;
    }

    if (heur->parsed()) {
        ssg::Graph g = heur_in.read();
        ssg::EdgeColoring coloring;
        if (heur_algo == "delta2") {
            ssg::DescentResult res = ssg::semistrong_delta_squared(g);
            if (heur_trace)
                for (const auto& step : res.trace)
                    std::cerr << "recolor (" << g.edges()[step.edge].u << "," << g.edges()[step.edge].v
                              << ") " << step.old_color << " -> " << step.new_color
                              << " iota " << step.conflicts_before << " -> " << step.conflicts_after
                              << '\n';
            coloring = std::move(res.coloring);
        } else if (heur_algo == "tree") {
            coloring = ssg::tree_semistrong(g);
        } else {
            throw UsageError("unknown heuristic '" + heur_algo + "' (delta2 | tree)");
        }
        if (!heur_dot.empty()) write_file(heur_dot, ssg::graph_to_dot(g, &coloring));
        std::cout << ssg::coloring_to_json(g, coloring) << '\n';
        return kExitOk;
    }

    if (survey_cmd->parsed()) {
        ssg::SurveyOptions options;
        options.kind = parse_coloring_kind(survey_kind);
        options.budget = survey_budget.budget();
        options.jobs = survey_budget.deterministic ? 1 : jobs;
        if (!stdin_g6) throw UsageError("survey reads graph6 from stdin; pass --stdin-g6");
        ssg::SurveyReport report = ssg::run_survey(std::cin, options, &std::cout);
        if (!report_path.empty()) write_file(report_path, ssg::survey_report_to_json(report));
        return kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ssg::InvalidParametersError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ssg::MalformedGraph6Error& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const ssg::MalformedInputError& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const ssg::PartialColoringError& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const ssg::Error& e) {
        std::cerr << "malformed input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}
