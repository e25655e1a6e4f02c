#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zf/bounds.hpp"
#include "zf/corpus.hpp"
#include "zf/errors.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/graph6.hpp"
#include "zf/solver.hpp"
#include "zf/verify.hpp"

namespace {

struct InputOpts {
    std::string g6;
    std::string file;
    std::string gen;
};

zf::Graph load_input(const InputOpts& in) {
    if (!in.g6.empty()) return zf::parse_graph6(in.g6);
    if (!in.gen.empty()) return zf::generate(in.gen);
    zf::CorpusReader reader(in.file);
    if (auto entry = reader.next()) {
        if (!entry->ok())
            throw zf::ParseError(entry->error, entry->error_offset);
        return *entry->graph;
    }
    throw zf::IoError("no graphs in '" + in.file + "'");
}

std::optional<std::chrono::milliseconds> to_budget(double seconds) {
    if (seconds <= 0) return std::nullopt;
    return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw zf::GraphError("bad vertex id '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

int run_compute(const InputOpts& in, bool want_witness, bool want_json,
                double time_limit, int threads) {
    const zf::Graph g = load_input(in);
    zf::ZfOptions opt;
    opt.budget = to_budget(time_limit);
    opt.threads = threads;
    try {
        const zf::ZfResult res = zf::zero_forcing_number(g, opt);
        if (want_json) {
            nlohmann::json j;
            j["n"] = g.order();
            j["m"] = g.edge_count();
            j["z"] = res.z;
            nlohmann::json w = nlohmann::json::array();
            res.witness.for_each([&](int v) { w.push_back(v); });
            j["witness"] = std::move(w);
            j["elapsed_ms"] = res.elapsed.count();
            j["subsets_tested"] = res.subsets_tested;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "z = " << res.z << "\n";
            if (want_witness)
                std::cout << "witness = " << res.witness.str() << "\n";
        }
    } catch (const zf::TimeoutError& e) {
        std::cerr << "timeout: " << e.lower() << " <= Z(G) <= " << e.upper()
                  << "\n";
        return 3;
    }
    return 0;
}

int run_simulate(const InputOpts& in, const std::string& set_text) {
    const zf::Graph g = load_input(in);
    zf::ColorSet start(g.order());
    for (int v : parse_vertex_list(set_text)) start.add(v);

    const zf::ForcingTrace trace = zf::closure(g, start);
    std::cout << "n=" << g.order() << " m=" << g.edge_count() << "\n";
    for (std::size_t t = 0; t < trace.layers.size(); ++t) {
        if (t > 0) {
            std::cout << "round " << t << ":";
            for (const auto& f : trace.forces)
                if (f.round == static_cast<int>(t))
                    std::cout << " " << f.forcer << "->" << f.forced;
            std::cout << "\n";
        }
        std::cout << "S_" << t << " = " << trace.layers[t].str()
                  << "  active = " << trace.active[t].str() << "\n";
    }
    const bool ok = trace.final_set().count() == g.order();
    std::cout << "zero forcing set: " << (ok ? "yes" : "no") << "\n";
    return 0;
}

int run_bounds(const InputOpts& in, int k_max) {
    const zf::Graph g = load_input(in);
    const auto prof_ok = g.order() > 0;
    std::cout << "n=" << g.order() << " m=" << g.edge_count();
    if (prof_ok) {
        const auto prof = zf::degree_profile(g);
        std::cout << " delta=" << prof.min_degree
                  << " Delta=" << prof.max_degree;
    }
    std::cout << " girth=" << zf::girth(g).str() << "\n";

    for (const auto& b : zf::evaluate_all(g, k_max)) {
        std::ostringstream value;
        if (b.applicable)
            value << *b.value;
        else
            value << "-";
        std::cout << std::left << std::setw(20) << b.key << std::setw(7)
                  << (b.kind == zf::BoundKind::Lower ? "lower" : "upper")
                  << std::setw(13) << (b.conjectural ? "conjecture" : "proven")
                  << std::setw(7) << value.str() << b.reason << "\n"
                  << "    " << b.citation << "\n";
    }
    return 0;
}

int run_verify(const std::string& corpus, int max_n, double time_limit,
               const std::string& csv_path, const std::string& json_path,
               int jobs, int k_max, bool strict) {
    zf::VerifyOptions opt;
    opt.max_n = max_n;
    opt.time_limit = to_budget(time_limit);
    opt.jobs = jobs;
    opt.k_max = k_max;

    const zf::VerifyRun run = zf::run_verification(corpus, opt);
    for (const auto& f : run.failures)
        std::cerr << "parse error at entry " << f.index << ": " << f.error
                  << "\n";
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw zf::IoError("cannot write '" + csv_path + "'");
        out << zf::to_csv(run);
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw zf::IoError("cannot write '" + json_path + "'");
        out << zf::to_json(run);
    }
    for (const auto& rec : run.records)
        for (const auto& key : rec.violations)
            std::cout << "VIOLATION: graph " << rec.index << " (" << rec.g6
                      << ") breaks " << key << "\n";
    std::cout << zf::summary_text(run.stats);
    if (run.stats.proven_bound_violations > 0) return 1;
    if (strict && run.stats.timeouts > 0) return 3;
    return 0;
}

int run_gen(const std::string& family, int count) {
    if (count < 1) throw zf::GenError("--count must be >= 1");
    if (count == 1) {
        std::cout << zf::write_graph6(zf::generate(family)) << "\n";
        return 0;
    }
    // N graphs: the family's final integer parameter steps up by one per line.
    const auto colon = family.find(':');
    if (colon == std::string::npos)
        throw zf::GenError("--count > 1 needs a parameterized family, e.g. "
                           "cycle:4");
    const auto last_sep = family.find_last_of(":,");
    const std::string head = family.substr(0, last_sep + 1);
    const int first = std::stoi(family.substr(last_sep + 1));
    for (int i = 0; i < count; ++i)
        std::cout << zf::write_graph6(
                         zf::generate(head + std::to_string(first + i)))
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing number toolkit: exact solver, forcing "
                 "simulator, bound tables, corpus verification"};
    app.require_subcommand(1);

    InputOpts in;
    auto add_input = [&](CLI::App* cmd) {
        auto* grp = cmd->add_option_group("input", "graph source");
        grp->add_option("--g6", in.g6, "graph6 string");
        grp->add_option("--file", in.file, "file; first graph6 line is used");
        grp->add_option("--gen", in.gen, "family, e.g. petersen or cycle:6");
        grp->require_option(1);
    };

    bool want_witness = false;
    bool want_json = false;
    double time_limit = 0;
    int threads = 1;
    auto* compute = app.add_subcommand("compute", "exact zero forcing number");
    add_input(compute);
    compute->add_flag("--witness", want_witness, "print the witness set");
    compute->add_flag("--json", want_json, "machine-readable output");
    compute->add_option("--time-limit", time_limit, "seconds; 0 = unlimited");
    compute->add_option("--threads", threads, "search worker threads")
        ->check(CLI::PositiveNumber);

    std::string set_text;
    auto* simulate = app.add_subcommand("simulate", "run the forcing process");
    add_input(simulate);
    simulate->add_option("--set", set_text, "initial colored vertices, e.g. 0,1")
        ->required();

    int k_max = 2;
    auto* bounds = app.add_subcommand("bounds", "evaluate every bound");
    add_input(bounds);
    bounds->add_option("--kmax", k_max, "max |K| for the deletion bound")
        ->check(CLI::NonNegativeNumber);

    std::string corpus, csv_path, json_path;
    int max_n = 14;
    int jobs = 1;
    bool strict = false;
    double verify_limit = 0;
    int verify_kmax = 2;
    auto* verify = app.add_subcommand("verify", "bound verification sweep "
                                                "over a graph6 corpus");
    verify->add_option("corpus", corpus, "graph6 file")->required();
    verify->add_option("--max-n", max_n, "skip graphs larger than this");
    verify->add_option("--time-limit", verify_limit,
                       "per-graph seconds; 0 = unlimited");
    verify->add_option("--csv", csv_path, "write per-graph CSV here");
    verify->add_option("--json", json_path, "write JSON report here");
    verify->add_option("--jobs", jobs, "worker threads across graphs")
        ->check(CLI::PositiveNumber);
    verify->add_option("--kmax", verify_kmax, "max |K| for the deletion bound")
        ->check(CLI::NonNegativeNumber);
    verify->add_flag("--strict", strict, "exit 3 if any graph timed out");

    std::string family;
    int count = 1;
    auto* gen = app.add_subcommand("gen", "emit graph6 lines for a family");
    gen->add_option("family", family, "e.g. petersen, cycle:6")->required();
    gen->add_option("--count", count,
                    "emit this many graphs, stepping the last parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute)
            return run_compute(in, want_witness, want_json, time_limit,
                               threads);
        if (*simulate) return run_simulate(in, set_text);
        if (*bounds) return run_bounds(in, k_max);
        if (*verify)
            return run_verify(corpus, max_n, verify_limit, csv_path, json_path,
                              jobs, verify_kmax, strict);
        if (*gen) return run_gen(family, count);
    } catch (const zf::TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
