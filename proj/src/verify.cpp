#include "zf/verify.hpp"

#include <atomic>
#include <cstdio>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "zf/solver.hpp"

namespace zf {
namespace {

using nlohmann::json;

std::string witness_text(const ColorSet& w) {
    std::string out;
    w.for_each([&](int v) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    });
    return out;
}

std::string z_text(const VerificationRecord& r) {
    switch (r.status) {
        case ZStatus::Solved:
            return std::to_string(r.z);
        case ZStatus::Timeout:
            return "timeout";
        case ZStatus::Skipped:
            return "skipped";
    }
    return "skipped";
}

}  // namespace

double SummaryStats::sharp_fraction() const {
    if (conjecture1_checked == 0) return 0.0;
    return static_cast<double>(conjecture1_sharp_count) /
           static_cast<double>(conjecture1_checked);
}

VerificationRecord verify_graph(const Graph& g, std::size_t index,
                                const std::string& g6,
                                const VerifyOptions& opts) {
    VerificationRecord rec;
    rec.index = index;
    rec.g6 = g6;
    rec.n = g.order();
    rec.m = g.edge_count();
    if (rec.n > 0) {
        const auto prof = degree_profile(g);
        rec.min_degree = prof.min_degree;
        rec.max_degree = prof.max_degree;
    }
    rec.girth_value = girth(g);
    rec.witness = ColorSet(rec.n);
    rec.bounds = evaluate_all(g, opts.k_max);
    rec.satisfied.assign(rec.bounds.size(), std::nullopt);

    if (rec.n > opts.max_n) {
        rec.status = ZStatus::Skipped;
        return rec;
    }

    ZfOptions zopt;
    zopt.budget = opts.time_limit;
    zopt.seed_k_max = opts.k_max;
    try {
        const ZfResult res = zero_forcing_number(g, zopt);
        rec.status = ZStatus::Solved;
        rec.z = res.z;
        rec.witness = res.witness;
    } catch (const TimeoutError& e) {
        rec.status = ZStatus::Timeout;
        rec.z_lower = e.lower();
        rec.z_upper = e.upper();
        return rec;
    }

    for (std::size_t i = 0; i < rec.bounds.size(); ++i) {
        const BoundReport& b = rec.bounds[i];
        if (!b.applicable) continue;
        const bool ok = b.kind == BoundKind::Lower ? *b.value <= rec.z
                                                   : rec.z <= *b.value;
        rec.satisfied[i] = ok;
        if (!ok && !b.conjectural) rec.violations.push_back(b.key);
        if (b.key == bound_keys::conj_girth)
            rec.conj1_sharp = (*b.value == rec.z);
    }
    return rec;
}

VerifyRun run_verification(std::vector<CorpusEntry> entries,
                           const VerifyOptions& opts) {
    VerifyRun run;

    struct Job {
        std::size_t index;
        std::string line;
        Graph graph;
    };
    std::vector<Job> jobs;
    for (auto& e : entries) {
        if (e.ok()) {
            jobs.push_back({e.index, e.line, *std::move(e.graph)});
        } else {
            run.failures.push_back({e.index, e.line, e.error});
        }
    }

    std::vector<std::optional<VerificationRecord>> slots(jobs.size());
    const int workers =
        std::max(1, std::min<int>(opts.jobs, static_cast<int>(jobs.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i)
            slots[i] = verify_graph(jobs[i].graph, jobs[i].index, jobs[i].line,
                                    opts);
    } else {
        std::atomic<std::size_t> cursor{0};
        auto drain = [&] {
            for (;;) {
                const std::size_t i =
                    cursor.fetch_add(1, std::memory_order_relaxed);
                if (i >= jobs.size()) break;
                slots[i] = verify_graph(jobs[i].graph, jobs[i].index,
                                        jobs[i].line, opts);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
    }

    run.records.reserve(slots.size());
    for (auto& s : slots) run.records.push_back(*std::move(s));

    SummaryStats& st = run.stats;
    st.graphs_total = run.records.size();
    st.parse_errors = run.failures.size();
    for (const auto& rec : run.records) {
        switch (rec.status) {
            case ZStatus::Solved:
                ++st.graphs_solved;
                break;
            case ZStatus::Timeout:
                ++st.timeouts;
                break;
            case ZStatus::Skipped:
                ++st.skipped;
                break;
        }
        st.proven_bound_violations += rec.violations.size();
        if (rec.status != ZStatus::Solved) continue;
        for (std::size_t i = 0; i < rec.bounds.size(); ++i) {
            const BoundReport& b = rec.bounds[i];
            if (!b.applicable || !b.conjectural) continue;
            if (b.key == bound_keys::conj_girth) {
                ++st.conjecture1_checked;
                if (!*rec.satisfied[i]) ++st.conjecture1_violations;
                if (rec.conj1_sharp && *rec.conj1_sharp)
                    ++st.conjecture1_sharp_count;
            } else if (b.key == bound_keys::conj_triangle_free) {
                ++st.conjecture2_checked;
                if (!*rec.satisfied[i]) ++st.conjecture2_violations;
            }
        }
    }
    return run;
}

VerifyRun run_verification(const std::string& corpus_path,
                           const VerifyOptions& opts) {
    CorpusReader reader(corpus_path);
    std::vector<CorpusEntry> entries;
    while (auto e = reader.next()) entries.push_back(*std::move(e));
    return run_verification(std::move(entries), opts);
}

std::string to_csv(const VerifyRun& run) {
    static constexpr const char* kKeys[] = {
        bound_keys::lb_min_degree,   bound_keys::ub_max_degree,
        bound_keys::ub_not_complete, bound_keys::ub_girth,
        bound_keys::lb_triangle_free, bound_keys::lb_girth5,
        bound_keys::lb_cut_vertex,   bound_keys::lb_cut_edge,
        bound_keys::lb_vertex_deletion, bound_keys::lb_tw_girth,
        bound_keys::conj_girth,      bound_keys::conj_triangle_free};
    std::ostringstream out;
    out << "index,n,m,delta,Delta,girth,z,witness";
    for (const char* k : kKeys) out << ',' << k;
    out << ",conj_sharp,violations\n";

    for (const auto& r : run.records) {
        out << r.index << ',' << r.n << ',' << r.m << ',' << r.min_degree
            << ',' << r.max_degree << ',' << r.girth_value.str() << ','
            << z_text(r) << ',';
        if (r.status == ZStatus::Solved) out << witness_text(r.witness);
        for (const auto& b : r.bounds) {
            out << ',';
            if (b.applicable)
                out << *b.value;
            else
                out << "na";
        }
        out << ',';
        if (r.conj1_sharp)
            out << (*r.conj1_sharp ? '1' : '0');
        else
            out << "na";
        out << ',';
        for (std::size_t i = 0; i < r.violations.size(); ++i) {
            if (i) out << ';';
            out << r.violations[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const VerifyRun& run) {
    json records = json::array();
    for (const auto& r : run.records) {
        json jr;
        jr["index"] = r.index;
        jr["g6"] = r.g6;
        jr["n"] = r.n;
        jr["m"] = r.m;
        jr["delta"] = r.min_degree;
        jr["Delta"] = r.max_degree;
        jr["girth"] = r.girth_value.is_finite()
                          ? json(r.girth_value.value())
                          : json("inf");
        jr["z"] = r.status == ZStatus::Solved ? json(r.z) : json(z_text(r));
        if (r.status == ZStatus::Timeout)
            jr["z_interval"] = json::array({r.z_lower, r.z_upper});
        json w = json::array();
        if (r.status == ZStatus::Solved)
            r.witness.for_each([&](int v) { w.push_back(v); });
        jr["witness"] = std::move(w);
        json bounds = json::object();
        for (const auto& b : r.bounds)
            bounds[b.key] = b.applicable ? json(*b.value) : json(nullptr);
        jr["bounds"] = std::move(bounds);
        jr["conj_sharp"] =
            r.conj1_sharp ? json(*r.conj1_sharp) : json(nullptr);
        jr["violations"] = r.violations;
        records.push_back(std::move(jr));
    }

    json failures = json::array();
    for (const auto& f : run.failures)
        failures.push_back(
            {{"index", f.index}, {"line", f.line}, {"error", f.error}});

    const SummaryStats& st = run.stats;
    char frac[32];
    std::snprintf(frac, sizeof(frac), "%.4f", st.sharp_fraction());
    json summary{{"graphs_total", st.graphs_total},
                 {"parse_errors", st.parse_errors},
                 {"graphs_solved", st.graphs_solved},
                 {"skipped", st.skipped},
                 {"timeouts", st.timeouts},
                 {"proven_bound_violations", st.proven_bound_violations},
                 {"conjecture1_checked", st.conjecture1_checked},
                 {"conjecture1_sharp_count", st.conjecture1_sharp_count},
                 {"conjecture1_violations", st.conjecture1_violations},
                 {"conjecture2_checked", st.conjecture2_checked},
                 {"conjecture2_violations", st.conjecture2_violations},
                 {"sharp_fraction", frac}};

    json root{{"schema", 1},
              {"summary", std::move(summary)},
              {"records", std::move(records)},
              {"parse_failures", std::move(failures)}};
    return root.dump(2) + "\n";
}

std::string summary_text(const SummaryStats& st) {
    std::ostringstream out;
    out << "graphs: " << st.graphs_total << " parsed";
    if (st.parse_errors) out << ", " << st.parse_errors << " parse error(s)";
    out << '\n';
    out << "solved: " << st.graphs_solved << " exact, " << st.skipped
        << " skipped, " << st.timeouts << " timed out\n";
    out << "proven bound violations: " << st.proven_bound_violations << '\n';
    char frac[32];
    std::snprintf(frac, sizeof(frac), "%.4f", st.sharp_fraction());
    out << "girth conjecture: checked " << st.conjecture1_checked
        << ", violations " << st.conjecture1_violations << ", sharp "
        << st.conjecture1_sharp_count << " (fraction " << frac << ")\n";
    out << "triangle-free conjecture: checked " << st.conjecture2_checked
        << ", violations " << st.conjecture2_violations << '\n';
    return out.str();
}

}  // namespace zf
