#include "genform/report.hpp"

#include <sstream>
#include <stdexcept>

namespace genform {

json spec_to_json(const JobSpec& spec) {
    return json{{"n", spec.n},
                {"r", spec.r},
                {"d", spec.d},
                {"mode", to_string(spec.mode)},
                {"prime", spec.prime},
                {"seed", spec.seed},
                {"trials", spec.trials},
                {"max_degree", spec.resolved_max_degree()}};
}

JobSpec spec_from_json(const json& j) {
    JobSpec spec;
    try {
        spec.n = j.at("n").get<int>();
        spec.r = j.at("r").get<int>();
        spec.d = j.at("d").get<int>();
        auto mode = mode_from_string(j.at("mode").get<std::string>());
        if (!mode) throw std::invalid_argument("unknown mode");
        spec.mode = *mode;
        spec.prime = j.at("prime").get<std::uint32_t>();
        spec.seed = j.at("seed").get<std::uint64_t>();
        spec.trials = j.at("trials").get<int>();
        spec.max_degree = j.at("max_degree").get<int>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed spec: ") + e.what());
    }
    return spec;
}

json series_to_json(const IntSeries& s) { return json(s.coeffs()); }

IntSeries series_from_json(const json& j) {
    return IntSeries(j.get<std::vector<std::int64_t>>());
}

namespace {

json degree_stats_json(const HilbertResult& result) {
    json arr = json::array();
    for (const auto& st : result.degrees) {
        arr.push_back(json{{"degree", st.degree},
                           {"ambient_dim", st.ambient_dim},
                           {"rows", st.rows},
                           {"cols", st.cols},
                           {"rank", st.rank},
                           {"dim", st.dim}});
    }
    return arr;
}

json trials_json(const Verdict& verdict) {
    json arr = json::array();
    for (const auto& tr : verdict.trials) {
        arr.push_back(json{{"trial", tr.trial},
                           {"seed", tr.seed},
                           {"dims", tr.result.dims},
                           {"series", series_to_json(tr.result.series())},
                           {"stop_reason", to_string(tr.result.stop_reason)},
                           {"degrees", degree_stats_json(tr.result)},
                           {"elapsed_ms", tr.result.elapsed_ms}});
    }
    return arr;
}

} // namespace

json run_report(const std::string& command, const JobSpec& spec,
                const Verdict& verdict, double elapsed_ms) {
    return json{{"schema_version", kSchemaVersion},
                {"tool_version", kToolVersion},
                {"command", command},
                {"spec", spec_to_json(spec)},
                {"trials", trials_json(verdict)},
                {"computed", series_to_json(verdict.computed)},
                {"conjectured", series_to_json(verdict.conjectured)},
                {"conjectured_complete", verdict.conjectured_complete},
                {"delta", series_to_json(verdict.delta)},
                {"attained", verdict.attained},
                {"elapsed_ms", elapsed_ms}};
}

json compare_report(const CompareReport& report, double elapsed_ms) {
    json runs = json::array();
    for (const auto& run : report.runs) {
        runs.push_back(json{{"trial", run.trial},
                            {"prime", run.prime},
                            {"series", series_to_json(run.series)}});
    }
    return json{{"schema_version", kSchemaVersion},
                {"tool_version", kToolVersion},
                {"command", "compare"},
                {"n", report.n},
                {"r", report.r},
                {"d", report.d},
                {"trials", report.trials},
                {"primes", report.primes},
                {"seed", report.seed},
                {"runs", runs},
                {"q_candidate", series_to_json(report.q_candidate)},
                {"conjectured", series_to_json(report.conjectured)},
                {"delta", series_to_json(report.delta)},
                {"consensus", report.consensus},
                {"interpretation",
                 "Q-candidate equalities and deltas are verified over F_p; "
                 "consensus evidence, not a characteristic-0 proof"},
                {"elapsed_ms", elapsed_ms}};
}

json sweep_report(const JobSpec& base_spec, const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        JobSpec spec = base_spec;
        spec.r = row.r;
        double row_ms = 0.0;
        for (const auto& tr : row.verdict.trials) row_ms += tr.result.elapsed_ms;
        arr.push_back(run_report("verify", spec, row.verdict, row_ms));
    }
    return arr;
}

std::string render_run_text(const std::string& command, const JobSpec& spec,
                            const Verdict& verdict) {
    std::ostringstream out;
    out << command << " n=" << spec.n << " r=" << spec.r << " d=" << spec.d
        << " mode=" << to_string(spec.mode) << " prime=" << spec.prime
        << " seed=" << spec.seed << " trials=" << spec.trials
        << " max-degree=" << spec.resolved_max_degree() << "\n";
    for (const auto& tr : verdict.trials) {
        out << "  trial " << tr.trial << ": " << tr.result.series().str()
            << "  [" << to_string(tr.result.stop_reason) << "]\n";
    }
    out << "  computed:    " << verdict.computed.str() << "\n";
    out << "  conjectured: " << verdict.conjectured.str();
    if (!verdict.conjectured_complete) out << " (truncated at cap)";
    out << "\n";
    out << "  delta:       " << verdict.delta.str() << "\n";
    out << "  attained:    " << (verdict.attained ? "true" : "false") << "\n";
    return out.str();
}

std::string render_compare_text(const CompareReport& report) {
    std::ostringstream out;
    out << "compare n=" << report.n << " r=" << report.r << " d=" << report.d
        << " trials=" << report.trials << " seed=" << report.seed << " primes=";
    for (std::size_t i = 0; i < report.primes.size(); ++i) {
        out << (i ? "," : "") << report.primes[i];
    }
    out << "\n";
    for (const auto& run : report.runs) {
        out << "  trial " << run.trial << " prime " << run.prime << ": "
            << run.series.str() << "\n";
    }
    out << "  Q candidate: " << report.q_candidate.str() << "\n";
    out << "  F:           " << report.conjectured.str() << "\n";
    out << "  Q - F:       " << report.delta.str() << "\n";
    out << "  consensus:   " << (report.consensus ? "true" : "false")
        << "  (verified over F_p; evidence, not proof)\n";
    return out.str();
}

std::string render_sweep_text(const JobSpec& base_spec,
                              const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "sweep n=" << base_spec.n << " d=" << base_spec.d
        << " mode=" << to_string(base_spec.mode)
        << " trials=" << base_spec.trials << " prime=" << base_spec.prime
        << " seed=" << base_spec.seed << "\n";
    for (const auto& row : rows) {
        out << "  r=" << row.r << "  "
            << (row.verdict.attained ? "attained    " : "not attained")
            << "  delta=" << row.verdict.delta.str() << "\n";
    }
    return out.str();
}

void strip_timing(json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [key, value] : j.items()) strip_timing(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_timing(value);
    }
}

} // namespace genform
