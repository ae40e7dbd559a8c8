#include "genform/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "genform/report.hpp"

namespace genform {

namespace {

struct Options {
    int n = 0;
    int r = 0;
    int d = 0;
    std::string mode = "pure-plus-generic";
    std::uint32_t prime = kDefaultPrime;
    std::vector<std::uint32_t> primes;
    std::uint64_t seed = 42;
    int trials = 1;
    int max_degree = -1;
    int r_from = 0;
    int r_to = 0;
    std::string format = "text";
    std::string out_path;
    unsigned jobs = 0; // 0: hardware concurrency
    bool expect_attained = false;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

JobSpec to_spec(const Options& o) {
    JobSpec spec;
    spec.n = o.n;
    spec.r = o.r;
    spec.d = o.d;
    auto mode = mode_from_string(o.mode);
    if (!mode) throw std::invalid_argument("unknown mode '" + o.mode + "'");
    spec.mode = *mode;
    spec.prime = o.prime;
    spec.seed = o.seed;
    spec.trials = o.trials;
    spec.max_degree = o.max_degree;
    return spec;
}

// Prints per --format and persists JSON when --out was given.
void emit(const json& doc, const std::string& text, const Options& o,
          std::ostream& out) {
    if (o.format == "json") {
        out << doc.dump(2) << "\n";
    } else {
        out << text;
    }
    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path);
        if (!file) {
            throw std::runtime_error("cannot open output file " + o.out_path);
        }
        file << doc.dump(2) << "\n";
    }
}

void add_format_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "Write the JSON report to this path");
}

void add_engine_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--prime", o.prime, "Field modulus (prime, <= 2^31-1)")
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Root seed; all randomness derives from it")
        ->capture_default_str();
    cmd->add_option("--trials", o.trials, "Independent random repetitions")
        ->capture_default_str();
    cmd->add_option("--max-degree", o.max_degree,
                    "Degree cap (default: socle bound n(d-1)+1)");
    cmd->add_option("--jobs", o.jobs, "Worker threads (default: all cores)");
}

int run_conjecture(const Options& o, std::ostream& out) {
    if (o.n < 1) throw std::invalid_argument("n must be >= 1");
    if (o.r < 0) throw std::invalid_argument("r must be >= 0");
    if (o.d < 2) throw std::invalid_argument("d must be >= 2");
    const bool complete = o.r >= o.n;
    if (!complete && o.max_degree < 0) {
        throw std::invalid_argument(
            "r < n: the series never truncates, pass --max-degree");
    }
    IntSeries f = complete ? conjectured_series(o.n, o.r, o.d)
                           : conjectured_series_capped(o.n, o.r, o.d, o.max_degree);
    json doc{{"schema_version", kSchemaVersion},
             {"tool_version", kToolVersion},
             {"command", "conjecture"},
             {"n", o.n},
             {"r", o.r},
             {"d", o.d},
             {"series", series_to_json(f)},
             {"complete", complete}};
    if (!complete) doc["max_degree"] = o.max_degree;
    std::string text = f.str();
    if (!complete) text += " (truncated at cap)";
    text += "\n";
    emit(doc, text, o, out);
    return 0;
}

int run_compute_or_verify(const Options& o, bool is_verify, bool enforce,
                          std::ostream& out) {
    JobSpec spec = to_spec(o);
    ThreadPool pool(o.jobs == 0 ? ThreadPool::default_workers() : o.jobs);
    const auto t0 = std::chrono::steady_clock::now();
    Verdict verdict = verify_conjecture(spec, &pool);
    const char* command = is_verify ? "verify" : "compute";
    emit(run_report(command, spec, verdict, ms_since(t0)),
         render_run_text(command, spec, verdict), o, out);
    if (is_verify && enforce && !verdict.attained) return 2;
    return 0;
}

int run_compare(const Options& o, std::ostream& out) {
    std::vector<std::uint32_t> primes = o.primes;
    if (primes.empty()) primes.push_back(o.prime);
    ThreadPool pool(o.jobs == 0 ? ThreadPool::default_workers() : o.jobs);
    const auto t0 = std::chrono::steady_clock::now();
    CompareReport report = compare_powers(o.n, o.r, o.d, o.trials, primes,
                                          o.seed, o.max_degree, &pool);
    emit(compare_report(report, ms_since(t0)), render_compare_text(report), o,
         out);
    return 0;
}

int run_sweep(const Options& o, std::ostream& out) {
    JobSpec base = to_spec(o);
    base.r = o.r_from;
    ThreadPool pool(o.jobs == 0 ? ThreadPool::default_workers() : o.jobs);
    auto rows = sweep(o.n, o.d, o.r_from, o.r_to, base.mode, o.trials, o.prime,
                      o.seed, o.max_degree, &pool);
    emit(sweep_report(base, rows), render_sweep_text(base, rows), o, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Hilbert series of quotients by ideals of generic forms over F_p"};
    app.name("genform");
    app.require_subcommand(1);

    Options o;

    auto* conjecture = app.add_subcommand(
        "conjecture", "Print the conjectured series F_{n,r,d}");
    conjecture->add_option("-n", o.n, "Number of variables")->required();
    conjecture->add_option("-r", o.r, "Number of generators")->required();
    conjecture->add_option("-d", o.d, "Generator degree")->required();
    conjecture->add_option("--max-degree", o.max_degree,
                           "Degree cap (required when r < n)");
    add_format_flags(conjecture, o);

    auto add_spec_cmd = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("-n", o.n, "Number of variables")->required();
        cmd->add_option("-r", o.r, "Number of generators")->required();
        cmd->add_option("-d", o.d, "Generator degree")->required();
        cmd->add_option("--mode", o.mode, "Generator model")
            ->check(CLI::IsMember(
                {"pure-plus-generic", "linear-powers", "direct-generic"}))
            ->capture_default_str();
        add_engine_flags(cmd, o);
        add_format_flags(cmd, o);
        return cmd;
    };

    add_spec_cmd("compute", "Compute the Hilbert series for one parameter set");
    auto* verify = add_spec_cmd(
        "verify", "Compute and compare against the conjectured series");
    verify->add_flag("--expect-attained", o.expect_attained,
                     "Exit 2 unless the conjectured series is attained");

    auto* compare = app.add_subcommand(
        "compare", "Powers of linear forms vs the conjectured series (Q - F)");
    compare->add_option("-n", o.n, "Number of variables")->required();
    compare->add_option("-r", o.r, "Number of generators")->required();
    compare->add_option("-d", o.d, "Generator degree")->required();
    compare->add_option("--primes", o.primes, "Comma-separated prime list")
        ->delimiter(',');
    add_engine_flags(compare, o);
    add_format_flags(compare, o);

    auto* sweep_cmd = app.add_subcommand("sweep", "Verify a range of r values");
    sweep_cmd->add_option("-n", o.n, "Number of variables")->required();
    sweep_cmd->add_option("-d", o.d, "Generator degree")->required();
    sweep_cmd->add_option("--r-from", o.r_from, "First r")->required();
    sweep_cmd->add_option("--r-to", o.r_to, "Last r")->required();
    sweep_cmd->add_option("--mode", o.mode, "Generator model")
        ->check(CLI::IsMember(
            {"pure-plus-generic", "linear-powers", "direct-generic"}))
        ->capture_default_str();
    add_engine_flags(sweep_cmd, o);
    add_format_flags(sweep_cmd, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (conjecture->parsed()) return run_conjecture(o, out);
        if (app.get_subcommand("compute")->parsed()) {
            return run_compute_or_verify(o, false, false, out);
        }
        if (verify->parsed()) {
            return run_compute_or_verify(o, true, o.expect_attained, out);
        }
        if (compare->parsed()) return run_compare(o, out);
        if (sweep_cmd->parsed()) return run_sweep(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace genform
