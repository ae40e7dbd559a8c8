#include "genform/engine.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>

#include "genform/matrix.hpp"

namespace genform {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::PurePlusGeneric: return "pure-plus-generic";
        case Mode::LinearPowers: return "linear-powers";
        case Mode::DirectGeneric: return "direct-generic";
    }
    return "?";
}

std::optional<Mode> mode_from_string(std::string_view name) {
    if (name == "pure-plus-generic") return Mode::PurePlusGeneric;
    if (name == "linear-powers") return Mode::LinearPowers;
    if (name == "direct-generic") return Mode::DirectGeneric;
    return std::nullopt;
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::ReachedZero: return "reached-zero";
        case StopReason::HitCap: return "hit-cap";
    }
    return "?";
}

void JobSpec::validate() const {
    if (n < 1 || n > kMaxVars) {
        throw std::invalid_argument("n must be in [1, 16]");
    }
    if (d < 2 || d > kMaxVars) {
        throw std::invalid_argument("d must be in [2, 16]");
    }
    if (r < 0) throw std::invalid_argument("r must be >= 0");
    if (mode != Mode::DirectGeneric && r < n) {
        throw std::invalid_argument(
            "r must be >= n in the pure-power modes (the first n generators "
            "are the pure powers x_i^d)");
    }
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (prime > kMaxPrime || !is_prime(prime)) {
        throw std::invalid_argument("prime must be a prime <= 2147483647");
    }
    if (mode == Mode::LinearPowers && prime <= static_cast<std::uint32_t>(d)) {
        throw std::invalid_argument(
            "linear-powers mode requires prime > d (multinomial coefficients "
            "would vanish spuriously)");
    }
    if (mode == Mode::DirectGeneric && r < n && max_degree < 0) {
        throw std::invalid_argument(
            "direct-generic with r < n never reaches zero; an explicit "
            "max_degree is required");
    }
    if (max_degree > 255) {
        throw std::invalid_argument(
            "max_degree above 255 exceeds the 8-bit exponent storage");
    }
}

int JobSpec::resolved_max_degree() const {
    if (max_degree >= 0) return max_degree;
    return n * (d - 1) + 1; // socle bound of the pure-power quotient
}

std::uint64_t trial_seed(std::uint64_t job_seed, int trial) {
    return splitmix_once(job_seed ^
                         (static_cast<std::uint64_t>(trial) << 32));
}

std::uint64_t form_seed(std::uint64_t trial_seed_value, int form_index) {
    return splitmix_once(trial_seed_value ^
                         static_cast<std::uint64_t>(form_index));
}

FormRep make_generic_form(const GradedBasis& basis, int degree,
                          const FpField& field, SplitMix64& rng) {
    FormRep form;
    form.coeffs.resize(basis.at(degree).size());
    for (auto& c : form.coeffs) c = field.uniform(rng);
    return form;
}

FormRep expand_linear_power(const GradedBasis& basis, const FpField& field,
                            const std::vector<std::uint32_t>& c) {
    if (!basis.is_bounded()) {
        throw std::invalid_argument(
            "expand_linear_power needs the bounded (pure-power) basis");
    }
    const int n = basis.vars();
    const int d = basis.bound_degree();
    if (c.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("expand_linear_power: wrong coefficient count");
    }
    if (field.modulus() <= static_cast<std::uint32_t>(d)) {
        throw std::invalid_argument(
            "expand_linear_power requires p > d (multinomial coefficients "
            "would vanish spuriously)");
    }

    std::vector<std::int64_t> factorial(static_cast<std::size_t>(d) + 1, 1);
    for (int i = 1; i <= d; ++i) {
        factorial[static_cast<std::size_t>(i)] =
            factorial[static_cast<std::size_t>(i - 1)] * i;
    }

    const auto& monomials = basis.at(d);
    FormRep form;
    form.coeffs.resize(monomials.size());
    for (std::size_t idx = 0; idx < monomials.size(); ++idx) {
        const auto& alpha = monomials[idx];
        std::int64_t denom = 1;
        for (int i = 0; i < n; ++i) denom *= factorial[alpha[i]];
        // p > d, so no prime factor of the multinomial coefficient is p.
        std::uint32_t value = static_cast<std::uint32_t>(
            (factorial[static_cast<std::size_t>(d)] / denom) %
            field.modulus());
        for (int i = 0; i < n; ++i) {
            if (alpha[i] != 0) {
                value = field.mul(
                    value, field.pow(c[static_cast<std::size_t>(i)], alpha[i]));
            }
        }
        form.coeffs[idx] = value;
    }
    return form;
}

FormRep make_linear_power_form(const GradedBasis& basis, const FpField& field,
                               SplitMix64& rng) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(basis.vars()));
    for (auto& ci : c) ci = field.uniform(rng);
    return expand_linear_power(basis, field, c);
}

IntSeries HilbertResult::series() const {
    return IntSeries(dims);
}

HilbertResult compute_hilbert(const GradedBasis& basis, const FpField& field,
                              const std::vector<FormRep>& generators,
                              int gen_degree, int max_degree, bool stop_at_zero,
                              ThreadPool* pool) {
    if (basis.max_degree() < max_degree) {
        throw std::invalid_argument("basis not built up to the degree cap");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const int bound = basis.is_bounded() ? basis.bound_degree() : 0;

    HilbertResult res;
    for (int D = 0; D <= max_degree; ++D) {
        const std::int64_t ambient = basis.dim(D);
        DegreeStat stat;
        stat.degree = D;
        stat.ambient_dim = ambient;

        std::int64_t dim;
        if (D < gen_degree || generators.empty()) {
            dim = ambient;
        } else {
            const auto& mult_monos = basis.at(D - gen_degree);
            const auto& gen_monos = basis.at(gen_degree);
            const std::size_t cols = static_cast<std::size_t>(ambient);
            const std::size_t rows = generators.size() * mult_monos.size();
            stat.rows = rows;
            stat.cols = cols;

            // Column scatter map, shared by all generators: the product of
            // multiplier m and basis monomial u lands in column col(m*u),
            // or nowhere when a pure power annihilates it.
            constexpr std::uint32_t kDead = 0xFFFFFFFFu;
            std::vector<std::uint32_t> scatter(mult_monos.size() * gen_monos.size());
            for (std::size_t mi = 0; mi < mult_monos.size(); ++mi) {
                for (std::size_t ui = 0; ui < gen_monos.size(); ++ui) {
                    std::optional<ExponentVector> prod =
                        bound > 0
                            ? multiply_reduce(mult_monos[mi], gen_monos[ui], bound)
                            : std::optional<ExponentVector>(
                                  multiply(mult_monos[mi], gen_monos[ui]));
                    std::uint32_t col = kDead;
                    if (prod) {
                        auto found = basis.index_of(D, *prod);
                        assert(found.has_value());
                        col = *found;
                    }
                    scatter[mi * gen_monos.size() + ui] = col;
                }
            }

            FpMatrix m(rows, cols);
            for (std::size_t g = 0; g < generators.size(); ++g) {
                const auto& coeffs = generators[g].coeffs;
                for (std::size_t mi = 0; mi < mult_monos.size(); ++mi) {
                    std::uint32_t* row = m.row(g * mult_monos.size() + mi);
                    const std::uint32_t* cmap = scatter.data() + mi * gen_monos.size();
                    for (std::size_t ui = 0; ui < gen_monos.size(); ++ui) {
                        if (cmap[ui] != kDead && coeffs[ui] != 0) {
                            row[cmap[ui]] = coeffs[ui];
                        }
                    }
                }
            }

            stat.rank = rank(m, field, pool);
            dim = ambient - static_cast<std::int64_t>(stat.rank);
        }

        stat.dim = dim;
        res.dims.push_back(dim);
        res.degrees.push_back(stat);
        if (stop_at_zero && dim == 0) break;
    }

    res.stop_reason = (!res.dims.empty() && res.dims.back() == 0)
                          ? StopReason::ReachedZero
                          : StopReason::HitCap;
    res.elapsed_ms = ms_since(t0);
    return res;
}

HilbertResult hilbert_series_trial(const JobSpec& spec, int trial,
                                   ThreadPool* pool) {
    spec.validate();
    const FpField field(spec.prime);
    const int cap = spec.resolved_max_degree();
    const std::uint64_t tseed = trial_seed(spec.seed, trial);

    if (spec.mode == Mode::DirectGeneric) {
        const GradedBasis basis = GradedBasis::full(spec.n, cap);
        std::vector<FormRep> gens;
        gens.reserve(static_cast<std::size_t>(spec.r));
        for (int j = 0; j < spec.r; ++j) {
            SplitMix64 rng(form_seed(tseed, j));
            gens.push_back(make_generic_form(basis, spec.d, field, rng));
        }
        return compute_hilbert(basis, field, gens, spec.d, cap, true, pool);
    }

    const GradedBasis basis = GradedBasis::bounded(spec.n, spec.d, cap);
    std::vector<FormRep> gens;
    gens.reserve(static_cast<std::size_t>(spec.r - spec.n));
    for (int j = 0; j < spec.r - spec.n; ++j) {
        SplitMix64 rng(form_seed(tseed, j));
        gens.push_back(spec.mode == Mode::LinearPowers
                           ? make_linear_power_form(basis, field, rng)
                           : make_generic_form(basis, spec.d, field, rng));
    }
    return compute_hilbert(basis, field, gens, spec.d, cap, true, pool);
}

HilbertResult hilbert_series(const JobSpec& spec, ThreadPool* pool) {
    return hilbert_series_trial(spec, 0, pool);
}

Verdict verify_conjecture(const JobSpec& spec, ThreadPool* pool) {
    spec.validate();
    Verdict verdict;
    verdict.conjectured_complete = spec.r >= spec.n;
    verdict.conjectured =
        verdict.conjectured_complete
            ? conjectured_series(spec.n, spec.r, spec.d)
            : conjectured_series_capped(spec.n, spec.r, spec.d,
                                        spec.resolved_max_degree());

    int attaining = -1;
    for (int t = 0; t < spec.trials; ++t) {
        TrialResult tr;
        tr.trial = t;
        tr.seed = trial_seed(spec.seed, t);
        tr.result = hilbert_series_trial(spec, t, pool);
        if (attaining < 0 && series_eq(tr.result.series(), verdict.conjectured)) {
            attaining = t;
        }
        verdict.trials.push_back(std::move(tr));
    }

    verdict.attained = attaining >= 0;
    if (verdict.attained) {
        verdict.computed = verdict.trials[static_cast<std::size_t>(attaining)]
                               .result.series();
    } else {
        // Best lower envelope of the observed specializations; every trial
        // dominates the generic series coefficientwise.
        verdict.computed = verdict.trials.front().result.series();
        for (std::size_t i = 1; i < verdict.trials.size(); ++i) {
            verdict.computed = coefficientwise_min(
                verdict.computed, verdict.trials[i].result.series());
        }
    }
    verdict.delta = series_sub(verdict.computed, verdict.conjectured);
    return verdict;
}

CompareReport compare_powers(int n, int r, int d, int trials,
                             const std::vector<std::uint32_t>& primes,
                             std::uint64_t seed, int max_degree,
                             ThreadPool* pool) {
    if (primes.empty()) {
        throw std::invalid_argument("compare_powers needs at least one prime");
    }
    CompareReport report;
    report.n = n;
    report.r = r;
    report.d = d;
    report.trials = trials;
    report.primes = primes;
    report.seed = seed;
    report.conjectured = conjectured_series(n, r, d);

    for (int t = 0; t < trials; ++t) {
        for (std::uint32_t p : primes) {
            JobSpec spec;
            spec.n = n;
            spec.r = r;
            spec.d = d;
            spec.mode = Mode::LinearPowers;
            spec.prime = p;
            spec.seed = seed;
            spec.max_degree = max_degree;
            spec.trials = 1;
            CompareRun run;
            run.trial = t;
            run.prime = p;
            run.series = hilbert_series_trial(spec, t, pool).series();
            report.runs.push_back(std::move(run));
        }
    }

    report.q_candidate = report.runs.front().series;
    report.consensus = true;
    for (std::size_t i = 1; i < report.runs.size(); ++i) {
        if (!series_eq(report.runs[i].series, report.runs.front().series)) {
            report.consensus = false;
        }
        report.q_candidate =
            coefficientwise_min(report.q_candidate, report.runs[i].series);
    }
    report.delta = series_sub(report.q_candidate, report.conjectured);
    return report;
}

std::vector<SweepRow> sweep(int n, int d, int r_from, int r_to, Mode mode,
                            int trials, std::uint32_t prime, std::uint64_t seed,
                            int max_degree, ThreadPool* pool) {
    if (r_from > r_to) {
        throw std::invalid_argument("sweep requires r_from <= r_to");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(r_to - r_from) + 1);
    for (int r = r_from; r <= r_to; ++r) {
        JobSpec spec;
        spec.n = n;
        spec.r = r;
        spec.d = d;
        spec.mode = mode;
        spec.prime = prime;
        spec.seed = seed;
        spec.max_degree = max_degree;
        spec.trials = trials;
        rows.push_back(SweepRow{r, verify_conjecture(spec, pool)});
    }
    return rows;
}

} // namespace genform
