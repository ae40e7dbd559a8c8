#pragma once

// The Hilbert-series pipeline: sample generators, assemble the per-degree
// multiplication matrices, compute dim R_D = dim A_D - rank(M_D), and apply
// the verification / comparison logic for the conjectured series F_{n,r,d}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genform/basis.hpp"
#include "genform/fp.hpp"
#include "genform/parallel.hpp"
#include "genform/series.hpp"

namespace genform {

enum class Mode {
    // Ideal (x_1^d,..,x_n^d) + J with J generated by r-n random forms of
    // degree d; computed inside A = k[x]/(x_i^d).
    PurePlusGeneric,
    // Ideal (x_1^d,..,x_n^d, f_1^d,..,f_{r-n}^d) with random linear f_i;
    // models the d-th powers of r generic linear forms.
    LinearPowers,
    // r random degree-d forms in the full polynomial ring, no shortcut.
    DirectGeneric,
};

const char* to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view name);

enum class StopReason { ReachedZero, HitCap };

const char* to_string(StopReason reason);

struct JobSpec {
    int n = 0;
    int r = 0;
    int d = 0;
    Mode mode = Mode::PurePlusGeneric;
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 42;
    int max_degree = -1; // -1: resolve to the socle bound n(d-1)+1
    int trials = 1;

    // Throws std::invalid_argument when a field violates its contract:
    // 1 <= n <= 16, 2 <= d <= 16, r >= n in the pure-power modes, prime
    // verified prime and <= 2^31-1, prime > d in LinearPowers mode,
    // trials >= 1, and an explicit max_degree for DirectGeneric with r < n.
    void validate() const;

    int resolved_max_degree() const;
};

// Seed derivation (fixed contract, reproducible across runs and builds):
// per-trial seed = SplitMix64(job_seed xor (trial << 32)); per-form seed =
// SplitMix64(trial_seed xor form_index). Form j therefore draws the same
// coefficients regardless of how many later generators exist.
std::uint64_t trial_seed(std::uint64_t job_seed, int trial);
std::uint64_t form_seed(std::uint64_t trial_seed_value, int form_index);

// A degree-d form as its coefficient vector on the canonical degree-d
// basis: the bounded basis of A_d in the pure-power modes (coefficients on
// the pure powers x_i^d would vanish in A, so sampling only the surviving
// monomials loses no generality), the full monomial basis in direct mode.
struct FormRep {
    std::vector<std::uint32_t> coeffs;
};

// Uniform random coefficients on every monomial of the degree-`degree`
// slice of the basis.
FormRep make_generic_form(const GradedBasis& basis, int degree,
                          const FpField& field, SplitMix64& rng);

// (c_1 x_1 + .. + c_n x_n)^d expanded by the multinomial theorem and
// reduced modulo the pure powers: the surviving monomial x^alpha carries
// (d! / prod alpha_i!) * prod c_i^alpha_i. Requires a bounded basis and
// p > d so no multinomial coefficient vanishes spuriously.
FormRep expand_linear_power(const GradedBasis& basis, const FpField& field,
                            const std::vector<std::uint32_t>& c);

// expand_linear_power of a uniformly random linear form.
FormRep make_linear_power_form(const GradedBasis& basis, const FpField& field,
                               SplitMix64& rng);

struct DegreeStat {
    int degree = 0;
    std::int64_t ambient_dim = 0; // dim A_D (or dim S_D in direct mode)
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::int64_t dim = 0; // dim R_D
};

struct HilbertResult {
    std::vector<std::int64_t> dims; // from D = 0; last entry 0 iff ReachedZero
    std::vector<DegreeStat> degrees;
    StopReason stop_reason = StopReason::HitCap;
    double elapsed_ms = 0.0;

    // dims as a canonical IntSeries (the trailing zero of a ReachedZero run
    // is trimmed); the full Hilbert series when stop_reason is ReachedZero.
    IntSeries series() const;
};

// Core pipeline on explicit generators. In a bounded basis the generators
// are the extras on top of the implicit pure powers x_i^d; in a full basis
// they are the complete generator list. stop_at_zero = false forces the
// loop past the first zero (used by the zero-propagation checks).
HilbertResult compute_hilbert(const GradedBasis& basis, const FpField& field,
                              const std::vector<FormRep>& generators,
                              int gen_degree, int max_degree,
                              bool stop_at_zero = true,
                              ThreadPool* pool = nullptr);

// One pipeline run for the given trial index (builds basis and generators
// according to spec.mode and the derived seeds).
HilbertResult hilbert_series_trial(const JobSpec& spec, int trial,
                                   ThreadPool* pool = nullptr);

// Trial 0 of the spec.
HilbertResult hilbert_series(const JobSpec& spec, ThreadPool* pool = nullptr);

struct TrialResult {
    int trial = 0;
    std::uint64_t seed = 0;
    HilbertResult result;
};

struct Verdict {
    IntSeries computed;    // attaining trial's series, else the
                           // coefficientwise-minimum envelope of all trials
    IntSeries conjectured; // F_{n,r,d}; capped at max_degree when r < n
    IntSeries delta;       // computed - conjectured
    bool attained = false;
    bool conjectured_complete = true; // false when r < n (capped segment)
    std::vector<TrialResult> trials;
};

// Runs spec.trials independent trials; attained when ANY trial equals the
// conjectured series. A random specialization can only have dimensions >=
// the generic ones, so one attaining example certifies that the generic
// series is F; disagreeing trials mean unlucky specialization, never a
// false positive.
Verdict verify_conjecture(const JobSpec& spec, ThreadPool* pool = nullptr);

struct CompareRun {
    int trial = 0;
    std::uint32_t prime = 0;
    IntSeries series;
};

struct CompareReport {
    int n = 0, r = 0, d = 0;
    int trials = 0;
    std::vector<std::uint32_t> primes;
    std::uint64_t seed = 0;
    std::vector<CompareRun> runs;
    IntSeries q_candidate; // coefficientwise minimum across runs
    IntSeries conjectured; // F_{n,r,d}
    IntSeries delta;       // q_candidate - F
    bool consensus = false; // all runs produced the same series
};

// LinearPowers runs for every (trial, prime); the coefficientwise minimum
// is the Q_{n,r,d} candidate (specializations only inflate dimensions).
// The consensus flag reports evidence strength: these equalities are
// F_p-verified conjecture, not characteristic-0 proof.
CompareReport compare_powers(int n, int r, int d, int trials,
                             const std::vector<std::uint32_t>& primes,
                             std::uint64_t seed, int max_degree = -1,
                             ThreadPool* pool = nullptr);

struct SweepRow {
    int r = 0;
    Verdict verdict;
};

// One verify_conjecture per r in [r_from, r_to].
std::vector<SweepRow> sweep(int n, int d, int r_from, int r_to, Mode mode,
                            int trials, std::uint32_t prime, std::uint64_t seed,
                            int max_degree = -1, ThreadPool* pool = nullptr);

} // namespace genform
