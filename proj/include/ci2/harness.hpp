#pragma once

// Built-in surface corpus, random smooth instances, batch sweeps and the
// command implementations behind the ci2 executable. Every command returns a
// JSON document plus an exit code; the executable only parses flags.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ci2/closedforms.hpp"
#include "ci2/hilbert.hpp"
#include "ci2/ideals.hpp"
#include "ci2/resolution.hpp"
#include "ci2/seqprops.hpp"

namespace ci2 {

using Json = nlohmann::ordered_json;

struct NamedSurface {
  std::string label;  // singularity type, carried as opaque metadata
  std::string text;   // as printed in the source table
  Polynomial polynomial;
  int degree = 0;
};

// Ring x,y,z,w under degrevlex, shared by every corpus entry.
Ring corpus_ring();

// 18 singular cubics, then A3 and 2A2, then the reference forms
// "Fermat quadric", "Fermat cubic" and "x".
const std::vector<NamedSurface>& corpus();
std::vector<NamedSurface> table_cubics();
// Throws std::out_of_range for unknown labels.
const NamedSurface& corpus_entry(std::string_view label);

// x_0^d + ... + x_n^d
Polynomial fermat(const Ring& ring, unsigned d);

struct RandomOptions {
  int coeff_bound = 5;     // coefficients uniform in [-bound, bound] \ {0}
  unsigned budget = 100;  // resampling attempts per form
};

// Every monomial of degree d with a random nonzero coefficient.
Polynomial random_dense_form(const Ring& ring, unsigned d, std::mt19937_64& rng, int coeff_bound);

// Dense form resampled until V(f) is smooth. Throws BudgetExceeded.
Polynomial random_smooth_form(const Ring& ring, unsigned d, std::uint64_t seed,
                              RandomOptions opts = {});

// f resampled until smooth, then g resampled until (f, g) is a smooth
// complete intersection. Deterministic in the seed. Throws BudgetExceeded.
std::pair<Polynomial, Polynomial> random_smooth_pair(const Ring& ring, unsigned d, unsigned e,
                                                     std::uint64_t seed, RandomOptions opts = {});

// Full analysis of one (f, g) pair.
struct AlgebraReport {
  AlgebraVariant variant = AlgebraVariant::A;
  HilbertSeries series;
  CoeffSequence coeffs;  // full list when finite, else up to max_degree
  bool finite = false;
  std::optional<bool> prop2_match;           // requires a smooth complete intersection
  std::optional<Conjecture2Report> conj2;    // finite quotients only
  std::optional<BettiTable> betti;           // with resolution
  std::optional<ResolutionReport> resolution;
  std::optional<bool> conj1_match;
  double hilbert_ms = 0;
  double resolution_ms = 0;
};

struct PairOptions {
  std::size_t max_degree = 12;
  bool with_resolution = false;
  bool with_radicals = false;
};

struct PairReport {
  unsigned d = 0, e = 0;
  bool smooth_f = false;
  std::optional<CompleteIntersectionReport> ci;  // absent when f is singular
  AlgebraReport A, B;
  std::optional<bool> g_in_I;
  std::optional<bool> ideals_equal;
  std::optional<bool> radical_equal;
  std::optional<bool> radical_maximal_A, radical_maximal_B;

  bool thm1_ok() const { return !ci || ci->dimA_finite == ci->dimB_finite; }
};

// f and g must be homogeneous, of positive degree, over the same ring.
PairReport analyze_pair(const Polynomial& f, const Polynomial& g, PairOptions opts = {});

// Betti table entries as [[i, j, b], ...].
Json betti_json(const BettiTable& t);
Json coeffs_json(const CoeffSequence& s);
Json conj2_json(const Conjecture2Report& r);

// Expected vs computed tables and their differing (i, j) entries.
Json conjecture1_counterexample(const Polynomial& f, const Polynomial& g, DegreePair dp,
                                const BettiTable& computed);

// ---- sweeps ----

struct SweepOptions {
  unsigned dmax = 3, emax = 3;
  unsigned seeds = 5;
  std::uint64_t seed_base = 1;
  bool with_resolution = false;
  double budget_secs = 0;  // 0: unlimited
  unsigned threads = 0;    // 0: hardware concurrency
  RandomOptions random;
};

struct SweepRecord {
  unsigned d = 0, e = 0;
  std::uint64_t seed = 0;
  std::optional<PairReport> report;
  std::optional<std::string> f, g;
  std::optional<std::string> error;
  std::string error_kind;  // "budget", "precondition" or "internal"
  double ms = 0;
};

struct SweepResult {
  std::vector<SweepRecord> records;  // ordered by (d, e, seed)
  bool budget_hit = false;
};

SweepResult run_sweep(const SweepOptions& opts);
Json sweep_json(const SweepOptions& opts, const SweepResult& r);
// d,e,seed,variant,k,coefficient rows for every finite series.
std::string sweep_csv(const SweepResult& r);

// ---- commands ----

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitParse = 2, kExitPrecondition = 3, kExitBudget = 4 };

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
  std::string text;  // human-readable rendering
};

struct PairInput {
  std::string vars = "x,y,z,w";
  std::string f, g;
  std::string order = "degrevlex";
};

CommandResult cmd_hilbert(const PairInput& in, AlgebraVariant v, std::size_t max_degree = 12);
CommandResult cmd_check(const PairInput& in);
CommandResult cmd_formula_prop2(AlgebraVariant v, unsigned d, unsigned e, bool expand);
CommandResult cmd_formula_smooth(unsigned n, unsigned d);
CommandResult cmd_betti(const PairInput& in, AlgebraVariant v, bool compare_conjecture);
CommandResult cmd_sweep(const SweepOptions& opts, const std::string& csv_path = {});
// which: ex1, ex2-1, ex2-2, ex2-3, ex2-4 or all.
CommandResult cmd_examples(const std::string& which);

// Wraps a command, mapping ParseError, RingMismatch, PreconditionError and
// BudgetExceeded to exit codes 2, 2, 3 and 4 with an error report.
CommandResult run_command(const char* name, const std::function<CommandResult()>& body);

Json error_report(const char* command, const char* kind, const std::string& message,
                  std::optional<std::size_t> offset = std::nullopt);

}  // namespace ci2
