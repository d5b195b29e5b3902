#pragma once
// Ground truth and falsification probes.
//
// exhaustive_minimize enumerates every a-element family and establishes the
// true minimum of c_k, the number of minimizers, and whether all minimizers
// are centred. verify_kleitman_suite sweeps every family size against the
// closed-form minimum table. The probe is a randomized local search that
// tries to beat the table; any hit would be re-verified exactly and reported
// as a counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainmin/centred.hpp"
#include "chainmin/level_profile.hpp"
#include "chainmin/numbers.hpp"
#include "chainmin/poset.hpp"
#include "chainmin/rng.hpp"

namespace chainmin {

struct MinimizationResult {
  int k = 0;
  std::size_t a = 0;
  Count minimum = 0;
  Count minimizer_count = 0;
  bool all_minimizers_centred = false;
  // first few minimizers, element ids ascending
  std::vector<std::vector<int>> sample_minimizers;
};

// Enumerates all C(|P|, a) families (colex order over element indices).
// Refuses when that count exceeds `budget`.
MinimizationResult exhaustive_minimize(const GradedPoset& p, int k,
                                       std::size_t a,
                                       std::uint64_t budget = 20000000,
                                       std::size_t sample_cap = 64);

struct SuiteRow {
  int k = 0;
  std::size_t a = 0;
  Count minimum = 0;        // exhaustive ground truth
  Count mk = 0;             // closed-form table value
  Count minimizer_count = 0;
  bool all_minimizers_centred = false;
  bool row_ok = false;  // minimum == mk, and centred minimizers when mk > 0
};

struct Counterexample {
  std::string poset;
  int k = 0;
  std::size_t a = 0;
  Count expected = 0;
  Count observed = 0;
  std::vector<int> family;  // element ids
};

struct SuiteReport {
  std::string poset;
  std::vector<SuiteRow> rows;
  bool pass = false;
  std::vector<Counterexample> counterexamples;
};

// Every family size a = 0..|P| against the table, for each k in `ks`.
// Also checks that the canonical centred prefix family attains each minimum.
SuiteReport verify_kleitman_suite(const GradedPoset& p,
                                  const std::vector<int>& ks,
                                  std::uint64_t budget = 20000000);

struct ErdosKatonaReport {
  int n = 0;
  Count a1 = 0;        // size of the middle level
  Count a2 = 0;        // next breakpoint
  Count slope = 0;     // ceil((n+1)/2)
  bool closed_form_ok = false;   // m_2(a1 + t) == t * slope on the segment
  bool exhaustive_ok = false;    // ground truth agrees (when checked)
  bool exhaustive_checked = false;
  bool pass() const {
    return closed_form_ok && (!exhaustive_checked || exhaustive_ok);
  }
};

// First linear segment of m_2 past the middle binomial coefficient.
// Cross-checks exhaustively when C(2^n, a) stays within budget.
ErdosKatonaReport erdos_katona_check(int n, std::uint64_t budget = 20000000);

struct LevelUnionBound {
  bool pass = false;
  std::uint64_t sets_checked = 0;
  std::string witness;
};

// For every rank set I: c_k of the union of those full levels is at least
// m_k of its total size, strictly exactly when |I| >= k and I is not centred.
LevelUnionBound level_union_bound_sweep(const LevelProfile& prof, int k);

// Seeded uniform a-element family (partial shuffle of the element list).
Family random_family(const GradedPoset& p, std::size_t a, Rng& rng);

enum class ProbeStrategy { Hill, Anneal };

struct SearchProbe {
  int k = 0;
  std::size_t a = 0;
  ProbeStrategy strategy = ProbeStrategy::Hill;
  std::uint64_t proposals = 0;
  std::uint64_t accepted = 0;
  std::uint64_t audits = 0;
  std::vector<int> best_family;  // element ids ascending
  Count best_count = 0;          // exact recount of the best family
  bool below_reference = false;  // only meaningful when a reference was given
};

// Seeded local search over a-element families via single-element swaps.
// Incremental counting is audited against a full exact recount every 1024
// proposals; a mismatch throws. budget == 0 just reports the initial family.
SearchProbe probe_minimize(const GradedPoset& p, int k, std::size_t a,
                           ProbeStrategy strategy, std::uint64_t budget,
                           std::uint64_t seed,
                           const MkTable* reference = nullptr);

}  // namespace chainmin
