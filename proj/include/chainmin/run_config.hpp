#pragma once
// Descriptor parsing and deterministic report rendering for the CLI.
//
// Poset descriptors: "boolean:N" or "subspace:Q,N" (or the JSON equivalent
// {"type":"boolean","n":N} / {"type":"subspace","q":Q,"n":N}).
// Start distributions: "levels:i,j,..." for a characteristic vector, or
// "file:path" / inline JSON with either {"counts":[...]} or {"p":["1/3",..]}.
//
// All emitters produce byte-identical output for identical inputs: integers
// and rationals are rendered as decimal / "num/den" strings, never floats.

#include <string>
#include <vector>

#include "chainmin/chain_expectation.hpp"
#include "chainmin/compression.hpp"
#include "chainmin/level_profile.hpp"
#include "chainmin/numbers.hpp"
#include "chainmin/poset.hpp"
#include "chainmin/poset_checks.hpp"
#include "chainmin/verify.hpp"

namespace chainmin {

struct PosetSpec {
  enum class Kind { Boolean, Subspace };
  Kind kind = Kind::Boolean;
  int n = 0;
  int q = 0;  // subspace lattices only

  static PosetSpec parse(const std::string& text);
  std::string descriptor() const;
};

GradedPoset build_poset(const PosetSpec& spec);
LevelProfile build_profile(const PosetSpec& spec);  // closed form

RankDistribution parse_start_distribution(const std::string& text,
                                          const LevelProfile& prof);

std::vector<int> parse_int_list(const std::string& text);  // "2,3" -> {2,3}

std::string profile_json(const PosetSpec& spec, const LevelProfile& prof,
                         const DescentReport& descent, bool checks_ok = true,
                         const std::string& note = "");
std::string mk_table_csv(const MkTable& t);
std::string mk_table_json(const std::string& poset, const MkTable& t,
                          const ConvexityReport& conv);
std::string suite_csv(const SuiteReport& rep);
std::string suite_json(const SuiteReport& rep);
std::string counterexample_json(const Counterexample& ce);
std::string trajectory_json(const std::string& poset, const Trajectory& traj);
std::string expectation_json(const std::string& poset, std::size_t a,
                             int k, const std::vector<int>& family,
                             const ExpectationReport& rep);
std::string probe_json(const std::string& poset, std::uint64_t seed,
                       const SearchProbe& probe);

}  // namespace chainmin
