#include "chainmin/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "chainmin/lattices.hpp"
#include "chainmin/rng.hpp"

namespace chainmin {

namespace {

constexpr std::uint64_t kU64ChainCap = std::uint64_t(1) << 62;

// Families as 64-bit element masks, chain counting in native words.
// Safe because construction certifies that even the whole poset holds fewer
// than 2^62 chains of every relevant length.
struct MaskKernel {
  static constexpr int kMaxK = 8;

  int m = 0;
  int kmax = 0;
  std::vector<int> order;  // element ids in rank order
  mutable std::array<int, 64> member_slot{};  // scratch: element id -> member index
  std::vector<std::uint64_t> below, above;

  MaskKernel(const GradedPoset& p, int kmax_) : m(static_cast<int>(p.size())), kmax(kmax_) {
    if (m > 64)
      throw ResourceGuardError("mask kernel handles at most 64 elements, got " +
                               std::to_string(m));
    if (kmax < 1) throw std::invalid_argument("kernel needs k >= 1");
    if (kmax > kMaxK)
      throw ResourceGuardError("mask kernel caps chain length at " +
                               std::to_string(kMaxK));
    order.reserve(m);
    for (int r = 0; r <= p.n(); ++r)
      for (int x : p.level(r)) order.push_back(x);
    below.assign(m, 0);
    above.assign(m, 0);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (p.below(x).test(y)) below[x] |= std::uint64_t(1) << y;
        if (p.above(x).test(y)) above[x] |= std::uint64_t(1) << y;
      }
    }
    Family whole(p, p.full_mask());
    for (int t = 1; t <= kmax; ++t)
      if (count_chains(whole, t) >= kU64ChainCap)
        throw ResourceGuardError("chain counts too large for native words");
  }

  // totals[t] = t-chains inside mask, for t = 1..tmax (tmax <= kMaxK)
  void chain_totals(std::uint64_t mask, int tmax,
                    std::uint64_t* totals) const {
    int mem[64];
    int a = 0;
    for (int x : order)
      if (mask >> x & 1) {
        member_slot[static_cast<std::size_t>(x)] = a;
        mem[a++] = x;
      }
    for (int t = 1; t <= tmax; ++t) totals[t] = 0;
    std::uint64_t dp[kMaxK][64];
    for (int j = 0; j < a; ++j) {
      dp[0][j] = 1;
      std::uint64_t lower = below[mem[j]] & mask;
      for (int t = 2; t <= tmax; ++t) {
        std::uint64_t s = 0;
        for (std::uint64_t b = lower; b; b &= b - 1)
          s += dp[t - 2][member_slot[static_cast<std::size_t>(std::countr_zero(b))]];
        dp[t - 1][j] = s;
      }
      for (int t = 1; t <= tmax; ++t) totals[t] += dp[t - 1][j];
    }
  }

  std::uint64_t count_k(std::uint64_t mask, int k) const {
    std::uint64_t totals[kMaxK + 1] = {};
    if (mask) chain_totals(mask, k, totals);
    return totals[k];
  }

  // k-chains through z inside mask | {z}; mask must not contain z
  std::uint64_t through(std::uint64_t mask, int z, int k) const {
    std::uint64_t lo[kMaxK] = {};
    std::uint64_t hi[kMaxK] = {};
    lo[0] = hi[0] = 1;
    if (k >= 2) {
      std::uint64_t bm = mask & below[z];
      if (bm) chain_totals(bm, k - 1, lo);
      std::uint64_t am = mask & above[z];
      if (am) chain_totals(am, k - 1, hi);
    }
    std::uint64_t total = 0;
    for (int s = 0; s <= k - 1; ++s) total += lo[s] * hi[k - 1 - s];
    return total;
  }
};

std::uint64_t gosper_next(std::uint64_t v) {
  std::uint64_t u = v & (~v + 1);
  std::uint64_t w = v + u;
  return w | (((v ^ w) / u) >> 2);
}

std::vector<int> mask_elements(std::uint64_t mask) {
  std::vector<int> out;
  for (std::uint64_t b = mask; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

}  // namespace

MinimizationResult exhaustive_minimize(const GradedPoset& p, int k,
                                       std::size_t a, std::uint64_t budget,
                                       std::size_t sample_cap) {
  MaskKernel K(p, k);
  if (a > static_cast<std::size_t>(K.m))
    throw std::invalid_argument("family size exceeds the poset");
  Count total_masks = binomial(K.m, static_cast<int>(a));
  if (total_masks > budget)
    throw ResourceGuardError("enumerating " + total_masks.str() +
                             " families exceeds budget " +
                             std::to_string(budget));

  MinimizationResult res;
  res.k = k;
  res.a = a;
  res.all_minimizers_centred = true;

  std::uint64_t iterations = to_u64(total_masks, "family enumeration size");
  std::uint64_t mask =
      a == 0 ? 0 : (a == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << a) - 1);
  bool have = false;
  std::uint64_t best = 0;
  for (std::uint64_t it = 0; it < iterations; ++it) {
    std::uint64_t c = K.count_k(mask, k);
    if (!have || c < best) {
      have = true;
      best = c;
      res.minimizer_count = 1;
      res.all_minimizers_centred =
          is_centred(Family(p, Bits(K.m, mask))).centred;
      res.sample_minimizers.clear();
      res.sample_minimizers.push_back(mask_elements(mask));
    } else if (c == best) {
      ++res.minimizer_count;
      if (res.all_minimizers_centred)
        res.all_minimizers_centred =
            is_centred(Family(p, Bits(K.m, mask))).centred;
      if (res.sample_minimizers.size() < sample_cap)
        res.sample_minimizers.push_back(mask_elements(mask));
    }
    if (it + 1 < iterations) mask = gosper_next(mask);
  }
  res.minimum = best;
  return res;
}

SuiteReport verify_kleitman_suite(const GradedPoset& p,
                                  const std::vector<int>& ks,
                                  std::uint64_t budget) {
  LevelProfile prof = measure_profile(p);
  SuiteReport rep;
  rep.poset = p.descriptor();
  rep.pass = true;
  for (int k : ks) {
    MkTable table = make_mk_table(prof, k);
    for (std::size_t a = 0; a <= static_cast<std::size_t>(p.size()); ++a) {
      MinimizationResult res = exhaustive_minimize(p, k, a, budget);
      const Count& mk = table.at(a);
      ExtremalPrefix prefix = build_X(p, a, mu_minus(p.n()));
      Count prefix_count = count_chains(prefix.family, k);

      SuiteRow row;
      row.k = k;
      row.a = a;
      row.minimum = res.minimum;
      row.mk = mk;
      row.minimizer_count = res.minimizer_count;
      row.all_minimizers_centred = res.all_minimizers_centred;
      row.row_ok = res.minimum == mk && prefix_count == mk &&
                   (mk == 0 || res.all_minimizers_centred);
      rep.rows.push_back(row);

      if (!row.row_ok) {
        rep.pass = false;
        Counterexample ce;
        ce.poset = p.descriptor();
        ce.k = k;
        ce.a = a;
        ce.expected = mk;
        ce.observed = res.minimum;
        if (!res.sample_minimizers.empty()) ce.family = res.sample_minimizers[0];
        rep.counterexamples.push_back(ce);
      }
    }
  }
  return rep;
}

ErdosKatonaReport erdos_katona_check(int n, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  LevelProfile prof = boolean_profile(n);
  ErdosKatonaReport rep;
  rep.n = n;
  rep.a1 = binomial(n, n / 2);
  rep.a2 = a_ell(prof, 2);
  rep.slope = (n + 2) / 2;

  rep.closed_form_ok = true;
  for (Count t = 0; t <= rep.a2 - rep.a1; ++t)
    if (mk_value(prof, 2, rep.a1 + t) != rep.slope * t) {
      rep.closed_form_ok = false;
      break;
    }

  if (n <= 4) {
    rep.exhaustive_checked = true;
    rep.exhaustive_ok = true;
    GradedPoset cube = make_boolean_lattice(n);
    for (Count t = 0; t <= rep.a2 - rep.a1; ++t) {
      std::size_t a = to_index(rep.a1 + t, "family size");
      MinimizationResult res = exhaustive_minimize(cube, 2, a, budget);
      if (res.minimum != rep.slope * t) {
        rep.exhaustive_ok = false;
        break;
      }
    }
  }
  return rep;
}

LevelUnionBound level_union_bound_sweep(const LevelProfile& prof, int k) {
  if (prof.n > 62) throw ResourceGuardError("rank set sweep needs n <= 62");
  LevelUnionBound rep;
  rep.pass = true;
  const std::uint64_t end = std::uint64_t(1) << (prof.n + 1);
  for (std::uint64_t m = 0; m < end; ++m) {
    RankSet I = RankSet::from_mask(m);
    Count a = 0;
    for (int i : I.values()) a += prof.sizes[i];
    Count lhs = prof.ck_prime_empty(I, k);
    Count rhs = mk_value(prof, k, a);
    bool strict_expected = I.size() >= k && !is_centred_rank_set(prof.n, I);
    bool ok = lhs >= rhs && (lhs > rhs) == strict_expected;
    ++rep.sets_checked;
    if (!ok) {
      rep.pass = false;
      rep.witness = "rank set " + I.str() + ": union count " + lhs.str() +
                    " vs minimum " + rhs.str() +
                    (strict_expected ? " (expected strict)" : " (expected equal)");
      return rep;
    }
  }
  return rep;
}

Family random_family(const GradedPoset& p, std::size_t a, Rng& rng) {
  if (a > static_cast<std::size_t>(p.size()))
    throw std::invalid_argument("family size exceeds the poset");
  std::vector<int> ids(p.size());
  for (int x = 0; x < p.size(); ++x) ids[x] = x;
  for (std::size_t i = 0; i < a; ++i) {
    std::uint64_t j = i + uniform_below(rng, ids.size() - i);
    std::swap(ids[i], ids[j]);
  }
  ids.resize(a);
  return Family(p, ids);
}

SearchProbe probe_minimize(const GradedPoset& p, int k, std::size_t a,
                           ProbeStrategy strategy, std::uint64_t budget,
                           std::uint64_t seed, const MkTable* reference) {
  MaskKernel K(p, k);
  if (a > static_cast<std::size_t>(K.m))
    throw std::invalid_argument("family size exceeds the poset");

  SearchProbe probe;
  probe.k = k;
  probe.a = a;
  probe.strategy = strategy;

  Rng rng(seed);
  std::vector<int> ids(K.m);
  for (int x = 0; x < K.m; ++x) ids[x] = x;
  for (std::size_t i = 0; i < a; ++i) {
    std::uint64_t j = i + uniform_below(rng, static_cast<std::uint64_t>(K.m) - i);
    std::swap(ids[i], ids[j]);
  }
  std::vector<int> members(ids.begin(), ids.begin() + a);
  std::vector<int> others(ids.begin() + a, ids.end());

  std::uint64_t mask = 0;
  for (int x : members) mask |= std::uint64_t(1) << x;
  std::uint64_t cur = K.count_k(mask, k);
  std::uint64_t best = cur;
  std::uint64_t best_mask = mask;

  const bool can_swap = a > 0 && a < static_cast<std::size_t>(K.m);
  for (std::uint64_t step = 1; step <= budget && can_swap; ++step) {
    std::size_t mi = uniform_below(rng, a);
    std::size_t ni = uniform_below(rng, others.size());
    int x = members[mi];
    int y = others[ni];
    std::uint64_t mask_wo = mask & ~(std::uint64_t(1) << x);
    std::uint64_t out = K.through(mask_wo, x, k);
    std::uint64_t in = K.through(mask_wo, y, k);
    std::uint64_t nxt = cur - out + in;

    bool accept = nxt <= cur;
    if (!accept && strategy == ProbeStrategy::Anneal) {
      // integer cooling: acceptance odds t : 4*rise, with t shrinking linearly
      std::uint64_t t = std::max<std::uint64_t>(1, (budget - step) * 16 / budget);
      std::uint64_t rise = nxt - cur;
      if (rise < (std::uint64_t(1) << 60))
        accept = uniform_below(rng, t + 4 * rise) < t;
    }
    if (accept) {
      mask = mask_wo | (std::uint64_t(1) << y);
      std::swap(members[mi], others[ni]);
      cur = nxt;
      ++probe.accepted;
      if (cur < best) {
        best = cur;
        best_mask = mask;
      }
    }
    ++probe.proposals;
    if (step % 1024 == 0) {
      ++probe.audits;
      Count exact = count_chains(Family(p, Bits(K.m, mask)), k);
      if (exact != cur)
        throw std::logic_error("incremental chain count drifted from exact recount");
    }
  }

  probe.best_family = mask_elements(best_mask);
  probe.best_count = count_chains(Family(p, Bits(K.m, best_mask)), k);
  if (probe.best_count != best)
    throw std::logic_error("final recount disagrees with the search value");
  if (reference) probe.below_reference = probe.best_count < reference->at(a);
  return probe;
}

}  // namespace chainmin
