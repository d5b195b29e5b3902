#include "chainmin/chain_expectation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace chainmin {

namespace {

// ways_below[x] = saturated chains from rank 0 up to x,
// ways_above[x] = saturated chains from x up to rank n.
std::vector<Count> ways_below(const GradedPoset& p) {
  std::vector<Count> w(p.size(), 0);
  for (int r = 0; r <= p.n(); ++r) {
    for (int x : p.level(r)) {
      if (r == 0) {
        w[x] = 1;
        continue;
      }
      const Bits& lo = p.below(x);
      for (int y : p.level(r - 1))
        if (lo.test(y)) w[x] += w[y];
    }
  }
  return w;
}

std::vector<Count> ways_above(const GradedPoset& p) {
  std::vector<Count> w(p.size(), 0);
  for (int r = p.n(); r >= 0; --r) {
    for (int x : p.level(r)) {
      if (r == p.n()) {
        w[x] = 1;
        continue;
      }
      const Bits& hi = p.above(x);
      for (int y : p.level(r + 1))
        if (hi.test(y)) w[x] += w[y];
    }
  }
  return w;
}

// between[y] = saturated chains from x to y, for every y above x.
std::vector<Count> ways_between_from(const GradedPoset& p, int x) {
  std::vector<Count> g(p.size(), 0);
  g[x] = 1;
  for (int r = p.rank(x) + 1; r <= p.n(); ++r) {
    for (int y : p.level(r)) {
      if (!p.less(x, y) && y != x) continue;
      const Bits& lo = p.below(y);
      for (int w : p.level(r - 1))
        if (w == x ? lo.test(w) : (lo.test(w) && p.less(x, w))) g[y] += g[w];
    }
  }
  return g;
}

int pick_weighted(const std::vector<int>& cands, const std::vector<Count>& w,
                  Rng& rng) {
  Count total = 0;
  for (int x : cands) total += w[x];
  std::uint64_t t = to_u64(total, "sampling weight total");
  std::uint64_t r = uniform_below(rng, t);
  for (int x : cands) {
    std::uint64_t wx = to_u64(w[x], "sampling weight");
    if (r < wx) return x;
    r -= wx;
  }
  throw std::logic_error("weighted pick fell off the end");
}

}  // namespace

Count count_maximal_chains(const GradedPoset& p) {
  std::vector<Count> w = ways_below(p);
  Count total = 0;
  for (int x : p.level(p.n())) total += w[x];
  return total;
}

std::vector<MaximalChain> enumerate_maximal_chains(const GradedPoset& p,
                                                   std::uint64_t guard) {
  Count total = count_maximal_chains(p);
  if (total > guard)
    throw ResourceGuardError("maximal chain count " + total.str() +
                             " exceeds enumeration guard " +
                             std::to_string(guard));
  std::vector<MaximalChain> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int x) -> void {
    cur.push_back(x);
    if (p.rank(x) == p.n()) {
      out.push_back({cur});
    } else {
      const Bits& hi = p.above(x);
      for (int y : p.level(p.rank(x) + 1))
        if (hi.test(y)) self(self, y);
    }
    cur.pop_back();
  };
  for (int x : p.level(0)) dfs(dfs, x);
  return out;
}

MaximalChain sample_maximal_chain(const GradedPoset& p, Rng& rng) {
  std::vector<Count> wa = ways_above(p);
  MaximalChain c;
  int x = pick_weighted(p.level(0), wa, rng);
  c.elems.push_back(x);
  for (int r = 1; r <= p.n(); ++r) {
    std::vector<int> succ;
    const Bits& hi = p.above(x);
    for (int y : p.level(r))
      if (hi.test(y)) succ.push_back(y);
    x = pick_weighted(succ, wa, rng);
    c.elems.push_back(x);
  }
  return c;
}

Count count_maximal_chains_through(const GradedPoset& p,
                                   const std::vector<int>& chain) {
  if (chain.empty()) return count_maximal_chains(p);
  if (!is_chain(p, chain))
    throw std::invalid_argument("elements do not form a chain");
  std::vector<int> sorted = chain;
  std::sort(sorted.begin(), sorted.end(),
            [&](int a, int b) { return p.rank(a) < p.rank(b); });
  Count total = ways_below(p)[sorted.front()];
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    total *= ways_between_from(p, sorted[i])[sorted[i + 1]];
  total *= ways_above(p)[sorted.back()];
  return total;
}

ChainFunctional ChainFunctional::make(const GradedPoset& p, int k) {
  ChainFunctional fn;
  fn.poset = &p;
  fn.profile = measure_profile(p);
  fn.table = make_mk_table(fn.profile, k);
  fn.k = k;
  return fn;
}

Count ChainFunctional::value(const std::vector<int>& chain_elems) const {
  if (!is_chain(*poset, chain_elems))
    throw std::invalid_argument("f is only defined on chains");
  std::vector<int> ranks;
  ranks.reserve(chain_elems.size());
  for (int x : chain_elems) ranks.push_back(poset->rank(x));
  std::sort(ranks.begin(), ranks.end());
  Count wsize = 0;
  for (int r : ranks) wsize += profile.size(r);
  RankSet rs(ranks);
  return table.at(to_index(wsize, "weighted chain size")) -
         profile.ck_prime_empty(rs, k);
}

Count f_value(const ChainFunctional& fn, const std::vector<int>& chain_elems) {
  return fn.value(chain_elems);
}

ExpectationReport expectation_report(const Family& fam, int k,
                                     std::uint64_t guard) {
  const GradedPoset& p = *fam.poset;
  ChainFunctional fn = ChainFunctional::make(p, k);
  return expectation_report(fam, fn, enumerate_maximal_chains(p, guard));
}

ExpectationReport expectation_report(const Family& fam,
                                     const ChainFunctional& fn,
                                     const std::vector<MaximalChain>& chains) {
  const GradedPoset& p = *fam.poset;
  const int k = fn.k;

  ExpectationReport rep;
  rep.chain_count = Count(chains.size());
  rep.ck_family = count_chains(fam, k);
  rep.mk_of_size = fn.table.at(fam.size());

  Count sum_f = 0, sum_mk = 0, sum_ck = 0, sum_ws = 0;
  for (const MaximalChain& c : chains) {
    std::vector<int> ranks;
    Count wsize = 0;
    for (int x : c.elems)
      if (fam.members.test(x)) {
        ranks.push_back(p.rank(x));
        wsize += fn.profile.size(p.rank(x));
      }
    RankSet rs(ranks);
    Count mk_term = fn.table.at(to_index(wsize, "weighted chain size"));
    Count ck_term = fn.profile.ck_prime_empty(rs, k);
    sum_f += mk_term - ck_term;
    sum_mk += mk_term;
    sum_ck += ck_term;
    sum_ws += wsize;
  }

  const Count& N = rep.chain_count;
  rep.e_f = Rat(sum_f, N);
  rep.e_mk_term = Rat(sum_mk, N);
  rep.e_ck_term = Rat(sum_ck, N);
  rep.e_weighted_size = Rat(sum_ws, N);

  rep.e_f_nonpositive = sum_f <= 0;
  rep.identity_ck = sum_ck == rep.ck_family * N;
  rep.identity_size = sum_ws == Count(fam.size()) * N;
  rep.jensen_ok = rep.mk_of_size * N <= sum_mk;
  rep.conclusion_ok = rep.ck_family >= rep.mk_of_size;

  if (!rep.pass()) {
    std::ostringstream os;
    os << "expectation audit failed on " << p.descriptor() << " k=" << k
       << " |A|=" << fam.size() << ":";
    if (!rep.e_f_nonpositive) os << " E[f] > 0;";
    if (!rep.identity_ck) os << " chain-subchain identity broke;";
    if (!rep.identity_size) os << " size identity broke;";
    if (!rep.jensen_ok) os << " convexity step broke;";
    if (!rep.conclusion_ok) os << " final bound broke;";
    rep.witness = os.str();
  }
  return rep;
}

McExpectation expectation_probe_mc(const Family& fam, int k,
                                   std::uint64_t samples, std::uint64_t seed) {
  const GradedPoset& p = *fam.poset;
  ChainFunctional fn = ChainFunctional::make(p, k);
  Rng rng(seed);
  Count sum_f = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    MaximalChain c = sample_maximal_chain(p, rng);
    std::vector<int> members;
    for (int x : c.elems)
      if (fam.members.test(x)) members.push_back(x);
    sum_f += fn.value(members);
  }
  McExpectation mc;
  mc.samples = samples;
  mc.sample_e_f = samples ? Rat(sum_f, Count(samples)) : Rat(0);
  mc.exact_e_f = expectation_report(fam, k).e_f;
  mc.e_f_nonpositive_sampled = sum_f <= 0;
  return mc;
}

TupleIdentityReport chain_probability_identities(const GradedPoset& p, int k,
                                                 std::uint64_t budget,
                                                 std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("tuple identity needs k >= 1");
  TupleIdentityReport rep;
  LevelProfile prof = measure_profile(p);
  std::vector<Count> wb = ways_below(p);
  std::vector<Count> wa = ways_above(p);
  Count N = 0;
  for (int x : p.level(p.n())) N += wb[x];

  auto fail = [&](const std::vector<int>& tuple) {
    std::ostringstream os;
    os << "tuple {";
    for (std::size_t i = 0; i < tuple.size(); ++i)
      os << (i ? "," : "") << tuple[i];
    os << "} on " << p.descriptor()
       << " violates the chain probability identity";
    rep.witness = os.str();
    rep.pass = false;
  };

  // Pr(tuple in C) * (chains spanning its ranks) = 1, cleared of denominators.
  auto check_tuple = [&](const std::vector<int>& tuple,
                         const std::vector<std::vector<Count>>& between) {
    Count through = wb[tuple.front()];
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
      through *= between[tuple[i]][tuple[i + 1]];
    through *= wa[tuple.back()];
    std::vector<int> ranks;
    for (int x : tuple) ranks.push_back(p.rank(x));
    bool ok = through * prof.chains_spanning(RankSet(ranks)) == N;
    if (!ok) fail(tuple);
    ++rep.tuples_checked;
    return ok;
  };

  if (k == 1) {
    rep.pass = true;
    rep.exhaustive = true;
    for (int x = 0; x < static_cast<int>(p.size()); ++x) {
      ++rep.tuples_checked;
      if (wb[x] * wa[x] * prof.size(p.rank(x)) != N) {
        std::vector<int> t{x};
        fail(t);
        return rep;
      }
    }
    return rep;
  }

  std::vector<std::vector<Count>> between(p.size());
  for (int x = 0; x < p.size(); ++x) between[x] = ways_between_from(p, x);

  Count tuple_count = count_chains(Family(p, p.full_mask()), k);
  rep.pass = true;
  if (tuple_count <= budget) {
    rep.exhaustive = true;
    std::vector<int> order;  // elements in rank order
    for (int r = 0; r <= p.n(); ++r)
      for (int x : p.level(r)) order.push_back(x);
    std::vector<int> cur;
    auto dfs = [&](auto&& self, std::size_t start) -> bool {
      if (static_cast<int>(cur.size()) == k) return check_tuple(cur, between);
      for (std::size_t i = start; i < order.size(); ++i) {
        int y = order[i];
        if (!cur.empty() && !p.less(cur.back(), y)) continue;
        cur.push_back(y);
        if (!self(self, i + 1)) return false;
        cur.pop_back();
      }
      return true;
    };
    dfs(dfs, 0);
    return rep;
  }

  if (k > p.n() + 1) {  // no k-tuples exist at all
    rep.exhaustive = true;
    return rep;
  }
  Rng rng(seed);
  for (std::uint64_t s = 0; s < budget && rep.pass; ++s) {
    MaximalChain c = sample_maximal_chain(p, rng);
    // random k-subset of the chain's ranks
    std::vector<int> idx(static_cast<std::size_t>(p.n()) + 1);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
      std::uint64_t j =
          i + uniform_below(rng, static_cast<std::uint64_t>(idx.size()) - i);
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    std::vector<int> tuple;
    for (int i : idx) tuple.push_back(c.elems[i]);
    check_tuple(tuple, between);
  }
  return rep;
}

EqualityCaseReport equality_case_check(const Family& fam, int k,
                                       std::uint64_t guard) {
  const GradedPoset& p = *fam.poset;
  ChainFunctional fn = ChainFunctional::make(p, k);
  EqualityCaseReport rep;
  Count ck = count_chains(fam, k);
  Count mk = fn.table.at(fam.size());
  rep.applicable = (ck == mk) && mk > 0;
  if (!rep.applicable) {
    rep.pass = true;  // nothing to certify
    return rep;
  }

  std::vector<MaximalChain> chains = enumerate_maximal_chains(p, guard);
  std::size_t smin = p.size() + 1, smax = 0;
  for (const MaximalChain& c : chains) {
    std::vector<int> ranks;
    for (int x : c.elems)
      if (fam.members.test(x)) ranks.push_back(p.rank(x));
    RankSet rs(ranks);
    if (!is_centred_rank_set(p.n(), rs)) {
      rep.pass = false;
      rep.witness = "a maximal chain meets the family in rank set " +
                    rs.str() + ", which is not centred";
      return rep;
    }
    smin = std::min(smin, ranks.size());
    smax = std::max(smax, ranks.size());
  }
  if (smax > smin + 1) {
    rep.pass = false;
    rep.witness = "intersection sizes with maximal chains span " +
                  std::to_string(smin) + ".." + std::to_string(smax) +
                  ", more than two consecutive values";
    return rep;
  }
  rep.pass = true;
  rep.ell = static_cast<int>(smin);
  return rep;
}

void IntegerDistribution::validate() const {
  if (pmf.empty())
    throw std::invalid_argument("distribution needs nonempty support");
  Rat total = 0;
  for (std::size_t i = 0; i < pmf.size(); ++i) {
    if (i && pmf[i].first <= pmf[i - 1].first)
      throw std::invalid_argument("support must be strictly increasing");
    if (pmf[i].second <= 0)
      throw std::invalid_argument("probabilities must be positive");
    total += pmf[i].second;
  }
  if (total != 1) throw std::invalid_argument("probabilities must sum to 1");
}

Rat IntegerDistribution::mean() const {
  Rat m = 0;
  for (const auto& [v, pr] : pmf) m += Rat(v) * pr;
  return m;
}

JensenReport discrete_jensen_check(long long a,
                                   const std::vector<Count>& f_values,
                                   const IntegerDistribution& dist) {
  if (f_values.size() < 1)
    throw std::invalid_argument("empty function table");
  for (std::size_t t = 2; t < f_values.size(); ++t)
    if (f_values[t] - f_values[t - 1] < f_values[t - 1] - f_values[t - 2])
      throw std::invalid_argument("function table is not convex");
  dist.validate();
  long long b = a + static_cast<long long>(f_values.size()) - 1;
  if (dist.pmf.front().first < a || dist.pmf.back().first > b)
    throw std::invalid_argument("support leaves the function table");

  Rat mean = dist.mean();
  if (boost::multiprecision::denominator(mean) != 1)
    throw std::invalid_argument("mean is not an integer");
  long long m = static_cast<long long>(boost::multiprecision::numerator(mean));

  JensenReport rep;
  rep.e_f = 0;
  for (const auto& [v, pr] : dist.pmf)
    rep.e_f += pr * Rat(f_values[static_cast<std::size_t>(v - a)]);
  rep.f_at_mean = f_values[static_cast<std::size_t>(m - a)];
  rep.holds = rep.e_f >= Rat(rep.f_at_mean);
  rep.strict = rep.e_f > Rat(rep.f_at_mean);
  rep.c = dist.pmf.front().first;
  rep.d = dist.pmf.back().first;
  rep.window_ok = true;
  if (rep.holds && !rep.strict && rep.d > rep.c) {
    // equality forces a constant slope across the whole support window
    Count step = f_values[static_cast<std::size_t>(rep.c + 1 - a)] -
                 f_values[static_cast<std::size_t>(rep.c - a)];
    for (long long v = rep.c + 1; v < rep.d; ++v) {
      Count s = f_values[static_cast<std::size_t>(v + 1 - a)] -
                f_values[static_cast<std::size_t>(v - a)];
      if (s != step) {
        rep.window_ok = false;
        rep.witness = "equality without a constant-slope window at value " +
                      std::to_string(v + 1);
        break;
      }
    }
  }
  if (!rep.holds)
    rep.witness = "E[f(X)] < f(E[X]) for a convex table";
  return rep;
}

}  // namespace chainmin
