#include "chainmin/compression.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chainmin/centred.hpp"
#include "chainmin/poset_checks.hpp"

namespace chainmin {

namespace {

Count integral_part(const Rat& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::invalid_argument(std::string(what) + " is not integral");
  return boost::multiprecision::numerator(r);
}

// fn(J) for every size-r subset J of items, in lexicographic index order
template <class F>
void for_each_subset(const std::vector<int>& items, int r, F&& fn) {
  int m = static_cast<int>(items.size());
  if (r < 0 || r > m) return;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> J(r);
  for (;;) {
    for (int t = 0; t < r; ++t) J[t] = items[idx[t]];
    fn(J);
    int t = r - 1;
    while (t >= 0 && idx[t] == m - r + t) --t;
    if (t < 0) return;
    ++idx[t];
    for (int s = t + 1; s < r; ++s) idx[s] = idx[s - 1] + 1;
  }
}

}  // namespace

void RankDistribution::validate() const {
  if (p.empty() || sizes.size() != p.size())
    throw std::invalid_argument("distribution needs one fraction per rank");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (sizes[i] <= 0) throw std::invalid_argument("level sizes must be positive");
    if (p[i] < 0 || p[i] > 1)
      throw std::invalid_argument("occupancy fractions must lie in [0,1]");
    if (boost::multiprecision::denominator(p[i] * Rat(sizes[i])) != 1)
      throw std::invalid_argument("occupancy p_" + std::to_string(i) +
                                  " does not give an integer element count");
  }
}

Count RankDistribution::mass() const {
  Rat total = 0;
  for (std::size_t i = 0; i < p.size(); ++i) total += p[i] * Rat(sizes[i]);
  return integral_part(total, "total mass");
}

Count RankDistribution::h() const {
  Rat total = 0;
  int nn = n();
  for (int i = 0; i <= nn; ++i) {
    int w = 2 * i - nn;
    total += Rat(w < 0 ? -w : w) * p[i] * Rat(sizes[i]);
  }
  return integral_part(total, "distance weight");
}

RankDistribution RankDistribution::reversed() const {
  RankDistribution r = *this;
  std::reverse(r.p.begin(), r.p.end());
  return r;
}

RankDistribution RankDistribution::from_rank_set(const LevelProfile& prof,
                                                 const RankSet& I) {
  RankDistribution d;
  d.sizes = prof.sizes;
  d.p.assign(prof.sizes.size(), Rat(0));
  for (int r : I.values()) {
    if (r > prof.n)
      throw std::invalid_argument("rank " + std::to_string(r) +
                                  " exceeds the profile height");
    d.p[r] = 1;
  }
  d.validate();
  return d;
}

RankDistribution RankDistribution::from_counts(const std::vector<Count>& sizes,
                                               const std::vector<Count>& counts) {
  if (counts.size() != sizes.size())
    throw std::invalid_argument("need one count per rank");
  RankDistribution d;
  d.sizes = sizes;
  d.p.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i)
    d.p.push_back(Rat(counts[i], sizes[i]));
  d.validate();
  return d;
}

CompressionStep phi_step(const LevelProfile& prof, const RankDistribution& d) {
  d.validate();
  if (d.sizes != prof.sizes)
    throw std::invalid_argument("distribution sizes disagree with the profile");
  CompressionStep st;
  st.input = d;
  const int n = d.n();

  int i = -1;
  for (int t = 0; 2 * t <= n; ++t)
    if (std::max(d.p[t], d.p[n - t]) > 0) {
      i = t;
      break;
    }
  if (i == -1) {  // empty distribution
    st.fixpoint = true;
    st.normalized = d;
    st.output = d;
    return st;
  }
  st.i = i;

  RankDistribution q = d;
  if (q.p[i] == 0) {
    q = d.reversed();
    st.reversed = true;
  }
  st.normalized = q;

  int ip = -1;
  for (int t = i + 1; t <= n; ++t)
    if (q.p[t] != 1) {
      ip = t;
      break;
    }
  if (ip == -1 || ip == n - i + 1 || (ip == n - i && q.p[ip] == 0)) {
    st.i_prime = ip;
    st.fixpoint = true;
    st.output = d;
    return st;
  }
  st.i_prime = ip;

  if (ip == n - i && q.p[i] > q.p[n - i]) {
    // balance the boundary pair before transferring; delta may come out 0
    q = q.reversed();
    st.reversed = true;
    st.normalized = q;
  }

  Rat room = (Rat(1) - q.p[ip]) * Rat(q.sizes[ip]) / Rat(q.sizes[i]);
  st.delta = std::min(q.p[i], room);
  st.delta_prime = st.delta * Rat(q.sizes[i]) / Rat(q.sizes[ip]);

  st.output = q;
  st.output.p[i] -= st.delta;
  st.output.p[ip] += st.delta_prime;
  st.output.validate();
  if (!(st.output.p[i] == 0 || st.output.p[ip] == 1))
    throw std::logic_error("transfer neither drained the source nor filled the target");
  if (st.output.mass() != d.mass())
    throw std::logic_error("transfer changed the total mass");
  return st;
}

Rat w_k(const LevelProfile& prof, const RankDistribution& d, int k) {
  if (k < 1) throw std::invalid_argument("w_k needs k >= 1");
  if (d.sizes != prof.sizes)
    throw std::invalid_argument("distribution sizes disagree with the profile");
  std::vector<int> support;
  for (int t = 0; t <= d.n(); ++t)
    if (d.p[t] > 0) support.push_back(t);
  Rat total = 0;
  for_each_subset(support, k, [&](const std::vector<int>& S) {
    Rat prod = Rat(prof.chains_spanning(RankSet(S)));
    for (int j : S) prod *= d.p[j];
    total += prod;
  });
  return total;
}

WkChange wk_change_decomposition(const LevelProfile& prof,
                                 const CompressionStep& step, int k) {
  if (step.fixpoint)
    throw std::invalid_argument("fixpoint step has no transfer to decompose");
  if (k < 1) throw std::invalid_argument("decomposition needs k >= 1");
  const RankDistribution& q = step.normalized;
  const int n = q.n();
  const int i = step.i, ip = step.i_prime;

  std::vector<int> avail;
  for (int t = 0; t <= n; ++t)
    if (t != i && t != ip) avail.push_back(t);

  WkChange ch;
  ch.sum1 = ch.sum2 = ch.sum3 = 0;
  ch.min_pair_term = 0;

  for_each_subset(avail, k - 1, [&](const std::vector<int>& J) {
    Rat prod = 1;
    for (int j : J) prod *= q.p[j];
    if (prod == 0) return;
    std::vector<int> with_i = J;
    with_i.push_back(i);
    std::vector<int> with_ip = J;
    with_ip.push_back(ip);
    ch.sum1 +=
        Rat(prof.ck_prime_empty(RankSet(with_i), k)) * step.delta * prod;
    ch.sum2 +=
        Rat(prof.ck_prime_empty(RankSet(with_ip), k)) * step.delta_prime * prod;
  });

  if (k >= 2) {
    Rat pair_factor = q.p[i] * q.p[ip] -
                      (q.p[i] - step.delta) * (q.p[ip] + step.delta_prime);
    bool first = true;
    for_each_subset(avail, k - 2, [&](const std::vector<int>& J) {
      Rat prod = 1;
      for (int j : J) prod *= q.p[j];
      std::vector<int> with_both = J;
      with_both.push_back(i);
      with_both.push_back(ip);
      Rat term =
          Rat(prof.ck_prime_empty(RankSet(with_both), k)) * pair_factor * prod;
      ch.sum3 += term;
      if (first || term < ch.min_pair_term) ch.min_pair_term = term;
      first = false;
    });
  }

  Rat drop = w_k(prof, step.input, k) - w_k(prof, step.output, k);
  ch.total_matches = (ch.total() == drop);
  return ch;
}

Trajectory compress_to_fixpoint(const LevelProfile& prof,
                                const RankDistribution& start, int k) {
  Trajectory traj;
  traj.k = k;
  RankDistribution cur = start;
  traj.wk_values.push_back(w_k(prof, cur, k));
  traj.h_values.push_back(cur.h());

  const Count cap = start.h() + start.n() + 4;
  Count applied = 0;
  for (;;) {
    CompressionStep st = phi_step(prof, cur);
    if (st.fixpoint) {
      traj.endpoint = cur;
      break;
    }
    if (++applied > cap)
      throw std::logic_error("compression exceeded its termination bound");
    cur = st.output;
    Rat w = w_k(prof, cur, k);
    traj.wk_strict.push_back(w < traj.wk_values.back());
    traj.wk_values.push_back(w);
    traj.h_values.push_back(cur.h());
    traj.steps.push_back(std::move(st));
  }

  std::ostringstream witness;
  traj.p1_ok = true;
  for (std::size_t t = 0; t + 1 < traj.wk_values.size(); ++t)
    if (traj.wk_values[t] < traj.wk_values[t + 1]) {
      traj.p1_ok = false;
      witness << "w_k increased across step " << t + 1 << "; ";
    }

  const int n = start.n();
  for (bool plus : {true, false}) {
    if (traj.endpoint_form_ok) break;
    CentredOrdering mu = plus ? mu_plus(n) : mu_minus(n);
    for (int ell = 1; ell <= n + 1 && !traj.endpoint_form_ok; ++ell) {
      bool ok = true;
      for (int m = 1; m <= n + 1 && ok; ++m) {
        if (m < ell && traj.endpoint.p[mu.at(m)] != 1) ok = false;
        if (m > ell && traj.endpoint.p[mu.at(m)] != 0) ok = false;
      }
      if (ok) {
        traj.endpoint_form_ok = true;
        traj.endpoint_ell = ell;
        traj.endpoint_mu_plus = plus;
      }
    }
  }
  if (!traj.endpoint_form_ok)
    witness << "endpoint is not a centred-prefix distribution; ";

  traj.endpoint_matches_mk =
      traj.wk_values.back() == Rat(mk_value(prof, k, start.mass()));
  if (!traj.endpoint_matches_mk)
    witness << "endpoint weight differs from the minimum table; ";

  traj.witness = witness.str();
  return traj;
}

RankDistribution random_distribution(const LevelProfile& prof, Rng& rng) {
  std::vector<Count> counts;
  counts.reserve(prof.sizes.size());
  for (const Count& s : prof.sizes)
    counts.push_back(uniform_below(rng, to_u64(s, "level size") + 1));
  return RankDistribution::from_counts(prof.sizes, counts);
}

RankSet sigma_reflect(const RankSet& J, int i, int i_prime) {
  std::vector<int> out;
  for (int j : J.values())
    out.push_back(j > i && j < i_prime ? i + i_prime - j : j);
  return RankSet(out);
}

DeltaCkComparison delta_ck_comparison(const LevelProfile& prof, int k, int i,
                                      int i_prime, const RankSet& J,
                                      const Rat& delta) {
  const int n = prof.n;
  if (k < 1) throw std::invalid_argument("comparison needs k >= 1");
  if (!(0 <= i && i < i_prime && i_prime <= n - i))
    throw std::invalid_argument("need 0 <= i < i' <= n-i");
  if (static_cast<int>(J.size()) != k - 1)
    throw std::invalid_argument("J must have k-1 ranks");
  for (int j : J.values())
    if (j <= i || j > n - i - 1 || j == i_prime)
      throw std::invalid_argument(
          "J must lie in [i+1, n-i-1] and avoid the endpoints");
  if (delta <= 0) throw std::invalid_argument("delta must be positive");

  std::vector<int> with_i = J.values();
  with_i.push_back(i);
  RankSet sj = sigma_reflect(J, i, i_prime);
  std::vector<int> with_ip = sj.values();
  with_ip.push_back(i_prime);

  Rat delta_prime = delta * Rat(prof.sizes[i]) / Rat(prof.sizes[i_prime]);

  DeltaCkComparison cmp;
  cmp.lhs = delta * Rat(prof.ck_prime_empty(RankSet(with_i), k));
  cmp.rhs = delta_prime * Rat(prof.ck_prime_empty(RankSet(with_ip), k));
  cmp.holds = cmp.lhs >= cmp.rhs;
  cmp.strict = cmp.lhs > cmp.rhs;
  cmp.strict_expected =
      check_descending(prof).kind == Descent::StrictlyDescending &&
      i_prime < n - i && k >= 2;
  return cmp;
}

}  // namespace chainmin
