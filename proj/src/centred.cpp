#include "chainmin/centred.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainmin {

namespace {

int floordiv(int a, int b) {
  int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceildiv(int a, int b) { return -floordiv(-a, b); }

// twice the distance of rank r from the middle
int dist2(int n, int r) { return r * 2 >= n ? r * 2 - n : n - r * 2; }

}  // namespace

int CentredOrdering::at(int ell) const {
  if (ell < 1 || ell > static_cast<int>(mu.size()))
    throw std::out_of_range("CentredOrdering::at: position out of range");
  return mu[ell - 1];
}

RankSet CentredOrdering::prefix(int ell) const {
  if (ell < 0 || ell > static_cast<int>(mu.size()))
    throw std::out_of_range("CentredOrdering::prefix: length out of range");
  return RankSet(std::vector<int>(mu.begin(), mu.begin() + ell));
}

void CentredOrdering::validate() const {
  if (static_cast<int>(mu.size()) != n + 1)
    throw std::invalid_argument("CentredOrdering: length must be n+1");
  std::vector<bool> seen(n + 1, false);
  for (int r : mu) {
    if (r < 0 || r > n || seen[r])
      throw std::invalid_argument("CentredOrdering: not a permutation of 0..n");
    seen[r] = true;
  }
  for (std::size_t l = 1; l < mu.size(); ++l)
    if (dist2(n, mu[l]) < dist2(n, mu[l - 1]))
      throw std::invalid_argument(
          "CentredOrdering: distance from the middle decreases at position " +
          std::to_string(l + 1));
}

CentredOrdering mu_minus(int n) {
  if (n < 0) throw std::invalid_argument("mu_minus: negative n");
  CentredOrdering ord;
  ord.n = n;
  ord.mu.resize(n + 1);
  for (int ell = 1; ell <= n + 1; ++ell) {
    const int num = n + (ell % 2 == 0 ? ell : -ell);
    ord.mu[ell - 1] = n % 2 ? floordiv(num, 2) : ceildiv(num, 2);
  }
  ord.validate();
  return ord;
}

CentredOrdering mu_plus(int n) {
  CentredOrdering ord = mu_minus(n);
  for (int& r : ord.mu) r = n - r;
  ord.validate();
  return ord;
}

std::vector<RankSet> centred_rank_sets(int n, int ell) {
  if (ell < 1 || ell > n + 1)
    throw std::invalid_argument("centred_rank_sets: need 1 <= ell <= n+1");
  const RankSet lo = mu_minus(n).prefix(ell);
  const RankSet hi = mu_plus(n).prefix(ell);
  std::vector<RankSet> out{lo};
  if (!(hi == lo)) out.push_back(hi);
  return out;
}

bool is_centred_rank_set(int n, const RankSet& I) {
  if (I.empty()) return true;
  if (I.size() > n + 1) return false;
  for (const RankSet& S : centred_rank_sets(n, I.size()))
    if (S == I) return true;
  return false;
}

Count a_ell(const std::vector<Count>& level_sizes, int ell) {
  const int n = static_cast<int>(level_sizes.size()) - 1;
  if (ell < 1 || ell > n + 1)
    throw std::invalid_argument("a_ell: need 1 <= ell <= n+1");
  Count lo = 0, hi = 0;
  const CentredOrdering down = mu_minus(n), up = mu_plus(n);
  for (int l = 1; l <= ell; ++l) {
    lo += level_sizes[down.at(l)];
    hi += level_sizes[up.at(l)];
  }
  if (lo != hi)
    throw std::logic_error("a_ell: the two canonical orderings disagree (" +
                           lo.str() + " vs " + hi.str() +
                           "); level sizes are not palindromic");
  return lo;
}

Count a_ell(const LevelProfile& prof, int ell) { return a_ell(prof.sizes, ell); }

Count a_ell(const GradedPoset& p, int ell) { return a_ell(p.level_sizes(), ell); }

ExtremalPrefix build_X(const GradedPoset& p, std::size_t a,
                       const CentredOrdering& ordering,
                       const std::vector<int>* tie_order) {
  ordering.validate();
  if (ordering.n != p.n())
    throw std::invalid_argument("build_X: ordering height mismatch");
  if (a > static_cast<std::size_t>(p.size()))
    throw std::invalid_argument("build_X: a exceeds |P|");

  std::vector<int> listing;
  if (tie_order) {
    if (tie_order->size() != static_cast<std::size_t>(p.size()))
      throw std::invalid_argument("build_X: tie order must list every element");
    std::vector<bool> seen(p.size(), false);
    for (int x : *tie_order) {
      if (x < 0 || x >= p.size() || seen[x])
        throw std::invalid_argument("build_X: tie order is not a permutation");
      seen[x] = true;
    }
    listing = *tie_order;
  } else {
    listing.resize(p.size());
    for (int x = 0; x < p.size(); ++x) listing[x] = x;
  }

  ExtremalPrefix out{ordering, a, Family(p), 0};
  std::size_t taken = 0;
  for (int l = 1; l <= p.n() + 1 && taken < a; ++l) {
    const int r = ordering.at(l);
    for (int x : listing) {
      if (p.rank(x) != r) continue;
      out.family.members.set(x);
      if (++taken == a) break;
    }
    out.boundary_level = l;
  }
  return out;
}

const Count& MkTable::at(std::size_t a) const {
  if (a >= m.size()) throw std::out_of_range("MkTable::at: a out of range");
  return m[a];
}

MkTable make_mk_table(const LevelProfile& prof, int k) {
  if (k < 1) throw std::invalid_argument("make_mk_table: k must be >= 1");
  prof.validate();
  const Count total = prof.total_size();
  if (total > 1000000)
    throw ResourceGuardError("make_mk_table: table of " + total.str() +
                             " entries exceeds the guard");
  const std::size_t N = to_index(total, "make_mk_table");
  const CentredOrdering ord = mu_minus(prof.n);

  MkTable t;
  t.k = k;
  t.n = prof.n;
  t.m.assign(N + 1, 0);
  t.breaks.assign(prof.n + 2, 0);

  std::size_t a = 0;
  Count prev_break = 0;
  for (int l = 1; l <= prof.n + 1; ++l) {
    const RankSet filled = ord.prefix(l - 1);
    const Count base = prof.ck_prime_empty(filled, k);
    const Count slope = prof.ck_prime_single(ord.at(l), filled, k);
    const std::size_t width =
        to_index(prof.size(ord.at(l)), "make_mk_table level width");
    for (std::size_t step = 1; step <= width; ++step) {
      ++a;
      t.m[a] = base + Count(step) * slope;
    }
    prev_break += prof.size(ord.at(l));
    t.breaks[l] = prev_break;
    if (a_ell(prof, l) != prev_break)
      throw std::logic_error("make_mk_table: breakpoint mismatch");
  }
  return t;
}

Count mk_value(const LevelProfile& prof, int k, const Count& a) {
  if (k < 1) throw std::invalid_argument("mk_value: k must be >= 1");
  if (a < 0 || a > prof.total_size())
    throw std::invalid_argument("mk_value: a out of range");
  if (a == 0) return 0;
  const CentredOrdering ord = mu_minus(prof.n);
  Count prev = 0;
  for (int l = 1; l <= prof.n + 1; ++l) {
    const Count next = prev + prof.size(ord.at(l));
    if (a <= next) {
      const RankSet filled = ord.prefix(l - 1);
      return prof.ck_prime_empty(filled, k) +
             (a - prev) * prof.ck_prime_single(ord.at(l), filled, k);
    }
    prev = next;
  }
  throw std::logic_error("mk_value: boundary level not found");
}

std::vector<Count> delta_mk(const MkTable& t) {
  std::vector<Count> d;
  d.reserve(t.m.size() - 1);
  for (std::size_t a = 1; a < t.m.size(); ++a) d.push_back(t.m[a] - t.m[a - 1]);
  return d;
}

ConvexityReport convexity_certificate(const MkTable& t) {
  ConvexityReport rep;
  const std::vector<Count> d = delta_mk(t);

  rep.nondecreasing = true;
  for (std::size_t a = 1; a < d.size(); ++a) {
    if (d[a] < d[a - 1]) {
      rep.nondecreasing = false;
      rep.witness = "Delta decreases between a=" + std::to_string(a) + " and " +
                    std::to_string(a + 1);
      return rep;
    }
    if (d[a] > d[a - 1]) rep.change_positions.push_back(a);  // jump at m(a)-index a
  }

  if (t.k >= 2)
    for (int l = std::max(t.k - 1, 1); l <= t.n; ++l)
      rep.required_jumps.push_back(
          to_index(t.breaks[l], "convexity_certificate"));

  rep.strict_jumps_ok = true;
  for (std::size_t al : rep.required_jumps) {
    // strict jump at a_l: Delta(a_l) < Delta(a_l + 1)
    if (al < 1 || al >= d.size() || !(d[al - 1] < d[al])) {
      rep.strict_jumps_ok = false;
      rep.witness = "no strict jump at breakpoint a=" + std::to_string(al);
      return rep;
    }
  }
  return rep;
}

CentredReport is_centred(const Family& fam) {
  const GradedPoset& p = *fam.poset;
  const int n = p.n();
  CentredReport rep;

  std::vector<std::size_t> cnt(n + 1, 0);
  for (int r = 0; r <= n; ++r) cnt[r] = (fam.members & p.level_mask(r)).count();

  // (i): occupancy must be downward closed in distance from the middle
  for (int r = 0; r <= n; ++r) {
    if (cnt[r] == 0) continue;
    for (int s = 0; s <= n; ++s) {
      if (dist2(n, s) < dist2(n, r) && cnt[s] < p.level(s).size()) {
        const Bits in = fam.members & p.level_mask(r);
        const Bits out = ~fam.members & p.level_mask(s);
        rep.witness_x = static_cast<int>(in.find_first());
        rep.witness_y = static_cast<int>(out.find_first());
        rep.violation = "rank " + std::to_string(r) +
                        " is occupied but rank " + std::to_string(s) +
                        " (closer to the middle) is not full";
        return rep;
      }
    }
  }

  // (ii): at mirror levels that are both partially filled, comparable member
  // pairs and comparable non-member pairs cannot coexist
  for (int i = 0; 2 * i < n; ++i) {
    const std::size_t ti = p.level(i).size(), tn = p.level(n - i).size();
    if (cnt[i] == 0 || cnt[i] == ti || cnt[n - i] == 0 || cnt[n - i] == tn)
      continue;
    int mem_x = -1, mem_y = -1, non_x = -1, non_y = -1;
    const Bits lo_in = fam.members & p.level_mask(i);
    const Bits hi_in = fam.members & p.level_mask(n - i);
    for (std::size_t x = lo_in.find_first(); x != Bits::npos && mem_x < 0;
         x = lo_in.find_next(x)) {
      const Bits up = p.above(static_cast<int>(x)) & hi_in;
      if (up.any()) {
        mem_x = static_cast<int>(x);
        mem_y = static_cast<int>(up.find_first());
      }
    }
    if (mem_x < 0) continue;
    const Bits lo_out = ~fam.members & p.level_mask(i);
    const Bits hi_out = ~fam.members & p.level_mask(n - i);
    for (std::size_t x = lo_out.find_first(); x != Bits::npos && non_x < 0;
         x = lo_out.find_next(x)) {
      const Bits up = p.above(static_cast<int>(x)) & hi_out;
      if (up.any()) {
        non_x = static_cast<int>(x);
        non_y = static_cast<int>(up.find_first());
      }
    }
    if (non_x >= 0) {
      rep.witness_x = mem_x;
      rep.witness_y = mem_y;
      rep.violation =
          "levels " + std::to_string(i) + " and " + std::to_string(n - i) +
          " are both partially filled with a comparable member pair (" +
          std::to_string(mem_x) + "," + std::to_string(mem_y) +
          ") and a comparable non-member pair (" + std::to_string(non_x) + "," +
          std::to_string(non_y) + ")";
      return rep;
    }
  }

  rep.centred = true;
  return rep;
}

}  // namespace chainmin
