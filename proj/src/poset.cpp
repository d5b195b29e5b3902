#include "chainmin/poset.hpp"

#include <algorithm>
#include <numeric>

namespace chainmin {

// ---------------------------------------------------------------- RankSet --

RankSet::RankSet(std::initializer_list<int> ranks) : ranks_(ranks) { normalize(); }

RankSet::RankSet(std::vector<int> ranks) : ranks_(std::move(ranks)) { normalize(); }

void RankSet::normalize() {
  std::sort(ranks_.begin(), ranks_.end());
  ranks_.erase(std::unique(ranks_.begin(), ranks_.end()), ranks_.end());
  if (!ranks_.empty() && ranks_.front() < 0)
    throw std::invalid_argument("RankSet: negative rank");
}

RankSet RankSet::from_mask(std::uint64_t mask) {
  std::vector<int> v;
  for (int r = 0; r < 64; ++r)
    if (mask >> r & 1) v.push_back(r);
  return RankSet(std::move(v));
}

bool RankSet::contains(int r) const {
  return std::binary_search(ranks_.begin(), ranks_.end(), r);
}

int RankSet::min() const {
  if (ranks_.empty()) throw std::logic_error("RankSet::min on empty set");
  return ranks_.front();
}

int RankSet::max() const {
  if (ranks_.empty()) throw std::logic_error("RankSet::max on empty set");
  return ranks_.back();
}

std::uint64_t RankSet::mask() const {
  std::uint64_t m = 0;
  for (int r : ranks_) {
    if (r >= 64) throw std::overflow_error("RankSet::mask: rank >= 64");
    m |= std::uint64_t(1) << r;
  }
  return m;
}

RankSet RankSet::reflected(int n) const {
  std::vector<int> v;
  v.reserve(ranks_.size());
  for (int r : ranks_) {
    if (r > n) throw std::invalid_argument("RankSet::reflected: rank above n");
    v.push_back(n - r);
  }
  return RankSet(std::move(v));
}

RankSet RankSet::without(int r) const {
  std::vector<int> v;
  v.reserve(ranks_.size());
  for (int x : ranks_)
    if (x != r) v.push_back(x);
  return RankSet(std::move(v));
}

RankSet RankSet::with(int r) const {
  std::vector<int> v = ranks_;
  v.push_back(r);
  return RankSet(std::move(v));
}

bool RankSet::disjoint(const RankSet& other) const {
  for (int r : ranks_)
    if (other.contains(r)) return false;
  return true;
}

bool RankSet::subset_of(const RankSet& other) const {
  for (int r : ranks_)
    if (!other.contains(r)) return false;
  return true;
}

std::string RankSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ranks_[i]);
  }
  return s + "}";
}

// ------------------------------------------------------------- GradedPoset --

GradedPoset::GradedPoset(int n, std::vector<int> ranks, std::vector<Bits> above,
                         std::string descriptor)
    : n_(n),
      rank_(std::move(ranks)),
      above_(std::move(above)),
      descriptor_(std::move(descriptor)) {
  const std::size_t m = rank_.size();
  if (n_ < 0) throw std::invalid_argument("GradedPoset: negative n");
  if (above_.size() != m)
    throw std::invalid_argument("GradedPoset: ranks/above size mismatch");
  for (const Bits& b : above_)
    if (b.size() != m)
      throw std::invalid_argument("GradedPoset: above bitset size mismatch");

  below_.assign(m, Bits(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = above_[x].find_first(); y != Bits::npos;
         y = above_[x].find_next(y))
      below_[y].set(x);

  levels_.assign(n_ + 1, {});
  level_masks_.assign(n_ + 1, Bits(m));
  for (std::size_t x = 0; x < m; ++x) {
    if (rank_[x] < 0 || rank_[x] > n_)
      throw std::invalid_argument("GradedPoset: rank out of range");
    levels_[rank_[x]].push_back(static_cast<int>(x));
    level_masks_[rank_[x]].set(x);
  }
  validate();
}

void GradedPoset::validate() const {
  const int m = size();
  for (int r = 0; r <= n_; ++r)
    if (levels_[r].empty())
      throw std::invalid_argument("GradedPoset: empty rank level " +
                                  std::to_string(r));
  for (int x = 0; x < m; ++x) {
    if (above_[x].test(x))
      throw std::invalid_argument("GradedPoset: irreflexivity violated");
    for (std::size_t y = above_[x].find_first(); y != Bits::npos;
         y = above_[x].find_next(y)) {
      if (rank_[x] >= rank_[static_cast<int>(y)])
        throw std::invalid_argument("GradedPoset: order does not raise rank");
      if (above_[static_cast<int>(y)].test(x))
        throw std::invalid_argument("GradedPoset: antisymmetry violated");
      // transitivity: everything above y is above x
      if ((above_[static_cast<int>(y)] & ~above_[x]).any())
        throw std::invalid_argument("GradedPoset: transitivity violated");
    }
  }
  // Gradedness.  (a) Covers exist in both directions, so every maximal chain
  // reaches rank 0 and rank n.  (b) Every comparable pair with a rank gap has
  // an intermediate element at each skipped rank, so no maximal chain can
  // skip a rank.  Together these force maximal chains to hit all of 0..n.
  for (int x = 0; x < m; ++x) {
    if (rank_[x] > 0 && !(below_[x] & level_masks_[rank_[x] - 1]).any())
      throw std::invalid_argument("GradedPoset: element lacks a lower cover");
    if (rank_[x] < n_ && !(above_[x] & level_masks_[rank_[x] + 1]).any())
      throw std::invalid_argument("GradedPoset: element lacks an upper cover");
    for (std::size_t y = above_[x].find_first(); y != Bits::npos;
         y = above_[x].find_next(y))
      for (int t = rank_[x] + 1; t < rank_[static_cast<int>(y)]; ++t)
        if (!(above_[x] & below_[static_cast<int>(y)] & level_masks_[t]).any())
          throw std::invalid_argument(
              "GradedPoset: comparable pair skips rank " + std::to_string(t));
  }
}

std::vector<Count> GradedPoset::level_sizes() const {
  std::vector<Count> s;
  s.reserve(levels_.size());
  for (const auto& lvl : levels_) s.emplace_back(lvl.size());
  return s;
}

Bits GradedPoset::full_mask() const {
  Bits b(size());
  b.set();
  return b;
}

// ------------------------------------------------------------------ Family --

Family::Family(const GradedPoset& p, Bits m) : poset(&p), members(std::move(m)) {
  if (members.size() != static_cast<std::size_t>(p.size()))
    throw std::invalid_argument("Family: member bitset size mismatch");
}

Family::Family(const GradedPoset& p, const std::vector<int>& elems)
    : poset(&p), members(p.size()) {
  for (int e : elems) {
    if (e < 0 || e >= p.size())
      throw std::invalid_argument("Family: element index out of range");
    members.set(e);
  }
}

std::vector<int> Family::elements() const {
  std::vector<int> v;
  v.reserve(members.count());
  for (std::size_t x = members.find_first(); x != Bits::npos;
       x = members.find_next(x))
    v.push_back(static_cast<int>(x));
  return v;
}

// ---------------------------------------------------------- chain counting --

bool is_chain(const GradedPoset& p, const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!p.comparable(elems[i], elems[j])) return false;
  return true;
}

Count count_chains(const Family& fam, int k) {
  if (k < 1) throw std::invalid_argument("count_chains: k must be >= 1");
  const GradedPoset& p = *fam.poset;
  std::vector<int> elems = fam.elements();
  std::sort(elems.begin(), elems.end(),
            [&](int a, int b) { return p.rank(a) < p.rank(b); });
  const std::size_t m = elems.size();
  if (k == 1) return Count(m);
  if (static_cast<std::size_t>(k) > m) return 0;

  // end[x][t] = number of (t+1)-chains inside the family whose top is x.
  // Processing in rank order makes every comparability a strict extension.
  std::vector<std::vector<Count>> end(m, std::vector<Count>(k, 0));
  Count total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    end[i][0] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (!p.less(elems[j], elems[i])) continue;
      for (int t = 1; t < k; ++t) end[i][t] += end[j][t - 1];
    }
    total += end[i][k - 1];
  }
  return total;
}

Count count_chains_enumeration(const Family& fam, int k) {
  if (k < 1)
    throw std::invalid_argument("count_chains_enumeration: k must be >= 1");
  const std::vector<int> elems = fam.elements();
  const int m = static_cast<int>(elems.size());
  if (m > 20)
    throw ResourceGuardError("count_chains_enumeration: family larger than 20");
  if (k > m) return 0;
  const GradedPoset& p = *fam.poset;

  Count total = 0;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::vector<int> pick;
    pick.reserve(k);
    for (int i : idx) pick.push_back(elems[i]);
    if (is_chain(p, pick)) ++total;
    int t = k - 1;
    while (t >= 0 && idx[t] == m - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return total;
}

std::vector<int> canonical_chain(const GradedPoset& p, const RankSet& I) {
  if (!I.empty() && I.max() > p.n())
    throw std::invalid_argument("canonical_chain: rank above n");
  std::vector<int> chain;
  Bits eligible = p.full_mask();
  for (int r : I) {
    const Bits cand = eligible & p.level_mask(r);
    const std::size_t x = cand.find_first();
    if (x == Bits::npos)
      throw std::logic_error("canonical_chain: no extension at rank " +
                             std::to_string(r));
    chain.push_back(static_cast<int>(x));
    eligible &= p.above(static_cast<int>(x));
  }
  return chain;
}

Count ck_prime_chain(const GradedPoset& p, const std::vector<int>& base,
                     const RankSet& J, int k) {
  if (k < 1) throw std::invalid_argument("ck_prime_chain: k must be >= 1");
  if (static_cast<int>(base.size()) > k)
    throw std::invalid_argument("ck_prime_chain: base chain longer than k");
  if (!is_chain(p, base))
    throw std::invalid_argument("ck_prime_chain: base is not a chain");
  if (!J.empty() && J.max() > p.n())
    throw std::invalid_argument("ck_prime_chain: J has rank above n");
  std::vector<int> base_ranks;
  for (int x : base) base_ranks.push_back(p.rank(x));
  if (!RankSet(base_ranks).disjoint(J))
    throw std::invalid_argument("ck_prime_chain: ranks(base) meets J");

  const int need = k - static_cast<int>(base.size());
  if (need > J.size()) return 0;
  if (need == 0) return 1;

  // Elements comparable to every base element, restricted to ranks in J.
  Bits eligible(p.size());
  for (int r : J) eligible |= p.level_mask(r);
  for (int x : base) eligible &= (p.above(x) | p.below(x));

  return count_chains(Family(p, eligible), need);
}

Count ck_prime_ranks(const GradedPoset& p, const RankSet& I, const RankSet& J,
                     int k) {
  if (!I.disjoint(J))
    throw std::invalid_argument("ck_prime_ranks: I meets J");
  return ck_prime_chain(p, canonical_chain(p, I), J, k);
}

}  // namespace chainmin
