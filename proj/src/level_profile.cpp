#include "chainmin/level_profile.hpp"

#include <stdexcept>
#include <string>

namespace chainmin {

void LevelProfile::validate() const {
  if (n < 0) throw std::invalid_argument("LevelProfile: negative n");
  if (sizes.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("LevelProfile: sizes length mismatch");
  if (c2.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("LevelProfile: c2 row count mismatch");
  for (int i = 0; i <= n; ++i) {
    if (sizes[i] <= 0)
      throw std::invalid_argument("LevelProfile: empty level " + std::to_string(i));
    if (c2[i].size() != static_cast<std::size_t>(n + 1))
      throw std::invalid_argument("LevelProfile: c2 column count mismatch");
    for (int j = 0; j <= n; ++j)
      if (i != j && c2[i][j] < 0)
        throw std::invalid_argument("LevelProfile: negative two-point count");
  }
}

Count LevelProfile::total_size() const {
  Count t = 0;
  for (const Count& s : sizes) t += s;
  return t;
}

const Count& LevelProfile::size(int i) const {
  if (i < 0 || i > n) throw std::out_of_range("LevelProfile::size: bad rank");
  return sizes[i];
}

const Count& LevelProfile::c2_at(int i, int j) const {
  if (i < 0 || i > n || j < 0 || j > n || i == j)
    throw std::out_of_range("LevelProfile::c2_at: bad rank pair");
  return c2[i][j];
}

Count LevelProfile::chains_spanning(const RankSet& J) const {
  if (J.empty()) return 1;
  if (J.max() > n) throw std::out_of_range("chains_spanning: rank above n");
  const std::vector<int>& r = J.values();
  Count total = sizes[r[0]];
  for (std::size_t t = 1; t < r.size(); ++t) total *= c2_at(r[t - 1], r[t]);
  return total;
}

Count LevelProfile::ck_prime_empty(const RankSet& J, int k) const {
  if (k < 0) throw std::invalid_argument("ck_prime_empty: negative k");
  if (k == 0) return 1;
  if (k > J.size()) return 0;
  const std::vector<int>& r = J.values();
  const int m = static_cast<int>(r.size());
  Count total = 0;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<int> pick;
    pick.reserve(k);
    for (int i : idx) pick.push_back(r[i]);
    total += chains_spanning(RankSet(std::move(pick)));
    int t = k - 1;
    while (t >= 0 && idx[t] == m - k + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
  }
  return total;
}

Count LevelProfile::ck_prime_single(int i, const RankSet& J, int k) const {
  if (i < 0 || i > n) throw std::out_of_range("ck_prime_single: bad rank");
  if (J.contains(i))
    throw std::invalid_argument("ck_prime_single: i must avoid J");
  if (k < 1) throw std::invalid_argument("ck_prime_single: k must be >= 1");
  if (k - 1 > J.size()) return 0;
  if (k == 1) return 1;

  const std::vector<int>& r = J.values();
  const int m = static_cast<int>(r.size());
  Count total = 0;
  std::vector<int> idx(k - 1);
  for (int t = 0; t < k - 1; ++t) idx[t] = t;
  for (;;) {
    // Chains through a fixed rank-i element with ranks {r[idx]} split into a
    // descending product below i and an ascending product above i.
    Count prod = 1;
    int prev_below = i;
    for (int t = static_cast<int>(idx.size()) - 1; t >= 0; --t) {
      const int s = r[idx[t]];
      if (s > i) continue;
      prod *= c2_at(prev_below, s);
      prev_below = s;
    }
    int prev_above = i;
    for (int idx_t : idx) {
      const int s = r[idx_t];
      if (s < i) continue;
      prod *= c2_at(prev_above, s);
      prev_above = s;
    }
    total += prod;
    int t = k - 2;
    while (t >= 0 && idx[t] == m - (k - 1) + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < k - 1; ++s) idx[s] = idx[s - 1] + 1;
  }
  return total;
}

LevelProfile measure_profile(const GradedPoset& p) {
  LevelProfile prof;
  prof.n = p.n();
  prof.sizes = p.level_sizes();
  prof.c2.assign(p.n() + 1, std::vector<Count>(p.n() + 1, 0));
  for (int i = 0; i <= p.n(); ++i) {
    const int x = p.level(i).front();
    for (int j = 0; j <= p.n(); ++j) {
      if (i == j) continue;
      const Bits hits =
          (j > i ? p.above(x) : p.below(x)) & p.level_mask(j);
      prof.c2[i][j] = Count(hits.count());
    }
  }
  prof.validate();
  return prof;
}

}  // namespace chainmin
