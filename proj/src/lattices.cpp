#include "chainmin/lattices.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace chainmin {

Count binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Count num = 1;
  for (int t = 0; t < r; ++t) {
    num *= n - t;
    num /= t + 1;  // exact: product of t+1 consecutive integers
  }
  return num;
}

Count gaussian_binomial(int m, int r, int q) {
  if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
  if (r < 0 || m < 0 || r > m) return 0;
  // prod_{l<r} (q^m - q^l) / (q^r - q^l)
  Count num = 1, den = 1;
  const Count Q = q;
  Count qm = 1, qr = 1;
  for (int t = 0; t < m; ++t) qm *= Q;
  for (int t = 0; t < r; ++t) qr *= Q;
  Count ql = 1;
  for (int l = 0; l < r; ++l) {
    num *= qm - ql;
    den *= qr - ql;
    ql *= Q;
  }
  if (den == 0) return r == 0 ? Count(1) : Count(0);
  if (num % den != 0)
    throw std::logic_error("gaussian_binomial: non-integral quotient");
  return num / den;
}

Count boolean_c2_prime(int n, int i, int j) {
  if (!(0 <= i && i < j && j <= n))
    throw std::invalid_argument("boolean_c2_prime: need 0 <= i < j <= n");
  return binomial(n - i, j - i);
}

Count subspace_c2_prime(int q, int n, int i, int j) {
  if (!(0 <= i && i < j && j <= n))
    throw std::invalid_argument("subspace_c2_prime: need 0 <= i < j <= n");
  // Superspaces of a fixed i-dimensional space correspond to subspaces of
  // the (n-i)-dimensional quotient.
  return gaussian_binomial(n - i, j - i, q);
}

LevelProfile boolean_profile(int n) {
  if (n < 0) throw std::invalid_argument("boolean_profile: negative n");
  LevelProfile prof;
  prof.n = n;
  prof.sizes.resize(n + 1);
  prof.c2.assign(n + 1, std::vector<Count>(n + 1, 0));
  for (int i = 0; i <= n; ++i) prof.sizes[i] = binomial(n, i);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      prof.c2[i][j] = j > i ? binomial(n - i, j - i) : binomial(i, i - j);
    }
  prof.validate();
  return prof;
}

LevelProfile subspace_profile(int q, int n) {
  if (n < 0) throw std::invalid_argument("subspace_profile: negative n");
  GaloisField gf(q);  // validates primality
  LevelProfile prof;
  prof.n = n;
  prof.sizes.resize(n + 1);
  prof.c2.assign(n + 1, std::vector<Count>(n + 1, 0));
  for (int i = 0; i <= n; ++i) prof.sizes[i] = gaussian_binomial(n, i, q);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      prof.c2[i][j] = j > i ? gaussian_binomial(n - i, j - i, q)
                            : gaussian_binomial(i, j, q);
    }
  prof.validate();
  return prof;
}

GradedPoset make_boolean_lattice(int n) {
  if (n < 0) throw std::invalid_argument("make_boolean_lattice: negative n");
  if (n > 14)
    throw ResourceGuardError("make_boolean_lattice: n > 14 (2^n elements)");
  const std::uint32_t m = std::uint32_t(1) << n;
  std::vector<int> ranks(m);
  std::vector<Bits> above(m, Bits(m));
  for (std::uint32_t x = 0; x < m; ++x) {
    ranks[x] = std::popcount(x);
    // strict supersets of x: x | s over nonempty submasks s of ~x
    const std::uint32_t free = ~x & (m - 1);
    for (std::uint32_t s = free; s; s = (s - 1) & free) above[x].set(x | s);
  }
  return GradedPoset(n, std::move(ranks), std::move(above),
                     "boolean:" + std::to_string(n));
}

// ------------------------------------------------------------- GaloisField --

GaloisField::GaloisField(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("GaloisField: q must be >= 2");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0)
      throw std::invalid_argument(
          "GaloisField: q = " + std::to_string(q) +
          " is not prime (prime-power fields are not supported)");
}

int GaloisField::inv(int a) const {
  a %= q_;
  if (a == 0) throw std::domain_error("GaloisField::inv: zero");
  // Fermat: a^(q-2) mod q
  int result = 1, base = a, e = q_ - 2;
  while (e) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return result;
}

// --------------------------------------------------------------- subspaces --

namespace {

// Recursively fill the free entries of an RREF pattern.  Pivot columns are
// fixed; free positions are (row t, col c) with c > pivot[t] and c not a
// pivot column.
void fill_free_entries(const GaloisField& gf,
                       std::vector<std::vector<std::uint8_t>>& mat,
                       std::size_t pos,
                       const std::vector<std::pair<int, int>>& free_pos,
                       std::vector<Subspace>& out) {
  if (pos == free_pos.size()) {
    out.push_back(Subspace{mat});
    return;
  }
  auto [r, c] = free_pos[pos];
  for (int v = 0; v < gf.q(); ++v) {
    mat[r][c] = static_cast<std::uint8_t>(v);
    fill_free_entries(gf, mat, pos + 1, free_pos, out);
  }
  mat[r][c] = 0;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const GaloisField& gf, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_subspaces: negative n");
  std::vector<Subspace> all;
  all.push_back(Subspace{});  // the zero space
  for (int r = 1; r <= n; ++r) {
    std::vector<Subspace> dim_r;
    // pivot column sets, in lexicographic order
    std::vector<int> pivots(r);
    for (int t = 0; t < r; ++t) pivots[t] = t;
    for (;;) {
      std::vector<std::vector<std::uint8_t>> mat(
          r, std::vector<std::uint8_t>(n, 0));
      std::vector<std::pair<int, int>> free_pos;
      for (int t = 0; t < r; ++t) {
        mat[t][pivots[t]] = 1;
        for (int c = pivots[t] + 1; c < n; ++c)
          if (!std::binary_search(pivots.begin(), pivots.end(), c))
            free_pos.emplace_back(t, c);
      }
      fill_free_entries(gf, mat, 0, free_pos, dim_r);
      int t = r - 1;
      while (t >= 0 && pivots[t] == n - r + t) --t;
      if (t < 0) break;
      ++pivots[t];
      for (int s = t + 1; s < r; ++s) pivots[s] = pivots[s - 1] + 1;
    }
    // (dimension, lexicographic RREF) order within the dimension
    std::sort(dim_r.begin(), dim_r.end(),
              [](const Subspace& a, const Subspace& b) { return a.rows < b.rows; });
    for (auto& s : dim_r) all.push_back(std::move(s));
  }
  return all;
}

bool subspace_contains(const GaloisField& gf, const Subspace& big,
                       const Subspace& small) {
  if (small.dim() > big.dim()) return false;
  // Reduce each row of `small` against `big`'s RREF basis; membership iff
  // the residual vanishes.
  for (const auto& row : small.rows) {
    std::vector<int> v(row.begin(), row.end());
    for (const auto& brow : big.rows) {
      int pivot = 0;
      while (pivot < static_cast<int>(brow.size()) && brow[pivot] == 0) ++pivot;
      if (pivot >= static_cast<int>(brow.size())) continue;
      const int coef = v[pivot];
      if (coef == 0) continue;
      for (std::size_t c = 0; c < v.size(); ++c)
        v[c] = gf.sub(v[c], gf.mul(coef, brow[c]));
    }
    for (int x : v)
      if (x != 0) return false;
  }
  return true;
}

GradedPoset make_subspace_lattice(int q, int n, std::uint64_t max_elements) {
  GaloisField gf(q);
  Count total = 0;
  for (int r = 0; r <= n; ++r) total += gaussian_binomial(n, r, q);
  if (total > Count(max_elements))
    throw ResourceGuardError("make_subspace_lattice: " + total.str() +
                             " subspaces exceeds the guard of " +
                             std::to_string(max_elements));

  std::vector<Subspace> subs = enumerate_subspaces(gf, n);
  const std::size_t m = subs.size();
  std::vector<int> ranks(m);
  std::vector<Bits> above(m, Bits(m));
  for (std::size_t x = 0; x < m; ++x) ranks[x] = subs[x].dim();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (subs[x].dim() < subs[y].dim() &&
          subspace_contains(gf, subs[y], subs[x]))
        above[x].set(y);

  // cross-check level sizes against the closed form
  for (int r = 0; r <= n; ++r) {
    Count lvl = 0;
    for (std::size_t x = 0; x < m; ++x)
      if (ranks[x] == r) ++lvl;
    if (lvl != gaussian_binomial(n, r, q))
      throw std::logic_error("make_subspace_lattice: level size mismatch");
  }

  return GradedPoset(n, std::move(ranks), std::move(above),
                     "subspace:" + std::to_string(q) + "," + std::to_string(n));
}

}  // namespace chainmin
