#ifndef COSMETIC_TESTS_ORACLES_HPP
#define COSMETIC_TESTS_ORACLES_HPP

// Test-only reference computations, written independently of the library's
// evaluators.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "cosmetic/bennequin.hpp"
#include "cosmetic/braid.hpp"

namespace oracle {

// ---------------------------------------------------------------------------
// Artin's faithful action of B_n on the free group F_n.

using FreeWord = std::vector<int>; // +-(k+1) for x_k^{+-1}

inline void push_reduced(FreeWord& w, int g)
{
  if (!w.empty() && w.back() == -g) w.pop_back();
  else w.push_back(g);
}

inline FreeWord inverse(const FreeWord& w)
{
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Image of x_k under the single-letter automorphism, as a word in x's.
inline FreeWord letter_image(cosmetic::Letter l, int k)
{
  const int a = l.index;     // x_{index} (1-based generator numbers)
  const int b = l.index + 1;
  if (k != a && k != b) return {k};
  if (l.sign > 0) {
    if (k == a) return {a, b, -a};
    return {a};
  }
  if (k == a) return {b};
  return {-b, a, b};
}

// Images of every generator under the automorphism of the braid word.
inline std::vector<FreeWord> artin_action(const cosmetic::BraidWord& w)
{
  const int n = w.strands();
  std::vector<FreeWord> img(n + 1);
  for (int k = 1; k <= n; ++k) img[k] = {k};
  for (const auto& l : w.letters()) {
    std::vector<FreeWord> next(n + 1);
    for (int k = 1; k <= n; ++k) {
      FreeWord out;
      for (int g : letter_image(l, k)) {
        const FreeWord& piece = img[std::abs(g)];
        if (g > 0) for (int h : piece) push_reduced(out, h);
        else for (int h : inverse(piece)) push_reduced(out, h);
      }
      next[k] = std::move(out);
    }
    img = std::move(next);
  }
  return img;
}

inline bool braid_equal(const cosmetic::BraidWord& a, const cosmetic::BraidWord& b)
{
  return a.strands() == b.strands() && artin_action(a) == artin_action(b);
}

// ---------------------------------------------------------------------------
// Circle count of a smoothed braid closure by gluing planar matchings level
// by level. Each level is identity or a cup-cap at positions (i-1, i).

inline int smoothed_closure_circles(int n, const std::vector<std::pair<int, bool>>& levels)
{
  // match[p] for points 0..n-1 (top of the stack) and n..2n-1 (current bottom)
  std::vector<int> match(2 * n);
  for (int k = 0; k < n; ++k) {
    match[k] = n + k;
    match[n + k] = k;
  }
  int loops = 0;
  for (auto [i, cupcap] : levels) {
    if (!cupcap) continue;
    int l = n + i - 1, r = n + i;
    if (match[l] == r) {
      ++loops;
      continue;
    }
    int x = match[l], y = match[r];
    match[x] = y;
    match[y] = x;
    match[l] = r;
    match[r] = l;
  }
  std::vector<char> seen(2 * n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int p = s;
    while (!seen[p]) {
      seen[p] = 1;
      int q = match[p];
      seen[q] = 1;
      p = q >= n ? q - n : q + n;
    }
  }
  return loops;
}

// all-A or all-B circles using the smoothing convention: positive letter, A = identity.
inline int uniform_state_circles(const cosmetic::BraidWord& w, bool all_a)
{
  std::vector<std::pair<int, bool>> levels;
  for (auto l : w.letters()) {
    bool identity = (l.sign > 0) == all_a;
    levels.push_back({l.index, !identity});
  }
  return smoothed_closure_circles(w.strands(), levels);
}

// ---------------------------------------------------------------------------
// Random words.

inline cosmetic::BraidWord random_braid(std::mt19937_64& rng, int n, int length)
{
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::bernoulli_distribution pos(0.5);
  cosmetic::BraidWord w(n);
  for (int k = 0; k < length; ++k) w.push_back({idx(rng), pos(rng) ? 1 : -1});
  return w;
}

inline cosmetic::BraidWord random_alternating_braid(std::mt19937_64& rng, int n, int length, cosmetic::Pattern p)
{
  std::uniform_int_distribution<int> idx(1, n - 1);
  cosmetic::BraidWord w(n);
  for (int k = 0; k < length; ++k) {
    int i = idx(rng);
    w.push_back({i, cosmetic::pattern_sign(p, i)});
  }
  return w;
}

inline cosmetic::BandWord random_band_word(std::mt19937_64& rng, int n, int length)
{
  std::uniform_int_distribution<int> pick(1, n);
  std::bernoulli_distribution pos(0.5);
  std::vector<cosmetic::Band> bands;
  while (static_cast<int>(bands.size()) < length) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    bands.push_back({i, j, pos(rng) ? 1 : -1});
  }
  return cosmetic::BandWord(n, std::move(bands));
}

// Band word whose closure is a knot, with k = 2g - 1 + n bands.
inline cosmetic::BandWord random_knot_band_word(std::mt19937_64& rng, int n, int genus)
{
  for (;;) {
    auto b = random_band_word(rng, n, 2 * genus - 1 + n);
    if (cosmetic::closes_to_knot(cosmetic::expand(b))) return b;
  }
}

} // namespace oracle

#endif // COSMETIC_TESTS_ORACLES_HPP
