#ifndef COSMETIC_DEALTERNATION_HPP
#define COSMETIC_DEALTERNATION_HPP

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cosmetic/bennequin.hpp"
#include "cosmetic/braid.hpp"

namespace cosmetic {

using Rational = boost::rational<long long>;

// Letters whose sign disagrees with the pattern; each is one crossing change.
inline int violations(const BraidWord& w, Pattern p)
{
  return static_cast<int>(std::count_if(w.letters().begin(), w.letters().end(), [p](Letter l) { return !conforms(l, p); }));
}

inline int violations(const std::vector<Letter>& w, Pattern p)
{
  return static_cast<int>(std::count_if(w.begin(), w.end(), [p](Letter l) { return !conforms(l, p); }));
}

struct BandCost {
  int cost = 0;
  BraidWord word;
};

namespace detail {

// a_{i,j}^sign = (s_{j-1}^-1 ... s_{i+1}^-1) s_i^sign (s_{i+1} ... s_{j-1})
inline BraidWord band_right_form(int i, int j, int n, int sign)
{
  std::vector<Letter> out;
  for (int k = j - 1; k >= i + 1; --k) out.push_back({k, -1});
  out.push_back({i, sign});
  for (int k = i + 1; k <= j - 1; ++k) out.push_back({k, 1});
  return BraidWord(n, std::move(out));
}

using Code = std::vector<int>; // signed generator indices

inline Code encode(const BraidWord& w)
{
  Code c;
  for (auto l : w.letters()) c.push_back(l.sign * l.index);
  return c;
}

inline std::vector<Letter> decode(const Code& c)
{
  std::vector<Letter> out;
  for (int v : c) out.push_back({std::abs(v), v > 0 ? 1 : -1});
  return out;
}

inline int sgn(int v) { return v > 0 ? 1 : -1; }

// Words one move away. Moves, all braid-group identities:
//   far commutation      x y -> y x                     when |x - y| >= 2
//   conjugation flip     x^s y^e x^-s -> y^-s x^e y^s   when |x - y| = 1
//   braid relation       x^s y^s x^s -> y^s x^s y^s     when |x - y| = 1
inline std::vector<Code> rewrite_neighbours(const Code& w)
{
  std::vector<Code> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (std::abs(std::abs(w[k]) - std::abs(w[k + 1])) >= 2) {
      Code v = w;
      std::swap(v[k], v[k + 1]);
      out.push_back(std::move(v));
    }
  }
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    int x = std::abs(w[k]), y = std::abs(w[k + 1]);
    int sx = sgn(w[k]), sy = sgn(w[k + 1]);
    if (std::abs(x - y) != 1 || std::abs(w[k + 2]) != x) continue;
    int sz = sgn(w[k + 2]);
    if (sz == -sx) {
      Code v = w;
      v[k] = -sx * y;
      v[k + 1] = sy * x;
      v[k + 2] = sx * y;
      out.push_back(std::move(v));
    } else if (sx == sy && sy == sz) {
      Code v = w;
      v[k] = sx * y;
      v[k + 1] = sx * x;
      v[k + 2] = sx * y;
      out.push_back(std::move(v));
    }
  }
  return out;
}

} // namespace detail

inline int default_rewrite_depth(int i, int j) { return 2 * (j - i); }

// Fewest pattern violations over words equal to a_{i,j}^sign, searched by
// breadth-first rewriting from both conjugated forms up to `depth` moves.
inline BandCost band_alternating_cost(int i, int j, int n, int sign, Pattern p, std::optional<int> depth = std::nullopt)
{
  if (n < 4) throw std::invalid_argument("band cost search needs n >= 4, got " + std::to_string(n));
  if (i < 1 || j > n || i >= j)
    throw std::out_of_range("band (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for " +
                            std::to_string(n) + " strands");
  const int max_depth = depth.value_or(default_rewrite_depth(i, j));
  std::set<detail::Code> seen;
  std::deque<std::pair<detail::Code, int>> queue;
  for (const auto& seed : {expand_band(i, j, n, sign), detail::band_right_form(i, j, n, sign)}) {
    auto code = detail::encode(seed);
    if (seen.insert(code).second) queue.emplace_back(std::move(code), 0);
  }
  BandCost best{-1, BraidWord(n)};
  while (!queue.empty()) {
    auto [word, dist] = std::move(queue.front());
    queue.pop_front();
    auto letters = detail::decode(word);
    int v = violations(letters, p);
    if (best.cost < 0 || v < best.cost) best = {v, BraidWord(n, std::move(letters))};
    if (best.cost == 0) break;
    if (dist == max_depth) continue;
    for (auto& next : detail::rewrite_neighbours(word))
      if (seen.insert(next).second) queue.emplace_back(std::move(next), dist + 1);
  }
  return best;
}

// gamma_{i,j} = s_i s_{i+1} ... s_j (ascending) or s_i s_{i-1} ... s_j (descending)
inline BraidWord gamma_word(int i, int j, int n)
{
  if (i < 1 || j < 1 || i > n - 1 || j > n - 1)
    throw std::out_of_range("gamma indices (" + std::to_string(i) + "," + std::to_string(j) + ") outside B_" +
                            std::to_string(n));
  std::vector<Letter> out;
  int step = i <= j ? 1 : -1;
  for (int k = i;; k += step) {
    out.push_back({k, 1});
    if (k == j) break;
  }
  return BraidWord(n, std::move(out));
}

// Cheapest pattern for gamma_{i,j}; gamma^-1 gives the same minimum.
inline int gamma_alternating_cost(int i, int j, int n)
{
  if (std::abs(i - j) > n - 3)
    throw std::out_of_range("gamma_{" + std::to_string(i) + "," + std::to_string(j) + "} needs |i-j| <= n-3");
  auto w = gamma_word(i, j, n);
  return std::min(violations(w, Pattern::PlusOdd), violations(w, Pattern::MinusOdd));
}

struct CostReport {
  BandWord word;            // after wrap minimization
  int shift = 0;            // delta-conjugations applied
  int wrap_count = 0;       // r_{1,n} of the shifted word
  Pattern pattern = Pattern::PlusOdd;
  std::vector<BandCost> bands;
  int total = 0;
  long long formula = 0;    // (n-3) k + r_{1,n}

  // The concatenated representatives with each violating letter flipped.
  BraidWord alternating_word() const
  {
    BraidWord out(word.strands());
    for (const auto& b : bands)
      for (auto l : b.word.letters()) out.push_back({l.index, pattern_sign(pattern, l.index)});
    return out;
  }
};

// Upper bound on the dealternation number of the closure of a band word:
// choose the best delta-conjugate, then one global pattern, then per-band
// representatives.
inline CostReport dealternation_upper_word(const BandWord& b, std::optional<int> depth = std::nullopt)
{
  const int n = b.strands();
  if (n < 4) throw std::invalid_argument("dealternation bound needs n >= 4, got " + std::to_string(n));
  if (!closes_to_knot(expand(b))) throw std::invalid_argument("band word closure is not a knot");
  auto wrap = minimize_wrap(b);
  CostReport best;
  bool have = false;
  for (Pattern p : {Pattern::PlusOdd, Pattern::MinusOdd}) {
    CostReport r{wrap.word, wrap.shift, wrap.wrap_count, p, {}, 0, 0};
    for (const auto& band : wrap.word.bands()) {
      r.bands.push_back(band_alternating_cost(band.i, band.j, n, band.sign, p, depth));
      r.total += r.bands.back().cost;
    }
    r.formula = static_cast<long long>(n - 3) * static_cast<long long>(b.size()) + wrap.wrap_count;
    if (!have || r.total < best.total) {
      best = std::move(r);
      have = true;
    }
  }
  if (best.total > best.formula)
    throw std::logic_error("achieved crossing changes " + std::to_string(best.total) + " exceed (n-3)k + r_{1,n} = " +
                           std::to_string(best.formula));
  return best;
}

struct RationalBound {
  Rational exact;
  long long floor = 0;
};

inline long long floor_of(const Rational& r)
{
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline std::string to_string(const Rational& r)
{
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// dalt(K) <= (b - 3 + 1/b)(2g - 1 + b) for b >= 4
inline RationalBound thm4_bound(long long g, long long b)
{
  if (b < 4) throw std::invalid_argument("dealternation bound needs braid index >= 4");
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  Rational v = (Rational(b - 3) + Rational(1, b)) * Rational(2 * g - 1 + b);
  return {v, floor_of(v)};
}

} // namespace cosmetic

#endif // COSMETIC_DEALTERNATION_HPP
