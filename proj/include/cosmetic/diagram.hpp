#ifndef COSMETIC_DIAGRAM_HPP
#define COSMETIC_DIAGRAM_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosmetic/braid.hpp"

namespace cosmetic {

enum class Smoothing : std::uint8_t { A, B };

using StateAssignment = std::vector<Smoothing>;

// One crossing of a braid closure. Edges are the arcs of the 4-valent
// diagram graph; top_* enter the crossing from above, bottom_* leave below.
struct Crossing {
  int letter = 0;   // position in the source word
  int position = 1; // generator index i: acts on strand positions i and i+1
  int sign = 1;
  int top_left = 0;
  int top_right = 0;
  int bottom_left = 0;
  int bottom_right = 0;
};

// Trace closure of a braid: strand k at the top is joined to strand k at the
// bottom. No Reidemeister simplification is ever applied.
class ClosureDiagram {
public:
  explicit ClosureDiagram(const BraidWord& w) : n_(w.strands()), word_(w)
  {
    std::vector<int> current(n_);
    std::iota(current.begin(), current.end(), 0);
    int next_edge = n_;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Letter l = w.letters()[k];
      Crossing c;
      c.letter = static_cast<int>(k);
      c.position = l.index;
      c.sign = l.sign;
      c.top_left = current[l.index - 1];
      c.top_right = current[l.index];
      c.bottom_left = next_edge++;
      c.bottom_right = next_edge++;
      // the strands swap positions through the crossing
      current[l.index - 1] = c.bottom_left;
      current[l.index] = c.bottom_right;
      crossings_.push_back(c);
    }
    // closing arcs: the last edge at each position is the same arc as the first
    std::vector<int> rep(next_edge);
    std::iota(rep.begin(), rep.end(), 0);
    for (int p = 0; p < n_; ++p) rep[current[p]] = p;
    std::vector<int> compact(next_edge, -1);
    int count = 0;
    for (int e = 0; e < next_edge; ++e)
      if (rep[e] == e) compact[e] = count++;
    auto fix = [&](int e) { return compact[rep[e]]; };
    for (auto& c : crossings_) {
      c.top_left = fix(c.top_left);
      c.top_right = fix(c.top_right);
      c.bottom_left = fix(c.bottom_left);
      c.bottom_right = fix(c.bottom_right);
    }
    edges_ = count;
  }

  int strands() const { return n_; }

  // Connected pieces of the diagram: the closure splits at every generator
  // index that never occurs.
  int split_pieces() const
  {
    std::vector<char> used(n_, 0);
    for (const auto& c : crossings_) used[c.position] = 1;
    int pieces = 1;
    for (int i = 1; i < n_; ++i) pieces += used[i] ? 0 : 1;
    return pieces;
  }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return edges_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const BraidWord& word() const { return word_; }

private:
  int n_;
  BraidWord word_;
  std::vector<Crossing> crossings_;
  int edges_ = 0;
};

inline ClosureDiagram closure_diagram(const BraidWord& w) { return ClosureDiagram(w); }

namespace detail {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n), sets_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a == b) return;
    parent_[a] = b;
    --sets_;
  }

  int sets() const { return sets_; }

private:
  std::vector<int> parent_;
  int sets_;
};

// Vertical (identity) smoothing for A on positive crossings and B on negative ones.
inline bool vertical_smoothing(int sign, Smoothing s) { return (sign > 0) == (s == Smoothing::A); }

} // namespace detail

// Number of circles after smoothing every crossing per the assignment.
// Positive crossing: A = identity pattern, B = cup-cap; reversed when negative.
inline int state_circles(const ClosureDiagram& d, const StateAssignment& s)
{
  if (static_cast<int>(s.size()) != d.crossing_count())
    throw std::invalid_argument("state assignment length " + std::to_string(s.size()) + " does not match " +
                                std::to_string(d.crossing_count()) + " crossings");
  detail::UnionFind uf(d.edge_count());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const Crossing& c = d.crossings()[k];
    if (detail::vertical_smoothing(c.sign, s[k])) {
      uf.unite(c.top_left, c.bottom_left);
      uf.unite(c.top_right, c.bottom_right);
    } else {
      uf.unite(c.top_left, c.top_right);
      uf.unite(c.bottom_left, c.bottom_right);
    }
  }
  return uf.sets();
}

struct TuraevData {
  int crossings = 0;
  int pieces = 1;
  int circles_a = 0;
  int circles_b = 0;
  int genus = 0;
};

inline TuraevData turaev_data(const ClosureDiagram& d)
{
  TuraevData t;
  t.crossings = d.crossing_count();
  t.pieces = d.split_pieces();
  t.circles_a = state_circles(d, StateAssignment(d.crossing_count(), Smoothing::A));
  t.circles_b = state_circles(d, StateAssignment(d.crossing_count(), Smoothing::B));
  int twice = t.crossings + 2 * t.pieces - t.circles_a - t.circles_b;
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("Turaev genus numerator c+2k-|sA|-|sB| = " + std::to_string(twice) +
                           " is negative or odd; diagram construction is broken");
  t.genus = twice / 2;
  return t;
}

// g_T(D) = (c(D) + 2 - |s_A| - |s_B|) / 2 for a connected diagram; a split
// diagram with k pieces uses 2k in place of 2 (the sum over its pieces).
inline int turaev_genus_diagram(const ClosureDiagram& d) { return turaev_data(d).genus; }

// True iff every component meets its crossings strictly alternately over and
// under. For a positive crossing the strand entering from the left passes over.
inline bool is_alternating_diagram(const ClosureDiagram& d)
{
  const int n = d.strands();
  const auto& cs = d.crossings();
  std::vector<char> started(n, 0);
  for (int start = 0; start < n; ++start) {
    if (started[start]) continue;
    std::vector<char> passes; // 1 = over
    int p = start;
    do {
      started[p] = 1;
      for (const Crossing& c : cs) {
        int left = c.position - 1;
        if (p == left) {
          passes.push_back(c.sign > 0);
          p = left + 1;
        } else if (p == left + 1) {
          passes.push_back(c.sign < 0);
          p = left;
        }
      }
    } while (p != start);
    for (std::size_t k = 0; k < passes.size(); ++k)
      if (passes.size() > 1 && passes[k] == passes[(k + 1) % passes.size()]) return false;
  }
  return true;
}

} // namespace cosmetic

#endif // COSMETIC_DIAGRAM_HPP
