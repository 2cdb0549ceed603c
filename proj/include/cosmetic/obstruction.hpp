#ifndef COSMETIC_OBSTRUCTION_HPP
#define COSMETIC_OBSTRUCTION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosmetic/bennequin.hpp"
#include "cosmetic/braid.hpp"
#include "cosmetic/dealternation.hpp"
#include "cosmetic/diagram.hpp"
#include "cosmetic/jones.hpp"

namespace cosmetic {

// th(K) <= (2b - 5)(2g - 1 + b) / 2 for b >= 4
inline RationalBound lemma3_bound(long long g, long long b)
{
  if (b < 4) throw std::invalid_argument("thickness bound needs braid index >= 4");
  Rational v = Rational(2 * b - 5, 2) * Rational(2 * g - 1 + b);
  return {v, floor_of(v)};
}

// Coefficient of (2g - 1 + b) in the crossing number bound.
inline Rational crossing_coefficient(long long b)
{
  if (b < 2) throw std::invalid_argument("crossing bound needs braid index >= 2");
  if (b == 2) return Rational(1);
  if (b == 3) return Rational(5, 3);
  return Rational(2 * b - 5);
}

// c(K) <= coefficient(b) * (2g - 1 + b)
inline Rational crossing_bound(long long g, long long b) { return crossing_coefficient(b) * Rational(2 * g - 1 + b); }

// Necessary for a purely cosmetic surgery (b >= 4, g != 2): value <= 0.
inline long long eqn3(long long g, long long b) { return 4 * g * g + (2 - 4 * b) * g + (2 * b - 5) * (1 - b); }

// Jones-span refinement of the same constraint.
inline long long eqn4(long long g, long long b, long long span)
{
  if (span < 0) throw std::invalid_argument("Jones span must be nonnegative");
  return 2 * g * g + (6 - 4 * b) * g + (2 * b - 5) * (1 - b) + span;
}

struct FoliationCheck {
  bool crossing_ok = false; // c <= (2b - 5) R_aa + (b - 3) R_ab
  bool genus_ok = false;    // 2 R_aa + R_ab <= 2 (2g - 1 + b)
  bool small_braid_index = false;
};

// Literal evaluation of the tile-count inequalities. Nothing is derived from
// an actual surface; b < 4 is evaluated as written and flagged.
inline FoliationCheck foliation_bounds(long long r_aa, long long r_ab, long long g, long long b, long long crossings)
{
  if (r_aa < 0 || r_ab < 0 || g < 0 || b < 0 || crossings < 0)
    throw std::invalid_argument("tile counts, genus, braid index and crossings must be nonnegative");
  FoliationCheck out;
  out.crossing_ok = crossings <= (2 * b - 5) * r_aa + (b - 3) * r_ab;
  out.genus_ok = 2 * r_aa + r_ab <= 2 * (2 * g - 1 + b);
  out.small_braid_index = b < 4;
  return out;
}

struct SlopeSet {
  std::vector<Rational> slopes; // ascending, no duplicates
  bool unbounded = false;

  bool empty() const { return slopes.empty() && !unbounded; }
};

inline long long floor_div(long long a, long long b) { return floor_of(Rational(a, b)); }

// Candidate slope pairs for a purely cosmetic surgery: {+-2} only when g = 2,
// otherwise {+-1/q : 0 < q <= (th + 2g) / (2g(g - 1))}. Without a thickness
// bound, or for g = 1, the 1/q family is unbounded.
inline SlopeSet hanselman_slopes(long long g, std::optional<long long> th)
{
  if (g < 1) throw std::invalid_argument("genus must be positive");
  if (th && *th < 0) throw std::invalid_argument("thickness must be nonnegative");
  SlopeSet out;
  if (g == 2) {
    out.slopes.push_back(Rational(-2));
    out.slopes.push_back(Rational(2));
  }
  if (g == 1 || !th) {
    out.unbounded = true;
  } else {
    long long q_max = floor_div(*th + 2 * g, 2 * g * (g - 1));
    for (long long q = 1; q <= q_max; ++q) {
      out.slopes.push_back(Rational(1, q));
      out.slopes.push_back(Rational(-1, q));
    }
  }
  std::sort(out.slopes.begin(), out.slopes.end());
  out.slopes.erase(std::unique(out.slopes.begin(), out.slopes.end()), out.slopes.end());
  return out;
}

inline SlopeSet hanselman_slopes(long long g, long long th) { return hanselman_slopes(g, std::optional<long long>(th)); }

// Invariants read off one braid (or band) word.
struct WordInvariants {
  BraidWord braid;
  std::optional<BandWord> bands;
  int strands = 1;
  int crossings = 0;
  int writhe = 0;
  int components = 1;
  int circles_a = 0;
  int circles_b = 0;
  int turaev_genus = 0;
  bool alternating_diagram = false;
  std::optional<LaurentPoly> jones;
  std::optional<int> jones_span;
  std::string jones_error;
  std::optional<int> bennequin_genus;
  std::optional<int> dealternation_upper;
};

inline WordInvariants measure_word(const BraidWord& w, const std::optional<BandWord>& bands = std::nullopt,
                                   const EvaluatorLimits& limits = {})
{
  WordInvariants inv;
  inv.braid = w;
  inv.bands = bands;
  inv.strands = w.strands();
  inv.crossings = static_cast<int>(w.size());
  inv.writhe = writhe(w);
  inv.components = component_count(w);
  ClosureDiagram d(w);
  auto t = turaev_data(d);
  inv.circles_a = t.circles_a;
  inv.circles_b = t.circles_b;
  inv.turaev_genus = t.genus;
  inv.alternating_diagram = is_alternating_diagram(d);
  try {
    inv.jones = jones(w, limits);
    if (inv.components == 1) inv.jones_span = inv.jones->span();
  } catch (const LimitError& e) {
    inv.jones_error = e.what();
  }
  if (inv.components == 1) {
    if (bands) {
      inv.bennequin_genus = bennequin_genus(*bands);
    } else {
      inv.bennequin_genus = w.strands() == 1 ? 0 : bennequin_genus(as_band_word(w));
    }
    int flat = std::min(violations(w, Pattern::PlusOdd), violations(w, Pattern::MinusOdd));
    inv.dealternation_upper = flat;
    if (bands && bands->strands() >= 4)
      inv.dealternation_upper = std::min(flat, dealternation_upper_word(*bands).total);
  }
  return inv;
}

struct KnotProfile {
  std::string name;
  long long genus = 1;        // trusted
  long long braid_index = 1;  // trusted
  std::optional<long long> thickness;
  std::optional<long long> jones_span;
  std::optional<WordInvariants> word;
};

enum class VerdictStatus { Excluded, Undecided, SpecialGenus2, KnownResultB3 };

inline const char* status_name(VerdictStatus s)
{
  switch (s) {
  case VerdictStatus::Excluded: return "Excluded";
  case VerdictStatus::Undecided: return "Undecided";
  case VerdictStatus::SpecialGenus2: return "SpecialGenus2";
  case VerdictStatus::KnownResultB3: return "KnownResultB3";
  }
  return "?";
}

struct Verdict {
  VerdictStatus status = VerdictStatus::Undecided;
  std::string route;
  SlopeSet slopes;
};

struct ObstructionReport {
  KnotProfile profile;
  bool profile_trusted = true; // false when no trusted genus/braid index was available
  std::optional<RationalBound> lemma3;
  std::optional<RationalBound> thm4;
  std::optional<Rational> crossing;
  std::optional<long long> eqn3;
  std::optional<long long> eqn4;
  std::optional<long long> th_upper;
  std::string th_source;
  Verdict verdict;
};

struct GateOptions {
  bool known_results = false; // braid index 3 is settled
};

namespace detail {

inline void fill_bounds(ObstructionReport& r)
{
  const long long g = r.profile.genus;
  const long long b = r.profile.braid_index;
  if (b >= 2) r.crossing = crossing_bound(g, b);
  if (b >= 4) {
    r.lemma3 = lemma3_bound(g, b);
    r.thm4 = thm4_bound(g, b);
    r.eqn3 = eqn3(g, b);
  }
  std::optional<long long> span = r.profile.jones_span;
  if (!span && r.profile.word && r.profile.word->jones_span) span = *r.profile.word->jones_span;
  if (span && b >= 4) r.eqn4 = eqn4(g, b, *span);

  // smallest available thickness upper bound; earlier sources win ties
  std::vector<std::pair<long long, std::string>> candidates;
  if (r.profile.thickness) candidates.emplace_back(*r.profile.thickness, "th");
  if (r.lemma3) candidates.emplace_back(r.lemma3->floor, "lemma3");
  if (r.thm4) candidates.emplace_back(r.thm4->floor, "thm4");
  if (span && b >= 4) {
    // th <= g_T(K) <= c(K) - span V, with c(K) bounded as above
    long long c = floor_of(*r.crossing);
    candidates.emplace_back(std::max(0LL, c - *span), "crossing-span");
  }
  if (r.profile.word && r.profile.word->components == 1) {
    if (r.profile.word->dealternation_upper) candidates.emplace_back(*r.profile.word->dealternation_upper, "dealternation_word");
    candidates.emplace_back(r.profile.word->turaev_genus, "turaev_diagram");
  }
  for (const auto& [v, src] : candidates) {
    if (!r.th_upper || v < *r.th_upper) {
      r.th_upper = v;
      r.th_source = src;
    }
  }
}

} // namespace detail

// Decide whether the profile can admit a purely cosmetic surgery.
inline ObstructionReport gate(const KnotProfile& p, const GateOptions& opt = {})
{
  if (p.genus < 1) throw std::invalid_argument("genus must be >= 1 (the unknot is excluded)");
  if (p.braid_index < 2) throw std::invalid_argument("braid index must be >= 2 for a nontrivial knot");
  if (p.thickness && *p.thickness < 0) throw std::invalid_argument("thickness must be nonnegative");
  if (p.jones_span && *p.jones_span < 0) throw std::invalid_argument("Jones span must be nonnegative");

  ObstructionReport r;
  r.profile = p;
  detail::fill_bounds(r);
  const long long g = p.genus;
  const long long b = p.braid_index;

  if (b == 3 && opt.known_results) {
    r.verdict.status = VerdictStatus::KnownResultB3;
    r.verdict.route = "braid index 3: the cosmetic surgery conjecture is known to hold";
    return r;
  }

  r.verdict.slopes = hanselman_slopes(g, r.th_upper);
  const long long lhs = 2 * g * (g - 2);
  std::string th_text = r.th_upper ? "th_upper = " + std::to_string(*r.th_upper) + " (" + r.th_source + ")"
                                   : std::string("no thickness bound");

  if (g == 2) {
    r.verdict.status = VerdictStatus::SpecialGenus2;
    r.verdict.route = "genus 2: slopes {+-2} cannot be ruled out; " + th_text;
    return r;
  }
  if (g == 1) {
    r.verdict.status = VerdictStatus::Undecided;
    r.verdict.route = "genus 1: slope bound degenerates (2g(g-1) = 0)";
    return r;
  }
  if (r.verdict.slopes.empty()) {
    r.verdict.status = VerdictStatus::Excluded;
    std::string lead;
    if (r.eqn3 && *r.eqn3 > 0) lead = "eqn3 = " + std::to_string(*r.eqn3) + " > 0; ";
    else if (r.eqn4 && *r.eqn4 > 0) lead = "eqn4 = " + std::to_string(*r.eqn4) + " > 0; ";
    r.verdict.route = lead + "2g(g-2) = " + std::to_string(lhs) + " > " + th_text;
    return r;
  }
  r.verdict.status = VerdictStatus::Undecided;
  if (r.th_upper) r.verdict.route = "2g(g-2) = " + std::to_string(lhs) + " <= " + th_text;
  else r.verdict.route = "no thickness bound available";
  return r;
}

// Report for a word whose genus and braid index are not trusted: bounds are
// withheld and no slope is ruled out.
inline ObstructionReport untrusted_report(const KnotProfile& p)
{
  ObstructionReport r;
  r.profile = p;
  r.profile_trusted = false;
  r.verdict.status = VerdictStatus::Undecided;
  r.verdict.route = "genus and braid index not supplied; pass --exact to trust word-derived values";
  r.verdict.slopes.unbounded = true;
  return r;
}

} // namespace cosmetic

#endif // COSMETIC_OBSTRUCTION_HPP
