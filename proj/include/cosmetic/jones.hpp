#ifndef COSMETIC_JONES_HPP
#define COSMETIC_JONES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cosmetic/braid.hpp"
#include "cosmetic/diagram.hpp"
#include "cosmetic/laurent.hpp"

namespace cosmetic {

struct EvaluatorLimits {
  int max_crossings = 16; // state-sum oracle guard
  int max_strands = 12;   // Temperley-Lieb basis guard, Catalan(12) = 208012
  bool force_oracle = false;
};

struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loop value d = -A^2 - A^-2.
template <typename Coeff = std::int64_t>
Laurent<Coeff> loop_value()
{
  return Laurent<Coeff>(Variable::A, {{2, Coeff{-1}}, {-2, Coeff{-1}}});
}

namespace detail {

template <typename Coeff>
std::vector<Laurent<Coeff>> loop_powers(int max_power)
{
  std::vector<Laurent<Coeff>> out;
  out.push_back(Laurent<Coeff>::constant(Coeff{1}));
  const auto d = loop_value<Coeff>();
  for (int k = 1; k <= max_power; ++k) out.push_back(out.back() * d);
  return out;
}

} // namespace detail

// Kauffman bracket as the full sum over 2^c smoothing states:
//   sum_s A^(#A - #B) d^(|s| - 1)
// Exponential; kept as the ground-truth oracle.
template <typename Coeff = std::int64_t>
Laurent<Coeff> bracket_state_sum(const ClosureDiagram& d, const EvaluatorLimits& limits = {})
{
  const int c = d.crossing_count();
  if (c > limits.max_crossings)
    throw LimitError("state-sum oracle: " + std::to_string(c) + " crossings exceeds limit " +
                     std::to_string(limits.max_crossings));
  // circle counts are bounded by edges; tally (a-count, circles) first, then expand
  const int max_circles = std::max(d.edge_count(), 1);
  std::vector<std::vector<std::uint64_t>> tally(c + 1, std::vector<std::uint64_t>(max_circles + 1, 0));
  StateAssignment s(c, Smoothing::A);
  const std::uint64_t states = std::uint64_t{1} << c;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      bool b = (mask >> k) & 1U;
      s[k] = b ? Smoothing::B : Smoothing::A;
      a_count += b ? 0 : 1;
    }
    ++tally[a_count][state_circles(d, s)];
  }
  const auto dpow = detail::loop_powers<Coeff>(max_circles);
  Laurent<Coeff> out(Variable::A);
  for (int a = 0; a <= c; ++a) {
    for (int circles = 1; circles <= max_circles; ++circles) {
      if (tally[a][circles] == 0) continue;
      out += dpow[circles - 1].scaled(a - (c - a), static_cast<Coeff>(tally[a][circles]));
    }
  }
  return out;
}

namespace detail {

// A planar pairing of 2n boundary points: top k is point k, bottom k is point n + k.
using Pairing = std::string;

inline Pairing identity_pairing(int n)
{
  Pairing p(2 * n, '\0');
  for (int k = 0; k < n; ++k) {
    p[k] = static_cast<char>(n + k);
    p[n + k] = static_cast<char>(k);
  }
  return p;
}

// Right-multiply by e_i (acting on positions i-1, i): returns the new pairing
// and whether a closed loop was formed.
inline std::pair<Pairing, bool> times_cupcap(const Pairing& p, int n, int i)
{
  const int bl = n + i - 1;
  const int br = n + i;
  Pairing out = p;
  const int a = static_cast<unsigned char>(p[bl]);
  const int b = static_cast<unsigned char>(p[br]);
  if (a == br) return {out, true};
  out[a] = static_cast<char>(b);
  out[b] = static_cast<char>(a);
  out[bl] = static_cast<char>(br);
  out[br] = static_cast<char>(bl);
  return {out, false};
}

// Loops formed by joining top k to bottom k.
inline int trace_loops(const Pairing& p, int n)
{
  std::vector<char> seen(2 * n, 0);
  int loops = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int x = s;
    while (!seen[x]) {
      seen[x] = 1;
      int y = static_cast<unsigned char>(p[x]);
      seen[y] = 1;
      x = y < n ? y + n : y - n;
    }
  }
  return loops;
}

} // namespace detail

// Kauffman bracket through the Temperley-Lieb representation:
//   s_i -> A * 1 + A^-1 * e_i,   s_i^-1 -> A^-1 * 1 + A * e_i,
// multiplied left to right in the planar-pairing basis, then closed by the trace.
template <typename Coeff = std::int64_t>
Laurent<Coeff> bracket_tl(const BraidWord& w, const EvaluatorLimits& limits = {})
{
  const int n = w.strands();
  if (n > limits.max_strands)
    throw LimitError("Temperley-Lieb evaluator: " + std::to_string(n) + " strands exceeds limit " +
                     std::to_string(limits.max_strands));
  using State = std::unordered_map<detail::Pairing, Laurent<Coeff>>;
  const auto d = loop_value<Coeff>();
  State state;
  state.emplace(detail::identity_pairing(n), Laurent<Coeff>::constant(Coeff{1}));
  for (const Letter& l : w.letters()) {
    const int id_exp = l.sign;
    const int e_exp = -l.sign;
    State next;
    next.reserve(state.size() * 2);
    for (const auto& [pairing, coeff] : state) {
      auto [it, fresh] = next.try_emplace(pairing, Variable::A);
      it->second += coeff.scaled(id_exp, Coeff{1});
      auto [q, loop] = detail::times_cupcap(pairing, n, l.index);
      auto term = coeff.scaled(e_exp, Coeff{1});
      if (loop) term = term * d;
      auto [jt, fresh2] = next.try_emplace(std::move(q), Variable::A);
      jt->second += term;
    }
    state.clear();
    for (auto& [pairing, coeff] : next)
      if (!coeff.is_zero()) state.emplace(pairing, std::move(coeff));
  }
  const auto dpow = detail::loop_powers<Coeff>(n);
  Laurent<Coeff> out(Variable::A);
  for (const auto& [pairing, coeff] : state) out += coeff * dpow[detail::trace_loops(pairing, n) - 1];
  return out;
}

template <typename Coeff = std::int64_t>
Laurent<Coeff> bracket(const BraidWord& w, const EvaluatorLimits& limits = {})
{
  if (limits.force_oracle || w.strands() > limits.max_strands) return bracket_state_sum<Coeff>(ClosureDiagram(w), limits);
  return bracket_tl<Coeff>(w, limits);
}

// Writhe-normalized bracket (-A)^(-3w) <D>, still in A.
template <typename Coeff = std::int64_t>
Laurent<Coeff> normalized_bracket(const BraidWord& w, const EvaluatorLimits& limits = {})
{
  const int wr = writhe(w);
  const Coeff sign = (wr % 2 == 0) ? Coeff{1} : Coeff{-1};
  return bracket<Coeff>(w, limits).scaled(-3 * wr, sign);
}

// Jones polynomial via t = A^-4. Returned in t when every exponent is
// integral (always for knots); otherwise the normalized bracket in A.
template <typename Coeff = std::int64_t>
Laurent<Coeff> jones(const BraidWord& w, const EvaluatorLimits& limits = {})
{
  auto f = normalized_bracket<Coeff>(w, limits);
  for (const auto& [e, c] : f.terms())
    if (e % 4 != 0) return f;
  return f.substitute(-4, true, Variable::t);
}

template <typename Coeff = std::int64_t>
int jones_span(const BraidWord& w, const EvaluatorLimits& limits = {})
{
  if (!closes_to_knot(w)) throw std::invalid_argument("Jones span requested for a link closure");
  auto v = jones<Coeff>(w, limits);
  if (v.variable() != Variable::t) throw std::logic_error("knot Jones polynomial with non-integral exponents");
  return v.span();
}

} // namespace cosmetic

#endif // COSMETIC_JONES_HPP
