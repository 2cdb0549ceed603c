#ifndef COSMETIC_BRAID_HPP
#define COSMETIC_BRAID_HPP

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cosmetic {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A signed Artin generator sigma_index^sign.
struct Letter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Alternating alphabets: PlusOdd is {s1, s2^-1, s3, s4^-1, ...}, MinusOdd its mirror.
enum class Pattern { PlusOdd, MinusOdd };

inline const char* pattern_name(Pattern p) { return p == Pattern::PlusOdd ? "PlusOdd" : "MinusOdd"; }

inline Pattern opposite(Pattern p) { return p == Pattern::PlusOdd ? Pattern::MinusOdd : Pattern::PlusOdd; }

// Sign a letter of the given index must carry to conform to the pattern.
inline int pattern_sign(Pattern p, int index)
{
  int s = (index % 2 == 1) ? 1 : -1;
  return p == Pattern::PlusOdd ? s : -s;
}

inline bool conforms(Letter l, Pattern p) { return l.sign == pattern_sign(p, l.index); }

class BraidWord {
public:
  BraidWord() = default;

  explicit BraidWord(int strands, std::vector<Letter> letters = {}) : n_(strands), letters_(std::move(letters))
  {
    if (n_ < 1) throw std::invalid_argument("braid needs at least one strand");
    for (const auto& l : letters_) check(l);
  }

  int strands() const { return n_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(Letter l)
  {
    check(l);
    letters_.push_back(l);
  }

  BraidWord& operator*=(const BraidWord& o)
  {
    if (o.n_ != n_) throw std::invalid_argument("strand count mismatch in braid product");
    letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
    return *this;
  }

  friend BraidWord operator*(BraidWord a, const BraidWord& b) { return a *= b; }

  BraidWord inverse() const
  {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.sign = -l.sign;
    return BraidWord(n_, std::move(out));
  }

  // Canonical interchange text, e.g. "1 -2 1 -2".
  std::string to_string() const
  {
    std::string out;
    for (const auto& l : letters_) {
      if (!out.empty()) out += ' ';
      out += std::to_string(l.sign * l.index);
    }
    return out;
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  void check(Letter l) const
  {
    if (l.index < 1 || l.index > n_ - 1)
      throw std::out_of_range("generator index " + std::to_string(l.index) + " outside B_" + std::to_string(n_));
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  }

  int n_ = 1;
  std::vector<Letter> letters_;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view text)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
  while (i < text.size()) {
    while (i < text.size() && sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !sep(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

inline int parse_int(std::string_view tok)
{
  std::string_view body = tok;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size() || body.empty())
    throw ParseError("malformed token '" + std::string(tok) + "'");
  return v;
}

} // namespace detail

// Whitespace/comma separated nonzero integers; k means s_k, -k means s_k^-1.
inline BraidWord parse_braid(std::string_view text, std::optional<int> n_hint = std::nullopt)
{
  std::vector<Letter> letters;
  int max_index = 0;
  for (auto tok : detail::split_tokens(text)) {
    int v = detail::parse_int(tok);
    if (v == 0) throw ParseError("zero is not a braid generator");
    letters.push_back({std::abs(v), v > 0 ? 1 : -1});
    max_index = std::max(max_index, std::abs(v));
  }
  int n = n_hint.value_or(max_index + 1);
  if (n < 1) throw ParseError("strand count must be positive");
  if (max_index >= n)
    throw ParseError("generator index " + std::to_string(max_index) + " needs more than " + std::to_string(n) + " strands");
  return BraidWord(n, std::move(letters));
}

// Underlying permutation as a 0-based map: strand at top position k ends at perm[k].
inline std::vector<int> permutation(const BraidWord& w)
{
  // at[p]: top strand currently occupying position p
  std::vector<int> at(w.strands());
  for (int k = 0; k < w.strands(); ++k) at[k] = k;
  for (const auto& l : w.letters()) std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> pos(w.strands());
  for (int p = 0; p < w.strands(); ++p) pos[at[p]] = p;
  return pos;
}

inline int cycle_count(const std::vector<int>& perm)
{
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t k = s; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = 1;
  }
  return cycles;
}

inline int component_count(const BraidWord& w) { return cycle_count(permutation(w)); }

inline bool closes_to_knot(const BraidWord& w) { return component_count(w) == 1; }

inline int writhe(const BraidWord& w)
{
  int s = 0;
  for (const auto& l : w.letters()) s += l.sign;
  return s;
}

inline BraidWord mirror(const BraidWord& w)
{
  std::vector<Letter> out = w.letters();
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(w.strands(), std::move(out));
}

inline std::optional<Pattern> is_alternating_word(const BraidWord& w)
{
  for (Pattern p : {Pattern::PlusOdd, Pattern::MinusOdd}) {
    if (std::all_of(w.letters().begin(), w.letters().end(), [p](Letter l) { return conforms(l, p); })) return p;
  }
  return std::nullopt;
}

} // namespace cosmetic

#endif // COSMETIC_BRAID_HPP
