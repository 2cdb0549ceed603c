#ifndef COSMETIC_BENNEQUIN_HPP
#define COSMETIC_BENNEQUIN_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosmetic/braid.hpp"

namespace cosmetic {

// a_{i,j}^sign, a twisted band between strands i < j.
struct Band {
  int i = 1;
  int j = 2;
  int sign = 1;

  friend bool operator==(const Band&, const Band&) = default;
};

class BandWord {
public:
  BandWord() = default;

  explicit BandWord(int strands, std::vector<Band> bands = {}) : n_(strands), bands_(std::move(bands))
  {
    if (n_ < 2) throw std::invalid_argument("band words need at least two strands");
    for (const auto& b : bands_) check(b);
  }

  int strands() const { return n_; }
  const std::vector<Band>& bands() const { return bands_; }
  std::size_t size() const { return bands_.size(); }

  std::string to_string() const
  {
    std::string out;
    for (const auto& b : bands_) {
      if (!out.empty()) out += ' ';
      if (b.sign < 0) out += '-';
      out += "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
    }
    return out;
  }

  friend bool operator==(const BandWord&, const BandWord&) = default;

private:
  void check(const Band& b) const
  {
    if (b.i < 1 || b.j > n_ || b.i >= b.j)
      throw std::out_of_range("band (" + std::to_string(b.i) + "," + std::to_string(b.j) + ") invalid for " +
                              std::to_string(n_) + " strands");
    if (b.sign != 1 && b.sign != -1) throw std::invalid_argument("band sign must be +1 or -1");
  }

  int n_ = 2;
  std::vector<Band> bands_;
};

// Tokens "(i,j)" or "-(i,j)", whitespace separated. Strand count defaults to max j.
inline BandWord parse_bands(std::string_view text, std::optional<int> n_hint = std::nullopt)
{
  std::vector<Band> bands;
  std::size_t k = 0;
  int max_j = 0;
  auto skip_ws = [&] {
    while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\n' || text[k] == '\r')) ++k;
  };
  auto read_int = [&]() {
    std::size_t start = k;
    if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
    while (k < text.size() && text[k] >= '0' && text[k] <= '9') ++k;
    return detail::parse_int(text.substr(start, k - start));
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (k >= text.size() || text[k] != ch)
      throw ParseError(std::string("expected '") + ch + "' at offset " + std::to_string(k) + " in band word");
    ++k;
  };
  for (skip_ws(); k < text.size(); skip_ws()) {
    int sign = 1;
    if (text[k] == '-') {
      sign = -1;
      ++k;
    }
    expect('(');
    skip_ws();
    int i = read_int();
    expect(',');
    skip_ws();
    int j = read_int();
    expect(')');
    if (i < 1 || j <= i) throw ParseError("band (" + std::to_string(i) + "," + std::to_string(j) + ") needs 1 <= i < j");
    max_j = std::max(max_j, j);
    bands.push_back({i, j, sign});
  }
  int n = n_hint.value_or(std::max(max_j, 2));
  if (max_j > n) throw ParseError("band index " + std::to_string(max_j) + " exceeds strand count " + std::to_string(n));
  return BandWord(n, std::move(bands));
}

// a_{i,j}^sign = (s_i ... s_{j-2}) s_{j-1}^sign (s_i ... s_{j-2})^-1
inline BraidWord expand_band(int i, int j, int n, int sign)
{
  if (i < 1 || j > n || i >= j)
    throw std::out_of_range("band (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for " +
                            std::to_string(n) + " strands");
  std::vector<Letter> out;
  for (int k = i; k <= j - 2; ++k) out.push_back({k, 1});
  out.push_back({j - 1, sign});
  for (int k = j - 2; k >= i; --k) out.push_back({k, -1});
  return BraidWord(n, std::move(out));
}

inline BraidWord expand(const BandWord& b)
{
  BraidWord out(b.strands());
  for (const auto& band : b.bands()) out *= expand_band(band.i, band.j, b.strands(), band.sign);
  return out;
}

// Every Artin letter s_i^e is the band a_{i,i+1}^e.
inline BandWord as_band_word(const BraidWord& w)
{
  if (w.strands() < 2) return BandWord(2);
  std::vector<Band> bands;
  for (const auto& l : w.letters()) bands.push_back({l.index, l.index + 1, l.sign});
  return BandWord(w.strands(), std::move(bands));
}

// Genus of the Bennequin surface: k bands on n strands give k = 2g - 1 + n.
inline int bennequin_genus(const BandWord& b)
{
  const int k = static_cast<int>(b.size());
  const int n = b.strands();
  if ((k + 1 - n) % 2 != 0)
    throw std::invalid_argument("band count " + std::to_string(k) + " has the wrong parity for a knot on " +
                                std::to_string(n) + " strands");
  if (!closes_to_knot(expand(b))) throw std::invalid_argument("band word closure is not a knot");
  return (k + 1 - n) / 2;
}

class BandCensus {
public:
  explicit BandCensus(int strands) : n_(strands) {}

  int strands() const { return n_; }
  int total() const { return total_; }

  int count(int i, int j) const
  {
    if (i > j) std::swap(i, j);
    auto it = counts_.find({i, j});
    return it == counts_.end() ? 0 : it->second;
  }

  void add(int i, int j)
  {
    if (i > j) std::swap(i, j);
    ++counts_[{i, j}];
    ++total_;
  }

  // r_{1,n}
  int wrap() const { return count(1, n_); }

  const std::map<std::pair<int, int>, int>& counts() const { return counts_; }

private:
  int n_;
  int total_ = 0;
  std::map<std::pair<int, int>, int> counts_;
};

inline BandCensus band_census(const BandWord& b)
{
  BandCensus c(b.strands());
  for (const auto& band : b.bands()) c.add(band.i, band.j);
  return c;
}

// Conjugation by delta = s_1 ... s_{n-1}: a_{i,j} -> a_{i+1,j+1}, indices mod n.
inline BandWord delta_conjugate(const BandWord& b)
{
  const int n = b.strands();
  std::vector<Band> out;
  out.reserve(b.size());
  for (const auto& band : b.bands()) {
    int i = band.i % n + 1;
    int j = band.j % n + 1;
    if (i > j) std::swap(i, j);
    out.push_back({i, j, band.sign});
  }
  return BandWord(n, std::move(out));
}

struct WrapChoice {
  BandWord word;
  int shift = 0;
  int wrap_count = 0;
};

// The delta-conjugate with fewest a_{1,n} bands; ties go to the smallest shift.
inline WrapChoice minimize_wrap(const BandWord& b)
{
  WrapChoice best{b, 0, band_census(b).wrap()};
  BandWord cur = b;
  for (int s = 1; s < b.strands(); ++s) {
    cur = delta_conjugate(cur);
    int r = band_census(cur).wrap();
    if (r < best.wrap_count) best = {cur, s, r};
  }
  return best;
}

} // namespace cosmetic

#endif // COSMETIC_BENNEQUIN_HPP
