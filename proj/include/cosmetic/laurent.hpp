#ifndef COSMETIC_LAURENT_HPP
#define COSMETIC_LAURENT_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace cosmetic {

enum class Variable { A, t };

inline const char* variable_name(Variable v) { return v == Variable::A ? "A" : "t"; }

namespace detail {

template <typename T>
T checked_add(T a, T b)
{
  if constexpr (std::is_integral_v<T>) {
    T out{};
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
    return out;
  } else {
    return a + b;
  }
}

template <typename T>
T checked_mul(T a, T b)
{
  if constexpr (std::is_integral_v<T>) {
    T out{};
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("Laurent coefficient overflow");
    return out;
  } else {
    return a * b;
  }
}

} // namespace detail

// Sparse Laurent polynomial in one variable with exact integer coefficients.
// Zero coefficients are never stored.
template <typename Coeff = std::int64_t>
class Laurent {
public:
  using coeff_type = Coeff;
  using term_map = std::map<int, Coeff>;

  explicit Laurent(Variable var = Variable::A) : var_(var) {}

  Laurent(Variable var, std::initializer_list<std::pair<const int, Coeff>> terms) : var_(var)
  {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static Laurent constant(Coeff c, Variable var = Variable::A)
  {
    Laurent p(var);
    p.add_term(0, c);
    return p;
  }

  static Laurent monomial(int exp, Coeff c = Coeff{1}, Variable var = Variable::A)
  {
    Laurent p(var);
    p.add_term(exp, c);
    return p;
  }

  Variable variable() const { return var_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(int exp) const
  {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  int min_exponent() const
  {
    if (is_zero()) throw std::domain_error("exponent range of zero polynomial");
    return terms_.begin()->first;
  }

  int max_exponent() const
  {
    if (is_zero()) throw std::domain_error("exponent range of zero polynomial");
    return terms_.rbegin()->first;
  }

  int span() const { return max_exponent() - min_exponent(); }

  void add_term(int exp, Coeff c)
  {
    if (c == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
      it->second = detail::checked_add(it->second, c);
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o)
  {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o)
  {
    for (const auto& [e, c] : o.terms_) add_term(e, detail::checked_mul(c, Coeff{-1}));
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b)
  {
    Laurent out(a.var_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, detail::checked_mul(ca, cb));
    return out;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  // Multiply by c * x^exp.
  Laurent scaled(int exp, Coeff c) const
  {
    Laurent out(var_);
    if (c == Coeff{}) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + exp, detail::checked_mul(k, c));
    return out;
  }

  // Value at x = 1.
  Coeff at_one() const
  {
    Coeff sum{};
    for (const auto& [e, c] : terms_) sum = detail::checked_add(sum, c);
    return sum;
  }

  // p(x) -> p(x^factor) for factor in {-1, 1, ...} or exact division of every
  // exponent by a nonzero factor when `divide` is set.
  Laurent substitute(int factor, bool divide, Variable target) const
  {
    Laurent out(target);
    for (const auto& [e, c] : terms_) {
      int ne = e;
      if (divide) {
        if (e % factor != 0) throw std::domain_error("exponent not divisible in substitution");
        ne = e / factor;
      } else {
        ne = e * factor;
      }
      out.add_term(ne, c);
    }
    return out;
  }

  friend bool operator==(const Laurent& a, const Laurent& b)
  {
    return a.var_ == b.var_ && a.terms_ == b.terms_;
  }

  // Human-readable form with descending exponents, e.g. "-t^4+t^3+t".
  std::string to_string() const
  {
    if (is_zero()) return "0";
    std::string out;
    const std::string x = variable_name(var_);
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      bool neg = c < Coeff{};
      Coeff mag = neg ? Coeff{} - c : c;
      if (neg) out += '-';
      else if (!out.empty()) out += '+';
      if (e == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != Coeff{1}) out += std::to_string(mag);
      out += x;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  // Ascending "coeff*x^exp" list used in reports.
  std::vector<std::string> term_list() const
  {
    std::vector<std::string> out;
    const std::string x = variable_name(var_);
    for (const auto& [e, c] : terms_) out.push_back(std::to_string(c) + "*" + x + "^" + std::to_string(e));
    return out;
  }

private:
  Variable var_;
  term_map terms_;
};

using LaurentPoly = Laurent<std::int64_t>;

} // namespace cosmetic

#endif // COSMETIC_LAURENT_HPP
