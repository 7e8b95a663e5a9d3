#ifndef BQF_LAURENT_HPP
#define BQF_LAURENT_HPP

// Exact arithmetic in Z[sqrt(q), 1/sqrt(q)].
//
// Elements are stored as sparse maps from the exponent of s = sqrt(q) to a
// nonzero integer coefficient, so q itself sits at stored exponent 2 and the
// ring is an ordinary integer-exponent Laurent ring in s.

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bqf/checked.hpp"

namespace bqf {

namespace detail {

// Coefficient arithmetic: checked for builtin signed integers, plain operators
// for anything else (e.g. an arbitrary-precision integer type).
template <class Coeff>
struct CoeffOps {
  static Coeff add(const Coeff& x, const Coeff& y) { return x + y; }
  static Coeff sub(const Coeff& x, const Coeff& y) { return x - y; }
  static Coeff mul(const Coeff& x, const Coeff& y) { return x * y; }
};

template <std::signed_integral Int>
struct CoeffOps<Int> {
  static Int add(Int x, Int y) { return checked::add(x, y); }
  static Int sub(Int x, Int y) { return checked::sub(x, y); }
  static Int mul(Int x, Int y) { return checked::mul(x, y); }
};

}  // namespace detail

/// Gaussian integer re + im*i.
template <class Int>
struct BasicGaussInt {
  Int re{};
  Int im{};

  friend bool operator==(const BasicGaussInt&, const BasicGaussInt&) = default;

  friend BasicGaussInt operator+(const BasicGaussInt& x, const BasicGaussInt& y) {
    using Ops = detail::CoeffOps<Int>;
    return {Ops::add(x.re, y.re), Ops::add(x.im, y.im)};
  }

  friend BasicGaussInt operator*(const BasicGaussInt& x, const BasicGaussInt& y) {
    using Ops = detail::CoeffOps<Int>;
    return {Ops::sub(Ops::mul(x.re, y.re), Ops::mul(x.im, y.im)),
            Ops::add(Ops::mul(x.re, y.im), Ops::mul(x.im, y.re))};
  }

  /// i^n for any integer n.
  static BasicGaussInt i_pow(std::int64_t n) {
    switch (mod_floor(n, 4)) {
      case 0: return {Int{1}, Int{0}};
      case 1: return {Int{0}, Int{1}};
      case 2: return {Int{-1}, Int{0}};
      default: return {Int{0}, Int{-1}};
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicGaussInt& z) {
    return os << z.re << (z.im < Int{0} ? " - " : " + ")
              << (z.im < Int{0} ? -z.im : z.im) << "i";
  }
};

using GaussInt = BasicGaussInt<std::int64_t>;

/// Thrown by exact_div when the divisor does not divide the dividend.
class NotDivisibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Coeff>
class BasicHalfLaurent {
 public:
  using coeff_type = Coeff;
  /// exponent of s = sqrt(q) -> nonzero coefficient
  using term_map = std::map<int, Coeff>;

  BasicHalfLaurent() = default;

  explicit BasicHalfLaurent(Coeff constant) { set(0, std::move(constant)); }

  /// Builds from (s-exponent, coefficient) pairs; repeated exponents accumulate.
  BasicHalfLaurent(std::initializer_list<std::pair<int, Coeff>> terms) {
    for (const auto& [e, c] : terms) accumulate(e, c);
  }

  static BasicHalfLaurent from_terms(const term_map& terms) {
    BasicHalfLaurent p;
    for (const auto& [e, c] : terms) p.accumulate(e, c);
    return p;
  }

  /// c * s^e
  static BasicHalfLaurent monomial(Coeff c, int s_exp) {
    BasicHalfLaurent p;
    p.set(s_exp, std::move(c));
    return p;
  }

  /// c * q^k
  static BasicHalfLaurent q_power(int k, Coeff c = Coeff{1}) {
    return monomial(std::move(c), 2 * k);
  }

  static BasicHalfLaurent one() { return BasicHalfLaurent(Coeff{1}); }

  [[nodiscard]] const term_map& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  [[nodiscard]] Coeff coeff(int s_exp) const {
    const auto it = terms_.find(s_exp);
    return it == terms_.end() ? Coeff{0} : it->second;
  }

  /// Smallest and largest s-exponents. Precondition: nonzero.
  [[nodiscard]] int low_exponent() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  [[nodiscard]] int high_exponent() const {
    require_nonzero();
    return terms_.rbegin()->first;
  }

  /// True when every exponent of s is even, i.e. the element lies in Z[q, 1/q].
  [[nodiscard]] bool in_integral_powers() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first % 2 == 0; });
  }

  friend bool operator==(const BasicHalfLaurent&, const BasicHalfLaurent&) = default;

  BasicHalfLaurent& operator+=(const BasicHalfLaurent& r) {
    for (const auto& [e, c] : r.terms_) accumulate(e, c);
    return *this;
  }

  BasicHalfLaurent& operator-=(const BasicHalfLaurent& r) {
    for (const auto& [e, c] : r.terms_) accumulate(e, Ops::sub(Coeff{0}, c));
    return *this;
  }

  friend BasicHalfLaurent operator+(BasicHalfLaurent p, const BasicHalfLaurent& r) {
    return p += r;
  }
  friend BasicHalfLaurent operator-(BasicHalfLaurent p, const BasicHalfLaurent& r) {
    return p -= r;
  }
  friend BasicHalfLaurent operator-(const BasicHalfLaurent& p) {
    return BasicHalfLaurent{} - p;
  }

  friend BasicHalfLaurent operator*(const BasicHalfLaurent& p, const BasicHalfLaurent& r) {
    BasicHalfLaurent out;
    for (const auto& [e1, c1] : p.terms_) {
      for (const auto& [e2, c2] : r.terms_) {
        out.accumulate(checked::add(e1, e2), Ops::mul(c1, c2));
      }
    }
    return out;
  }

  BasicHalfLaurent& operator*=(const BasicHalfLaurent& r) { return *this = *this * r; }

  /// Multiplication by s^k.
  [[nodiscard]] BasicHalfLaurent shifted(int s_shift) const {
    BasicHalfLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(checked::add(e, s_shift), c);
    return out;
  }

  /// Substitutes q -> 1/q (the mirror image for link polynomials).
  [[nodiscard]] BasicHalfLaurent mirrored() const {
    BasicHalfLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
  }

 private:
  using Ops = detail::CoeffOps<Coeff>;

  void require_nonzero() const {
    if (terms_.empty()) throw std::domain_error("exponent of the zero polynomial");
  }

  void set(int e, Coeff c) {
    if (c != Coeff{0}) terms_[e] = std::move(c);
  }

  void accumulate(int e, const Coeff& c) {
    if (c == Coeff{0}) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second = Ops::add(it->second, c);
    if (it->second == Coeff{0}) terms_.erase(it);
  }

  term_map terms_;
};

using HalfLaurent = BasicHalfLaurent<std::int64_t>;

/// Unit bases whose integer powers appear as prefactors in the link polynomial
/// formulas.
enum class UnitBase { sqrt_q, neg_sqrt_q, neg_q };

/// base^n for any integer n (negative allowed).
template <class Coeff = std::int64_t>
[[nodiscard]] BasicHalfLaurent<Coeff> monomial_pow(UnitBase base, int n) {
  const bool odd = (n % 2) != 0;
  switch (base) {
    case UnitBase::sqrt_q:
      return BasicHalfLaurent<Coeff>::monomial(Coeff{1}, n);
    case UnitBase::neg_sqrt_q:
      return BasicHalfLaurent<Coeff>::monomial(odd ? Coeff{-1} : Coeff{1}, n);
    case UnitBase::neg_q:
      return BasicHalfLaurent<Coeff>::monomial(odd ? Coeff{-1} : Coeff{1},
                                               checked::mul(2, n));
  }
  throw std::invalid_argument("unknown unit base");
}

/// Exact quotient p / d in Z[s, 1/s]. Throws NotDivisibleError unless d | p.
template <class Coeff>
[[nodiscard]] BasicHalfLaurent<Coeff> exact_div(const BasicHalfLaurent<Coeff>& p,
                                                const BasicHalfLaurent<Coeff>& d) {
  using Ops = detail::CoeffOps<Coeff>;
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.is_zero()) return {};

  // Strip the lowest powers of s: both become polynomials with nonzero
  // constant term, and the quotient is determined up to the shift below.
  const int p_low = p.low_exponent();
  const int d_low = d.low_exponent();
  std::vector<Coeff> rem(static_cast<std::size_t>(p.high_exponent() - p_low + 1), Coeff{0});
  std::vector<Coeff> div(static_cast<std::size_t>(d.high_exponent() - d_low + 1), Coeff{0});
  for (const auto& [e, c] : p.terms()) rem[static_cast<std::size_t>(e - p_low)] = c;
  for (const auto& [e, c] : d.terms()) div[static_cast<std::size_t>(e - d_low)] = c;

  if (rem.size() < div.size()) throw NotDivisibleError("divisor has larger degree span");

  const std::size_t q_len = rem.size() - div.size() + 1;
  const Coeff& lead = div.back();
  typename BasicHalfLaurent<Coeff>::term_map quotient;
  for (std::size_t k = q_len; k-- > 0;) {
    const Coeff& top = rem[k + div.size() - 1];
    if (top == Coeff{0}) continue;
    if (top % lead != Coeff{0}) throw NotDivisibleError("leading coefficient does not divide");
    const Coeff factor = top / lead;
    for (std::size_t j = 0; j < div.size(); ++j) {
      rem[k + j] = Ops::sub(rem[k + j], Ops::mul(factor, div[j]));
    }
    quotient.emplace(static_cast<int>(k) + p_low - d_low, factor);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Coeff& c) { return c != Coeff{0}; })) {
    throw NotDivisibleError("nonzero remainder");
  }
  return BasicHalfLaurent<Coeff>::from_terms(quotient);
}

/// Specialization q = -1, i.e. s -> i.
template <class Coeff>
[[nodiscard]] BasicGaussInt<Coeff> eval_q_minus_one(const BasicHalfLaurent<Coeff>& p) {
  BasicGaussInt<Coeff> sum{};
  for (const auto& [e, c] : p.terms()) {
    sum = sum + BasicGaussInt<Coeff>::i_pow(e) * BasicGaussInt<Coeff>{c, Coeff{0}};
  }
  return sum;
}

/// Renders terms in increasing exponent order, e.g. "-1*q^-1 + 2 + 1*q^3/2".
/// The zero polynomial renders as "0".
template <class Coeff>
[[nodiscard]] std::string to_string(const BasicHalfLaurent<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e == 0) continue;
    os << "*q^";
    if (e % 2 == 0) {
      os << e / 2;
    } else {
      os << e << "/2";
    }
  }
  return os.str();
}

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const BasicHalfLaurent<Coeff>& p) {
  return os << to_string(p);
}

}  // namespace bqf

#endif  // BQF_LAURENT_HPP
