#ifndef BQF_BRAID3_HPP
#define BQF_BRAID3_HPP

// Braid words in B3 and the invariants read off from them: exponent sum,
// reduced Burau matrix, the projection to SL2(Z), and the Alexander and Jones
// polynomials of the braid closure.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bqf/checked.hpp"
#include "bqf/laurent.hpp"
#include "bqf/sl2z.hpp"

namespace bqf {

/// Signed Artin generator. The underlying value is the CLI token (+-1, +-2).
enum class Letter : std::int8_t { s1 = 1, s1_inv = -1, s2 = 2, s2_inv = -2 };

[[nodiscard]] constexpr int generator_index(Letter l) noexcept {
  const int v = static_cast<int>(l);
  return v < 0 ? -v : v;
}
[[nodiscard]] constexpr bool is_inverse(Letter l) noexcept { return static_cast<int>(l) < 0; }
[[nodiscard]] constexpr int exponent(Letter l) noexcept { return is_inverse(l) ? -1 : 1; }
[[nodiscard]] constexpr Letter inverse(Letter l) noexcept {
  return static_cast<Letter>(-static_cast<int>(l));
}

inline constexpr std::array<Letter, 4> kAllLetters{Letter::s1, Letter::s1_inv, Letter::s2,
                                                   Letter::s2_inv};

/// A finite word in sigma_1^{+-1}, sigma_2^{+-1}. Not necessarily reduced; the
/// empty word is the identity braid.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit BraidWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  [[nodiscard]] const std::vector<Letter>& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] auto begin() const noexcept { return letters_.begin(); }
  [[nodiscard]] auto end() const noexcept { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }

  /// Appends |k| copies of l (or of its inverse when k < 0).
  void append_power(Letter l, std::int64_t k) {
    const Letter x = k < 0 ? bqf::inverse(l) : l;
    letters_.insert(letters_.end(), static_cast<std::size_t>(k < 0 ? -k : k), x);
  }

  BraidWord& operator*=(const BraidWord& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  friend BraidWord operator*(BraidWord lhs, const BraidWord& rhs) { return lhs *= rhs; }

  [[nodiscard]] BraidWord inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l = bqf::inverse(l);
    return BraidWord(std::move(out));
  }

  /// Cancels adjacent x x^{-1} pairs until none remain.
  [[nodiscard]] BraidWord freely_reduced() const {
    std::vector<Letter> out;
    for (Letter l : letters_) {
      if (!out.empty() && out.back() == bqf::inverse(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return BraidWord(std::move(out));
  }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// w^k for k >= 0.
[[nodiscard]] inline BraidWord power(const BraidWord& w, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative word power");
  BraidWord out;
  for (std::int64_t i = 0; i < k; ++i) out *= w;
  return out;
}

/// The Garside element sigma_1 sigma_2 sigma_1.
[[nodiscard]] inline BraidWord garside() { return {Letter::s1, Letter::s2, Letter::s1}; }

/// (sigma_1 sigma_2 sigma_1)^k, k >= 0.
[[nodiscard]] inline BraidWord garside_power(std::int64_t k) {
  if (k < 0) {
    throw std::invalid_argument("garside_power requires k >= 0; compose inverse letters instead");
  }
  return power(garside(), k);
}

[[nodiscard]] inline std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t e = 0;
  for (Letter l : w) e += exponent(l);
  return e;
}

// --- Burau representation --------------------------------------------------

/// 2x2 matrix over Z[q, 1/q], row-major.
struct BurauMat {
  std::array<HalfLaurent, 4> entries{HalfLaurent::one(), HalfLaurent{}, HalfLaurent{},
                                     HalfLaurent::one()};

  [[nodiscard]] const HalfLaurent& at(int row, int col) const { return entries[row * 2 + col]; }

  [[nodiscard]] HalfLaurent trace() const { return entries[0] + entries[3]; }
  [[nodiscard]] HalfLaurent det() const {
    return entries[0] * entries[3] - entries[1] * entries[2];
  }

  friend BurauMat operator*(const BurauMat& m, const BurauMat& n) {
    const auto& x = m.entries;
    const auto& y = n.entries;
    return {{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
             x[2] * y[1] + x[3] * y[3]}};
  }

  friend bool operator==(const BurauMat&, const BurauMat&) = default;

  /// Entrywise q = -1. Entries live in Z[q, 1/q], so the results are integers.
  [[nodiscard]] Mat2Z at_q_minus_one() const {
    std::array<std::int64_t, 4> v{};
    for (std::size_t i = 0; i < 4; ++i) {
      const GaussInt z = eval_q_minus_one(entries[i]);
      if (z.im != 0) throw std::logic_error("Burau entry with half-integral exponent");
      v[i] = z.re;
    }
    return {v[0], v[1], v[2], v[3]};
  }
};

namespace detail {

inline const BurauMat& burau_generator(Letter l) {
  // sigma_1 -> [[1, -q], [0, -q]],  sigma_2 -> [[-q, 0], [-1, 1]]
  // and their exact inverses, all with entries in Z[q, 1/q].
  static const std::array<BurauMat, 4> table = [] {
    const HalfLaurent one = HalfLaurent::one();
    const HalfLaurent zero{};
    const HalfLaurent neg_one(-1);
    const HalfLaurent neg_q = HalfLaurent::q_power(1, -1);
    const HalfLaurent neg_q_inv = HalfLaurent::q_power(-1, -1);
    return std::array<BurauMat, 4>{
        BurauMat{{one, neg_q, zero, neg_q}},               // s1
        BurauMat{{one, neg_one, zero, neg_q_inv}},         // s1^-1
        BurauMat{{neg_q, zero, neg_one, one}},             // s2
        BurauMat{{neg_q_inv, zero, neg_q_inv, one}},       // s2^-1
    };
  }();
  switch (l) {
    case Letter::s1: return table[0];
    case Letter::s1_inv: return table[1];
    case Letter::s2: return table[2];
    case Letter::s2_inv: return table[3];
  }
  throw std::invalid_argument("bad letter");
}

inline Mat2Z phi_generator(Letter l) {
  switch (l) {
    case Letter::s1: return sl2z::S();
    case Letter::s1_inv: return sl2z::S().inverse();
    case Letter::s2: return sl2z::T();
    case Letter::s2_inv: return sl2z::T().inverse();
  }
  throw std::invalid_argument("bad letter");
}

}  // namespace detail

[[nodiscard]] inline BurauMat burau(Letter l) { return detail::burau_generator(l); }

[[nodiscard]] inline BurauMat burau(const BraidWord& w) {
  BurauMat m;
  for (Letter l : w) m = m * detail::burau_generator(l);
  return m;
}

[[nodiscard]] inline Mat2Z phi(Letter l) { return detail::phi_generator(l); }

[[nodiscard]] inline Mat2Z phi(const BraidWord& w) {
  Mat2Z m;
  for (Letter l : w) m *= detail::phi_generator(l);
  return m;
}

[[nodiscard]] inline std::int64_t trace_b3(const BraidWord& w) { return phi(w).trace(); }

// --- link polynomials of the closure ---------------------------------------

/// 1 + q + q^2
[[nodiscard]] inline HalfLaurent cyclotomic3() {
  return HalfLaurent{{0, 1}, {2, 1}, {4, 1}};
}

/// Alexander polynomial from (tr beta, eps):
///   (-1/sqrt q)^(eps-2) * (1 - tr + (-q)^eps) / (1 + q + q^2).
[[nodiscard]] inline HalfLaurent alexander_from(const HalfLaurent& burau_trace, std::int64_t eps) {
  const int e = static_cast<int>(eps);
  const HalfLaurent numerator =
      HalfLaurent::one() - burau_trace + monomial_pow(UnitBase::neg_q, e);
  return monomial_pow(UnitBase::neg_sqrt_q, 2 - e) * exact_div(numerator, cyclotomic3());
}

/// Jones polynomial from (tr beta, eps): sqrt(q)^eps * (q + 1/q + tr).
[[nodiscard]] inline HalfLaurent jones_from(const HalfLaurent& burau_trace, std::int64_t eps) {
  const HalfLaurent q_plus_inv = HalfLaurent{{2, 1}, {-2, 1}};
  return monomial_pow(UnitBase::sqrt_q, static_cast<int>(eps)) * (q_plus_inv + burau_trace);
}

/// Recovers V from Delta and eps:
///   sqrt(q)^eps [q + 1/q + 1 + (-q)^eps - (-sqrt q)^(eps-2) (1+q+q^2) Delta].
[[nodiscard]] inline HalfLaurent jones_from_alexander(const HalfLaurent& alexander_poly,
                                                      std::int64_t eps) {
  const int e = static_cast<int>(eps);
  const HalfLaurent bracket = HalfLaurent{{2, 1}, {-2, 1}, {0, 1}} +
                              monomial_pow(UnitBase::neg_q, e) -
                              monomial_pow(UnitBase::neg_sqrt_q, e - 2) * cyclotomic3() *
                                  alexander_poly;
  return monomial_pow(UnitBase::sqrt_q, e) * bracket;
}

[[nodiscard]] inline HalfLaurent alexander(const BraidWord& w) {
  return alexander_from(burau(w).trace(), exponent_sum(w));
}

[[nodiscard]] inline HalfLaurent jones(const BraidWord& w) {
  return jones_from(burau(w).trace(), exponent_sum(w));
}

/// i^eps * (tr - 2), the common value of V and Delta at q = -1.
[[nodiscard]] inline GaussInt special_value(std::int64_t trace, std::int64_t eps) {
  return GaussInt::i_pow(eps) * GaussInt{checked::sub(trace, std::int64_t{2}), 0};
}

[[nodiscard]] inline GaussInt special_value(const BraidWord& w) {
  return special_value(trace_b3(w), exponent_sum(w));
}

// --- text form ---------------------------------------------------------------

/// Syntax error in a braid word, with the byte offset of the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& cause)
      : std::invalid_argument("braid word, position " + std::to_string(position) + ": " + cause),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Largest |k| accepted in a `g^k` token.
inline constexpr std::int64_t kMaxTokenPower = 1'000'000;

/// Parses whitespace-separated tokens `[+-]?(1|2)(^[+-]?digits)?`.
/// "1 2 -1" is s1 s2 s1^-1; "1^-2" and "-1^2" both mean s1^-2.
[[nodiscard]] inline BraidWord parse_braid(std::string_view text) {
  BraidWord word;
  std::size_t i = 0;
  const auto at_space = [&](std::size_t k) {
    return k >= text.size() || std::isspace(static_cast<unsigned char>(text[k]));
  };
  const auto read_int = [&](std::size_t& k, std::size_t token_start, const char* what) {
    bool negative = false;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) negative = text[k++] == '-';
    const std::size_t digits_start = k;
    std::int64_t value = 0;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
      value = value * 10 + (text[k] - '0');
      if (value > kMaxTokenPower) throw ParseError(token_start, std::string(what) + " too large");
      ++k;
    }
    if (k == digits_start) throw ParseError(k, std::string("expected digits for ") + what);
    return negative ? -value : value;
  };

  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    const std::int64_t signed_index = read_int(i, start, "generator index");
    const std::int64_t index = signed_index < 0 ? -signed_index : signed_index;
    if (index != 1 && index != 2) {
      throw ParseError(start, "generator index " + std::to_string(index) +
                                  " out of range for B3 (expected 1 or 2)");
    }
    std::int64_t k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      k = read_int(i, start, "power");
    }
    if (!at_space(i)) {
      throw ParseError(i, std::string("unexpected character '") + text[i] + "'");
    }
    const Letter base = index == 1 ? Letter::s1 : Letter::s2;
    word.append_power(signed_index < 0 ? inverse(base) : base, k);
  }
  return word;
}

/// Canonical text form: maximal runs of one letter collapse to `g^k`, and a
/// single inverse letter is written `-g`. parse_braid(to_string(w)) == w.
[[nodiscard]] inline std::string to_string(const BraidWord& w) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const std::size_t run = j - i;
    if (!out.empty()) out += ' ';
    const int g = generator_index(ls[i]);
    if (run == 1) {
      out += (is_inverse(ls[i]) ? "-" : "") + std::to_string(g);
    } else {
      out += std::to_string(g) + "^" + (is_inverse(ls[i]) ? "-" : "") + std::to_string(run);
    }
    i = j;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& w) {
  return os << '"' << to_string(w) << '"';
}

}  // namespace bqf

#endif  // BQF_BRAID3_HPP
