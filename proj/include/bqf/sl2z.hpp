#ifndef BQF_SL2Z_HPP
#define BQF_SL2Z_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqf/checked.hpp"

namespace bqf {

/// Element [[a, b], [c, d]] of SL2(Z). The determinant is checked on construction.
class Mat2Z {
 public:
  using value_type = std::int64_t;

  /// The identity.
  constexpr Mat2Z() = default;

  Mat2Z(value_type a, value_type b, value_type c, value_type d) : a_(a), b_(b), c_(c), d_(d) {
    if (checked::sub(checked::mul(a, d), checked::mul(b, c)) != 1) {
      throw std::invalid_argument("matrix [[" + std::to_string(a) + "," + std::to_string(b) +
                                  "],[" + std::to_string(c) + "," + std::to_string(d) +
                                  "]] does not have determinant 1");
    }
  }

  [[nodiscard]] constexpr value_type a() const noexcept { return a_; }
  [[nodiscard]] constexpr value_type b() const noexcept { return b_; }
  [[nodiscard]] constexpr value_type c() const noexcept { return c_; }
  [[nodiscard]] constexpr value_type d() const noexcept { return d_; }

  [[nodiscard]] value_type trace() const { return checked::add(a_, d_); }

  [[nodiscard]] Mat2Z inverse() const {
    return unchecked(d_, checked::neg(b_), checked::neg(c_), a_);
  }

  [[nodiscard]] Mat2Z operator-() const {
    return unchecked(checked::neg(a_), checked::neg(b_), checked::neg(c_), checked::neg(d_));
  }

  friend Mat2Z operator*(const Mat2Z& m, const Mat2Z& n) {
    using checked::dot2;
    return unchecked(dot2(m.a_, n.a_, m.b_, n.c_), dot2(m.a_, n.b_, m.b_, n.d_),
                     dot2(m.c_, n.a_, m.d_, n.c_), dot2(m.c_, n.b_, m.d_, n.d_));
  }

  Mat2Z& operator*=(const Mat2Z& n) { return *this = *this * n; }

  friend constexpr bool operator==(const Mat2Z&, const Mat2Z&) = default;
  friend constexpr auto operator<=>(const Mat2Z&, const Mat2Z&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Mat2Z& m) {
    return os << "[[" << m.a_ << "," << m.b_ << "],[" << m.c_ << "," << m.d_ << "]]";
  }

 private:
  struct NoCheck {};
  constexpr Mat2Z(NoCheck, value_type a, value_type b, value_type c, value_type d)
      : a_(a), b_(b), c_(c), d_(d) {}

  // Products and inverses of SL2 elements stay in SL2.
  static constexpr Mat2Z unchecked(value_type a, value_type b, value_type c, value_type d) {
    return Mat2Z(NoCheck{}, a, b, c, d);
  }

  value_type a_ = 1;
  value_type b_ = 0;
  value_type c_ = 0;
  value_type d_ = 1;
};

namespace sl2z {

/// S = [[1,1],[0,1]], the image of sigma_1.
inline Mat2Z S() { return {1, 1, 0, 1}; }
/// T = [[1,0],[-1,1]], the image of sigma_2.
inline Mat2Z T() { return {1, 0, -1, 1}; }

/// S^k and T^k in closed form.
inline Mat2Z S_pow(std::int64_t k) { return {1, k, 0, 1}; }
inline Mat2Z T_pow(std::int64_t k) { return {1, 0, checked::neg(k), 1}; }

inline Mat2Z pow(Mat2Z m, std::int64_t k) {
  if (k < 0) {
    m = m.inverse();
    k = -k;
  }
  Mat2Z out;
  while (k > 0) {
    if (k & 1) out *= m;
    k >>= 1;
    if (k > 0) m *= m;
  }
  return out;
}

enum class Gen { S, T };

struct STFactor {
  Gen gen;
  std::int64_t power;  // nonzero
  friend bool operator==(const STFactor&, const STFactor&) = default;
};

/// A word in S and T. Not canonical: only its product is meaningful.
using STWord = std::vector<STFactor>;

inline Mat2Z multiply_out(const STWord& word) {
  Mat2Z m;
  for (const auto& f : word) m *= (f.gen == Gen::S ? S_pow(f.power) : T_pow(f.power));
  return m;
}

/// Writes M as a product of powers of S and T by Euclidean column reduction.
///
/// Left multiplication by S^k adds k times row 2 to row 1; by T^k subtracts k
/// times row 1 from row 2. Both are used to drive c to zero, which leaves
/// +-[[1, x], [0, 1]]. The sign -I is emitted as (ST)^3.
inline STWord decompose_ST(const Mat2Z& m) {
  std::int64_t a = m.a(), b = m.b(), c = m.c(), d = m.d();
  // Operations applied on the left, in order; the word is their inverses.
  STWord applied;
  while (c != 0) {
    if (a == 0) {
      // c = +-1 here; S moves it into the top row.
      a = checked::add(a, c);
      b = checked::add(b, d);
      applied.push_back({Gen::S, 1});
    } else if ((a < 0 ? -a : a) > (c < 0 ? -c : c)) {
      const std::int64_t q = a / c;
      a = checked::sub(a, checked::mul(q, c));
      b = checked::sub(b, checked::mul(q, d));
      applied.push_back({Gen::S, -q});
    } else {
      const std::int64_t q = c / a;
      c = checked::sub(c, checked::mul(q, a));
      d = checked::sub(d, checked::mul(q, b));
      applied.push_back({Gen::T, q});
    }
  }
  // Now a = d = +-1 and the remainder is +-S^(a*b).
  STWord word;
  word.reserve(applied.size() + 7);
  for (const auto& op : applied) word.push_back({op.gen, checked::neg(op.power)});
  if (a == -1) {
    for (int i = 0; i < 3; ++i) {
      word.push_back({Gen::S, 1});
      word.push_back({Gen::T, 1});
    }
    b = checked::neg(b);
  }
  if (b != 0) word.push_back({Gen::S, b});
  return word;
}

/// Sum of powers of any S,T-decomposition, reduced mod 12. Well defined
/// because the abelianization of SL2(Z) is Z/12.
inline int exponent_mod12(const Mat2Z& m) {
  std::int64_t total = 0;
  for (const auto& f : decompose_ST(m)) total = mod_floor(checked::add(total, mod_floor(f.power, 12)), 12);
  return static_cast<int>(total);
}

}  // namespace sl2z
}  // namespace bqf

#endif  // BQF_SL2Z_HPP
