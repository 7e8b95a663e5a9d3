#ifndef BQF_CHECKED_HPP
#define BQF_CHECKED_HPP

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bqf {

/// Raised whenever an exact integer computation would leave the range of its
/// fixed-width type. Nothing in this library wraps silently.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what)
      : std::overflow_error("integer overflow in " + what) {}
};

namespace checked {

template <std::signed_integral Int>
[[nodiscard]] constexpr Int add(Int x, Int y) {
  Int r{};
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("add");
  return r;
}

template <std::signed_integral Int>
[[nodiscard]] constexpr Int sub(Int x, Int y) {
  Int r{};
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("sub");
  return r;
}

template <std::signed_integral Int>
[[nodiscard]] constexpr Int mul(Int x, Int y) {
  Int r{};
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("mul");
  return r;
}

template <std::signed_integral Int>
[[nodiscard]] constexpr Int neg(Int x) {
  return sub(Int{0}, x);
}

// x*y + z*w, the shape of every 2x2 product entry.
template <std::signed_integral Int>
[[nodiscard]] constexpr Int dot2(Int x, Int y, Int z, Int w) {
  return add(mul(x, y), mul(z, w));
}

}  // namespace checked

/// Floor of the square root of a nonnegative integer, exact for all int64.
[[nodiscard]] constexpr std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt of a negative number");
  if (n < 2) return n;
  // Newton iteration from an upper bound; monotone decreasing to the floor.
  std::int64_t x = n;
  std::int64_t y = x / 2 + 1;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

[[nodiscard]] constexpr bool is_square(std::int64_t n) {
  if (n < 0) return false;
  const std::int64_t r = isqrt(n);
  return r * r == n;
}

/// Floor of x / m for m > 0.
[[nodiscard]] constexpr std::int64_t floor_div(std::int64_t x, std::int64_t m) {
  const std::int64_t q = x / m;
  return (x % m != 0 && x < 0) ? q - 1 : q;
}

/// Euclidean modulus: result in [0, |m|).
[[nodiscard]] constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  if (m < 0) m = -m;
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace bqf

#endif  // BQF_CHECKED_HPP
