#ifndef BQF_QUADFORMS_HPP
#define BQF_QUADFORMS_HPP

// Integral binary quadratic forms ax^2 + bxy + cy^2, their reduction theory
// for nonsquare discriminants, and the correspondence between trace-t
// conjugacy classes of SL2(Z) and form classes of discriminant t^2 - 4.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqf/checked.hpp"
#include "bqf/sl2z.hpp"

namespace bqf {

/// Raised for the parabolic traces t = +-2, which have square discriminant.
class ExcludedTraceError : public std::domain_error {
 public:
  explicit ExcludedTraceError(std::int64_t t)
      : std::domain_error("t = ±2 excluded (got t = " + std::to_string(t) + ")") {}
};

inline void require_supported_trace(std::int64_t t) {
  if (t == 2 || t == -2) throw ExcludedTraceError(t);
}

/// D = t^2 - 4.
[[nodiscard]] inline std::int64_t trace_discriminant(std::int64_t t) {
  return checked::sub(checked::mul(t, t), std::int64_t{4});
}

struct QForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend constexpr bool operator==(const QForm&, const QForm&) = default;
  friend constexpr auto operator<=>(const QForm&, const QForm&) = default;

  [[nodiscard]] QForm negated() const {
    return {checked::neg(a), checked::neg(b), checked::neg(c)};
  }

  [[nodiscard]] std::int64_t operator()(std::int64_t x, std::int64_t y) const {
    using namespace checked;
    return add(add(mul(a, mul(x, x)), mul(b, mul(x, y))), mul(c, mul(y, y)));
  }

  friend std::ostream& operator<<(std::ostream& os, const QForm& f) {
    return os << "(" << f.a << ", " << f.b << ", " << f.c << ")";
  }
};

[[nodiscard]] inline std::int64_t discriminant(const QForm& f) {
  return checked::sub(checked::mul(f.b, f.b), checked::mul(std::int64_t{4}, checked::mul(f.a, f.c)));
}

/// (M . f)(x, y) = f(alpha x + beta y, gamma x + delta y) for M = [[alpha, beta], [gamma, delta]].
///
/// This is a right action: act(M, act(N, f)) == act(N * M, f).
[[nodiscard]] inline QForm act(const Mat2Z& m, const QForm& f) {
  using namespace checked;
  const std::int64_t al = m.a(), be = m.b(), ga = m.c(), de = m.d();
  const std::int64_t a = add(add(mul(f.a, mul(al, al)), mul(f.b, mul(al, ga))), mul(f.c, mul(ga, ga)));
  const std::int64_t b =
      add(add(mul(mul(std::int64_t{2}, f.a), mul(al, be)), mul(f.b, add(mul(al, de), mul(be, ga)))),
          mul(mul(std::int64_t{2}, f.c), mul(ga, de)));
  const std::int64_t c = add(add(mul(f.a, mul(be, be)), mul(f.b, mul(be, de))), mul(f.c, mul(de, de)));
  return {a, b, c};
}

/// Canonical representative of a form class.
///
/// Definite (D < 0): the Gauss-reduced form, with the sign of a kept so that
/// positive and negative definite classes stay apart. Indefinite (D > 0): the
/// lexicographically smallest reduced form of the class's reduction cycle,
/// with the whole cycle attached.
struct FormClassKey {
  QForm repr;
  std::int64_t discriminant = 0;
  std::vector<QForm> cycle;  // empty for definite classes

  friend bool operator==(const FormClassKey& x, const FormClassKey& y) {
    return x.discriminant == y.discriminant && x.repr == y.repr;
  }
  friend auto operator<=>(const FormClassKey& x, const FormClassKey& y) {
    if (auto c = x.discriminant <=> y.discriminant; c != 0) return c;
    return x.repr <=> y.repr;
  }
};

namespace detail {

inline void require_reducible(std::int64_t disc) {
  if (disc == 0) throw std::domain_error("form reduction needs a nonzero discriminant");
  if (is_square(disc)) {
    throw std::domain_error("form reduction needs a nonsquare discriminant (got " +
                            std::to_string(disc) + ")");
  }
}

// Gauss reduction of a positive definite form to -a < b <= a <= c, b >= 0 if a == c.
inline QForm reduce_positive_definite(QForm f, std::int64_t disc) {
  using namespace checked;
  for (;;) {
    if (!(-f.a < f.b && f.b <= f.a)) {
      // f(x + k y, y) with k chosen to bring b into (-a, a].
      const std::int64_t two_a = mul(std::int64_t{2}, f.a);
      const std::int64_t k = floor_div(sub(f.a, f.b), two_a);
      f.b = add(f.b, mul(two_a, k));
      f.c = (sub(mul(f.b, f.b), disc)) / mul(std::int64_t{4}, f.a);
    }
    if (f.a > f.c) {
      f = {f.c, neg(f.b), f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = neg(f.b);
    return f;
  }
}

// Reduced indefinite form: |sqrt(D) - 2|a|| < b < sqrt(D). Exact integer tests.
inline bool is_reduced_indefinite(const QForm& f, std::int64_t disc) {
  using namespace checked;
  if (f.b <= 0 || mul(f.b, f.b) >= disc) return false;
  const std::int64_t two_abs_a = mul(std::int64_t{2}, f.a < 0 ? neg(f.a) : f.a);
  const std::int64_t upper = add(two_abs_a, f.b);  // need sqrt(D) < 2|a| + b
  if (mul(upper, upper) <= disc) return false;
  const std::int64_t lower = sub(two_abs_a, f.b);  // need 2|a| - b < sqrt(D)
  return lower <= 0 || mul(lower, lower) < disc;
}

// One step of the indefinite reduction operator
//   rho(a, b, c) = (c, r, (r^2 - D) / 4c),  r = -b mod 2c,
// r in (-|c|, |c|] when |c| > sqrt(D), else in (sqrt(D) - 2|c|, sqrt(D)).
// rho(f) = act([[0, -1], [1, s]], f) for the matching s, so it stays in the class.
inline QForm rho(const QForm& f, std::int64_t disc, std::int64_t root_floor) {
  using namespace checked;
  const std::int64_t abs_c = f.c < 0 ? neg(f.c) : f.c;
  const std::int64_t m = mul(std::int64_t{2}, abs_c);
  std::int64_t r = mod_floor(neg(f.b), m);
  if (mul(f.c, f.c) > disc) {
    if (r > abs_c) r = sub(r, m);
  } else {
    // Largest r <= floor(sqrt D) in the residue class.
    r = add(r, mul(floor_div(sub(root_floor, r), m), m));
  }
  return {f.c, r, sub(mul(r, r), disc) / mul(std::int64_t{4}, f.c)};
}

inline std::vector<QForm> reduced_cycle(QForm start, std::int64_t disc, std::int64_t root_floor) {
  std::vector<QForm> cycle{start};
  for (QForm g = rho(start, disc, root_floor); g != start; g = rho(g, disc, root_floor)) {
    cycle.push_back(g);
  }
  return cycle;
}

// The cycle is rotated to start at its smallest member.
inline FormClassKey key_from_cycle(std::vector<QForm> cycle, std::int64_t disc) {
  const auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  const QForm repr = cycle.front();
  return {repr, disc, std::move(cycle)};
}

}  // namespace detail

/// Class key of f. Requires a nonzero nonsquare discriminant.
[[nodiscard]] inline FormClassKey reduce(const QForm& f) {
  const std::int64_t disc = discriminant(f);
  detail::require_reducible(disc);
  if (disc < 0) {
    // a and c share a sign for definite forms.
    if (f.a > 0) return {detail::reduce_positive_definite(f, disc), disc, {}};
    return {detail::reduce_positive_definite(f.negated(), disc).negated(), disc, {}};
  }
  const std::int64_t root = isqrt(disc);
  QForm g = f;
  while (!detail::is_reduced_indefinite(g, disc)) g = detail::rho(g, disc, root);
  return detail::key_from_cycle(detail::reduced_cycle(g, disc, root), disc);
}

[[nodiscard]] inline bool equivalent(const QForm& f, const QForm& g) {
  return discriminant(f) == discriminant(g) && reduce(f) == reduce(g);
}

/// Every reduced form of discriminant disc (both signs for definite discriminants).
[[nodiscard]] inline std::vector<QForm> reduced_forms(std::int64_t disc) {
  detail::require_reducible(disc);
  using namespace checked;
  std::vector<QForm> out;
  const std::int64_t parity = mod_floor(disc, 2);
  if (disc < 0) {
    // -a < b <= a <= c forces 3a^2 <= |D|.
    for (std::int64_t a = 1; mul(std::int64_t{3}, mul(a, a)) <= -disc; ++a) {
      for (std::int64_t b = -a + 1; b <= a; ++b) {
        if (mod_floor(b, 2) != parity) continue;
        const std::int64_t num = sub(mul(b, b), disc);
        if (num % (4 * a) != 0) continue;
        const std::int64_t c = num / (4 * a);
        if (c < a || (c == a && b < 0)) continue;
        out.push_back({a, b, c});
      }
    }
    const std::size_t positive = out.size();
    for (std::size_t i = 0; i < positive; ++i) out.push_back(out[i].negated());
  } else {
    // 0 < b < sqrt(D) and |a| < sqrt(D).
    const std::int64_t root = isqrt(disc);
    for (std::int64_t b = 1; b <= root; ++b) {
      if (mod_floor(b, 2) != parity) continue;
      const std::int64_t num = sub(mul(b, b), disc);
      for (std::int64_t abs_a = 1; abs_a <= root; ++abs_a) {
        if (num % (4 * abs_a) != 0) continue;
        for (const std::int64_t a : {abs_a, -abs_a}) {
          const QForm f{a, b, num / (4 * a)};
          if (detail::is_reduced_indefinite(f, disc)) out.push_back(f);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All form classes of discriminant t^2 - 4, sorted by key.
[[nodiscard]] inline std::vector<FormClassKey> enumerate_classes(std::int64_t t) {
  require_supported_trace(t);
  const std::int64_t disc = trace_discriminant(t);
  std::vector<FormClassKey> classes;
  const std::vector<QForm> forms = reduced_forms(disc);
  if (disc < 0) {
    for (const QForm& f : forms) classes.push_back({f, disc, {}});
  } else {
    const std::int64_t root = isqrt(disc);
    std::set<QForm> seen;
    for (const QForm& f : forms) {
      if (seen.contains(f)) continue;
      auto cycle = detail::reduced_cycle(f, disc, root);
      seen.insert(cycle.begin(), cycle.end());
      classes.push_back(detail::key_from_cycle(std::move(cycle), disc));
    }
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// Number of form classes of discriminant t^2 - 4, counting both definite signs.
[[nodiscard]] inline std::int64_t class_number_h(std::int64_t t) {
  return static_cast<std::int64_t>(enumerate_classes(t).size());
}

/// [[a, b], [c, d]] -> b x^2 + (d - a) xy - c y^2.
[[nodiscard]] inline QForm ccc_form(const Mat2Z& m) {
  require_supported_trace(m.trace());
  return {m.b(), checked::sub(m.d(), m.a()), checked::neg(m.c())};
}

/// A trace-t matrix whose ccc_form is exactly f:
/// [[(t - b)/2, a], [-c, (t + b)/2]].
[[nodiscard]] inline Mat2Z ccc_matrix(const QForm& f, std::int64_t t) {
  require_supported_trace(t);
  if (discriminant(f) != trace_discriminant(t)) {
    throw std::invalid_argument("form discriminant " + std::to_string(discriminant(f)) +
                                " does not match t^2 - 4 = " +
                                std::to_string(trace_discriminant(t)));
  }
  return {checked::sub(t, f.b) / 2, f.a, checked::neg(f.c), checked::add(t, f.b) / 2};
}

namespace sl2z {

/// SL2(Z)-conjugacy for traces other than +-2, decided through form classes.
[[nodiscard]] inline bool is_conjugate(const Mat2Z& m, const Mat2Z& n) {
  require_supported_trace(m.trace());
  require_supported_trace(n.trace());
  if (m.trace() != n.trace()) return false;
  return reduce(ccc_form(m)) == reduce(ccc_form(n));
}

}  // namespace sl2z
}  // namespace bqf

#endif  // BQF_QUADFORMS_HPP
