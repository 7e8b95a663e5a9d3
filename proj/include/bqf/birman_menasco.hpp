#ifndef BQF_BIRMAN_MENASCO_HPP
#define BQF_BIRMAN_MENASCO_HPP

// Bookkeeping for the closed 3-braids whose link is the closure of more than
// one conjugacy class of B3. Four families:
//   unknot       s1 s2, s1 s2^-1, s1^-1 s2^-1
//   torus(k)     s1^k s2 and s1^k s2^-1 (the (2,k) torus link), k != +-1
//   family iii   D^2k s1^-1 s2^u s1^-v s2^w  and the same with u <-> w,
//                k in {0,1}, u != w, v >= 2
//   family iv    D^2k s1^-1 s2^u s1^-1 s2^v s1^-1 s2^w  and (u,w,v),
//                k in {1,2}, u, v, w distinct
// M_{t,n} counts how many classes of trace t and exponent n are absorbed by
// these coincidences.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bqf/braid3.hpp"
#include "bqf/checked.hpp"

namespace bqf {

struct TraceExp {
  std::int64_t t = 0;
  std::int64_t n = 0;
  friend bool operator==(const TraceExp&, const TraceExp&) = default;
};

namespace bm {

inline void require_family_iii(std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t k) {
  if (u < 1 || v < 2 || w < 1 || u == w || (k != 0 && k != 1)) {
    throw std::invalid_argument("family iii needs u, w >= 1, u != w, v >= 2, k in {0, 1}");
  }
}

inline void require_family_iv(std::int64_t u, std::int64_t v, std::int64_t w, std::int64_t k) {
  if (u < 1 || v < 1 || w < 1 || u == v || v == w || u == w || (k != 1 && k != 2)) {
    throw std::invalid_argument("family iv needs distinct u, v, w >= 1 and k in {1, 2}");
  }
}

[[nodiscard]] inline std::int64_t sign_pow(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

/// (-1)^k (2 + (u + w)(1 + v) + uvw),  u + w - v - 1 + 6k
[[nodiscard]] inline TraceExp family_iii_trace_exp(std::int64_t u, std::int64_t v, std::int64_t w,
                                                   std::int64_t k) {
  require_family_iii(u, v, w, k);
  using namespace checked;
  const std::int64_t body = add(add(std::int64_t{2}, mul(add(u, w), add(std::int64_t{1}, v))),
                                mul(mul(u, v), w));
  return {mul(sign_pow(k), body), add(sub(sub(add(u, w), v), std::int64_t{1}), mul(std::int64_t{6}, k))};
}

/// (-1)^k (1 + u + v + w + u(1+v) + v(1+w) + w(1+u) + (1+u)(1+v)(1+w)),
/// u + v + w - 3 + 6k
[[nodiscard]] inline TraceExp family_iv_trace_exp(std::int64_t u, std::int64_t v, std::int64_t w,
                                                  std::int64_t k) {
  require_family_iv(u, v, w, k);
  using namespace checked;
  const std::int64_t one = 1;
  std::int64_t body = add(add(add(one, u), v), w);
  body = add(body, mul(u, add(one, v)));
  body = add(body, mul(v, add(one, w)));
  body = add(body, mul(w, add(one, u)));
  body = add(body, mul(mul(add(one, u), add(one, v)), add(one, w)));
  return {mul(sign_pow(k), body), add(sub(add(add(u, v), w), std::int64_t{3}), mul(std::int64_t{6}, k))};
}

/// s1^k s2 has (2 - k, k + 1); s1^k s2^-1 has (2 + k, k - 1).
[[nodiscard]] inline TraceExp torus_trace_exp(std::int64_t k, int sigma2_sign) {
  if (sigma2_sign > 0) return {checked::sub(std::int64_t{2}, k), checked::add(k, std::int64_t{1})};
  return {checked::add(std::int64_t{2}, k), checked::sub(k, std::int64_t{1})};
}

[[nodiscard]] inline BraidWord torus_word(std::int64_t k, int sigma2_sign) {
  BraidWord w;
  w.append_power(Letter::s1, k);
  w.push_back(sigma2_sign > 0 ? Letter::s2 : Letter::s2_inv);
  return w;
}

[[nodiscard]] inline BraidWord family_iii_word(std::int64_t u, std::int64_t v, std::int64_t w,
                                               std::int64_t k) {
  BraidWord out = garside_power(2 * k);
  out.push_back(Letter::s1_inv);
  out.append_power(Letter::s2, u);
  out.append_power(Letter::s1, -v);
  out.append_power(Letter::s2, w);
  return out;
}

[[nodiscard]] inline BraidWord family_iv_word(std::int64_t u, std::int64_t v, std::int64_t w,
                                              std::int64_t k) {
  BraidWord out = garside_power(2 * k);
  for (const std::int64_t e : {u, v, w}) {
    out.push_back(Letter::s1_inv);
    out.append_power(Letter::s2, e);
  }
  return out;
}

enum class Family { unknot, torus, family_iii, family_iv };

[[nodiscard]] inline const char* to_string(Family f) {
  switch (f) {
    case Family::unknot: return "unknot";
    case Family::torus: return "torus";
    case Family::family_iii: return "family-iii";
    case Family::family_iv: return "family-iv";
  }
  return "?";
}

/// One exceptional fiber meeting the cell (t, n). For the unknot and torus
/// families only the class lying in this cell is listed; for families iii and
/// iv both classes of the fiber are.
struct ExceptionalWitness {
  Family family{};
  std::vector<std::int64_t> params;  // torus: (k, +-1); iii/iv: (u, v, w, k)
  std::vector<BraidWord> words;
  std::int64_t t = 0;
  std::int64_t n = 0;
};

namespace detail {

// Calls visit(u, v, w, k) for every ordered tuple of family iii with the given
// (t, n). The trace equation is linear in w once u and v are fixed:
//   |t| = 2 + u(1+v) + w(1 + v + uv).
template <class Visit>
void for_each_family_iii(std::int64_t t, std::int64_t n, Visit&& visit) {
  if (t == 0) return;
  const std::int64_t k = t > 0 ? 0 : 1;
  const std::int64_t target = t > 0 ? t : -t;
  for (std::int64_t u = 1;; ++u) {
    // smallest value for this u: v = 2, w = 1
    if (2 + 3 * u + 3 + 2 * u > target) break;
    for (std::int64_t v = 2;; ++v) {
      const std::int64_t fixed = 2 + u * (1 + v);
      const std::int64_t slope = 1 + v + u * v;
      if (fixed + slope > target) break;
      if ((target - fixed) % slope != 0) continue;
      const std::int64_t w = (target - fixed) / slope;
      if (w == u) continue;
      if (u + w - v - 1 + 6 * k != n) continue;
      visit(u, v, w, k);
    }
  }
}

// Family iv, ordered tuples. Expanding the trace body gives
//   |t| = 2 + 3(u+v) + 2uv + w(3 + 2u + 2v + uv).
template <class Visit>
void for_each_family_iv(std::int64_t t, std::int64_t n, Visit&& visit) {
  if (t == 0) return;
  const std::int64_t k = t > 0 ? 2 : 1;
  const std::int64_t target = t > 0 ? t : -t;
  for (std::int64_t u = 1;; ++u) {
    if (2 + 3 * (u + 1) + 2 * u + (3 + 2 * u + 2 + u) > target) break;
    for (std::int64_t v = 1;; ++v) {
      const std::int64_t fixed = 2 + 3 * (u + v) + 2 * u * v;
      const std::int64_t slope = 3 + 2 * u + 2 * v + u * v;
      if (fixed + slope > target) break;
      if ((target - fixed) % slope != 0) continue;
      const std::int64_t w = (target - fixed) / slope;
      if (u == v || v == w || u == w) continue;
      if (u + v + w - 3 + 6 * k != n) continue;
      visit(u, v, w, k);
    }
  }
}

inline bool has_low_index_class(std::int64_t t, std::int64_t n) {
  if (t == 3) return n == 0;
  if (t == 1) return n == 2 || n == -2;
  return n == t - 3 || n == 3 - t;
}

}  // namespace detail

/// Number of ordered parameter tuples (u, v, w, k) in the two defining sets,
/// i.e. the literal cardinality of the union.
[[nodiscard]] inline std::int64_t m_prime_tuples(std::int64_t t, std::int64_t n) {
  std::int64_t count = 0;
  const auto bump = [&](auto...) { ++count; };
  detail::for_each_family_iii(t, n, bump);
  detail::for_each_family_iv(t, n, bump);
  return count;
}

/// Number of two-class fibers of families iii and iv with trace t and
/// exponent n. Each such fiber contributes 2 ordered tuples in family iii
/// (u <-> w) and 6 in family iv (all orderings of u, v, w; the cyclic ones are
/// conjugate words), so this counts tuples with u < w, resp. u < v < w.
[[nodiscard]] inline std::int64_t m_prime(std::int64_t t, std::int64_t n) {
  std::int64_t count = 0;
  detail::for_each_family_iii(t, n, [&](auto u, auto, auto w, auto) { count += u < w; });
  detail::for_each_family_iv(t, n, [&](auto u, auto v, auto w, auto) { count += (u < v && v < w); });
  return count;
}

/// M_{t,n}: m_prime plus one when the cell holds a braid closing to the unknot
/// or a (2, k) torus link.
[[nodiscard]] inline std::int64_t m_full(std::int64_t t, std::int64_t n) {
  return m_prime(t, n) + (detail::has_low_index_class(t, n) ? 1 : 0);
}

/// One witness per unit counted by m_full(t, n).
[[nodiscard]] inline std::vector<ExceptionalWitness> witnesses(std::int64_t t, std::int64_t n) {
  std::vector<ExceptionalWitness> out;
  if (detail::has_low_index_class(t, n)) {
    if (t == 3 || t == 1) {
      BraidWord w = t == 3 ? BraidWord{Letter::s1, Letter::s2_inv}
                           : (n == 2 ? BraidWord{Letter::s1, Letter::s2}
                                     : BraidWord{Letter::s1_inv, Letter::s2_inv});
      out.push_back({Family::unknot, {}, {std::move(w)}, t, n});
    } else if (n == t - 3) {
      out.push_back({Family::torus, {t - 2, -1}, {torus_word(t - 2, -1)}, t, n});
    } else {
      out.push_back({Family::torus, {2 - t, 1}, {torus_word(2 - t, 1)}, t, n});
    }
  }
  detail::for_each_family_iii(t, n, [&](auto u, auto v, auto w, auto k) {
    if (u >= w) return;
    out.push_back({Family::family_iii,
                   {u, v, w, k},
                   {family_iii_word(u, v, w, k), family_iii_word(w, v, u, k)},
                   t,
                   n});
  });
  detail::for_each_family_iv(t, n, [&](auto u, auto v, auto w, auto k) {
    if (!(u < v && v < w)) return;
    out.push_back({Family::family_iv,
                   {u, v, w, k},
                   {family_iv_word(u, v, w, k), family_iv_word(u, w, v, k)},
                   t,
                   n});
  });
  return out;
}

}  // namespace bm
}  // namespace bqf

#endif  // BQF_BIRMAN_MENASCO_HPP
