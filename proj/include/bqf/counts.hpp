#ifndef BQF_COUNTS_HPP
#define BQF_COUNTS_HPP

// Assembly of the counting identity
//   h(t) = sum_{j=0}^{11} (p_{t,n+j} + M_{t,n+j})
// from the form side (class enumeration) and the braid side (exponent
// residues of SL2(Z) classes plus the exceptional-fiber corrections).

#include <array>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bqf/birman_menasco.hpp"
#include "bqf/braid3.hpp"
#include "bqf/quadforms.hpp"
#include "bqf/sl2z.hpp"

namespace bqf {

/// A trace-t conjugacy class of SL2(Z), with the residue mod 12 that the
/// exponent sum of every lift to B3 has.
struct ClassWithExponent {
  FormClassKey key;
  std::int64_t trace = 0;
  int residue = 0;
};

[[nodiscard]] inline std::vector<ClassWithExponent> y_classes(std::int64_t t) {
  std::vector<ClassWithExponent> out;
  for (auto& key : enumerate_classes(t)) {
    const int r = sl2z::exponent_mod12(ccc_matrix(key.repr, t));
    out.push_back({std::move(key), t, r});
  }
  return out;
}

/// Number of trace-t classes per exponent residue.
using ResidueHistogram = std::array<std::int64_t, 12>;

[[nodiscard]] inline ResidueHistogram residue_histogram(std::int64_t t) {
  ResidueHistogram hist{};
  for (const auto& c : y_classes(t)) ++hist[static_cast<std::size_t>(c.residue)];
  return hist;
}

/// |X_{t,n}|: each trace-t class of SL2(Z) lifts to exactly one B3 class in
/// every window of 12 consecutive exponents.
[[nodiscard]] inline std::int64_t x_count(const ResidueHistogram& hist, std::int64_t n) {
  return hist[static_cast<std::size_t>(mod_floor(n, 12))];
}

[[nodiscard]] inline std::int64_t x_count(std::int64_t t, std::int64_t n) {
  return x_count(residue_histogram(t), n);
}

/// Raised when x_count < M for some cell; that cannot happen for a correct
/// implementation.
class NegativeCountError : public std::logic_error {
 public:
  NegativeCountError(std::int64_t t, std::int64_t n, std::int64_t x, std::int64_t m)
      : std::logic_error("negative link count at (t, n) = (" + std::to_string(t) + ", " +
                         std::to_string(n) + "): x_count = " + std::to_string(x) +
                         " < M = " + std::to_string(m)),
        t_(t),
        n_(n) {}
  [[nodiscard]] std::int64_t t() const noexcept { return t_; }
  [[nodiscard]] std::int64_t n() const noexcept { return n_; }

 private:
  std::int64_t t_;
  std::int64_t n_;
};

struct CountsRow {
  std::int64_t t = 0;
  std::int64_t n = 0;
  std::int64_t x_count = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;  // x_count - m; negative only in a failing report
  friend bool operator==(const CountsRow&, const CountsRow&) = default;
};

/// The row for one cell, without the nonnegativity check.
[[nodiscard]] inline CountsRow counts_row_unchecked(std::int64_t t, std::int64_t n,
                                                    const ResidueHistogram& hist) {
  const std::int64_t x = x_count(hist, n);
  const std::int64_t m = bm::m_full(t, n);
  return {t, n, x, m, x - m};
}

[[nodiscard]] inline CountsRow counts_row(std::int64_t t, std::int64_t n,
                                          const ResidueHistogram& hist) {
  CountsRow row = counts_row_unchecked(t, n, hist);
  if (row.p < 0) throw NegativeCountError(t, n, row.x_count, row.m);
  return row;
}

[[nodiscard]] inline CountsRow counts_row(std::int64_t t, std::int64_t n) {
  return counts_row(t, n, residue_histogram(t));
}

/// p_{t,n}: braid-index-3 links with writhe n and special value i^n (t - 2).
[[nodiscard]] inline std::int64_t p_count(std::int64_t t, std::int64_t n) {
  return counts_row(t, n).p;
}

/// sum_{j=0}^{11} p_{t,n+j}
[[nodiscard]] inline std::int64_t p_window(std::int64_t t, std::int64_t n,
                                           const ResidueHistogram& hist) {
  std::int64_t sum = 0;
  for (std::int64_t j = 0; j < 12; ++j) sum += counts_row(t, n + j, hist).p;
  return sum;
}

struct MainReport {
  std::int64_t t = 0;
  std::int64_t n = 0;
  std::int64_t h_lhs = 0;       // class count from form enumeration
  std::int64_t window_rhs = 0;  // sum of p + M over the 12 cells
  std::vector<CountsRow> rows;
  bool nonnegative = true;
  bool pass = false;
};

/// Both sides of the identity at (t, n), through separate pipelines.
[[nodiscard]] inline MainReport verify_main(std::int64_t t, std::int64_t n) {
  MainReport rep;
  rep.t = t;
  rep.n = n;
  rep.h_lhs = class_number_h(t);
  const ResidueHistogram hist = residue_histogram(t);
  for (std::int64_t j = 0; j < 12; ++j) {
    const CountsRow row = counts_row_unchecked(t, n + j, hist);
    rep.nonnegative = rep.nonnegative && row.p >= 0;
    rep.window_rhs += row.p + row.m;
    rep.rows.push_back(row);
  }
  rep.pass = rep.nonnegative && rep.h_lhs == rep.window_rhs;
  return rep;
}

/// Default exponent for sweeps, below every threshold where M can be nonzero.
[[nodiscard]] inline std::int64_t default_sweep_n(std::int64_t t) {
  const std::int64_t d = t - 3;
  return -(d < 0 ? -d : d) - 24;
}

struct SymmetryReport {
  std::int64_t t = 0;
  std::int64_t n = 0;
  std::int64_t lhs = 0;  // sum_j p_{t, n+j}
  std::int64_t rhs = 0;  // sum_j p_{-t, n+6+j}
  bool pass = false;
};

/// sum_j p_{t,n+j} == sum_j p_{-t,n+6+j}, valid for n < -|t + 3| - 17.
[[nodiscard]] inline SymmetryReport verify_symmetry(std::int64_t t, std::int64_t n) {
  require_supported_trace(t);
  const std::int64_t bound = -((t + 3) < 0 ? -(t + 3) : (t + 3)) - 17;
  if (n >= bound) {
    throw std::domain_error("symmetry holds for n < -|t + 3| - 17 = " + std::to_string(bound));
  }
  SymmetryReport rep{t, n, 0, 0, false};
  rep.lhs = p_window(t, n, residue_histogram(t));
  rep.rhs = p_window(-t, n + 6, residue_histogram(-t));
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

// --- brute-force census over braid words -----------------------------------

struct CensusCell {
  std::int64_t t = 0;
  std::int64_t n = 0;
  friend bool operator==(const CensusCell&, const CensusCell&) = default;
};

struct CensusCellHash {
  std::size_t operator()(const CensusCell& c) const noexcept {
    return std::hash<std::int64_t>{}(c.t * 1000003 + c.n);
  }
};

/// Distinct B3 conjugacy classes found per (trace, exponent) cell.
using CensusTable = std::unordered_map<CensusCell, std::int64_t, CensusCellHash>;

namespace detail {

struct MatHash {
  std::size_t operator()(const Mat2Z& m) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(m.a());
    for (const auto v : {m.b(), m.c(), m.d()}) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::int64_t>{}(v);
    return h;
  }
};

}  // namespace detail

/// Walks every braid word of length <= max_len and counts, for each cell with
/// t in [t_min, t_max] (t != +-2) and n in [n_min, n_max], the distinct B3
/// conjugacy classes hit. Two words are B3-conjugate iff their images are
/// SL2(Z)-conjugate and their exponent sums agree, so the class of a word is
/// (form class of ccc_form(phi(w)), eps(w)).
///
/// Words containing x x^-1 are skipped: they equal a shorter word that is
/// visited anyway.
[[nodiscard]] inline CensusTable census(int max_len, std::int64_t t_min, std::int64_t t_max,
                                        std::int64_t n_min, std::int64_t n_max) {
  if (max_len < 1) throw std::invalid_argument("census needs max_len >= 1");
  // Distinct matrices per cell first; reduction runs once per matrix.
  std::unordered_map<CensusCell, std::unordered_set<Mat2Z, detail::MatHash>, CensusCellHash> seen;

  struct Frame {
    Mat2Z m;
    std::int64_t eps;
    int depth;
    Letter last;
    bool has_last;
  };
  std::vector<Frame> stack{{Mat2Z{}, 0, 0, Letter::s1, false}};
  std::array<Mat2Z, 4> gens{};
  for (std::size_t i = 0; i < 4; ++i) gens[i] = phi(kAllLetters[i]);

  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const std::int64_t t = f.m.trace();
    if (f.depth > 0 && t >= t_min && t <= t_max && t != 2 && t != -2 && f.eps >= n_min &&
        f.eps <= n_max) {
      seen[{t, f.eps}].insert(f.m);
    }
    if (f.depth == max_len) continue;
    for (std::size_t i = 0; i < 4; ++i) {
      const Letter l = kAllLetters[i];
      if (f.has_last && l == inverse(f.last)) continue;
      stack.push_back({f.m * gens[i], f.eps + exponent(l), f.depth + 1, l, true});
    }
  }

  CensusTable table;
  for (const auto& [cell, mats] : seen) {
    std::set<QForm> keys;
    for (const Mat2Z& m : mats) keys.insert(reduce(ccc_form(m)).repr);
    table[cell] = static_cast<std::int64_t>(keys.size());
  }
  return table;
}

/// Lower bound on |X_{t,n}| from all words of length <= max_len.
[[nodiscard]] inline std::int64_t braid_census(std::int64_t t, std::int64_t n, int max_len) {
  require_supported_trace(t);
  const CensusTable table = census(max_len, t, t, n, n);
  const auto it = table.find({t, n});
  return it == table.end() ? 0 : it->second;
}

}  // namespace bqf

#endif  // BQF_COUNTS_HPP
