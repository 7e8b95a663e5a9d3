#ifndef BQF_IO_HPP
#define BQF_IO_HPP

// JSON and CSV renderings shared by the CLI and the tests. Every top-level
// document carries "schema": "bqf-braid/1".

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bqf/birman_menasco.hpp"
#include "bqf/braid3.hpp"
#include "bqf/counts.hpp"
#include "bqf/laurent.hpp"
#include "bqf/quadforms.hpp"
#include "bqf/sl2z.hpp"

namespace bqf::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "bqf-braid/1";

inline json document(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

inline json to_json(const Mat2Z& m) { return json::array({{m.a(), m.b()}, {m.c(), m.d()}}); }

inline json to_json(const QForm& f) { return json::array({f.a, f.b, f.c}); }

inline json to_json(const GaussInt& z) { return json{{"re", z.re}, {"im", z.im}}; }

inline json to_json(const FormClassKey& key) {
  json j;
  j["repr"] = to_json(key.repr);
  j["discriminant"] = key.discriminant;
  if (key.discriminant > 0) {
    json cycle = json::array();
    for (const auto& f : key.cycle) cycle.push_back(to_json(f));
    j["cycle"] = std::move(cycle);
  }
  return j;
}

inline json to_json(const ClassWithExponent& c) {
  json j = to_json(c.key);
  j["residue"] = c.residue;
  j["matrix"] = to_json(ccc_matrix(c.key.repr, c.trace));
  return j;
}

inline json to_json(const bm::ExceptionalWitness& w) {
  json words = json::array();
  for (const auto& word : w.words) words.push_back(to_string(word));
  return json{{"family", bm::to_string(w.family)}, {"params", w.params}, {"words", words}};
}

inline json to_json(const CountsRow& r) {
  return json{{"t", r.t}, {"n", r.n}, {"x_count", r.x_count}, {"m", r.m}, {"p", r.p}};
}

struct Invariants {
  BraidWord word;
  std::int64_t exponent_sum = 0;
  std::int64_t trace = 0;
  Mat2Z phi;
  HalfLaurent burau_trace;
  HalfLaurent alexander;
  HalfLaurent jones;
  GaussInt special_value;
};

inline Invariants compute_invariants(const BraidWord& w) {
  const BurauMat b = burau(w);
  const std::int64_t eps = exponent_sum(w);
  const Mat2Z m = phi(w);
  const HalfLaurent tr = b.trace();
  return {w,
          eps,
          m.trace(),
          m,
          tr,
          alexander_from(tr, eps),
          jones_from(tr, eps),
          special_value(m.trace(), eps)};
}

inline json to_json(const Invariants& inv) {
  json j = document("invariants");
  j["word"] = to_string(inv.word);
  j["exponent_sum"] = inv.exponent_sum;
  j["trace"] = inv.trace;
  j["phi"] = to_json(inv.phi);
  j["burau_trace"] = to_string(inv.burau_trace);
  j["alexander"] = to_string(inv.alexander);
  j["jones"] = to_string(inv.jones);
  j["special_value"] = to_json(inv.special_value);
  return j;
}

inline json m_document(std::int64_t t, std::int64_t n) {
  json j = document("m");
  j["t"] = t;
  j["n"] = n;
  j["m_prime"] = bm::m_prime(t, n);
  j["m_prime_tuples"] = bm::m_prime_tuples(t, n);
  j["m"] = bm::m_full(t, n);
  json ws = json::array();
  for (const auto& w : bm::witnesses(t, n)) ws.push_back(to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

/// One verification table line: a cell of the window plus the window totals.
struct VerifyLine {
  CountsRow row;
  std::int64_t h_lhs = 0;
  std::int64_t window_rhs = 0;
  bool pass = false;
};

inline std::vector<VerifyLine> verify_lines(const MainReport& rep) {
  std::vector<VerifyLine> out;
  for (const auto& r : rep.rows) out.push_back({r, rep.h_lhs, rep.window_rhs, rep.pass});
  return out;
}

inline json to_json(const VerifyLine& l) {
  json j = to_json(l.row);
  j["h_lhs"] = l.h_lhs;
  j["window_rhs"] = l.window_rhs;
  j["pass"] = l.pass;
  return j;
}

inline const char* kVerifyCsvHeader = "t,n,x_count,m,p,h_lhs,window_rhs,pass";

inline std::string to_csv(const VerifyLine& l) {
  std::ostringstream os;
  os << l.row.t << ',' << l.row.n << ',' << l.row.x_count << ',' << l.row.m << ',' << l.row.p
     << ',' << l.h_lhs << ',' << l.window_rhs << ',' << (l.pass ? "true" : "false");
  return os.str();
}

/// Serialization used by the CLI; stable under parse + re-dump.
inline std::string dump(const json& j) { return j.dump(2); }

}  // namespace bqf::io

#endif  // BQF_IO_HPP
