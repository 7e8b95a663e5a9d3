#include <catch_amalgamated.hpp>

#include <random>

#include "bqf/braid3.hpp"
#include "oracles.hpp"

using namespace bqf;

namespace {

BraidWord W(std::string_view text) { return parse_braid(text); }

HalfLaurent q_pow(int k, std::int64_t c = 1) { return HalfLaurent::q_power(k, c); }

bool burau_is(const BurauMat& m, const HalfLaurent& a, const HalfLaurent& b, const HalfLaurent& c,
              const HalfLaurent& d) {
  return m.at(0, 0) == a && m.at(0, 1) == b && m.at(1, 0) == c && m.at(1, 1) == d;
}

}  // namespace

TEST_CASE("exponent sum", "[braid3]") {
  CHECK(exponent_sum(BraidWord{}) == 0);
  CHECK(exponent_sum(garside()) == 3);
  CHECK(exponent_sum(W("-1 2^3")) == 2);
  CHECK(exponent_sum(garside_power(2)) == 6);
  CHECK(exponent_sum(garside_power(4)) == 12);
}

TEST_CASE("Garside powers", "[braid3]") {
  CHECK(garside_power(0).empty());
  CHECK(garside_power(1) == W("1 2 1"));
  CHECK(garside_power(4).size() == 12);
  CHECK(phi(garside_power(4)) == Mat2Z{});
  CHECK(phi(garside_power(2)) == Mat2Z{-1, 0, 0, -1});
  CHECK_THROWS_AS(garside_power(-1), std::invalid_argument);
}

TEST_CASE("Burau images", "[braid3]") {
  const HalfLaurent one = HalfLaurent::one();
  const HalfLaurent zero{};
  CHECK(burau_is(burau(W("1")), one, q_pow(1, -1), zero, q_pow(1, -1)));
  const BurauMat b12 = burau(W("1 2"));
  CHECK(burau_is(b12, zero, q_pow(1, -1), q_pow(1), q_pow(1, -1)));
  CHECK(b12.trace() == q_pow(1, -1));
  CHECK(burau_is(burau(W("1 -1")), one, zero, zero, one));
  CHECK(burau_is(burau(W("2 -2")), one, zero, zero, one));
  CHECK(burau_is(burau(W("-2 2")), one, zero, zero, one));
}

TEST_CASE("Burau agrees with an independent dense product", "[braid3][property]") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    const BraidWord w = oracle::random_word(rng, 0, 25);
    const BurauMat b = burau(w);
    const auto ref = oracle::burau_word(w);
    for (int k = 0; k < 4; ++k) REQUIRE(b.entries[static_cast<std::size_t>(k)] == oracle::from_dense(ref[static_cast<std::size_t>(k)]));
    const auto p = oracle::phi_word(w);
    REQUIRE(phi(w) == Mat2Z{p[0], p[1], p[2], p[3]});
  }
}

TEST_CASE("phi images", "[braid3]") {
  CHECK(phi(W("1")) == Mat2Z{1, 1, 0, 1});
  CHECK(phi(W("2")) == Mat2Z{1, 0, -1, 1});
  CHECK(trace_b3(W("1 2")) == 1);
  CHECK(trace_b3(W("1 -2")) == 3);
  CHECK(trace_b3(BraidWord{}) == 2);
}

TEST_CASE("braid relation", "[braid3]") {
  const BurauMat x = burau(W("1 2 1"));
  const BurauMat y = burau(W("2 1 2"));
  for (std::size_t k = 0; k < 4; ++k) CHECK(x.entries[k] == y.entries[k]);
  CHECK(phi(W("1 2 1")) == phi(W("2 1 2")));
}

TEST_CASE("Delta^2 is central and Delta^4 acts as q^6", "[braid3]") {
  const BurauMat d4 = burau(garside_power(4));
  CHECK(burau_is(d4, q_pow(6), HalfLaurent{}, HalfLaurent{}, q_pow(6)));
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const BraidWord w = oracle::random_word(rng, 0, 12);
    const BurauMat l = burau(garside_power(2) * w);
    const BurauMat r = burau(w * garside_power(2));
    for (std::size_t k = 0; k < 4; ++k) REQUIRE(l.entries[k] == r.entries[k]);
  }
}

TEST_CASE("specialization, determinant and V(-1) = Delta(-1) on all short words", "[braid3][property]") {
  for (int len = 0; len <= 5; ++len) {
    oracle::for_each_word(len, [](const BraidWord& w) {
      const BurauMat b = burau(w);
      const std::int64_t eps = exponent_sum(w);
      REQUIRE(b.at_q_minus_one() == phi(w));
      REQUIRE(b.det() == monomial_pow(UnitBase::neg_q, static_cast<int>(eps)));
      const GaussInt sv = special_value(w);
      REQUIRE(eval_q_minus_one(jones(w)) == sv);
      REQUIRE(eval_q_minus_one(alexander(w)) == sv);
      REQUIRE(jones_from_alexander(alexander(w), eps) == jones(w));
    });
  }
}

TEST_CASE("free reduction preserves the invariants", "[braid3][property]") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 500; ++iter) {
    const BraidWord w = oracle::random_word(rng, 0, 20);
    const BraidWord r = w.freely_reduced();
    REQUIRE(r.size() <= w.size());
    REQUIRE(exponent_sum(r) == exponent_sum(w));
    REQUIRE(phi(r) == phi(w));
    REQUIRE(jones(r) == jones(w));
    REQUIRE((w * w.inverse()).freely_reduced().empty());
  }
}

TEST_CASE("link polynomials are conjugation invariant", "[braid3][property]") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 500; ++iter) {
    const BraidWord w = oracle::random_word(rng, 0, 14);
    const BraidWord u = oracle::random_word(rng, 0, 8);
    const BraidWord c = u * w * u.inverse();
    REQUIRE(alexander(c) == alexander(w));
    REQUIRE(jones(c) == jones(w));
  }
}

TEST_CASE("link polynomials of small closures", "[braid3]") {
  // closure of s1 s2 is the unknot
  CHECK(alexander(W("1 2")) == HalfLaurent::one());
  CHECK(jones(W("1 2")) == HalfLaurent::one());
  // trefoil: Alexander q^-1 - 1 + q up to a unit, Jones one of the two chiral values
  const HalfLaurent tref_alex{{-2, 1}, {0, -1}, {2, 1}};
  CHECK(alexander(W("1^3 2")) == tref_alex);
  const HalfLaurent right{{2, 1}, {6, 1}, {8, -1}};
  CHECK(jones(W("1^3 2")) == right);
  CHECK(jones(W("-1^3 -2")) == right.mirrored());
  // empty braid closes to the 3-component unlink: (q + 1/q + 2)
  CHECK(jones(BraidWord{}) == HalfLaurent{{-2, 1}, {0, 2}, {2, 1}});
  CHECK(to_string(jones(BraidWord{})) == "1*q^-1 + 2 + 1*q^1");
}

TEST_CASE("Delta^4 w against a re-derivation of the formula", "[braid3]") {
  std::mt19937_64 rng(23);
  const HalfLaurent phi3{{0, 1}, {2, 1}, {4, 1}};
  for (int iter = 0; iter < 100; ++iter) {
    const BraidWord w = oracle::random_word(rng, 0, 10);
    const BraidWord v = garside_power(4) * w;
    const std::int64_t eps = exponent_sum(w) + 12;
    const auto ref = oracle::burau_word(w);
    const HalfLaurent tr = oracle::from_dense(oracle::add(ref[0], ref[3])) * q_pow(6);
    const int e = static_cast<int>(eps);
    const HalfLaurent unit = HalfLaurent::monomial((e % 2 == 0) ? 1 : -1, -(e - 2));
    const HalfLaurent sign_q = HalfLaurent::monomial((e % 2 == 0) ? 1 : -1, 2 * e);
    const HalfLaurent expected = unit * exact_div(HalfLaurent::one() - tr + sign_q, phi3);
    REQUIRE(alexander(v) == expected);
    REQUIRE(jones(v) == HalfLaurent::monomial(1, e) * (q_pow(1) + q_pow(-1) + tr));
  }
}

TEST_CASE("special values", "[braid3]") {
  CHECK(special_value(W("1 2")) == GaussInt{1, 0});
  CHECK(special_value(W("1 -2")) == GaussInt{1, 0});
  CHECK(special_value(BraidWord{}) == GaussInt{0, 0});
  CHECK(special_value(7, 1) == GaussInt{0, 5});
}

TEST_CASE("parsing", "[braid3][parse]") {
  CHECK(parse_braid("1 2 -1") ==
        BraidWord{Letter::s1, Letter::s2, Letter::s1_inv});
  CHECK(parse_braid("1^3 2") == BraidWord{Letter::s1, Letter::s1, Letter::s1, Letter::s2});
  CHECK(parse_braid("1^-1 2^3 1^-2 2^5").size() == 11);
  CHECK(exponent_sum(parse_braid("1^-1 2^3 1^-2 2^5")) == 5);
  CHECK(parse_braid("-1^2") == parse_braid("1^-2"));
  CHECK(parse_braid("-1^-2") == parse_braid("1 1"));
  CHECK(parse_braid("+2") == parse_braid("2"));
  CHECK(parse_braid("  \t").empty());
  CHECK(parse_braid("1^0").empty());

  const auto position_of = [](std::string_view text) -> std::size_t {
    try {
      (void)parse_braid(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  CHECK(position_of("3") == 0);
  CHECK(position_of("1 2 0") == 4);
  CHECK(position_of("1 12") == 2);
  CHECK(position_of("1^") == 2);
  CHECK(position_of("1 x") == 2);
  CHECK(position_of("1,2") == 1);
  CHECK(position_of("1^9999999") == 0);
  CHECK(position_of("D^2") == 0);
}

TEST_CASE("rendering round trips", "[braid3][parse]") {
  CHECK(to_string(parse_braid("1 1 1 -2 -2 1")) == "1^3 2^-2 1");
  CHECK(to_string(parse_braid("-1")) == "-1");
  CHECK(to_string(BraidWord{}).empty());
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 1000; ++iter) {
    const BraidWord w = oracle::random_word(rng, 0, 30);
    REQUIRE(parse_braid(to_string(w)) == w);
  }
}
