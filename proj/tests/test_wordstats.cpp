#include <doctest.h>

#include <random>
#include <vector>

#include "fibdense/errors.hpp"
#include "fibdense/fibword.hpp"
#include "fibdense/sequences.hpp"
#include "fibdense/wordstats.hpp"
#include "oracles.hpp"

using namespace fibdense;
namespace ws = fibdense::wordstats;
namespace seq = fibdense::sequences;

namespace {
std::vector<bool> random_word(std::size_t len, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution bit(0.5);
  std::vector<bool> w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = bit(rng);
  return w;
}
}  // namespace

TEST_CASE("factor index matches the window-set oracle") {
  auto fib_prefix = fibword::InfiniteFibWord::prefix(Nat(2000));
  auto rnd = random_word(600, 12345);
  for (const auto& w : {fib_prefix, rnd}) {
    ws::FactorIndex idx(w);
    for (std::size_t n = 0; n <= 30; ++n)
      CHECK(idx.fac(n) == oracles::brute_factor_count(w, n));
  }
}

TEST_CASE("palindrome index matches the window-set oracle") {
  auto fib_prefix = fibword::InfiniteFibWord::prefix(Nat(2000));
  auto rnd = random_word(400, 67890);
  for (const auto& w : {fib_prefix, rnd}) {
    ws::PalindromeIndex idx(w);
    for (std::size_t n = 0; n <= 30; ++n)
      CHECK(idx.pal(n) == oracles::brute_palindrome_count(w, n));
  }
}

TEST_CASE("Fibonacci word is Sturmian: fac(n) = n+1, pal alternates 2/1") {
  auto prof = ws::fibonacci_profile(46368, 40);
  for (std::size_t n = 1; n <= 40; ++n) {
    CHECK(prof.fac_stabilized[n]);
    CHECK(prof.fac[n] == n + 1);
  }
  CHECK(prof.pal[0] == 1);
  CHECK(prof.pal[1] == 2);
  for (std::size_t n = 2; n <= 33; ++n) {
    CHECK(prof.pal_stabilized[n]);
    CHECK(prof.pal[n] == (n % 2 ? 2u : 1u));
  }
}

TEST_CASE("palindrome bound holds on a long prefix") {
  auto prefix = fibword::InfiniteFibWord::prefix(Nat(46368));
  for (std::size_t k = 1; k <= 40; ++k)
    CHECK(ws::palindrome_bound_check(prefix, k).holds);
}

TEST_CASE("one-shot complexity helpers agree with the indexes") {
  auto w = fibword::InfiniteFibWord::prefix(Nat(500));
  CHECK(ws::factor_complexity(w, 7) == ws::FactorIndex(w).fac(7));
  CHECK(ws::palindromic_complexity(w, 7) == ws::PalindromeIndex(w).pal(7));
}

TEST_CASE("all-ones convergent denominators are Fibonacci numbers") {
  ws::ContinuedFraction cf;
  cf.partial_quotients.assign(20, Nat(1));
  auto q = ws::convergent_denominators(cf);
  REQUIRE(q.size() == 20);
  for (std::size_t n = 0; n < q.size(); ++n) CHECK(q[n] == seq::fib(n + 1));
}

TEST_CASE("sturmian index of the golden-ratio slope") {
  ws::ContinuedFraction cf;
  cf.partial_quotients.assign(40, Nat(1));
  auto si = ws::sturmian_index(cf, 31, 256);
  // limit is 3 + 1/phi; the depth-31 partial maximum is within 1e-6
  BigFloat target = BigFloat(3, 256) + BigFloat(1, 256) / BigFloat::phi(256);
  CHECK((si.ind_partial - target).abs() <
        BigFloat(Rat(Nat(1), nat_pow(Nat(10), 6)), 256));
  // reversed all-ones CF peaks at [1;1] = 2, so ind* = 4
  CHECK((si.ind_star_partial - BigFloat(4, 256)).abs() <
        BigFloat::pow2(-100, 256));
}

TEST_CASE("sturmian index needs depth+2 partial quotients") {
  ws::ContinuedFraction cf;
  cf.partial_quotients.assign(10, Nat(1));
  CHECK_THROWS_AS(ws::sturmian_index(cf, 9, 128), InsufficientDepth);
  CHECK_NOTHROW(ws::sturmian_index(cf, 8, 128));
}
