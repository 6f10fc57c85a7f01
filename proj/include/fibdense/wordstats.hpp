#pragma once

#include <cstdint>
#include <vector>

#include "fibdense/bigfloat.hpp"
#include "fibdense/density.hpp"
#include "fibdense/errors.hpp"
#include "fibdense/numeric.hpp"

namespace fibdense::wordstats {

/// Distinct-factor counter backed by a suffix automaton over the prefix.
/// fac(n) for every n is available after one O(len) build.
class FactorIndex {
 public:
  explicit FactorIndex(const std::vector<bool>& prefix);

  std::size_t length() const { return len_; }
  /// Number of distinct length-n factors; fac(0) = 1 (the empty factor).
  std::uint64_t fac(std::size_t n) const;

 private:
  std::size_t len_;
  std::vector<std::uint64_t> by_len_;  // fac(n) for 1 <= n <= len_
};

/// Distinct-palindrome counter backed by an eertree over the prefix.
class PalindromeIndex {
 public:
  explicit PalindromeIndex(const std::vector<bool>& prefix);

  std::size_t length() const { return len_; }
  /// Number of distinct length-n palindromic factors; pal(0) = 1.
  std::uint64_t pal(std::size_t n) const;

 private:
  std::size_t len_;
  std::vector<std::uint64_t> by_len_;
};

/// One-shot queries (each builds its index; use the classes for sweeps).
std::uint64_t factor_complexity(const std::vector<bool>& prefix, std::size_t n);
std::uint64_t palindromic_complexity(const std::vector<bool>& prefix, std::size_t n);

/// pal(k) < (16/k) * fac(k + floor(k/4)), exact rationals.
density::BoundReport palindrome_bound_check(const std::vector<bool>& prefix,
                                            std::size_t k);

/// Complexity profile of a prefix with per-length stabilization flags:
/// a value is stabilized when doubling the prefix leaves it unchanged.
struct ComplexityProfile {
  std::size_t prefix_len = 0;
  std::vector<std::uint64_t> fac;         // index n, 0..n_max
  std::vector<std::uint64_t> pal;
  std::vector<bool> fac_stabilized;
  std::vector<bool> pal_stabilized;
};

/// Profile of the Fibonacci-word prefix of the given length, lengths 0..n_max.
ComplexityProfile fibonacci_profile(std::size_t prefix_len, std::size_t n_max);

/// Continued fraction [a0; a1, a2, ...].
struct ContinuedFraction {
  std::vector<Nat> partial_quotients;
};

/// q_0..q_N per q_{n+1} = a_{n+1} q_n + q_{n-1}, q_{-1}=0, q_0=1.
std::vector<Nat> convergent_denominators(const ContinuedFraction& cf);

/// Partial Sturmian index values to depth N:
///   ind  = max_{0<=n<=N} (2 + a_{n+1} + (q_{n-1}-2)/q_n)
///   ind* = 2 * max_{1<=n<=N} [a_n, ..., a_1]
/// Throws InsufficientDepth unless the cf has at least N+2 partial quotients.
struct SturmianIndex {
  BigFloat ind_partial;
  BigFloat ind_star_partial;
};
SturmianIndex sturmian_index(const ContinuedFraction& cf, unsigned long depth,
                             mpfr_prec_t prec = 128);

}  // namespace fibdense::wordstats
