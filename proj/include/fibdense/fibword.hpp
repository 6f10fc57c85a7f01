#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fibdense/errors.hpp"
#include "fibdense/numeric.hpp"

namespace fibdense::fibword {

/// Default materialization cap: 2^26 symbols (8 MiB packed).
inline constexpr unsigned long kDefaultMaxLen = 1ul << 26;

/// A materialized finite Fibonacci word FW(k) with its symbol counts.
/// FW(0)="0", FW(1)="1", FW(2)="10", FW(k)=FW(k-1)·FW(k-2).
struct FibWord {
  unsigned long k = 0;
  std::vector<bool> symbols;  // packed, one bit per symbol
  Nat m;                      // zeros
  Nat n;                      // ones
};

/// Builds FW(k) by iterative concatenation. Throws WordTooLong when
/// |FW(k)| = fib(k+1) would exceed max_len.
FibWord build(unsigned long k, unsigned long max_len = kDefaultMaxLen);

/// (zeros, ones) of FW(k) by the count recurrences; never materializes.
std::pair<Nat, Nat> counts(unsigned long k);

/// Index-addressable oracle for the infinite Fibonacci word 101101011...
/// Stateless; symbol_at descends the concatenation structure in O(log j).
class InfiniteFibWord {
 public:
  static int symbol_at(const Nat& j);
  static std::vector<bool> prefix(const Nat& len,
                                  unsigned long max_len = kDefaultMaxLen);
};

}  // namespace fibdense::fibword
