#include "fibdense/fibword.hpp"

#include "fibdense/sequences.hpp"

namespace fibdense::fibword {

namespace seq = fibdense::sequences;

FibWord build(unsigned long k, unsigned long max_len) {
  Nat len = seq::fib(k + 1);
  if (len > Nat(max_len))
    throw WordTooLong("build: |FW(" + std::to_string(k) + ")| = " + len.get_str() +
                      " exceeds cap " + std::to_string(max_len));

  FibWord w;
  w.k = k;
  if (k == 0) {
    w.symbols = {false};
  } else if (k == 1) {
    w.symbols = {true};
  } else {
    // prev2 = FW(j-2), prev = FW(j-1); append to get FW(j)
    std::vector<bool> prev2 = {true};         // FW(1)
    std::vector<bool> prev = {true, false};   // FW(2)
    for (unsigned long j = 3; j <= k; ++j) {
      std::vector<bool> cur;
      cur.reserve(prev.size() + prev2.size());
      cur.insert(cur.end(), prev.begin(), prev.end());
      cur.insert(cur.end(), prev2.begin(), prev2.end());
      prev2 = std::move(prev);
      prev = std::move(cur);
    }
    w.symbols = std::move(prev);
  }
  unsigned long ones = 0;
  for (bool b : w.symbols) ones += b;
  w.n = ones;
  w.m = Nat(static_cast<unsigned long>(w.symbols.size())) - w.n;
  return w;
}

std::pair<Nat, Nat> counts(unsigned long k) {
  // bases from FW(0), FW(1), FW(2)
  if (k == 0) return {Nat(1), Nat(0)};
  if (k == 1) return {Nat(0), Nat(1)};
  Nat m_prev2 = 0, n_prev2 = 1;  // FW(1)
  Nat m_prev = 1, n_prev = 1;    // FW(2)
  for (unsigned long j = 3; j <= k; ++j) {
    Nat m_cur = m_prev + m_prev2;
    Nat n_cur = n_prev + n_prev2;
    m_prev2 = std::move(m_prev);
    n_prev2 = std::move(n_prev);
    m_prev = std::move(m_cur);
    n_prev = std::move(n_cur);
  }
  return {m_prev, n_prev};
}

int InfiniteFibWord::symbol_at(const Nat& j) {
  // Find the smallest k with fib(k+1) > j, then walk down the
  // concatenation FW(k) = FW(k-1)·FW(k-2) (Zeckendorf-style descent).
  std::vector<Nat> f = {0, 1};  // f[i] = fib(i)
  while (f.back() <= j) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  unsigned long k = static_cast<unsigned long>(f.size()) - 2;  // fib(k+1) > j
  if (k < 2) k = 2;
  while (f.size() < k + 2) f.push_back(f[f.size() - 1] + f[f.size() - 2]);

  Nat pos = j;
  while (k > 2) {
    if (pos < f[k]) {
      k -= 1;  // inside FW(k-1)
    } else {
      pos -= f[k];
      k -= 2;  // inside FW(k-2)
    }
  }
  if (k == 1) return 1;        // FW(1) = "1"
  return pos == 0 ? 1 : 0;     // FW(2) = "10"
}

std::vector<bool> InfiniteFibWord::prefix(const Nat& len, unsigned long max_len) {
  if (len > Nat(max_len))
    throw WordTooLong("prefix: length " + len.get_str() + " exceeds cap " +
                      std::to_string(max_len));
  const unsigned long want = len.get_ui();
  unsigned long k = 2;
  while (seq::fib(k + 1) < Nat(want)) ++k;
  FibWord w = build(k, max_len);
  w.symbols.resize(want);
  return w.symbols;
}

}  // namespace fibdense::fibword
