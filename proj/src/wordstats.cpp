#include "fibdense/wordstats.hpp"

#include <array>

#include "fibdense/fibword.hpp"

namespace fibdense::wordstats {

// ---------------------------------------------------------------- suffix automaton

namespace {

struct SamState {
  int len = 0;
  int link = -1;
  std::array<int, 2> next = {-1, -1};
};

std::vector<SamState> build_sam(const std::vector<bool>& s) {
  std::vector<SamState> st;
  st.reserve(2 * s.size() + 2);
  st.emplace_back();  // root
  int last = 0;
  for (bool bit : s) {
    const int c = bit ? 1 : 0;
    int cur = static_cast<int>(st.size());
    st.emplace_back();
    st[cur].len = st[last].len + 1;
    int p = last;
    while (p != -1 && st[p].next[c] == -1) {
      st[p].next[c] = cur;
      p = st[p].link;
    }
    if (p == -1) {
      st[cur].link = 0;
    } else {
      int q = st[p].next[c];
      if (st[p].len + 1 == st[q].len) {
        st[cur].link = q;
      } else {
        int clone = static_cast<int>(st.size());
        st.push_back(st[q]);
        st[clone].len = st[p].len + 1;
        while (p != -1 && st[p].next[c] == q) {
          st[p].next[c] = clone;
          p = st[p].link;
        }
        st[q].link = clone;
        st[cur].link = clone;
      }
    }
    last = cur;
  }
  return st;
}

}  // namespace

FactorIndex::FactorIndex(const std::vector<bool>& prefix) : len_(prefix.size()) {
  std::vector<SamState> st = build_sam(prefix);
  // each state covers factor lengths (link.len, len]; difference array
  std::vector<std::int64_t> diff(len_ + 2, 0);
  for (std::size_t i = 1; i < st.size(); ++i) {
    diff[st[st[i].link].len + 1] += 1;
    diff[st[i].len + 1] -= 1;
  }
  by_len_.assign(len_ + 1, 0);
  std::int64_t run = 0;
  for (std::size_t n = 1; n <= len_; ++n) {
    run += diff[n];
    by_len_[n] = static_cast<std::uint64_t>(run);
  }
}

std::uint64_t FactorIndex::fac(std::size_t n) const {
  if (n == 0) return 1;
  if (n > len_)
    throw WindowTooLarge("fac: window exceeds prefix length");
  return by_len_[n];
}

// ---------------------------------------------------------------- eertree

namespace {

struct PalState {
  int len = 0;
  int link = 0;
  std::array<int, 2> next = {-1, -1};
};

}  // namespace

PalindromeIndex::PalindromeIndex(const std::vector<bool>& prefix)
    : len_(prefix.size()) {
  std::vector<PalState> st(2);
  st[0].len = -1;  // imaginary root
  st[0].link = 0;
  st[1].len = 0;  // empty-word root
  st[1].link = 0;
  int suff = 1;

  std::vector<int> s;
  s.reserve(prefix.size());
  by_len_.assign(len_ + 1, 0);

  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const int c = prefix[i] ? 1 : 0;
    s.push_back(c);
    int cur = suff;
    while (true) {
      int l = st[cur].len;
      if (static_cast<int>(i) - l - 1 >= 0 && s[i - l - 1] == c) break;
      cur = st[cur].link;
    }
    if (st[cur].next[c] != -1) {
      suff = st[cur].next[c];
      continue;
    }
    int now = static_cast<int>(st.size());
    st.emplace_back();
    st[now].len = st[cur].len + 2;
    int tmp = st[cur].link;
    if (st[now].len == 1) {
      st[now].link = 1;
    } else {
      while (true) {
        int l = st[tmp].len;
        if (static_cast<int>(i) - l - 1 >= 0 && s[i - l - 1] == c) break;
        tmp = st[tmp].link;
      }
      st[now].link = st[tmp].next[c];
    }
    st[cur].next[c] = now;
    by_len_[st[now].len] += 1;
    suff = now;
  }
}

std::uint64_t PalindromeIndex::pal(std::size_t n) const {
  if (n == 0) return 1;
  if (n > len_)
    throw WindowTooLarge("pal: window exceeds prefix length");
  return by_len_[n];
}

// ---------------------------------------------------------------- queries

std::uint64_t factor_complexity(const std::vector<bool>& prefix, std::size_t n) {
  if (n > prefix.size())
    throw WindowTooLarge("factor_complexity: window exceeds prefix length");
  return FactorIndex(prefix).fac(n);
}

std::uint64_t palindromic_complexity(const std::vector<bool>& prefix,
                                     std::size_t n) {
  if (n > prefix.size())
    throw WindowTooLarge("palindromic_complexity: window exceeds prefix length");
  return PalindromeIndex(prefix).pal(n);
}

density::BoundReport palindrome_bound_check(const std::vector<bool>& prefix,
                                            std::size_t k) {
  if (k < 1) throw InvalidSpec("palindrome_bound_check: requires k >= 1");
  const std::size_t window = k + k / 4;
  if (window > prefix.size())
    throw WindowTooLarge("palindrome_bound_check: k + k/4 exceeds prefix length");
  density::BoundReport b;
  b.k = k;
  b.lhs = Rat(Nat(PalindromeIndex(prefix).pal(k)));
  b.rhs = make_rat(Nat(16) * Nat(FactorIndex(prefix).fac(window)), Nat(k));
  b.holds = b.lhs < b.rhs;
  return b;
}

ComplexityProfile fibonacci_profile(std::size_t prefix_len, std::size_t n_max) {
  using fibword::InfiniteFibWord;
  std::vector<bool> p = InfiniteFibWord::prefix(Nat(static_cast<unsigned long>(prefix_len)));
  std::vector<bool> p2 = InfiniteFibWord::prefix(Nat(static_cast<unsigned long>(2 * prefix_len)));
  FactorIndex f1(p), f2(p2);
  PalindromeIndex q1(p), q2(p2);

  ComplexityProfile prof;
  prof.prefix_len = prefix_len;
  for (std::size_t n = 0; n <= n_max; ++n) {
    prof.fac.push_back(f1.fac(n));
    prof.pal.push_back(q1.pal(n));
    prof.fac_stabilized.push_back(f1.fac(n) == f2.fac(n));
    prof.pal_stabilized.push_back(q1.pal(n) == q2.pal(n));
  }
  return prof;
}

// ---------------------------------------------------------------- continued fractions

std::vector<Nat> convergent_denominators(const ContinuedFraction& cf) {
  std::vector<Nat> q;
  q.emplace_back(1);  // q_0
  Nat prev = 0;       // q_{-1}
  for (std::size_t n = 1; n < cf.partial_quotients.size(); ++n) {
    Nat next = cf.partial_quotients[n] * q.back() + prev;
    prev = q.back();
    q.push_back(std::move(next));
  }
  return q;
}

SturmianIndex sturmian_index(const ContinuedFraction& cf, unsigned long depth,
                             mpfr_prec_t prec) {
  const auto& a = cf.partial_quotients;
  if (a.size() < depth + 2)
    throw InsufficientDepth("sturmian_index: need at least depth+2 partial quotients");

  std::vector<Nat> q = convergent_denominators(cf);
  BigFloat ind(prec);
  bool first = true;
  Nat q_prev = 0;  // q_{-1}
  for (unsigned long n = 0; n <= depth; ++n) {
    BigFloat term = BigFloat(Nat(Nat(2) + a[n + 1]), prec) +
                    BigFloat(Nat(q_prev - 2), prec) / BigFloat(q[n], prec);
    if (first || ind < term) ind = term;
    first = false;
    q_prev = q[n];
  }

  // reversed continued fraction [a_n, ..., a_1] by back-substitution
  BigFloat star(prec);
  first = true;
  for (unsigned long n = 1; n <= depth; ++n) {
    BigFloat v(a[1], prec);
    for (unsigned long i = 2; i <= n; ++i)
      v = BigFloat(a[i], prec) + BigFloat(1, prec) / v;
    if (first || star < v) star = v;
    first = false;
  }
  SturmianIndex out{ind, star * BigFloat(2, prec)};
  return out;
}

}  // namespace fibdense::wordstats
