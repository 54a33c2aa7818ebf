#pragma once

/**
 * Counting consequences of the identity: admissible-word counts by three
 * independent methods, the generating function F_{m,k} and its weak
 * variant, the symmetry of F_{m,k}, N_m(l) = m^l, and the exponential
 * generating function for permutations without long decreasing runs.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmt/charpoly.hpp"
#include "mmt/identity.hpp"
#include "mmt/numbers.hpp"
#include "mmt/poly.hpp"
#include "mmt/words.hpp"

namespace mmt {

enum class CountMethod { dp, transfer, series };

inline std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::dp: return "dp";
    case CountMethod::transfer: return "transfer";
    case CountMethod::series: return "series";
  }
  return "?";
}

struct CountTable {
  AlgebraParams params;
  Variant variant = Variant::strict;
  CountMethod method = CountMethod::dp;
  std::vector<Integer> values;  // values[l] = number of admissible words of length l
};

// State: (last letter, length of the descending run ending there).
inline std::vector<Integer> count_dp(const AlgebraParams& p, std::size_t max_len, Variant v) {
  const int m = p.m();
  const int k = p.k();
  std::vector<Integer> values{1};
  if (max_len == 0) return values;
  // dp[x][r], x in 1..m, r in 1..k-1
  std::vector<std::vector<Integer>> dp(static_cast<std::size_t>(m) + 1, std::vector<Integer>(static_cast<std::size_t>(k), 0));
  for (int x = 1; x <= m; ++x) dp[static_cast<std::size_t>(x)][1] = 1;
  values.push_back(m);
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<std::vector<Integer>> next(dp.size(), std::vector<Integer>(static_cast<std::size_t>(k), 0));
    for (int x = 1; x <= m; ++x) {
      for (int r = 1; r < k; ++r) {
        const Integer& c = dp[static_cast<std::size_t>(x)][static_cast<std::size_t>(r)];
        if (c == 0) continue;
        for (int y = 1; y <= m; ++y) {
          int run = detail::descends(x, y, v) ? r + 1 : 1;
          if (run >= k) continue;
          next[static_cast<std::size_t>(y)][static_cast<std::size_t>(run)] += c;
        }
      }
    }
    dp = std::move(next);
    Integer total = 0;
    for (const auto& row : dp)
      for (const auto& c : row) total += c;
    values.push_back(total);
  }
  return values;
}

// States are windows of the last k-1 letters; an edge appends one letter
// without completing a descending k-window.
struct TransferGraph {
  AlgebraParams params;
  Variant variant;
  std::vector<Word> states;
  std::vector<std::vector<std::size_t>> adjacency;

  TransferGraph(const AlgebraParams& p, Variant v) : params(p), variant(v) {
    const int m = p.m();
    const std::size_t width = static_cast<std::size_t>(p.k() - 1);
    for_each_word(m, width, [&](const Word& w) { states.push_back(w); });
    adjacency.resize(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
      const Word& w = states[s];
      bool window_descends = true;
      for (std::size_t q = 1; q < width && window_descends; ++q) window_descends = detail::descends(w[q - 1], w[q], v);
      for (int c = 1; c <= m; ++c) {
        if (window_descends && detail::descends(w[width - 1], c, v)) continue;
        Word next = w.suffix(1);
        next.push_back(c);
        adjacency[s].push_back(rank(next));
      }
    }
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& a : adjacency) n += a.size();
    return n;
  }

  // Position of a window in the lexicographic state list.
  std::size_t rank(const Word& w) const {
    std::size_t r = 0;
    for (int x : w) r = r * static_cast<std::size_t>(params.m()) + static_cast<std::size_t>(x - 1);
    return r;
  }
};

// Walks of l-(k-1) edges from any start window; shorter lengths contain no
// full window, so every word counts.
inline std::vector<Integer> count_transfer(const AlgebraParams& p, std::size_t max_len, Variant v) {
  const TransferGraph graph(p, v);
  const std::size_t width = static_cast<std::size_t>(p.k() - 1);
  std::vector<Integer> values;
  for (std::size_t len = 0; len <= std::min(max_len, width); ++len) values.push_back(power(p.m(), len));
  std::vector<Integer> walk(graph.states.size(), 1);
  for (std::size_t len = width + 1; len <= max_len; ++len) {
    std::vector<Integer> next(walk.size(), 0);
    for (std::size_t s = 0; s < walk.size(); ++s)
      for (std::size_t t : graph.adjacency[s]) next[t] += walk[s];
    walk = std::move(next);
    values.push_back(std::accumulate(walk.begin(), walk.end(), Integer(0)));
  }
  return values;
}

// One-variable denominator 1 - m t + C(m,k) t^k - C(m,k+1) t^{k+1} + ...
// (strict), or the same with C(m+r-1, r) (weak, truncated at max_len).
inline Poly counting_denominator(const AlgebraParams& p, std::size_t max_len, Variant v) {
  Poly den;
  const std::size_t top = v == Variant::strict ? static_cast<std::size_t>(p.m()) : max_len;
  const auto m = static_cast<unsigned long>(p.m());
  for (std::size_t r = 0; r <= top; ++r) {
    const int rem = static_cast<int>(r % static_cast<std::size_t>(p.k()));
    if (rem > 1) continue;
    Integer c = v == Variant::strict ? binomial(m, r) : binomial(m + r - 1, r);
    if (r == 0) c = 1;
    den.add_term(Monomial(VarId::t_var(1), static_cast<std::uint32_t>(r)), rem == 0 ? Rational(c) : Rational(-c));
  }
  return den;
}

inline std::vector<Integer> count_series(const AlgebraParams& p, std::size_t max_len, Variant v) {
  auto inverse = series_inverse(counting_denominator(p, max_len, v), static_cast<std::uint32_t>(max_len));
  std::vector<Integer> values;
  for (std::size_t len = 0; len <= max_len; ++len) {
    Rational c = inverse.poly().coefficient(Monomial(VarId::t_var(1), static_cast<std::uint32_t>(len)));
    if (c.get_den() != 1) throw std::logic_error("count_series: non-integral coefficient");
    values.push_back(c.get_num());
  }
  return values;
}

inline CountTable count_admissible(const AlgebraParams& p, std::size_t max_len, Variant v, CountMethod method) {
  CountTable out{p, v, method, {}};
  switch (method) {
    case CountMethod::dp: out.values = count_dp(p, max_len, v); break;
    case CountMethod::transfer: out.values = count_transfer(p, max_len, v); break;
    case CountMethod::series: out.values = count_series(p, max_len, v); break;
  }
  return out;
}

// 1 - e_1 + e_k - e_{k+1} + e_{2k} - ... (strict, indices <= m) or the same
// in h_r (weak, materialized up to degree cap).
inline Poly f_denominator(const AlgebraParams& p, std::uint32_t cap, Variant v) {
  Poly den;
  const int top = v == Variant::strict ? p.m() : static_cast<int>(cap);
  for (int r = 0; r <= top; ++r) {
    const int rem = r % p.k();
    if (rem > 1) continue;
    Poly term = v == Variant::strict ? elementary_sym(r, p.m()) : complete_sym(r, p.m());
    if (rem == 0) den += term; else den -= term;
  }
  return den;
}

struct FSeriesResult {
  Poly lhs;                // sum over admissible words of t_{i_1} ... t_{i_l}
  TruncatedSeries rhs;     // series_inverse(f_denominator)
  bool equal = false;
};

inline Poly admissible_word_series(const AlgebraParams& p, std::uint32_t cap, Variant v) {
  Poly out;
  for (std::uint32_t len = 0; len <= cap; ++len)
    for_each_admissible(p, len, v, [&](const Word& w) { out.add_term(detail::t_monomial(w), 1); });
  return out;
}

inline FSeriesResult f_series(const AlgebraParams& p, std::uint32_t cap, Variant v) {
  Poly lhs = admissible_word_series(p, cap, v);
  TruncatedSeries rhs = series_inverse(f_denominator(p, cap, v), cap);
  bool equal = lhs == rhs.poly();
  return FSeriesResult{std::move(lhs), std::move(rhs), equal};
}

// Invariance under every adjacent transposition t_i <-> t_{i+1}.
inline bool check_symmetry(const Poly& series, int m) {
  for (int i = 1; i < m; ++i)
    if (!(apply_transposition(series, i) == series)) return false;
  return true;
}

// Permutations of [n] whose strictly decreasing consecutive runs are all shorter than k.
inline Integer count_perms_no_long_descents(int n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("count_perms_no_long_descents: need n >= 0, k >= 1");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Integer count = 0;
  do {
    int run = 0, longest = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
      run = (s > 0 && perm[s - 1] > perm[s]) ? run + 1 : 1;
      longest = std::max(longest, run);
    }
    if (longest < k) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

struct EgfRow {
  int n = 0;
  Integer brute;
  Integer series;
  bool ok = false;
};

struct EgfReport {
  int k = 0;
  int max_n = 0;
  bool pass = false;
  std::vector<EgfRow> rows;
};

// n! [x^n] of 1 / (1 - x + x^k/k! - x^{k+1}/(k+1)! + x^{2k}/(2k)! - ...)
// against brute force, n <= max_n.
inline EgfReport egf_check(int k, int max_n) {
  if (k < 2) throw std::invalid_argument("egf_check: k must be at least 2");
  if (max_n < 0 || max_n > 9) throw std::invalid_argument("egf_check: n is limited to 0..9 (brute force)");
  Poly den;
  for (int r = 0; r <= max_n; ++r) {
    const int rem = r % k;
    if (rem > 1) continue;
    Rational c(1);
    c /= Rational(factorial(static_cast<unsigned long>(r)));
    den.add_term(Monomial(VarId::t_var(1), static_cast<std::uint32_t>(r)), rem == 0 ? c : Rational(-c));
  }
  auto inverse = series_inverse(den, static_cast<std::uint32_t>(max_n));
  EgfReport report{k, max_n, true, {}};
  for (int n = 0; n <= max_n; ++n) {
    Rational c = inverse.poly().coefficient(Monomial(VarId::t_var(1), static_cast<std::uint32_t>(n)));
    c *= Rational(factorial(static_cast<unsigned long>(n)));
    EgfRow row{n, count_perms_no_long_descents(n, k), 0, false};
    if (c.get_den() == 1) {
      row.series = c.get_num();
      row.ok = row.series == row.brute;
    }
    report.pass = report.pass && row.ok;
    report.rows.push_back(row);
  }
  return report;
}

struct NmReport {
  int m = 0;
  int max_len = 0;
  bool pass = false;
  std::vector<Integer> n_values;          // sum of G(i) over admissible i of length l
  std::vector<Integer> admissible_counts;  // L_{m,m}(l)
};

// k = m, all-ones A, all t_i = t: the coefficient sum at length l must be m^l.
inline NmReport n_m_check(int m, int max_len) {
  if (m < 2) throw std::invalid_argument("n_m_check: m must be at least 2");
  if (max_len < 0) throw std::invalid_argument("n_m_check: length must be nonnegative");
  AlgebraParams p(m, m);
  auto first = first_factor(SymMatrix::ones(m), p, static_cast<std::uint32_t>(max_len));
  std::vector<Rational> sums(static_cast<std::size_t>(max_len) + 1, Rational(0));
  for (const auto& [w, g] : first.coeffs) sums[w.size()] += g.constant_term();
  NmReport report{m, max_len, true, {}, count_dp(p, static_cast<std::size_t>(max_len), Variant::strict)};
  for (int len = 0; len <= max_len; ++len) {
    const Rational& s = sums[static_cast<std::size_t>(len)];
    Integer value = s.get_den() == 1 ? Integer(s.get_num()) : Integer(-1);
    report.pass = report.pass && s.get_den() == 1 && value == power(m, static_cast<unsigned long>(len));
    report.n_values.push_back(value);
  }
  return report;
}

}  // namespace mmt
