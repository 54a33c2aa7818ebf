#pragma once

/**
 * Exact characteristic-polynomial coefficients and the signed second
 * factor of the extended Master Theorem identity.
 *
 * char_coeffs computes c_r as (-1)^r times the sum of r x r principal
 * minors, each minor by cofactor expansion. The partial-permutation
 * expansion is an independent route to the same numbers and is kept
 * separate so the two can be checked against each other.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmt/numbers.hpp"
#include "mmt/poly.hpp"
#include "mmt/words.hpp"

namespace mmt {

// Square matrix of polynomial entries; indices are 1-based like a_{ij}.
class SymMatrix {
 public:
  explicit SymMatrix(int m) : m_(m), entries_(static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
    if (m < 1) throw std::invalid_argument("matrix dimension must be positive");
  }

  static SymMatrix zero(int m) { return SymMatrix(m); }
  static SymMatrix identity(int m) {
    SymMatrix out(m);
    for (int i = 1; i <= m; ++i) out(i, i) = Poly(1);
    return out;
  }
  static SymMatrix ones(int m) {
    SymMatrix out(m);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) out(i, j) = Poly(1);
    return out;
  }
  // Entry (i,j) is the formal variable a_{ij}.
  static SymMatrix symbolic(int m) {
    SymMatrix out(m);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) out(i, j) = Poly::a(i, j);
    return out;
  }
  static SymMatrix from_rationals(const std::vector<std::vector<Rational>>& rows) {
    const int m = static_cast<int>(rows.size());
    SymMatrix out(m);
    for (int i = 1; i <= m; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i - 1)];
      if (static_cast<int>(row.size()) != m) throw std::invalid_argument("matrix rows must have length " + std::to_string(m));
      for (int j = 1; j <= m; ++j) out(i, j) = Poly(row[static_cast<std::size_t>(j - 1)]);
    }
    return out;
  }

  int m() const noexcept { return m_; }
  Poly& operator()(int i, int j) { return entries_[index(i, j)]; }
  const Poly& operator()(int i, int j) const { return entries_[index(i, j)]; }

  bool is_numeric() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_constant(); });
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > m_ || j < 1 || j > m_) throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(j - 1);
  }

  int m_;
  std::vector<Poly> entries_;
};

// TA: row i multiplied by t_i.
inline SymMatrix scale_rows_by_t(const SymMatrix& a) {
  SymMatrix out(a.m());
  for (int i = 1; i <= a.m(); ++i) {
    const Poly ti = Poly::t(i);
    for (int j = 1; j <= a.m(); ++j) out(i, j) = a(i, j) * ti;
  }
  return out;
}

namespace detail {

// Laplace expansion along the first listed row.
inline Poly cofactor_det(const SymMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty()) return Poly(1);
  if (rows.size() == 1) return a(rows[0], cols[0]);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  Poly out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Poly& pivot = a(rows[0], cols[c]);
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (std::size_t d = 0; d < cols.size(); ++d)
      if (d != c) sub_cols.push_back(cols[d]);
    Poly term = pivot * cofactor_det(a, sub_rows, sub_cols);
    if (c % 2 == 0) out += term; else out -= term;
  }
  return out;
}

// Visits each r-subset of {1..m} as an increasing vector.
template <typename Visit>
void for_each_subset(int m, int r, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    visit(std::as_const(idx));
    int s = r - 1;
    while (s >= 0 && idx[static_cast<std::size_t>(s)] == m - r + s + 1) --s;
    if (s < 0) return;
    ++idx[static_cast<std::size_t>(s)];
    for (int u = s + 1; u < r; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
  }
}

}  // namespace detail

inline Poly determinant(const SymMatrix& a) {
  std::vector<int> all(static_cast<std::size_t>(a.m()));
  std::iota(all.begin(), all.end(), 1);
  return detail::cofactor_det(a, all, all);
}

// det(I - M)
inline Poly det_identity_minus(const SymMatrix& mtx) {
  SymMatrix diff(mtx.m());
  for (int i = 1; i <= mtx.m(); ++i)
    for (int j = 1; j <= mtx.m(); ++j) diff(i, j) = (i == j ? Poly(1) : Poly()) - mtx(i, j);
  return determinant(diff);
}

// c_0..c_m with det(lambda I - M) = sum_r c_r lambda^{m-r}.
inline std::vector<Poly> char_coeffs(const SymMatrix& mtx) {
  const int m = mtx.m();
  std::vector<Poly> out(static_cast<std::size_t>(m) + 1);
  out[0] = Poly(1);
  for (int r = 1; r <= m; ++r) {
    Poly minors;
    detail::for_each_subset(m, r, [&](const std::vector<int>& subset) {
      minors += detail::cofactor_det(mtx, subset, subset);
    });
    out[static_cast<std::size_t>(r)] = (r % 2 == 0) ? minors : -minors;
  }
  return out;
}

// A bijection of a subset J of [m]; images[s] is the image of support[s].
struct PartialPermutation {
  std::vector<int> support;
  std::vector<int> images;

  std::size_t inv() const noexcept {
    std::size_t n = 0;
    for (std::size_t s = 0; s < images.size(); ++s)
      for (std::size_t t = s + 1; t < images.size(); ++t)
        if (images[s] > images[t]) ++n;
    return n;
  }

  // a_omega = prod_s a[support[s], images[s]]; 1 for the empty partial permutation.
  Poly weight(const SymMatrix& a) const {
    Poly out(1);
    for (std::size_t s = 0; s < support.size(); ++s) out *= a(support[s], images[s]);
    return out;
  }

  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
};

template <typename Visit>
void for_each_partial_perm(int m, int r, Visit&& visit) {
  if (r < 0 || r > m) throw std::invalid_argument("partial permutation size must lie in [0, m]");
  detail::for_each_subset(m, r, [&](const std::vector<int>& subset) {
    PartialPermutation omega{subset, subset};
    do {
      visit(std::as_const(omega));
    } while (std::next_permutation(omega.images.begin(), omega.images.end()));
  });
}

inline std::vector<PartialPermutation> enumerate_partial_perms(int m, int r) {
  std::vector<PartialPermutation> out;
  for_each_partial_perm(m, r, [&](const PartialPermutation& w) { out.push_back(w); });
  return out;
}

// corrected: sum_omega (-1)^{r + inv(omega)} a_omega, which equals c_r.
// printed: the same without the (-1)^r factor.
enum class SignConvention { corrected, printed };

inline std::vector<Poly> partial_perm_expansion(const SymMatrix& a, SignConvention conv = SignConvention::corrected) {
  const int m = a.m();
  std::vector<Poly> out(static_cast<std::size_t>(m) + 1);
  for (int r = 0; r <= m; ++r) {
    Poly sum;
    for_each_partial_perm(m, r, [&](const PartialPermutation& w) {
      int parity = static_cast<int>(w.inv() % 2);
      if (conv == SignConvention::corrected) parity = (parity + r) % 2;
      if (parity == 0) sum += w.weight(a); else sum -= w.weight(a);
    });
    out[static_cast<std::size_t>(r)] = std::move(sum);
  }
  return out;
}

// alpha(r) = r - (r mod k)
inline int alpha(int r, int k) { return r - r % k; }

// Sum over r = 0, 1 (mod k) of (-1)^{alpha(r)} coeffs[r].
inline Poly signed_residue_sum(const std::vector<Poly>& coeffs, int k) {
  Poly out;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    const int ri = static_cast<int>(r);
    if (ri % k > 1) continue;
    if (alpha(ri, k) % 2 == 0) out += coeffs[r]; else out -= coeffs[r];
  }
  return out;
}

inline Poly second_factor(const SymMatrix& a, const AlgebraParams& p) {
  if (a.m() != p.m()) throw std::invalid_argument("second_factor: matrix dimension does not match m");
  return signed_residue_sum(char_coeffs(scale_rows_by_t(a)), p.k());
}

}  // namespace mmt
