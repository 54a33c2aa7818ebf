#pragma once

/**
 * Assembly and verification of the extended Master Theorem identity
 *
 *   ( sum_{i admissible} G(i) t_{i_1} ... t_{i_l} ) * second_factor(A) = 1,
 *
 * where G(i) is the coefficient of the admissible monomial x_i in the
 * normal form of y_{i_1} ... y_{i_l}, y_i = sum_j a_{ij} x_j.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mmt/charpoly.hpp"
#include "mmt/numbers.hpp"
#include "mmt/poly.hpp"
#include "mmt/rewrite.hpp"
#include "mmt/words.hpp"

namespace mmt {

namespace detail {

inline void accumulate(Rational& acc, const Rational& x, long c) { acc += x * c; }
inline void accumulate(Poly& acc, const Poly& x, long c) { acc.add_scaled(x, Monomial{}, Rational(c)); }

inline long small_coefficient(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("rewrite coefficient exceeds machine range");
  return z.get_si();
}

// t_{i_1} ... t_{i_l}
inline Monomial t_monomial(const Word& w) {
  std::vector<Monomial::Entry> e;
  e.reserve(w.size());
  for (int x : w) e.emplace_back(VarId::t_var(x), 1);
  return Monomial::from_entries(std::move(e));
}

// Admissible words of one length, indexed.
struct Level {
  std::vector<Word> words;
  std::unordered_map<Word, std::uint32_t, WordHash> index;

  Level(const AlgebraParams& p, std::size_t length) : words(enumerate_admissible(p, length)) {
    index.reserve(words.size());
    for (std::uint32_t n = 0; n < words.size(); ++n) index.emplace(words[n], n);
  }
};

/**
 * Suffix dynamic programme for G(i), |i| <= cap.
 *
 * The normal form of y_{i_1} ... y_{i_l} is y_{i_1} times the stored normal
 * form for the suffix (i_2, ..., i_l), with x_j * w reduced through a table
 * of normal forms indexed by (j, w). Products depend on the word only
 * through the rows of A, so they are cached per row-class word; repeated
 * rows (e.g. the all-ones matrix) collapse to one product per length. At
 * the top length only the diagonal coefficient is needed, which is read
 * through the reversed table.
 */
template <typename Coeff>
class FirstFactorEngine {
 public:
  using Row = std::vector<Coeff>;

  FirstFactorEngine(AlgebraParams p, std::vector<Row> rows) : params_(p), rows_(std::move(rows)) {
    const int m = params_.m();
    row_class_.resize(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) {
      row_class_[static_cast<std::size_t>(i)] = i;
      for (int r = 1; r < i; ++r) {
        if (rows_[static_cast<std::size_t>(r - 1)] == rows_[static_cast<std::size_t>(i - 1)]) {
          row_class_[static_cast<std::size_t>(i)] = r;
          break;
        }
      }
    }
  }

  std::map<Word, Coeff> run(std::uint32_t cap) {
    std::map<Word, Coeff> g;
    g.emplace(Word{}, Coeff(1));
    if (cap == 0) return g;

    Level prev_level(params_, 0);
    std::unordered_map<Word, std::vector<Coeff>, WordHash> prev_products;
    prev_products.emplace(Word{}, std::vector<Coeff>{Coeff(1)});

    for (std::uint32_t len = 1; len <= cap; ++len) {
      Level level(params_, len);
      auto table = left_multiplication_table(prev_level, level);

      if (len < cap) {
        std::unordered_map<Word, std::vector<Coeff>, WordHash> products;
        for (const Word& i : level.words) {
          Word key = row_class_word(i);
          auto it = products.find(key);
          if (it == products.end()) {
            const auto& suffix = prev_products.at(key.suffix(1));
            it = products.emplace(key, multiply_row(i[0], suffix, table, level.words.size())).first;
          }
          const Coeff& gi = it->second[level.index.at(i)];
          if (!is_zero(gi)) g.emplace(i, gi);
        }
        prev_products = std::move(products);
      } else {
        // reversed[u] lists (j, w, c) with x_j * w contributing c * x_u.
        std::vector<std::vector<std::tuple<int, std::uint32_t, long>>> reversed(level.words.size());
        for (int j = 1; j <= params_.m(); ++j) {
          const auto& column = table[static_cast<std::size_t>(j - 1)];
          for (std::uint32_t w = 0; w < column.size(); ++w)
            for (const auto& [u, c] : column[w]) reversed[u].emplace_back(j, w, c);
        }
        for (const Word& i : level.words) {
          const auto& suffix = prev_products.at(row_class_word(i).suffix(1));
          const Row& row = rows_[static_cast<std::size_t>(i[0] - 1)];
          Coeff gi(0);
          for (const auto& [j, w, c] : reversed[level.index.at(i)]) {
            const Coeff& sw = suffix[w];
            const Coeff& a = row[static_cast<std::size_t>(j - 1)];
            if (is_zero(sw) || is_zero(a)) continue;
            accumulate(gi, a * sw, c);
          }
          if (!is_zero(gi)) g.emplace(i, std::move(gi));
        }
      }
      prev_level = std::move(level);
    }
    return g;
  }

 private:
  using Table = std::vector<std::vector<std::vector<std::pair<std::uint32_t, long>>>>;

  // table[j-1][w] = normal form of x_j * w for w in the previous level.
  Table left_multiplication_table(const Level& prev, const Level& level) const {
    Table table(static_cast<std::size_t>(params_.m()));
    for (int j = 1; j <= params_.m(); ++j) {
      auto& column = table[static_cast<std::size_t>(j - 1)];
      column.resize(prev.words.size());
      for (std::uint32_t w = 0; w < prev.words.size(); ++w) {
        auto nf = normal_form(prev.words[w].prepend(j), params_);
        column[w].reserve(nf.size());
        for (const auto& [u, c] : nf.terms()) column[w].emplace_back(level.index.at(u), small_coefficient(c));
      }
    }
    return table;
  }

  std::vector<Coeff> multiply_row(int letter, const std::vector<Coeff>& suffix, const Table& table,
                                  std::size_t size) const {
    std::vector<Coeff> out(size, Coeff(0));
    const Row& row = rows_[static_cast<std::size_t>(letter - 1)];
    for (int j = 1; j <= params_.m(); ++j) {
      const Coeff& a = row[static_cast<std::size_t>(j - 1)];
      if (is_zero(a)) continue;
      const auto& column = table[static_cast<std::size_t>(j - 1)];
      for (std::uint32_t w = 0; w < suffix.size(); ++w) {
        if (is_zero(suffix[w])) continue;
        Coeff scaled = a * suffix[w];
        for (const auto& [u, c] : column[w]) accumulate(out[u], scaled, c);
      }
    }
    return out;
  }

  Word row_class_word(const Word& i) const {
    Word out;
    for (int x : i) out.push_back(row_class_[static_cast<std::size_t>(x)]);
    return out;
  }

  AlgebraParams params_;
  std::vector<Row> rows_;
  std::vector<int> row_class_;
};

}  // namespace detail

struct FirstFactorSeries {
  AlgebraParams params;
  std::uint32_t cap = 0;
  std::string mode;              // "numeric" or "symbolic"
  std::map<Word, Poly> coeffs;   // nonzero G(i), |i| <= cap

  Poly coefficient(const Word& i) const {
    auto it = coeffs.find(i);
    return it == coeffs.end() ? Poly() : it->second;
  }

  // sum_i G(i) t_{i_1} ... t_{i_l}
  Poly to_series() const {
    Poly out;
    for (const auto& [w, g] : coeffs) out.add_scaled(g, detail::t_monomial(w), 1);
    return out;
  }
};

inline std::string matrix_mode(const SymMatrix& a) { return a.is_numeric() ? "numeric" : "symbolic"; }

inline FirstFactorSeries first_factor(const SymMatrix& a, const AlgebraParams& p, std::uint32_t cap) {
  if (a.m() != p.m()) throw std::invalid_argument("first_factor: matrix dimension does not match m");
  FirstFactorSeries out{p, cap, matrix_mode(a), {}};
  const int m = p.m();
  if (a.is_numeric()) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) rows[static_cast<std::size_t>(i - 1)].push_back(a(i, j).constant_term());
    for (auto& [w, g] : detail::FirstFactorEngine<Rational>(p, std::move(rows)).run(cap)) out.coeffs.emplace(w, Poly(g));
  } else {
    std::vector<std::vector<Poly>> rows(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) rows[static_cast<std::size_t>(i - 1)].push_back(a(i, j));
    out.coeffs = detail::FirstFactorEngine<Poly>(p, std::move(rows)).run(cap);
  }
  return out;
}

// G(i) for a single admissible word: reduce y_{i_1} ... y_{i_l} right to left
// and read the coefficient of x_i.
inline Poly g_coefficient(const SymMatrix& a, const Word& i, const AlgebraParams& p) {
  if (!is_admissible(i, p)) throw contract_violation("g_coefficient: word " + to_string(i) + " is not admissible");
  std::map<Word, Poly> product{{Word{}, Poly(1)}};
  for (std::size_t s = i.size(); s-- > 0;) {
    std::map<Word, Poly> next;
    for (const auto& [w, coeff] : product) {
      for (int j = 1; j <= p.m(); ++j) {
        const Poly& entry = a(i[s], j);
        if (entry.is_zero()) continue;
        Poly scaled = entry * coeff;
        const auto nf = normal_form(w.prepend(j), p);
        for (const auto& [u, c] : nf.terms()) next[u].add_scaled(scaled, Monomial{}, Rational(c));
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    product = std::move(next);
  }
  auto it = product.find(i);
  return it == product.end() ? Poly() : it->second;
}

// G(i) = sum_{j in [m]^l} c_{i,j} a_{i_1 j_1} ... a_{i_l j_l}, with c from path counting.
inline Poly g_coefficient_by_paths(const SymMatrix& a, const Word& i, PathCoefficientOracle& oracle) {
  const auto& p = oracle.params();
  if (!is_admissible(i, p)) throw contract_violation("g_coefficient: word " + to_string(i) + " is not admissible");
  Poly out;
  for_each_word(p.m(), i.size(), [&](const Word& j) {
    Integer c = oracle.coefficient(i, j);
    if (c == 0) return;
    Poly term{Rational(c)};
    for (std::size_t s = 0; s < i.size(); ++s) term *= a(i[s], j[s]);
    out += term;
  });
  return out;
}

struct DegreeCheck {
  std::uint32_t d = 0;
  bool ok = false;
  std::size_t residual_terms = 0;
};

struct ResidualTerm {
  std::uint32_t d = 0;
  Monomial monomial;
  Rational coeff;
};

struct MasterReport {
  AlgebraParams params;
  std::uint32_t cap = 0;
  std::string mode;
  bool pass = false;
  std::vector<DegreeCheck> per_degree;
  std::optional<ResidualTerm> first_failure;
};

namespace detail {

// residual(d) is the degree-d part of (product - 1).
template <typename Residual>
MasterReport grade_report(AlgebraParams p, std::uint32_t cap, std::string mode, Residual&& residual) {
  MasterReport report{p, cap, std::move(mode), true, {}, std::nullopt};
  for (std::uint32_t d = 0; d <= cap; ++d) {
    Poly r = residual(d);
    DegreeCheck check{d, r.is_zero(), r.size()};
    if (!check.ok) {
      report.pass = false;
      if (!report.first_failure) {
        const auto& [mono, coeff] = *r.terms().begin();
        report.first_failure = ResidualTerm{d, mono, coeff};
      }
    }
    report.per_degree.push_back(check);
  }
  return report;
}

}  // namespace detail

// Multiplies the two factors modulo t-degree > cap and checks each grade.
inline MasterReport verify_master(const SymMatrix& a, const AlgebraParams& p, std::uint32_t cap) {
  Poly product = mul_truncated(first_factor(a, p, cap).to_series(), second_factor(a, p), cap);
  return detail::grade_report(p, cap, matrix_mode(a), [&](std::uint32_t d) {
    Poly part = product.t_part(d);
    if (d == 0) part -= Poly(1);
    return part;
  });
}

/**
 * The identity with all t_i = 1, graded by word length: the first bracket's
 * degree-l part is sum_{i in Lambda(l)} sum_{j in [m]^l} c_{i,j} a_{ij}
 * (path counting), the second bracket's degree-r part is
 * (-1)^{alpha(r)} sum_{omega in Sigma_m(r)} sign * a_omega for r = 0,1 mod k.
 * The printed convention omits the (-1)^r in the sign and is kept only to
 * demonstrate that it does not balance.
 */
inline MasterReport verify_corollary(const SymMatrix& a, const AlgebraParams& p, std::uint32_t cap,
                                     SignConvention conv = SignConvention::corrected) {
  if (a.m() != p.m()) throw std::invalid_argument("verify_corollary: matrix dimension does not match m");
  PathCoefficientOracle oracle(p);
  std::vector<Poly> first(cap + 1);
  first[0] = Poly(1);
  for (std::uint32_t len = 1; len <= cap; ++len) {
    Poly sum;
    for_each_word(p.m(), len, [&](const Word& j) {
      for (const auto& [i, c] : oracle.column(j)) {
        Poly term{Rational(c)};
        for (std::size_t s = 0; s < len; ++s) term *= a(i[s], j[s]);
        sum += term;
      }
    });
    first[len] = std::move(sum);
  }

  auto expansion = partial_perm_expansion(a, conv);
  std::vector<Poly> second(expansion.size());
  for (std::size_t r = 0; r < expansion.size(); ++r) {
    const int ri = static_cast<int>(r);
    if (ri % p.k() > 1) continue;
    second[r] = alpha(ri, p.k()) % 2 == 0 ? expansion[r] : -expansion[r];
  }

  std::string mode = conv == SignConvention::corrected ? "corollary" : "corollary-printed";
  return detail::grade_report(p, cap, std::move(mode), [&](std::uint32_t d) {
    Poly part;
    for (std::uint32_t r = 0; r <= d && r < second.size(); ++r) part += first[d - r] * second[r];
    if (d == 0) part -= Poly(1);
    return part;
  });
}

}  // namespace mmt
