#pragma once

/**
 * Rewriting in B_{m,k}.
 *
 * For distinct letters b_1 > ... > b_k the defining relation
 *   sum_{sigma in S_k} sign(sigma) x_{b_sigma(k)} ... = 0
 * is solved for the strictly decreasing monomial, giving
 *   x_{b_1} ... x_{b_k} = sum_{sigma != decreasing} (-1)^{C(k,2) + inv(sigma) + 1} x_sigma,
 * where inv(sigma) counts inversions of the arrangement. Applying this to
 * decreasing k-runs until none remain yields the admissible normal form;
 * every step strictly lowers the inversion count, so reduction terminates.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mmt/errors.hpp"
#include "mmt/numbers.hpp"
#include "mmt/poly.hpp"
#include "mmt/words.hpp"

namespace mmt {

// A linear combination of admissible words with nonzero coefficients.
template <typename Coeff>
class NCombination {
 public:
  using Terms = std::map<Word, Coeff>;

  explicit NCombination(AlgebraParams p) : params_(p) {}

  const AlgebraParams& params() const noexcept { return params_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add(const Word& w, const Coeff& c) {
    if (!is_admissible(w, params_)) {
      throw contract_violation("NCombination: word " + to_string(w) + " is not admissible");
    }
    if (!terms_.empty() && terms_.begin()->first.size() != w.size()) {
      throw contract_violation("NCombination: mixed word lengths");
    }
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  friend bool operator==(const NCombination& x, const NCombination& y) {
    return x.params_ == y.params_ && x.terms_ == y.terms_;
  }

 private:
  AlgebraParams params_;
  Terms terms_;
};

struct SignedWord {
  Word word;
  int sign;  // +1 or -1

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

// An edge source -> target of the reversion graph: target's smallest
// decreasing k-run sits at block_position and source rearranges it.
struct ReversionStep {
  Word target;
  Word source;
  std::size_t block_position;
  std::vector<int> block_arrangement;  // source's block, as letters

  // (-1)^{inv(target) - inv(source) - 1}
  int sign() const {
    auto gap = inversions(target) - inversions(source);
    return (gap - 1) % 2 == 0 ? 1 : -1;
  }
};

enum class Strategy { leftmost, rightmost };

namespace detail {

// Rewrites of w obtained by rearranging the decreasing block at pos.
inline std::vector<SignedWord> expand_block_at(const Word& w, std::size_t pos, int k) {
  std::vector<int> block(w.begin() + static_cast<std::ptrdiff_t>(pos),
                         w.begin() + static_cast<std::ptrdiff_t>(pos) + k);
  std::sort(block.begin(), block.end());
  const int base_parity = (k * (k - 1) / 2 + 1) % 2;
  std::vector<SignedWord> out;
  do {
    bool decreasing = true;
    for (int s = 1; s < k && decreasing; ++s) decreasing = block[static_cast<std::size_t>(s - 1)] > block[static_cast<std::size_t>(s)];
    if (decreasing) continue;
    Word v = w;
    int inv = 0;
    for (int s = 0; s < k; ++s) {
      v.set(pos + static_cast<std::size_t>(s), block[static_cast<std::size_t>(s)]);
      for (int t = s + 1; t < k; ++t)
        if (block[static_cast<std::size_t>(s)] > block[static_cast<std::size_t>(t)]) ++inv;
    }
    out.push_back({std::move(v), (base_parity + inv) % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(block.begin(), block.end()));
  return out;
}

inline std::optional<std::size_t> reduction_site(const Word& w, const AlgebraParams& p, Strategy s) {
  return s == Strategy::leftmost ? smallest_decreasing_run(w, p) : largest_decreasing_run(w, p);
}

}  // namespace detail

// The k!-1 signed rearrangements of w's smallest decreasing k-run.
inline std::vector<SignedWord> expand_block(const Word& w, const AlgebraParams& p) {
  auto pos = smallest_decreasing_run(w, p);
  if (!pos) throw contract_violation("expand_block: word " + to_string(w) + " is admissible");
  return detail::expand_block_at(w, *pos, p.k());
}

// Reduce w to the admissible basis, expanding one decreasing k-run per word
// per wave and merging like terms after every wave.
inline NCombination<Integer> normal_form(const Word& w, const AlgebraParams& p,
                                         Strategy strategy = Strategy::leftmost) {
  check_letters(w, p);
  NCombination<Integer> result(p);
  std::map<Word, Integer> wave{{w, Integer(1)}};
  while (!wave.empty()) {
    std::map<Word, Integer> next;
    for (const auto& [u, c] : wave) {
      auto pos = detail::reduction_site(u, p, strategy);
      if (!pos) {
        result.add(u, c);
        continue;
      }
      for (auto& [v, sign] : detail::expand_block_at(u, *pos, p.k())) {
        auto& slot = next[v];
        if (sign > 0) slot += c; else slot -= c;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    wave = std::move(next);
  }
  return result;
}

// Every edge u -> w of the reversion graph ending at w.
inline std::vector<ReversionStep> reversion_predecessors(const Word& w, const AlgebraParams& p) {
  std::vector<ReversionStep> out;
  auto pos = smallest_decreasing_run(w, p);
  if (!pos) return out;
  for (auto& [v, sign] : detail::expand_block_at(w, *pos, p.k())) {
    std::vector<int> arrangement(v.begin() + static_cast<std::ptrdiff_t>(*pos),
                                 v.begin() + static_cast<std::ptrdiff_t>(*pos) + p.k());
    out.push_back({w, std::move(v), *pos, std::move(arrangement)});
  }
  return out;
}

/**
 * Signed path counts c_{i,j} over reversion paths i -> ... -> j.
 *
 * The column c_{.,w} is cached per word: it is e_w when w is admissible
 * and otherwise the signed sum of its predecessors' columns. Not
 * thread-safe; use one oracle per thread.
 */
class PathCoefficientOracle {
 public:
  using Column = std::map<Word, Integer>;

  explicit PathCoefficientOracle(AlgebraParams p) : params_(p) {}

  const AlgebraParams& params() const noexcept { return params_; }

  const Column& column(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    check_letters(w, params_);
    Column col;
    auto preds = reversion_predecessors(w, params_);
    if (preds.empty()) {
      col.emplace(w, 1);
    } else {
      for (const auto& step : preds) {
        const int sign = step.sign();
        for (const auto& [i, c] : column(step.source)) {
          auto& slot = col[i];
          if (sign > 0) slot += c; else slot -= c;
        }
      }
      std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
    }
    return cache_.emplace(w, std::move(col)).first->second;
  }

  Integer coefficient(const Word& i, const Word& j) {
    if (!is_admissible(i, params_)) {
      throw contract_violation("path_coefficient: source word " + to_string(i) + " is not admissible");
    }
    if (i.size() != j.size()) return 0;
    const auto& col = column(j);
    auto it = col.find(i);
    return it == col.end() ? Integer(0) : it->second;
  }

  std::size_t cache_size() const noexcept { return cache_.size(); }

 private:
  AlgebraParams params_;
  std::unordered_map<Word, Column, WordHash> cache_;
};

inline Integer path_coefficient(const Word& i, const Word& j, const AlgebraParams& p) {
  PathCoefficientOracle oracle(p);
  return oracle.coefficient(i, j);
}

// Unmemoized: walks every reversion path backwards from j and sums the
// path signs (-1)^{inv(j) - inv(i) - |path|}. Exponential; small inputs only.
inline Integer path_coefficient_dfs(const Word& i, const Word& j, const AlgebraParams& p) {
  if (!is_admissible(i, p)) {
    throw contract_violation("path_coefficient: source word " + to_string(i) + " is not admissible");
  }
  check_letters(j, p);
  if (i.size() != j.size()) return 0;
  const auto inv_i = inversions(i);
  const auto inv_j = inversions(j);
  Integer total = 0;
  auto walk = [&](auto&& self, const Word& w, std::size_t length) -> void {
    if (w == i) {
      total += ((inv_j - inv_i - length) % 2 == 0) ? 1 : -1;
    }
    if (inversions(w) <= inv_i) return;
    for (const auto& step : reversion_predecessors(w, p)) self(self, step.source, length + 1);
  };
  walk(walk, j, 0);
  return total;
}

}  // namespace mmt
