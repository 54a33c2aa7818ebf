#pragma once

/**
 * Words over the alphabet {1, ..., m} and the admissibility condition
 * that indexes the monomial basis of B_{m,k}.
 *
 * A word is admissible (strict variant) when it has no k consecutive
 * strictly decreasing letters, and admissible in the weak variant when
 * it has no k consecutive weakly decreasing letters.
 *
 * Positions in this API are 0-based.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mmt {

using Letter = std::uint8_t;

enum class Variant { strict, weak };

inline std::string to_string(Variant v) { return v == Variant::strict ? "strict" : "weak"; }

inline Variant parse_variant(std::string_view s) {
  if (s == "strict") return Variant::strict;
  if (s == "weak") return Variant::weak;
  throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

// Number of generators m and relation degree k, 2 <= k <= m.
class AlgebraParams {
 public:
  AlgebraParams(int m, int k) : m_(m), k_(k) {
    if (k < 2 || k > m) {
      throw std::invalid_argument("algebra parameters require 2 <= k <= m (got m=" +
                                  std::to_string(m) + ", k=" + std::to_string(k) + ")");
    }
    if (m > 255) throw std::invalid_argument("m must be at most 255");
  }

  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;

 private:
  int m_;
  int k_;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) {
    letters_.reserve(letters.size());
    for (int x : letters) push_back(x);
  }
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int operator[](std::size_t i) const noexcept { return letters_[i]; }
  void set(std::size_t i, int x) { letters_[i] = static_cast<Letter>(x); }
  void push_back(int x) {
    if (x < 1 || x > 255) throw std::invalid_argument("letter out of range: " + std::to_string(x));
    letters_.push_back(static_cast<Letter>(x));
  }
  void pop_back() { letters_.pop_back(); }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  // Letters [from, size()).
  Word suffix(std::size_t from) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(from), letters_.end()));
  }
  // x_letter * this
  Word prepend(int letter) const {
    std::vector<Letter> v;
    v.reserve(letters_.size() + 1);
    v.push_back(static_cast<Letter>(letter));
    v.insert(v.end(), letters_.begin(), letters_.end());
    return Word(std::move(v));
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Letter x : w) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h ^ w.size();
  }
};

// "4,3,2,6,1"
inline std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

inline Word parse_word(std::string_view text) {
  Word w;
  if (text.empty()) return w;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (piece.empty()) throw std::invalid_argument("empty letter in word '" + std::string(text) + "'");
    int value = 0;
    for (char c : piece) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad letter '" + std::string(piece) + "'");
      value = value * 10 + (c - '0');
      if (value > 255) throw std::invalid_argument("letter out of range: " + std::string(piece));
    }
    w.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

inline void check_letters(const Word& w, const AlgebraParams& p) {
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (w[s] < 1 || w[s] > p.m()) {
      throw std::invalid_argument("letter " + std::to_string(w[s]) + " at position " + std::to_string(s) +
                                  " outside [1," + std::to_string(p.m()) + "]");
    }
  }
}

namespace detail {

inline bool descends(int a, int b, Variant v) noexcept { return v == Variant::strict ? a > b : a >= b; }

// Length of the descending run that ends at position s.
template <typename Visit>
void scan_runs(const Word& w, Variant v, Visit&& visit) {
  std::size_t run = 0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    run = (s > 0 && descends(w[s - 1], w[s], v)) ? run + 1 : 1;
    if (!visit(s, run)) return;
  }
}

}  // namespace detail

// Number of pairs s < t with w[s] > w[t].
inline std::size_t inversions(const Word& w) noexcept {
  std::size_t n = 0;
  for (std::size_t s = 0; s < w.size(); ++s)
    for (std::size_t t = s + 1; t < w.size(); ++t)
      if (w[s] > w[t]) ++n;
  return n;
}

// Least s such that w[s..s+k-1] descends (strictly, or weakly for the weak variant).
inline std::optional<std::size_t> smallest_decreasing_run(const Word& w, const AlgebraParams& p,
                                                          Variant v = Variant::strict) {
  check_letters(w, p);
  const auto k = static_cast<std::size_t>(p.k());
  std::optional<std::size_t> found;
  detail::scan_runs(w, v, [&](std::size_t s, std::size_t run) {
    if (run >= k) {
      found = s + 1 - k;
      return false;
    }
    return true;
  });
  return found;
}

// Greatest s such that w[s..s+k-1] descends strictly.
inline std::optional<std::size_t> largest_decreasing_run(const Word& w, const AlgebraParams& p) {
  check_letters(w, p);
  const auto k = static_cast<std::size_t>(p.k());
  std::optional<std::size_t> found;
  detail::scan_runs(w, Variant::strict, [&](std::size_t s, std::size_t run) {
    if (run >= k) found = s + 1 - k;
    return true;
  });
  return found;
}

inline bool is_admissible(const Word& w, const AlgebraParams& p, Variant v = Variant::strict) {
  return !smallest_decreasing_run(w, p, v).has_value();
}

// Calls visit(const Word&) for every admissible word of the given length,
// in lexicographic order. Extension is tested against a rolling run counter.
template <typename Visit>
void for_each_admissible(const AlgebraParams& p, std::size_t length, Variant v, Visit&& visit) {
  const int m = p.m();
  const std::size_t k = static_cast<std::size_t>(p.k());
  std::vector<Letter> letters(length);
  std::vector<std::size_t> run(length + 1, 0);
  Word scratch;

  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == length) {
      visit(std::as_const(scratch));
      return;
    }
    for (int x = 1; x <= m; ++x) {
      std::size_t r = (pos > 0 && detail::descends(letters[pos - 1], x, v)) ? run[pos] + 1 : 1;
      if (r >= k) continue;
      letters[pos] = static_cast<Letter>(x);
      run[pos + 1] = r;
      scratch.push_back(x);
      extend(pos + 1);
      scratch.pop_back();
    }
  };
  extend(0);
}

inline std::vector<Word> enumerate_admissible(const AlgebraParams& p, std::size_t length,
                                              Variant v = Variant::strict) {
  std::vector<Word> out;
  for_each_admissible(p, length, v, [&](const Word& w) { out.push_back(w); });
  return out;
}

// All words of [m]^length in lexicographic order.
template <typename Visit>
void for_each_word(int m, std::size_t length, Visit&& visit) {
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(1);
  while (true) {
    visit(std::as_const(w));
    std::size_t i = length;
    while (i > 0 && w[i - 1] == m) {
      w.set(i - 1, 1);
      --i;
    }
    if (i == 0) return;
    w.set(i - 1, w[i - 1] + 1);
  }
}

}  // namespace mmt
