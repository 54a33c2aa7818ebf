#pragma once

/**
 * Sparse multivariate polynomials over exact rationals in the variables
 * a_{ij} (matrix entries) and t_i (grading variables), plus truncated
 * power series graded by total t-degree.
 *
 * Terms are kept in a std::map ordered by (t-degree, exponent vector), so
 * equal polynomials have identical term sequences and serialize to
 * identical bytes.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mmt/errors.hpp"
#include "mmt/numbers.hpp"

namespace mmt {

struct VarId {
  enum class Kind : std::uint8_t { t = 0, a = 1 };

  Kind kind = Kind::t;
  std::uint8_t i = 1;
  std::uint8_t j = 0;  // unused for t-variables

  static VarId t_var(int i) { return VarId{Kind::t, checked(i), 0}; }
  static VarId a_var(int i, int j) { return VarId{Kind::a, checked(i), checked(j)}; }

  bool is_t() const noexcept { return kind == Kind::t; }

  // "t_3" or "a_1_2"
  std::string name() const {
    if (is_t()) return "t_" + std::to_string(i);
    return "a_" + std::to_string(i) + "_" + std::to_string(j);
  }

  static VarId parse(const std::string& s) {
    auto bad = [&] { return std::invalid_argument("malformed variable name '" + s + "'"); };
    auto number = [&](std::size_t from, std::size_t to) {
      if (from >= to) throw bad();
      int v = 0;
      for (std::size_t p = from; p < to; ++p) {
        if (s[p] < '0' || s[p] > '9') throw bad();
        v = v * 10 + (s[p] - '0');
        if (v > 255) throw bad();
      }
      return v;
    };
    if (s.size() >= 3 && s[0] == 't' && s[1] == '_') return t_var(number(2, s.size()));
    if (s.size() >= 5 && s[0] == 'a' && s[1] == '_') {
      auto sep = s.find('_', 2);
      if (sep == std::string::npos) throw bad();
      return a_var(number(2, sep), number(sep + 1, s.size()));
    }
    throw bad();
  }

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;

 private:
  static std::uint8_t checked(int x) {
    if (x < 1 || x > 255) throw std::invalid_argument("variable index out of range: " + std::to_string(x));
    return static_cast<std::uint8_t>(x);
  }
};

// Sparse exponent vector: sorted by VarId, no zero exponents.
class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exp = 1) {
    if (exp > 0) {
      entries_.emplace_back(v, exp);
      if (v.is_t()) t_degree_ = exp;
    }
  }

  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    Monomial out;
    for (const auto& [v, e] : entries) {
      if (e == 0) continue;
      if (!out.entries_.empty() && out.entries_.back().first == v) {
        out.entries_.back().second += e;
      } else {
        out.entries_.emplace_back(v, e);
      }
      if (v.is_t()) out.t_degree_ += e;
    }
    return out;
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::uint32_t t_degree() const noexcept { return t_degree_; }
  bool is_one() const noexcept { return entries_.empty(); }

  std::uint32_t exponent(VarId v) const noexcept {
    for (const auto& [w, e] : entries_)
      if (w == v) return e;
    return 0;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    out.entries_.reserve(x.entries_.size() + y.entries_.size());
    auto a = x.entries_.begin(), b = y.entries_.begin();
    while (a != x.entries_.end() || b != y.entries_.end()) {
      if (b == y.entries_.end() || (a != x.entries_.end() && a->first < b->first)) {
        out.entries_.push_back(*a++);
      } else if (a == x.entries_.end() || b->first < a->first) {
        out.entries_.push_back(*b++);
      } else {
        out.entries_.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    out.t_degree_ = x.t_degree_ + y.t_degree_;
    return out;
  }

  // Rename variables through f; exponents of variables that collide are summed.
  template <typename F>
  Monomial rename(F&& f) const {
    std::vector<Entry> e;
    e.reserve(entries_.size());
    for (const auto& [v, x] : entries_) e.emplace_back(f(v), x);
    return from_entries(std::move(e));
  }

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.entries_ == y.entries_; }

  // Graded: by t-degree first, then lexicographically by exponent vector.
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto c = x.t_degree_ <=> y.t_degree_; c != 0) return c;
    return x.entries_ <=> y.entries_;
  }

  std::string to_string() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : entries_) {
      if (!out.empty()) out += '*';
      out += v.name();
      if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<Entry> entries_;
  std::uint32_t t_degree_ = 0;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(long c) { add_term(Monomial{}, Rational(c)); }  // NOLINT: constants embed implicitly
  Poly(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT
  explicit Poly(const Monomial& m, const Rational& c = 1) { add_term(m, c); }

  static Poly t(int i) { return Poly(Monomial(VarId::t_var(i))); }
  static Poly a(int i, int j) { return Poly(Monomial(VarId::a_var(i, j))); }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::uint32_t max_t_degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first.t_degree(); }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // *this += c * m * p
  void add_scaled(const Poly& p, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    for (const auto& [pm, pc] : p.terms_) add_term(pm * m, pc * c);
  }

  // Component of t-degree exactly d.
  Poly t_part(std::uint32_t d) const {
    Poly out;
    for (const auto& [m, c] : terms_)
      if (m.t_degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
  }

  // Drop every term whose t-degree exceeds cap.
  Poly truncated(std::uint32_t cap) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      if (m.t_degree() > cap) break;
      out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  template <typename F>
  Poly rename(F&& f) const {
    Poly out;
    for (const auto& [m, c] : terms_) out.add_term(m.rename(f), c);
    return out;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator-(Poly x) { return x *= Rational(-1); }
  friend Poly operator*(Poly x, const Rational& s) { return x *= s; }
  friend Poly operator*(const Rational& s, Poly x) { return x *= s; }
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly out;
    for (const auto& [mx, cx] : x.terms_)
      for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, cx * cy);
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      Rational mag = abs(c);
      bool neg = c < 0;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (m.is_one()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += m.to_string();
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

inline bool is_zero(const Poly& p) noexcept { return p.is_zero(); }
inline bool is_zero(const Rational& q) noexcept { return q == 0; }
inline bool is_zero(const Integer& z) noexcept { return z == 0; }

// Product with every term of t-degree above cap dropped.
inline Poly mul_truncated(const Poly& x, const Poly& y, std::uint32_t cap) {
  Poly out;
  for (const auto& [mx, cx] : x.terms()) {
    if (mx.t_degree() > cap) break;
    for (const auto& [my, cy] : y.terms()) {
      if (mx.t_degree() + my.t_degree() > cap) break;
      out.add_term(mx * my, cx * cy);
    }
  }
  return out;
}

// A polynomial whose terms all have t-degree <= cap; products are re-truncated.
class TruncatedSeries {
 public:
  TruncatedSeries(Poly p, std::uint32_t cap) : poly_(p.truncated(cap)), cap_(cap) {}

  const Poly& poly() const noexcept { return poly_; }
  std::uint32_t cap() const noexcept { return cap_; }

  friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y) {
    auto cap = std::min(x.cap_, y.cap_);
    return TruncatedSeries(mul_truncated(x.poly_, y.poly_, cap), cap);
  }
  friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y) {
    return TruncatedSeries(x.poly_ + y.poly_, std::min(x.cap_, y.cap_));
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Poly poly_;
  std::uint32_t cap_;
};

// q with p * q == 1 modulo t-degree > cap. The t-degree-0 part of p must be
// exactly the constant 1; a-variables may appear in higher t-degree parts.
inline TruncatedSeries series_inverse(const Poly& p, std::uint32_t cap) {
  Poly p0 = p.t_part(0);
  if (!(p0 == Poly(1))) {
    throw non_invertible_error("series_inverse: degree-0 part is " + p0.to_string() + ", expected 1");
  }
  std::vector<Poly> parts(cap + 1);
  for (std::uint32_t d = 1; d <= cap; ++d) parts[d] = p.t_part(d);

  std::vector<Poly> q(cap + 1);
  q[0] = Poly(1);
  for (std::uint32_t d = 1; d <= cap; ++d) {
    Poly acc;
    for (std::uint32_t e = 1; e <= d; ++e) {
      if (parts[e].is_zero() || q[d - e].is_zero()) continue;
      acc -= parts[e] * q[d - e];
    }
    q[d] = std::move(acc);
  }
  Poly out;
  for (auto& part : q) out += part;
  return TruncatedSeries(std::move(out), cap);
}

// e_r(t_1, ..., t_m); zero when r > m.
inline Poly elementary_sym(int r, int m) {
  if (r < 0) throw std::invalid_argument("elementary_sym: negative degree");
  Poly out;
  if (r > m) return out;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int s = 0; s < r; ++s) idx[static_cast<std::size_t>(s)] = s + 1;
  while (true) {
    std::vector<Monomial::Entry> e;
    for (int i : idx) e.emplace_back(VarId::t_var(i), 1);
    out.add_term(Monomial::from_entries(std::move(e)), 1);
    int s = r - 1;
    while (s >= 0 && idx[static_cast<std::size_t>(s)] == m - r + s + 1) --s;
    if (s < 0) break;
    ++idx[static_cast<std::size_t>(s)];
    for (int u = s + 1; u < r; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

// h_r(t_1, ..., t_m): sum of all monomials of degree r.
inline Poly complete_sym(int r, int m) {
  if (r < 0) throw std::invalid_argument("complete_sym: negative degree");
  Poly out;
  std::vector<int> idx(static_cast<std::size_t>(r), 1);
  if (m < 1) return r == 0 ? Poly(1) : out;
  while (true) {
    std::vector<Monomial::Entry> e;
    for (int i : idx) e.emplace_back(VarId::t_var(i), 1);
    out.add_term(Monomial::from_entries(std::move(e)), 1);
    int s = r - 1;
    while (s >= 0 && idx[static_cast<std::size_t>(s)] == m) --s;
    if (s < 0) break;
    ++idx[static_cast<std::size_t>(s)];
    for (int u = s + 1; u < r; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(s)];
  }
  return out;
}

// Swap t_i and t_{i+1}; a-variables are untouched.
inline Poly apply_transposition(const Poly& p, int i) {
  if (i < 1) throw std::invalid_argument("apply_transposition: index must be >= 1");
  return p.rename([i](VarId v) {
    if (v.is_t() && v.i == i) return VarId::t_var(i + 1);
    if (v.is_t() && v.i == i + 1) return VarId::t_var(i);
    return v;
  });
}

// Set every t_i to a single variable t_1 (used for one-variable counting series).
inline Poly collapse_t(const Poly& p) {
  return p.rename([](VarId v) { return v.is_t() ? VarId::t_var(1) : v; });
}

}  // namespace mmt
