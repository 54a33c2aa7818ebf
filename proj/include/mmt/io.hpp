#pragma once

/**
 * JSON forms of the library's values, the matrix input file, and the
 * seeded random test matrices.
 *
 * All numbers are emitted as exact integer or rational strings.
 *
 * Random matrices: std::mt19937_64 seeded with the 64-bit seed; entries
 * are filled row by row, each drawn uniformly from {lo, ..., hi} by
 * rejection sampling on raw 64-bit outputs (the engine's output sequence
 * is fixed by the C++ standard, so matrices are reproducible everywhere).
 */

#include <cstdint>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "mmt/charpoly.hpp"
#include "mmt/enumerate.hpp"
#include "mmt/identity.hpp"
#include "mmt/numbers.hpp"
#include "mmt/poly.hpp"
#include "mmt/rewrite.hpp"
#include "mmt/words.hpp"

namespace mmt {

using json = nlohmann::ordered_json;

// Malformed matrix input; the message names the offending entry.
class matrix_file_error : public std::runtime_error {
 public:
  explicit matrix_file_error(const std::string& what) : std::runtime_error(what) {}
};

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (int x : w) out.push_back(x);
  return out;
}

template <typename Coeff>
json to_json(const NCombination<Coeff>& combo) {
  json out = json::array();
  for (const auto& [w, c] : combo.terms()) out.push_back({{"word", word_to_json(w)}, {"coeff", to_string(c)}});
  return out;
}

inline json monomial_to_json(const Monomial& mono) {
  json out = json::object();
  for (const auto& [v, e] : mono.entries()) out[v.name()] = e;
  return out;
}

inline json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [mono, c] : p.terms()) out.push_back({{"coeff", to_string(c)}, {"monomial", monomial_to_json(mono)}});
  return out;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Poly out;
  for (const auto& term : j) {
    std::vector<Monomial::Entry> entries;
    for (const auto& [name, e] : term.at("monomial").items()) {
      entries.emplace_back(VarId::parse(name), e.get<std::uint32_t>());
    }
    out.add_term(Monomial::from_entries(std::move(entries)), parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

inline json to_json(const CountTable& t) {
  json values = json::array();
  for (const auto& v : t.values) values.push_back(v.get_str());
  return {{"m", t.params.m()}, {"k", t.params.k()}, {"variant", to_string(t.variant)},
          {"method", to_string(t.method)}, {"values", values}};
}

inline json to_json(const MasterReport& r) {
  json per_degree = json::array();
  for (const auto& d : r.per_degree) per_degree.push_back({{"d", d.d}, {"ok", d.ok}, {"residual_terms", d.residual_terms}});
  json out = {{"params", {{"m", r.params.m()}, {"k", r.params.k()}}},
              {"cap", r.cap},
              {"mode", r.mode},
              {"pass", r.pass},
              {"per_degree", per_degree}};
  if (r.first_failure) {
    out["first_failure"] = {{"d", r.first_failure->d},
                            {"monomial", monomial_to_json(r.first_failure->monomial)},
                            {"coeff", to_string(r.first_failure->coeff)}};
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

/**
 * {"m": int, "mode": "numeric"|"symbolic", "entries": [[...]]}
 * Numeric entries are rational strings ("3", "-1/2") or JSON integers;
 * symbolic mode ignores entries and uses the formal a_{ij}.
 */
inline SymMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw matrix_file_error("matrix file: top level must be an object");
  if (!j.contains("m") || !j["m"].is_number_integer()) throw matrix_file_error("matrix file: 'm' must be an integer");
  const int m = j["m"].get<int>();
  if (m < 1) throw matrix_file_error("matrix file: 'm' must be positive");
  const std::string mode = j.value("mode", std::string("numeric"));
  if (mode == "symbolic") return SymMatrix::symbolic(m);
  if (mode != "numeric") throw matrix_file_error("matrix file: unknown mode '" + mode + "'");
  if (!j.contains("entries") || !j["entries"].is_array()) throw matrix_file_error("matrix file: 'entries' must be an array");
  const auto& rows = j["entries"];
  if (static_cast<int>(rows.size()) != m) {
    throw matrix_file_error("matrix file: expected " + std::to_string(m) + " rows, found " + std::to_string(rows.size()));
  }
  SymMatrix out(m);
  for (int i = 1; i <= m; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != m) {
      throw matrix_file_error("matrix file: row " + std::to_string(i - 1) + " must have " + std::to_string(m) + " entries");
    }
    for (int c = 1; c <= m; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c - 1)];
      const std::string where = "entries[" + std::to_string(i - 1) + "][" + std::to_string(c - 1) + "]";
      try {
        if (cell.is_number_integer()) {
          out(i, c) = Poly(Rational(cell.get<long>()));
        } else if (cell.is_string()) {
          out(i, c) = Poly(parse_rational(cell.get<std::string>()));
        } else {
          throw std::invalid_argument("expected a rational string, got " + cell.dump());
        }
      } catch (const std::invalid_argument& e) {
        throw matrix_file_error("matrix file: " + where + ": " + e.what());
      }
    }
  }
  return out;
}

inline SymMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw matrix_file_error("cannot open matrix file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw matrix_file_error("matrix file '" + path + "' is not valid JSON: " + e.what());
  }
  return matrix_from_json(j);
}

inline json matrix_to_json(const SymMatrix& a) {
  if (!a.is_numeric()) return {{"m", a.m()}, {"mode", "symbolic"}, {"entries", json::array()}};
  json rows = json::array();
  for (int i = 1; i <= a.m(); ++i) {
    json row = json::array();
    for (int j = 1; j <= a.m(); ++j) row.push_back(to_string(a(i, j).constant_term()));
    rows.push_back(row);
  }
  return {{"m", a.m()}, {"mode", "numeric"}, {"entries", rows}};
}

inline SymMatrix random_integer_matrix(int m, std::uint64_t seed, int lo = -3, int hi = 3) {
  if (lo > hi) throw std::invalid_argument("random_integer_matrix: empty range");
  std::mt19937_64 engine(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  SymMatrix out(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      std::uint64_t x;
      do {
        x = engine();
      } while (x >= limit);
      out(i, j) = Poly(static_cast<long>(lo) + static_cast<long>(x % span));
    }
  }
  return out;
}

}  // namespace mmt
