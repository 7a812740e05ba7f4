#pragma once

// Text formats.
//
// plain:  first line m, then m lines of m rationals ("p/q", "p", "d.ddd").
//         Blank lines and lines whose first non-blank character is '#'
//         are ignored.
// json:   {"m": m, "entries": [["p/q", ...], ...]}
// operator (json only): {"m": m, "layers": [<matrix json>, ...]}
//
// Indices are 1-based in every external format.

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gdecomp/error.hpp"
#include "gdecomp/index_set.hpp"
#include "gdecomp/matrix.hpp"
#include "gdecomp/qso.hpp"
#include "gdecomp/rational.hpp"

namespace gdecomp {

enum class Format { Plain, Json };

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::size_t parse_order(std::string_view s) {
  if (s.empty() || s.size() > 9) throw Error(ErrorCode::ParseError, "bad order '" + std::string(s) + "'");
  std::size_t m = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::ParseError, "bad order '" + std::string(s) + "'");
    }
    m = m * 10 + static_cast<std::size_t>(c - '0');
  }
  if (m == 0) throw Error(ErrorCode::ParseError, "order must be positive");
  return m;
}

inline Matrix parse_plain(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty input");
  const auto head = tokens(lines.front());
  if (head.size() != 1) throw Error(ErrorCode::ParseError, "first line must hold only the order");
  const std::size_t m = parse_order(head.front());
  if (lines.size() != m + 1) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " rows, found " +
                                           std::to_string(lines.size() - 1));
  }
  Matrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = tokens(lines[i + 1]);
    if (row.size() != m) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " has " +
                                             std::to_string(row.size()) + " entries, expected " +
                                             std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) out(i, j) = parse_rational(row[j]);
  }
  return out;
}

inline Rational json_rational(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(BigInt(v.get<std::uint64_t>()))
                                  : Rational(BigInt(v.get<std::int64_t>()));
  }
  throw Error(ErrorCode::ParseError, "entries must be rational strings or integers");
}

inline Matrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("entries")) {
    throw Error(ErrorCode::ParseError, "matrix object needs \"m\" and \"entries\"");
  }
  if (!j["m"].is_number_unsigned() || j["m"].get<std::uint64_t>() == 0) {
    throw Error(ErrorCode::ParseError, "\"m\" must be a positive integer");
  }
  const auto m = static_cast<std::size_t>(j["m"].get<std::uint64_t>());
  const Json& rows = j["entries"];
  if (!rows.is_array() || rows.size() != m) {
    throw Error(ErrorCode::ParseError, "\"entries\" must hold " + std::to_string(m) + " rows");
  }
  Matrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != m) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i + 1) + " must hold " +
                                             std::to_string(m) + " entries");
    }
    for (std::size_t k = 0; k < m; ++k) out(i, k) = json_rational(rows[i][k]);
  }
  return out;
}

inline Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

inline bool looks_like_json(std::string_view text) {
  const std::string_view t = trim(text);
  return !t.empty() && t.front() == '{';
}

}  // namespace detail

/// Square matrix without symmetry requirements (used for X files).
inline Matrix parse_square_matrix(std::string_view text, Format format) {
  return format == Format::Json ? detail::matrix_from_json(detail::parse_json_text(text))
                                : detail::parse_plain(text);
}

inline Matrix parse_square_matrix(std::string_view text) {
  return parse_square_matrix(text, detail::looks_like_json(text) ? Format::Json : Format::Plain);
}

/// Throws ParseError, AsymmetricInput or NegativeEntry.
inline SymMatrix parse_matrix(std::string_view text, Format format) {
  return SymMatrix(parse_square_matrix(text, format));
}

/// Format detected from the first non-blank character.
inline SymMatrix parse_matrix(std::string_view text) {
  return SymMatrix(parse_square_matrix(text));
}

inline Json matrix_json(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(to_string(a(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"m", a.rows()}, {"entries", std::move(rows)}};
}

inline Json matrix_json(const SymMatrix& a) { return matrix_json(a.to_matrix()); }

inline std::string serialize_matrix(const Matrix& a, Format format) {
  if (format == Format::Json) return matrix_json(a).dump() + "\n";
  std::string out = std::to_string(a.rows()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(a(i, j));
    }
    out += '\n';
  }
  return out;
}

inline std::string serialize_matrix(const SymMatrix& a, Format format) {
  return serialize_matrix(a.to_matrix(), format);
}

inline QuadraticOperator parse_operator(std::string_view text) {
  const Json j = detail::parse_json_text(text);
  if (!j.is_object() || !j.contains("m") || !j.contains("layers") || !j["layers"].is_array()) {
    throw Error(ErrorCode::ParseError, "operator object needs \"m\" and \"layers\"");
  }
  if (!j["m"].is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"m\" must be an integer");
  const auto m = static_cast<std::size_t>(j["m"].get<std::uint64_t>());
  if (m == 0 || j["layers"].size() != m) {
    throw Error(ErrorCode::ParseError, "operator of order " + std::to_string(m) + " needs " +
                                           std::to_string(m) + " layers");
  }
  std::vector<Matrix> layers;
  for (const auto& l : j["layers"]) {
    Matrix layer = detail::matrix_from_json(l);
    if (layer.rows() != m) {
      throw Error(ErrorCode::ParseError, "layer order differs from operator order");
    }
    layers.push_back(std::move(layer));
  }
  return QuadraticOperator(std::move(layers));
}

inline std::string serialize_operator(const QuadraticOperator& v) {
  Json layers = Json::array();
  for (const auto& l : v.layers()) layers.push_back(matrix_json(l));
  return Json{{"m", v.order()}, {"layers", std::move(layers)}}.dump() + "\n";
}

inline Json index_set_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t i : s.one_based()) out.push_back(i);
  return out;
}

inline Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace gdecomp
