// Copyright 2026 The modent Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON encodings:
//
//   AlgebraElement  [[re, im], ...]                         (d pairs)
//   ModuleVector    {"n": n, "d": d, "entries": [[[re, im] x d] x n]}
//   Frame           {"n": n, "m": m, "d": d, "vectors": [ModuleVector x m]}
//
// Doubles are written in shortest round-trip form, so a frame read back and
// re-serialized is byte-identical.

#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "modent/algebra.hpp"
#include "modent/error.hpp"
#include "modent/frames.hpp"
#include "modent/module_space.hpp"

namespace modent {

using json = nlohmann::json;

namespace detail {

inline json complex_to_json(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw FormatError("cannot serialize non-finite complex value");
  return json::array({z.real(), z.imag()});
}

inline complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError(where + ": expected [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline std::size_t positive_size(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw FormatError(where + ": missing field \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw FormatError(where + "." + key + ": expected integer >= 1");
  return v.get<std::size_t>();
}

}  // namespace detail

inline json to_json(const AlgebraElement& a) {
  json out = json::array();
  for (complex v : a.values()) out.push_back(detail::complex_to_json(v));
  return out;
}

inline AlgebraElement algebra_element_from_json(const json& j, const std::string& where = "$") {
  if (!j.is_array() || j.empty()) throw FormatError(where + ": expected non-empty array of [re, im]");
  std::vector<complex> values;
  values.reserve(j.size());
  for (std::size_t t = 0; t < j.size(); ++t)
    values.push_back(detail::complex_from_json(j[t], where + "[" + std::to_string(t) + "]"));
  return AlgebraElement(std::move(values));
}

inline json to_json(const ModuleVector& x) {
  json entries = json::array();
  for (std::size_t i = 0; i < x.rank(); ++i) {
    json row = json::array();
    for (std::size_t t = 0; t < x.dim(); ++t) row.push_back(detail::complex_to_json(x(i, t)));
    entries.push_back(std::move(row));
  }
  return json{{"n", x.rank()}, {"d", x.dim()}, {"entries", std::move(entries)}};
}

inline ModuleVector module_vector_from_json(const json& j, const std::string& where = "$") {
  if (!j.is_object()) throw FormatError(where + ": expected object");
  const std::size_t n = detail::positive_size(j, "n", where);
  const std::size_t d = detail::positive_size(j, "d", where);
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != n)
    throw FormatError(where + ".entries: expected array of n = " + std::to_string(n) + " rows");
  ModuleVector x(n, d);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j["entries"][i];
    const std::string row_where = where + ".entries[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != d)
      throw FormatError(row_where + ": expected d = " + std::to_string(d) + " fiber values");
    for (std::size_t t = 0; t < d; ++t)
      x(i, t) = detail::complex_from_json(row[t], row_where + "[" + std::to_string(t) + "]");
  }
  return x;
}

inline json to_json(const Frame& frame) {
  json vectors = json::array();
  for (const auto& v : frame.vectors()) vectors.push_back(to_json(v));
  return json{{"n", frame.rank()},
              {"m", frame.size()},
              {"d", frame.dim()},
              {"vectors", std::move(vectors)}};
}

inline Frame frame_from_json(const json& j, const std::string& where = "$") {
  if (!j.is_object()) throw FormatError(where + ": expected object");
  const std::size_t n = detail::positive_size(j, "n", where);
  const std::size_t m = detail::positive_size(j, "m", where);
  const std::size_t d = detail::positive_size(j, "d", where);
  if (!j.contains("vectors") || !j["vectors"].is_array() || j["vectors"].size() != m)
    throw FormatError(where + ".vectors: expected array of m = " + std::to_string(m) + " vectors");
  std::vector<ModuleVector> vectors;
  vectors.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::string vw = where + ".vectors[" + std::to_string(k) + "]";
    ModuleVector v = module_vector_from_json(j["vectors"][k], vw);
    if (v.rank() != n || v.dim() != d)
      throw FormatError(vw + ": shape (" + std::to_string(v.rank()) + ", " +
                        std::to_string(v.dim()) + ") does not match frame (n, d)");
    vectors.push_back(std::move(v));
  }
  try {
    return Frame(std::move(vectors));
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
}

/// Canonical text form written to files (compact JSON plus newline).
inline std::string serialize(const json& j) { return j.dump() + "\n"; }

inline json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError(path + ": cannot open for writing");
  out << text;
  if (!out) throw FormatError(path + ": write failed");
}

inline Frame read_frame(const std::string& path) {
  try {
    return frame_from_json(read_json_file(path));
  } catch (const FormatError& e) {
    const std::string what = e.what();
    throw FormatError(what.rfind(path, 0) == 0 ? what : path + ": " + what);
  }
}

inline ModuleVector read_module_vector(const std::string& path) {
  try {
    return module_vector_from_json(read_json_file(path));
  } catch (const FormatError& e) {
    const std::string what = e.what();
    throw FormatError(what.rfind(path, 0) == 0 ? what : path + ": " + what);
  }
}

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

/// SHA-256 of the canonical serializations of A then B.
inline std::string frames_digest(const Frame& a, const Frame& b) {
  return sha256_hex(serialize(to_json(a)) + serialize(to_json(b)));
}

}  // namespace modent
