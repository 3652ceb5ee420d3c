#pragma once

// JSON ring descriptions (schema 1):
//
//   {"schema": 1, "kind": "monoid", "lattice_rank": 2,
//    "generators": [[0, 1], [2, -1]]}              (or "facet_normals")
//   {"schema": 1, "kind": "hyperbola", "exponents": [3, 3],
//    "base_is_local": true}                        ("comaximal" if not local)
//   {"schema": 1, "kind": "determinantal", "m": 2, "n": 2, "k": 2}
//
// Integers may be JSON numbers or decimal strings.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "affcl/catalog.hpp"
#include "affcl/cone.hpp"
#include "affcl/hyperbola.hpp"
#include "affcl/integer.hpp"
#include "affcl/monoid.hpp"

namespace affcl {

/// Malformed input; `where` names the file, field or offset.
class InputError : public std::runtime_error {
public:
  InputError(const std::string &where, const std::string &what)
      : std::runtime_error(where + ": " + what) {}
};

enum class RingKind { Monoid, Hyperbola, Determinantal };

struct RingDescription {
  RingKind kind = RingKind::Monoid;

  std::size_t lattice_rank = 0;
  std::vector<IntegerVector> generators;
  std::vector<IntegerVector> facet_normals;

  IntegerVector exponents;
  bool base_is_local = true;
  std::optional<std::vector<std::vector<bool>>> comaximal;

  long long m = 0, n = 0, k = 0;

  MonoidRing monoid() const {
    if (!generators.empty()) return MonoidRing(cone_from_generators(lattice_rank, generators));
    return MonoidRing(cone_from_normals(lattice_rank, facet_normals));
  }
  HyperbolaDatum hyperbola() const {
    return HyperbolaDatum(exponents, base_is_local, comaximal);
  }
  DeterminantalDatum determinantal() const { return DeterminantalDatum(m, n, k); }
};

constexpr const char *to_string(RingKind k) {
  switch (k) {
  case RingKind::Monoid: return "monoid";
  case RingKind::Hyperbola: return "hyperbola";
  case RingKind::Determinantal: return "determinantal";
  }
  return "unknown";
}

/// Integers as JSON numbers when they fit in 64 bits, decimal strings otherwise.
inline nlohmann::json integer_json(const Integer &x) {
  if (fits_int64(x)) return static_cast<std::int64_t>(x);
  return x.str();
}

inline nlohmann::json vector_json(const IntegerVector &v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &x : v) out.push_back(integer_json(x));
  return out;
}

namespace detail {

inline Integer parse_integer(const nlohmann::json &j, const std::string &field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos)
      return Integer(s);
  }
  throw InputError(field, "expected an integer");
}

inline long long parse_small(const nlohmann::json &j, const std::string &field) {
  Integer v = parse_integer(j, field);
  if (!fits_int64(v)) throw InputError(field, "integer out of range");
  return static_cast<long long>(v);
}

inline IntegerVector parse_vector(const nlohmann::json &j, const std::string &field) {
  if (!j.is_array()) throw InputError(field, "expected an array of integers");
  IntegerVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_integer(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<IntegerVector> parse_vectors(const nlohmann::json &j,
                                                const std::string &field,
                                                std::size_t length) {
  if (!j.is_array() || j.empty())
    throw InputError(field, "expected a non-empty array of integer vectors");
  std::vector<IntegerVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    out.push_back(parse_vector(j[i], f));
    if (out.back().size() != length)
      throw InputError(f, "expected length " + std::to_string(length));
  }
  return out;
}

inline const nlohmann::json &require(const nlohmann::json &j, const char *field) {
  if (!j.contains(field)) throw InputError(field, "missing field");
  return j[field];
}

} // namespace detail

inline RingDescription parse_ring(const nlohmann::json &j) {
  if (!j.is_object()) throw InputError("<root>", "expected a JSON object");
  if (detail::parse_small(detail::require(j, "schema"), "schema") != 1)
    throw InputError("schema", "unsupported schema version");
  const auto &kind = detail::require(j, "kind");
  if (!kind.is_string()) throw InputError("kind", "expected a string");
  const std::string k = kind.get<std::string>();

  RingDescription out;
  if (k == "monoid") {
    out.kind = RingKind::Monoid;
    const long long rank = detail::parse_small(detail::require(j, "lattice_rank"), "lattice_rank");
    if (rank < 1) throw InputError("lattice_rank", "must be positive");
    out.lattice_rank = static_cast<std::size_t>(rank);
    const bool has_g = j.contains("generators"), has_n = j.contains("facet_normals");
    if (has_g == has_n)
      throw InputError("generators", "give exactly one of generators and facet_normals");
    if (has_g) out.generators = detail::parse_vectors(j["generators"], "generators", out.lattice_rank);
    else
      out.facet_normals =
          detail::parse_vectors(j["facet_normals"], "facet_normals", out.lattice_rank);
  } else if (k == "hyperbola") {
    out.kind = RingKind::Hyperbola;
    out.exponents = detail::parse_vector(detail::require(j, "exponents"), "exponents");
    if (j.contains("base_is_local")) {
      if (!j["base_is_local"].is_boolean())
        throw InputError("base_is_local", "expected a boolean");
      out.base_is_local = j["base_is_local"].get<bool>();
    }
    if (j.contains("comaximal")) {
      const auto &c = j["comaximal"];
      if (!c.is_array()) throw InputError("comaximal", "expected a matrix of booleans");
      std::vector<std::vector<bool>> mat;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const std::string f = "comaximal[" + std::to_string(i) + "]";
        if (!c[i].is_array()) throw InputError(f, "expected an array of booleans");
        std::vector<bool> row;
        for (std::size_t jj = 0; jj < c[i].size(); ++jj) {
          if (!c[i][jj].is_boolean())
            throw InputError(f + "[" + std::to_string(jj) + "]", "expected a boolean");
          row.push_back(c[i][jj].get<bool>());
        }
        mat.push_back(std::move(row));
      }
      out.comaximal = std::move(mat);
    }
  } else if (k == "determinantal") {
    out.kind = RingKind::Determinantal;
    out.m = detail::parse_small(detail::require(j, "m"), "m");
    out.n = detail::parse_small(detail::require(j, "n"), "n");
    out.k = detail::parse_small(detail::require(j, "k"), "k");
  } else {
    throw InputError("kind", "unknown ring kind '" + k + "'");
  }
  return out;
}

inline nlohmann::json to_json(const RingDescription &r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["kind"] = to_string(r.kind);
  switch (r.kind) {
  case RingKind::Monoid: {
    j["lattice_rank"] = r.lattice_rank;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto &v : r.generators.empty() ? r.facet_normals : r.generators)
      vs.push_back(vector_json(v));
    j[r.generators.empty() ? "facet_normals" : "generators"] = std::move(vs);
    break;
  }
  case RingKind::Hyperbola:
    j["exponents"] = vector_json(r.exponents);
    j["base_is_local"] = r.base_is_local;
    if (r.comaximal) j["comaximal"] = *r.comaximal;
    break;
  case RingKind::Determinantal:
    j["m"] = r.m;
    j["n"] = r.n;
    j["k"] = r.k;
    break;
  }
  return j;
}

inline RingDescription load_ring_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(path, e.what());
  }
  try {
    return parse_ring(j);
  } catch (const InputError &e) {
    throw InputError(path + ": field", e.what());
  }
}

/// 64-bit FNV-1a of the compact canonical JSON, as 16 hex digits.
inline std::string input_hash(const nlohmann::json &j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xF];
  return out;
}

} // namespace affcl
