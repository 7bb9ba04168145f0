#pragma once

// JSON descriptor of a tetrahedron.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "cltet/tetrahedra.hpp"

namespace cltet {

inline constexpr const char* schema_version = "1.0";

struct TetDescriptor {
  Lambda lam = Lambda::plus;
  Kind kind = Kind::lightlike;
  double alpha = 0;
  double beta = 0;
  Mat2 pose = Mat2::identity(Lambda::plus);
};

inline nlohmann::ordered_json pose_to_json(const Mat2& m) {
  auto e = [](const GC& z) { return nlohmann::ordered_json::array({z.re, z.im}); };
  return nlohmann::ordered_json::array({nlohmann::ordered_json::array({e(m.a), e(m.b)}),
                                        nlohmann::ordered_json::array({e(m.c), e(m.d)})});
}

inline nlohmann::ordered_json to_json(const TetDescriptor& d) {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["lambda"] = to_int(d.lam);
  j["kind"] = kind_name(d.kind);
  j["alpha"] = d.alpha;
  j["beta"] = d.beta;
  j["pose"] = pose_to_json(d.pose);
  return j;
}

inline std::string dump(const TetDescriptor& d) { return to_json(d).dump(2) + "\n"; }

inline Kind parse_kind(const std::string& s) {
  if (s == "lightlike") return Kind::lightlike;
  if (s == "ideal") return Kind::ideal;
  fail(Errc::ParseError, "kind must be lightlike or ideal, got '" + s + "'");
}

inline Mat2 pose_from_json(const nlohmann::json& p, Lambda l) {
  if (!p.is_array() || p.size() != 2) fail(Errc::ParseError, "pose must be a 2x2 array");
  GC e[2][2];
  for (int r = 0; r < 2; ++r) {
    if (!p[r].is_array() || p[r].size() != 2) fail(Errc::ParseError, "pose must be a 2x2 array");
    for (int c = 0; c < 2; ++c) {
      const auto& z = p[r][c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        fail(Errc::ParseError, "pose entries are [re, im] pairs");
      e[r][c] = GC(z[0].get<double>(), z[1].get<double>(), l);
    }
  }
  return {e[0][0], e[0][1], e[1][0], e[1][1]};
}

inline TetDescriptor descriptor_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "descriptor must be a JSON object");
  for (const char* key : {"lambda", "kind", "alpha", "beta"})
    if (!j.contains(key)) fail(Errc::ParseError, std::string("missing field '") + key + "'");
  if (j.contains("schema_version") && j["schema_version"] != schema_version)
    fail(Errc::ParseError, "unsupported schema_version " + j["schema_version"].dump());
  if (!j["lambda"].is_number_integer()) fail(Errc::ParseError, "lambda must be an integer");
  if (!j["kind"].is_string()) fail(Errc::ParseError, "kind must be a string");
  if (!j["alpha"].is_number() || !j["beta"].is_number()) fail(Errc::ParseError, "alpha and beta must be numbers");
  TetDescriptor d;
  d.lam = to_lambda(j["lambda"].get<int>());
  d.kind = parse_kind(j["kind"].get<std::string>());
  d.alpha = j["alpha"].get<double>();
  d.beta = j["beta"].get<double>();
  d.pose = j.contains("pose") ? pose_from_json(j["pose"], d.lam) : Mat2::identity(d.lam);
  return d;
}

inline TetDescriptor parse_descriptor(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  return descriptor_from_json(j);
}

inline Tetrahedron build(const TetDescriptor& d) { return from_angles(d.kind, d.lam, d.alpha, d.beta, Isometry(d.pose)); }

inline TetDescriptor describe(const Tetrahedron& t) { return {t.lam, t.kind, t.alpha, t.beta, t.pose.rep()}; }

}  // namespace cltet
