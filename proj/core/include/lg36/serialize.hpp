#pragma once

#include <json.hpp>

#include <string>

#include "lg36/group.hpp"

namespace lg36 {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// {"field":"Fp","p":...} or {"field":"Q"}
json field_header(const PrimeField& F);
json field_header(const RationalField& F);
void check_field(const json& j, const PrimeField& F);
void check_field(const json& j, const RationalField& F);
void check_schema(const json& j);

// Envelope: schema version, field header and the payload keys of `body`.
template <class S>
json envelope(const FieldOf<S>& F, json body) {
  json j = field_header(F);
  j["schema"] = kSchemaVersion;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

template <class S>
void check_envelope(const json& j, const FieldOf<S>& F) {
  check_schema(j);
  check_field(j, F);
}

template <class S>
json to_json(const Vec<S>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

template <class S>
json to_json(const Matrix<S>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json<S>(m.row(i)));
  return a;
}

template <class S>
Vec<S> vec_from_json(const json& j, const FieldOf<S>& F) {
  if (!j.is_array()) throw Error(ErrorCode::kSchemaMismatch, "expected an array of scalars");
  Vec<S> v;
  for (const auto& x : j) {
    if (!x.is_string()) throw Error(ErrorCode::kSchemaMismatch, "scalars are decimal strings");
    v.push_back(F.parse(x.get<std::string>()));
  }
  return v;
}

template <class S>
Matrix<S> matrix_from_json(const json& j, const FieldOf<S>& F) {
  if (!j.is_array()) throw Error(ErrorCode::kSchemaMismatch, "expected an array of rows");
  std::vector<Vec<S>> rows;
  for (const auto& r : j) rows.push_back(vec_from_json<S>(r, F));
  if (rows.empty()) return Matrix<S>();
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error(ErrorCode::kSchemaMismatch, "ragged matrix");
  return Matrix<S>::from_rows(rows);
}

inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::kSchemaMismatch, std::string("missing key ") + key);
  return j.at(key);
}

// --- domain types (payloads without the envelope) ----------------------------

template <class S>
json sigma_point_json(const SigmaPoint<S>& p) {
  return {{"lagrangian", to_json(p.lagrangian)}, {"plucker", to_json<S>(p.plucker.coords())}};
}

template <class S>
SigmaPoint<S> sigma_point_from_json(const SymplecticSpace<S>& V, const json& j) {
  auto p = sigma_point(V, matrix_from_json<S>(member(j, "lagrangian"), V.field()));
  if (j.contains("plucker") &&
      !(ProjPoint<S>(vec_from_json<S>(j.at("plucker"), V.field())) == p.plucker))
    throw Error(ErrorCode::kSchemaMismatch, "plucker does not match lagrangian");
  return p;
}

template <class S>
json cubic_json(const TwistedCubic<S>& C) {
  return {{"frame", to_json(C.frame.E)}, {"B", to_json(C.B)}};
}

template <class S>
TwistedCubic<S> cubic_from_json(const SymplecticSpace<S>& V, const json& j) {
  const auto& F = V.field();
  const auto fr = frame_from_matrix(V, matrix_from_json<S>(member(j, "frame"), F));
  return cubic_from_chart(V, fr, matrix_from_json<S>(member(j, "B"), F));
}

template <class S>
json subspace_json(const ProjSubspace<S>& P) {
  return {{"basis", to_json(P.basis())}};
}

template <class S>
ProjSubspace<S> subspace_from_json(const json& j, const FieldOf<S>& F) {
  return ProjSubspace<S>(matrix_from_json<S>(member(j, "basis"), F));
}

template <class S>
json quartic_json(const QuarticForm<S>& Q) {
  return {{"nvars", Q.nvars}, {"order", "grlex"}, {"coeffs", to_json<S>(Q.coeffs)}};
}

template <class S>
QuarticForm<S> quartic_from_json(const json& j, const FieldOf<S>& F) {
  if (member(j, "order") != "grlex") throw Error(ErrorCode::kSchemaMismatch, "monomial order must be grlex");
  QuarticForm<S> Q{member(j, "nvars").template get<std::size_t>(), vec_from_json<S>(member(j, "coeffs"), F)};
  if (Q.coeffs.size() != Q.basis().size()) throw Error(ErrorCode::kSchemaMismatch, "wrong number of coefficients");
  return Q;
}

template <class S>
json fiber_json(const FiberPoint<S>& h) {
  return {{"h", to_json<S>(h.h.normalized().coords())}};
}

template <class S>
FiberPoint<S> fiber_from_json(const json& j, const FieldOf<S>& F) {
  return {ProjPoint<S>(vec_from_json<S>(member(j, "h"), F))};
}

template <class S>
json tower_json(const SectionTower<S>& T) {
  json j{{"p9", to_json(T.p9.basis())}, {"ell", to_json(T.ell)}};
  if (T.p10) j["p10"] = to_json(T.p10->basis());
  return j;
}

template <class S>
SectionTower<S> tower_from_json(const json& j, const FieldOf<S>& F) {
  SectionTower<S> T{ProjSubspace<S>(matrix_from_json<S>(member(j, "p9"), F)),
                    matrix_from_json<S>(member(j, "ell"), F), std::nullopt};
  if (j.contains("p10")) T.p10 = ProjSubspace<S>(matrix_from_json<S>(j.at("p10"), F));
  if (T.p9.dim() != 9 || T.ell.rows() != 4 || !(T.ell * T.p9.basis().transpose()).is_zero())
    throw Error(ErrorCode::kSchemaMismatch, "inconsistent section tower");
  return T;
}

template <class S>
json triple_json(const std::array<SigmaPoint<S>, 3>& xi) {
  json a = json::array();
  for (const auto& p : xi) a.push_back(sigma_point_json(p));
  return {{"points", a}};
}

template <class S>
std::array<SigmaPoint<S>, 3> triple_from_json(const SymplecticSpace<S>& V, const json& j) {
  const json& a = member(j, "points");
  if (!a.is_array() || a.size() != 3) throw Error(ErrorCode::kSchemaMismatch, "a triple has 3 points");
  return {sigma_point_from_json(V, a[0]), sigma_point_from_json(V, a[1]), sigma_point_from_json(V, a[2])};
}

template <class S>
json mark_json(const TangentHyperplaneSample<S>& m) {
  return {{"h", to_json<S>(m.h.coords())}, {"tangency", sigma_point_json(m.tangency)}};
}

template <class S>
TangentHyperplaneSample<S> mark_from_json(const SymplecticSpace<S>& V, const json& j) {
  return {ProjPoint<S>(vec_from_json<S>(member(j, "h"), V.field())), sigma_point_from_json(V, member(j, "tangency"))};
}

// The quadric ideal is not stored: it is canonical (rref basis) and rebuilt.
template <class S>
json fano_json(const MarkedFano<S>& X) {
  json marks = json::array();
  for (const auto& m : X.marks) marks.push_back(mark_json(m));
  return {{"tower", tower_json(X.tower)}, {"C0", cubic_json(X.C0)}, {"marks", marks}};
}

template <class S>
MarkedFano<S> fano_from_json(const SymplecticSpace<S>& V, const json& j, const QuadricIdeal<S>& ideal) {
  const auto& F = V.field();
  MarkedFano<S> X{tower_from_json<S>(member(j, "tower"), F), cubic_from_json(V, member(j, "C0")), {}, {}, ideal};
  const json& marks = member(j, "marks");
  if (!marks.is_array() || marks.size() != 3) throw Error(ErrorCode::kSchemaMismatch, "three marks expected");
  X.pX = Matrix<S>(0, V.w_dim());
  for (std::size_t i = 0; i < 3; ++i) {
    X.marks[i] = mark_from_json(V, marks[i]);
    X.pX.append_row(X.marks[i].h.coords());
  }
  if (!X.tower.p10) throw Error(ErrorCode::kSchemaMismatch, "marked Fano tower needs p10");
  return X;
}

}  // namespace lg36
