#pragma once

#include "sympl/symplectic.hpp"

#include "json.hpp"

#include <variant>

namespace sympl::io {

using Json = nlohmann::ordered_json;

template <class Field>
Json scalar_json(const Field& K, const typename Field::Element& a) {
  return K.format(a);
}
/// ParseError for anything that is not a scalar string (integers are accepted for Q).
template <class Field>
typename Field::Element parse_scalar(const Field& K, const Json& j);

template <class Field>
Json vector_json(const Field& K, const Vec<Field>& v);
template <class Field>
Vec<Field> parse_vector(const Field& K, const Json& j);

/// {"rows", "cols", "entries"} with row-major scalar strings.
template <class Field>
Json matrix_json(const Field& K, const Mat<Field>& M);
template <class Field>
Mat<Field> parse_matrix(const Field& K, const Json& j);

/// {"rational", "radicand"} over Q, {"logExp"} over F_p(t). With `approx`, adds "approx" and "log".
Json value_json(const RealValue& v, bool approx = false);
Json value_json(const ExpValue& v, bool approx = false);
RealValue parse_real_value(const Json& j);
ExpValue parse_exp_value(const Json& j);

Json place_json(const RationalPlace& v);
Json place_json(const FunctionPlace& v);
template <class Field>
typename Field::Place parse_place(const Field& K, const Json& j);

/// {"dim", "components": [{"place", "matrix"}]}
template <class Field>
Json automorphism_json(const Field& K, const AdelicAutomorphism<Field>& A);
template <class Field>
AdelicAutomorphism<Field> parse_automorphism(const Field& K, const Json& j);

/// {"n", "edges"} with 1-based vertices.
Json graph_json(const SimpleGraph& G);
SimpleGraph parse_graph(const Json& j);
Json pairs_json(const std::vector<VertexPair>& pairs);

/// {"field": "q"} or {"field": "fp(t)", "p": p}
Json field_json(const GroundField& field);
GroundField parse_field(const Json& j);

using AnySpace = std::variant<SymplecticSpace<Rationals>, SymplecticSpace<FunctionField>>;

/// {"field", ["p",] "N", "k", "F", "Z"}; Z is the N x 2k basis matrix.
template <class Field>
Json instance_json(const SymplecticSpace<Field>& space);
AnySpace parse_instance(const Json& j);

template <class Field>
Json basis_json(const Field& K, const SymplecticBasis<Field>& basis);
template <class Field>
Json certificate_json(const Field& K, const SiegelCertificate<Field>& cert);
template <class Field>
Json report_json(const BoundReport<Field>& report);
template <class Field>
Json levels_json(const Field& K, const std::vector<LevelTrace<Field>>& levels);
template <class Field>
Json subspaces_json(const Field& K, const std::vector<Subspace<Field>>& spaces);

}  // namespace sympl::io
