#include "sympl/serialize.hpp"

#include <string>

namespace sympl::io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON member \"") + key + "\"");
  return j.at(key);
}

std::size_t size_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(std::string("member \"") + key + "\" must be a nonnegative integer");
  return v.get<std::size_t>();
}

}  // namespace

template <class Field>
typename Field::Element parse_scalar(const Field& K, const Json& j) {
  if (j.is_string()) return K.parse(j.get<std::string>());
  if (j.is_number_integer()) return K.from_int(j.get<long>());
  throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

template <class Field>
Json vector_json(const Field& K, const Vec<Field>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(K.format(a));
  return out;
}

template <class Field>
Vec<Field> parse_vector(const Field& K, const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be a JSON array");
  Vec<Field> v;
  for (const auto& a : j) v.push_back(parse_scalar(K, a));
  return v;
}

template <class Field>
Json matrix_json(const Field& K, const Mat<Field>& M) {
  Json entries = Json::array();
  for (const auto& a : M.entries()) entries.push_back(K.format(a));
  return Json{{"rows", M.rows()}, {"cols", M.cols()}, {"entries", std::move(entries)}};
}

template <class Field>
Mat<Field> parse_matrix(const Field& K, const Json& j) {
  const std::size_t r = size_member(j, "rows");
  const std::size_t c = size_member(j, "cols");
  const Json& e = member(j, "entries");
  if (!e.is_array() || e.size() != r * c)
    throw ParseError("matrix entries must be an array of rows*cols = " + std::to_string(r * c) + " scalars");
  std::vector<typename Field::Element> data;
  data.reserve(r * c);
  for (const auto& a : e) data.push_back(parse_scalar(K, a));
  return Mat<Field>(r, c, std::move(data));
}

Json value_json(const RealValue& v, bool approx) {
  Json out{{"rational", to_string(v.rational_part())}, {"radicand", to_string(v.radicand())}};
  if (approx) {
    out["approx"] = v.approx();
    out["log"] = v.log();
  }
  return out;
}

Json value_json(const ExpValue& v, bool approx) {
  Json out;
  if (v.is_zero()) {
    out["logExp"] = nullptr;
  } else {
    const Rational& m = v.log_exponent();
    if (m.get_den() == 1 && m.get_num().fits_slong_p())
      out["logExp"] = m.get_num().get_si();
    else
      out["logExp"] = to_string(m);
  }
  if (approx) {
    out["approx"] = v.approx();
    out["log"] = v.log();
  }
  return out;
}

RealValue parse_real_value(const Json& j) {
  const Json& r = member(j, "rational");
  const Json& s = member(j, "radicand");
  if (!r.is_string() || !s.is_string()) throw ParseError("ExactPositive members must be rational strings");
  Rational rp = parse_rational(r.get<std::string>());
  Rational rad = parse_rational(s.get<std::string>());
  if (sgn(rp) < 0 || sgn(rad) < 0) throw ParseError("ExactPositive needs nonnegative rational and radicand");
  return RealValue::sqrt_of(Rational(rp * rp * rad));
}

ExpValue parse_exp_value(const Json& j) {
  const Json& m = member(j, "logExp");
  if (m.is_null()) return ExpValue::zero();
  if (m.is_number_integer()) return ExpValue::exp(Rational(m.get<long>()));
  if (m.is_string()) return ExpValue::exp(parse_rational(m.get<std::string>()));
  throw ParseError("logExp must be an integer, a rational string or null");
}

Json place_json(const RationalPlace& v) { return v.to_string(); }
Json place_json(const FunctionPlace& v) { return v.to_string(); }

template <class Field>
typename Field::Place parse_place(const Field& K, const Json& j) {
  std::string text;
  if (j.is_string())
    text = j.get<std::string>();
  else if (j.is_number_integer())
    text = std::to_string(j.get<long long>());
  else
    throw ParseError("place must be \"inf\", a prime or a polynomial");
  if (text == "inf") return K.infinite_place();
  if constexpr (Field::kArchimedean) {
    return RationalPlace::prime(K.to_ring(parse_rational(text)));
  } else {
    return FunctionPlace::polynomial(Poly::parse(K.p, text));
  }
}

template <class Field>
Json automorphism_json(const Field& K, const AdelicAutomorphism<Field>& A) {
  Json comps = Json::array();
  for (const auto& [v, M] : A.components()) comps.push_back(Json{{"place", place_json(v)}, {"matrix", matrix_json(K, M)}});
  return Json{{"dim", A.dim()}, {"components", std::move(comps)}};
}

template <class Field>
AdelicAutomorphism<Field> parse_automorphism(const Field& K, const Json& j) {
  const std::size_t n = size_member(j, "dim");
  std::vector<std::pair<typename Field::Place, Mat<Field>>> comps;
  if (j.contains("components")) {
    const Json& cs = j.at("components");
    if (!cs.is_array()) throw ParseError("components must be an array");
    for (const auto& c : cs) comps.emplace_back(parse_place(K, member(c, "place")), parse_matrix(K, member(c, "matrix")));
  }
  return AdelicAutomorphism<Field>::from_components(K, n, comps);
}

Json graph_json(const SimpleGraph& G) {
  Json edges = Json::array();
  for (const auto& [i, j] : G.edges()) edges.push_back(Json::array({i + 1, j + 1}));
  return Json{{"n", G.size()}, {"edges", std::move(edges)}};
}

SimpleGraph parse_graph(const Json& j) {
  const std::size_t n = size_member(j, "n");
  SimpleGraph g(n);
  const Json& edges = member(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("edge must be a pair of 1-based vertex indices");
    long long a = e[0].get<long long>(), b = e[1].get<long long>();
    if (a < 1 || b < 1) throw DomainError("vertex indices are 1-based");
    g.connect(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
  }
  return g;
}

Json pairs_json(const std::vector<VertexPair>& pairs) {
  Json out = Json::array();
  for (const auto& [i, j] : pairs) out.push_back(Json::array({i + 1, j + 1}));
  return out;
}

Json field_json(const GroundField& field) {
  return std::visit(
      [](const auto& K) -> Json {
        using Field = std::decay_t<decltype(K)>;
        if constexpr (Field::kArchimedean)
          return Json{{"field", "q"}};
        else
          return Json{{"field", "fp(t)"}, {"p", K.p}};
      },
      field);
}

GroundField parse_field(const Json& j) {
  const Json& f = member(j, "field");
  if (!f.is_string()) throw ParseError("field must be \"q\" or \"fp(t)\"");
  std::uint32_t p = 0;
  if (j.contains("p")) {
    if (!j.at("p").is_number_unsigned()) throw ParseError("p must be a positive integer");
    p = j.at("p").get<std::uint32_t>();
  }
  return make_field(f.get<std::string>(), p);
}

template <class Field>
Json instance_json(const SymplecticSpace<Field>& space) {
  Json out = field_json(GroundField(space.field));
  out["N"] = space.N;
  out["k"] = space.k();
  out["F"] = matrix_json(space.field, space.F);
  out["Z"] = matrix_json(space.field, space.Z.basis());
  return out;
}

AnySpace parse_instance(const Json& j) {
  GroundField field = parse_field(j);
  return std::visit(
      [&](const auto& K) -> AnySpace {
        using Field = std::decay_t<decltype(K)>;
        const std::size_t N = size_member(j, "N");
        auto F = parse_matrix(K, member(j, "F"));
        auto Zb = parse_matrix(K, member(j, "Z"));
        if (F.rows() != N || Zb.rows() != N) throw DimensionError("F and Z must have N rows");
        auto Z = Subspace<Field>::from_basis(K, std::move(Zb));
        if (j.contains("k") && size_member(j, "k") * 2 != Z.dim())
          throw DimensionError("Z does not have dimension 2k");
        return SymplecticSpace<Field>::make(K, std::move(F), std::move(Z));
      },
      field);
}

template <class Field>
Json basis_json(const Field& K, const SymplecticBasis<Field>& basis) {
  Json x = Json::array(), y = Json::array();
  for (const auto& v : basis.x) x.push_back(vector_json(K, v));
  for (const auto& v : basis.y) y.push_back(vector_json(K, v));
  return Json{{"x", std::move(x)}, {"y", std::move(y)}};
}

template <class Field>
Json certificate_json(const Field& K, const SiegelCertificate<Field>& cert) {
  Json basis = Json::array();
  for (const auto& v : cert.basis) basis.push_back(vector_json(K, v));
  return Json{{"basis", std::move(basis)},
              {"productOfHeights", value_json(cert.productOfHeights, true)},
              {"subspaceHeight", value_json(cert.subspaceHeight, true)},
              {"bound", value_json(cert.bound, true)},
              {"satisfied", cert.satisfied},
              {"method", method_name(cert.method)}};
}

template <class Field>
Json report_json(const BoundReport<Field>& r) {
  Json flags = Json::array();
  for (const auto& f : r.flags)
    flags.push_back(Json{{"n", f.n}, {"lhs", value_json(f.lhs, true)}, {"satisfied", f.satisfied}});
  return Json{{"N", r.N},
              {"k", r.k},
              {"exponents", Json{{"a", r.exponents.a}, {"b", r.exponents.b}}},
              {"fieldConstant", value_json(r.fieldConstant, true)},
              {"subspaceHeight", value_json(r.subspaceHeight, true)},
              {"formHeight", value_json(r.formHeight, true)},
              {"frakCprime", value_json(r.frakCprime, true)},
              {"lhs", value_json(r.lhs, true)},
              {"rhsTheorem", value_json(r.rhsTheorem, true)},
              {"theoremSatisfied", r.theoremSatisfied},
              {"hyperbolicLhs", value_json(r.hyperbolicLhs, true)},
              {"hyperbolicSatisfied", r.hyperbolicSatisfied},
              {"flags", std::move(flags)},
              {"flagsSatisfied", r.flagsSatisfied},
              {"relationsSatisfied", r.relationsSatisfied},
              {"spansZ", r.spansZ},
              {"flagsIsotropic", r.flagsIsotropic},
              {"allSatisfied", r.all_satisfied()}};
}

template <class Field>
Json levels_json(const Field& K, const std::vector<LevelTrace<Field>>& levels) {
  Json out = Json::array();
  for (const auto& t : levels)
    out.push_back(Json{{"k", t.k},
                       {"siegel", certificate_json(K, t.siegel)},
                       {"pair", Json::array({t.pair.first + 1, t.pair.second + 1})},
                       {"sweep", pairs_json(t.sweep)},
                       {"pairProduct", value_json(t.pairProduct, true)},
                       {"pairBoundSatisfied", t.pairBoundSatisfied}});
  return out;
}

template <class Field>
Json subspaces_json(const Field& K, const std::vector<Subspace<Field>>& spaces) {
  Json out = Json::array();
  for (const auto& s : spaces) out.push_back(matrix_json(K, s.basis()));
  return out;
}

#define SYMPL_INSTANTIATE_SERIALIZE(F)                                                            \
  template F::Element parse_scalar(const F&, const Json&);                                         \
  template Json vector_json(const F&, const Vec<F>&);                                              \
  template Vec<F> parse_vector(const F&, const Json&);                                             \
  template Json matrix_json(const F&, const Mat<F>&);                                              \
  template Mat<F> parse_matrix(const F&, const Json&);                                             \
  template F::Place parse_place(const F&, const Json&);                                            \
  template Json automorphism_json(const F&, const AdelicAutomorphism<F>&);                         \
  template AdelicAutomorphism<F> parse_automorphism(const F&, const Json&);                        \
  template Json instance_json(const SymplecticSpace<F>&);                                          \
  template Json basis_json(const F&, const SymplecticBasis<F>&);                                   \
  template Json certificate_json(const F&, const SiegelCertificate<F>&);                           \
  template Json report_json(const BoundReport<F>&);                                                \
  template Json levels_json(const F&, const std::vector<LevelTrace<F>>&);                          \
  template Json subspaces_json(const F&, const std::vector<Subspace<F>>&);

SYMPL_INSTANTIATE_SERIALIZE(Rationals)
SYMPL_INSTANTIATE_SERIALIZE(FunctionField)

}  // namespace sympl::io
