#pragma once

#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "evpoly/colorings.hpp"
#include "evpoly/commuting_maps.hpp"
#include "evpoly/cyclotomic.hpp"
#include "evpoly/fitting.hpp"
#include "evpoly/orthants.hpp"
#include "evpoly/polytopes.hpp"
#include "evpoly/rational_gf.hpp"
#include "evpoly/semigroups.hpp"

namespace evpoly::io {

using Json = nlohmann::json;

/// Malformed or ill-typed document.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(what) {}
};

// Field access with schema errors instead of json exceptions.
const Json& require(const Json& j, const std::string& key);
long long as_int(const Json& j, const std::string& what);
unsigned as_unsigned(const Json& j, const std::string& what);
std::vector<unsigned> as_unsigned_list(const Json& j, const std::string& what);

// Rationals are "p" or "p/q" strings; plain JSON integers are accepted on
// input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Scalars: a rational, or {"order": m, "coeffs": [...]} in the power basis of
// zeta_m, or {"root": [m, t]} for zeta_m^t on input.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json polynomial_to_json(const PolynomialQ& p);
Json polynomial_to_json(const PolynomialC& p);
Json quasipolynomial_to_json(const Quasipolynomial& q);

Json gf_to_json(const RationalGF& f);
RationalGF gf_from_json(const Json& j);

Json word_to_json(const Word& w);
Json sep_to_json(const SEPDescription& s);
Json exp_poly_to_json(const ExpPolyDescription& e);

/// Blocks as lists of 1-based indices.
Json partition_to_json(const BlockPartition& p);
BlockPartition partition_from_json(const Json& j, std::size_t k);

Json point_to_json(const Point& p);
Json orthant_to_json(const GeneralizedOrthant& o);
/// {"s": [...], "I": [1-based frozen indices]} or {"empty": true}.
GeneralizedOrthant orthant_from_json(const Json& j, std::size_t k);
Json simple_set_to_json(const SimpleSet& s);
SimpleSet simple_set_from_json(const Json& j, std::size_t k);
Json antichain_to_json(const Antichain& a);

std::shared_ptr<const Semigroup> semigroup_from_json(const Json& j);
Json element_to_json(const Element& e);
Element element_from_json(const Json& j, const Semigroup& g);
std::vector<std::vector<Element>> sets_from_json(const Json& j, const Semigroup& g);

std::unique_ptr<Character> character_from_json(const Json& j);

std::unique_ptr<AdditiveColoring> coloring_from_json(const Json& j);

RationalPolytope polytope_from_json(const Json& j);

MapFamily family_from_json(const Json& j);
GroundSet ground_set_from_json(const Json& j);

Json fit_report_to_json(const FitReport& r);

}  // namespace evpoly::io
