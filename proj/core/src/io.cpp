#include "evpoly/io.hpp"

#include <map>

namespace evpoly::io {
namespace {

std::string kind_of(const Json& j) { return j.type_name(); }

Json terms_to_json(const PolynomialQ& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponent", e}, {"coeff", rational_to_json(c)}});
  return out;
}

Json terms_to_json(const PolynomialC& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponent", e}, {"coeff", scalar_to_json(c)}});
  return out;
}

}  // namespace

const Json& require(const Json& j, const std::string& key) {
  if (!j.is_object()) throw SchemaError("expected an object holding \"" + key + "\", got " + kind_of(j));
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field \"" + key + "\"");
  return *it;
}

long long as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw SchemaError(what + ": expected an integer, got " + kind_of(j));
  return j.get<long long>();
}

unsigned as_unsigned(const Json& j, const std::string& what) {
  long long v = as_int(j, what);
  if (v < 0 || v > 0xFFFFFFFFLL) throw SchemaError(what + ": expected a nonnegative integer");
  return static_cast<unsigned>(v);
}

std::vector<unsigned> as_unsigned_list(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return {as_unsigned(j, what)};
  if (!j.is_array()) throw SchemaError(what + ": expected a list of nonnegative integers");
  std::vector<unsigned> out;
  for (const auto& v : j) out.push_back(as_unsigned(v, what));
  return out;
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return make_rational(j.get<long long>());
  if (!j.is_string()) throw SchemaError("expected a rational string \"p/q\", got " + kind_of(j));
  try {
    return parse_rational(j.get<std::string>());
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
}

Json scalar_to_json(const Scalar& s) {
  if (auto q = s.as_rational()) return rational_to_json(*q);
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_json(c));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_object() && j.contains("root")) {
    const auto& r = j["root"];
    if (!r.is_array() || r.size() != 2) throw SchemaError("root: expected [order, exponent]");
    unsigned m = as_unsigned(r[0], "root order");
    if (m == 0) throw SchemaError("root order must be positive");
    return Scalar::root_of_unity(m, as_int(r[1], "root exponent"));
  }
  if (j.is_object()) {
    unsigned m = as_unsigned(require(j, "order"), "order");
    if (m == 0) throw SchemaError("order must be positive");
    const auto& cs = require(j, "coeffs");
    if (!cs.is_array()) throw SchemaError("coeffs: expected a list");
    std::vector<Rational> v;
    for (const auto& c : cs) v.push_back(rational_from_json(c));
    return Scalar::from_coeffs(m, std::move(v));
  }
  return Scalar(rational_from_json(j));
}

Json polynomial_to_json(const PolynomialQ& p) {
  return {{"text", format_polynomial(p)}, {"terms", terms_to_json(p)}};
}

Json polynomial_to_json(const PolynomialC& p) {
  return {{"text", format_polynomial(p)}, {"terms", terms_to_json(p)}};
}

Json quasipolynomial_to_json(const Quasipolynomial& q) {
  Json cs = Json::array();
  for (std::size_t r = 0; r < q.constituents.size(); ++r) {
    Json c = polynomial_to_json(q.constituents[r]);
    c["residue"] = r;
    cs.push_back(std::move(c));
  }
  return {{"period", q.period}, {"constituents", cs}, {"integral", has_integer_coefficients(q)}};
}

Json gf_to_json(const RationalGF& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json alpha = Json::array();
    for (const auto& a : t.alpha) alpha.push_back(scalar_to_json(a));
    terms.push_back({{"gamma", scalar_to_json(t.gamma)}, {"b", t.b}, {"alpha", alpha}, {"e", t.e}});
  }
  return {{"arity", f.arity()}, {"terms", terms}};
}

RationalGF gf_from_json(const Json& j) {
  const std::size_t k = as_unsigned(require(j, "arity"), "arity");
  const auto& ts = require(j, "terms");
  if (!ts.is_array()) throw SchemaError("terms: expected a list");
  std::vector<GFTerm> terms;
  for (const auto& t : ts) {
    GFTerm term;
    term.gamma = t.contains("gamma") ? scalar_from_json(t["gamma"]) : Scalar(1);
    term.b = as_unsigned_list(require(t, "b"), "b");
    term.e = t.contains("e") ? as_unsigned_list(t["e"], "e") : std::vector<unsigned>(k, 1);
    if (t.contains("alpha")) {
      if (!t["alpha"].is_array()) throw SchemaError("alpha: expected a list");
      for (const auto& a : t["alpha"]) term.alpha.push_back(scalar_from_json(a));
    } else {
      term.alpha.assign(k, Scalar(1));
    }
    if (term.b.size() != k || term.e.size() != k || term.alpha.size() != k)
      throw SchemaError("term vectors must have length arity = " + std::to_string(k));
    terms.push_back(std::move(term));
  }
  return RationalGF(k, std::move(terms));
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (int v : w) {
    if (v == kInfinity)
      out.push_back("inf");
    else
      out.push_back(v);
  }
  return out;
}

Json sep_to_json(const SEPDescription& s) {
  Json table = Json::array();
  for (const auto& [w, p] : s.table) {
    Json row = polynomial_to_json(p);
    row["word"] = word_to_json(w);
    table.push_back(std::move(row));
  }
  return {{"arity", s.arity},
          {"threshold", s.threshold},
          {"table", table},
          {"integral", has_integer_coefficients(s)}};
}

Json exp_poly_to_json(const ExpPolyDescription& e) {
  Json summands = Json::array();
  for (const auto& s : e.summands) {
    Json row = polynomial_to_json(s.poly);
    row["root"] = s.root;
    summands.push_back(std::move(row));
  }
  return {{"arity", e.arity}, {"order", e.order}, {"threshold", e.threshold}, {"summands", summands}};
}

Json partition_to_json(const BlockPartition& p) {
  Json out = Json::array();
  for (const auto& blk : p) {
    Json b = Json::array();
    for (std::size_t i : blk) b.push_back(i + 1);
    out.push_back(std::move(b));
  }
  return out;
}

BlockPartition partition_from_json(const Json& j, std::size_t k) {
  if (!j.is_array()) throw SchemaError("partition: expected a list of blocks");
  BlockPartition p;
  for (const auto& blk : j) {
    std::vector<std::size_t> b;
    for (unsigned i : as_unsigned_list(blk, "partition index")) {
      if (i == 0) throw SchemaError("partition indices are 1-based");
      b.push_back(i - 1);
    }
    p.push_back(std::move(b));
  }
  validate_partition(p, k);
  return p;
}

Json point_to_json(const Point& p) { return p; }

Json orthant_to_json(const GeneralizedOrthant& o) {
  if (o.is_empty()) return {{"empty", true}};
  Json frozen = Json::array();
  for (std::size_t i = 0; i < o.dimension(); ++i)
    if (o.frozen()[i]) frozen.push_back(i + 1);
  return {{"s", o.base()}, {"I", frozen}};
}

GeneralizedOrthant orthant_from_json(const Json& j, std::size_t k) {
  if (j.is_object() && j.value("empty", false)) return GeneralizedOrthant::empty(k);
  Point s = as_unsigned_list(require(j, "s"), "s");
  if (s.size() != k) throw SchemaError("orthant base s must have " + std::to_string(k) + " entries");
  std::vector<bool> frozen(k, false);
  if (j.contains("I"))
    for (unsigned i : as_unsigned_list(j["I"], "I")) {
      if (i == 0 || i > k) throw SchemaError("frozen indices I are 1-based and at most k");
      frozen[i - 1] = true;
    }
  return GeneralizedOrthant(std::move(s), std::move(frozen));
}

Json simple_set_to_json(const SimpleSet& s) {
  Json os = Json::array();
  for (const auto& o : s.orthants()) os.push_back(orthant_to_json(o));
  return {{"dimension", s.dimension()}, {"orthants", os}};
}

SimpleSet simple_set_from_json(const Json& j, std::size_t k) {
  const Json& list = j.is_array() ? j : require(j, "orthants");
  if (!list.is_array()) throw SchemaError("orthants: expected a list");
  std::vector<GeneralizedOrthant> os;
  for (const auto& o : list) os.push_back(orthant_from_json(o, k));
  return SimpleSet(k, std::move(os));
}

Json antichain_to_json(const Antichain& a) {
  Json out = Json::array();
  for (const auto& p : a.elements) out.push_back(p);
  return out;
}

std::shared_ptr<const Semigroup> semigroup_from_json(const Json& j) {
  const auto& type = require(j, "type");
  if (!type.is_string()) throw SchemaError("semigroup type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "integers") {
    const unsigned d = j.contains("dim") ? as_unsigned(j["dim"], "dim") : 1;
    if (d == 0) throw SchemaError("dim must be positive");
    return std::make_shared<IntegerLattice>(d);
  }
  if (t == "cyclic_add" || t == "cyclic_mul") {
    const long long m = as_int(require(j, "modulus"), "modulus");
    if (m < 1) throw SchemaError("modulus must be positive");
    if (t == "cyclic_add") return std::make_shared<CyclicAdditive>(m);
    return std::make_shared<CyclicMultiplicative>(m);
  }
  if (t == "truncated") {
    const long long c = as_int(require(j, "cap"), "cap");
    if (c < 0) throw SchemaError("cap must be nonnegative");
    return std::make_shared<TruncatedNaturals>(c);
  }
  if (t == "table") {
    const auto& rows = require(j, "table");
    if (!rows.is_array()) throw SchemaError("table: expected a list of rows");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : rows) {
      auto r = as_unsigned_list(row, "table entry");
      table.emplace_back(r.begin(), r.end());
    }
    try {
      return std::make_shared<CayleyTable>(std::move(table));
    } catch (const PreconditionError& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("unknown semigroup type \"" + t + "\"");
}

Json element_to_json(const Element& e) {
  if (e.size() == 1) return e[0];
  return e;
}

Element element_from_json(const Json& j, const Semigroup& g) {
  Element e;
  if (j.is_number_integer()) {
    e.push_back(j.get<std::int64_t>());
  } else if (j.is_array()) {
    for (const auto& v : j) e.push_back(as_int(v, "element"));
  } else {
    throw SchemaError("element: expected an integer or a list of integers");
  }
  try {
    g.check_element(e);
  } catch (const PreconditionError& err) {
    throw SchemaError(err.what());
  }
  return g.canonical(e);
}

std::vector<std::vector<Element>> sets_from_json(const Json& j, const Semigroup& g) {
  if (!j.is_array()) throw SchemaError("sets: expected a list of element lists");
  std::vector<std::vector<Element>> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw SchemaError("sets: expected a list of element lists");
    std::vector<Element> a;
    for (const auto& e : s) a.push_back(element_from_json(e, g));
    out.push_back(std::move(a));
  }
  return out;
}

std::unique_ptr<Character> character_from_json(const Json& j) {
  const unsigned m = as_unsigned(require(j, "order"), "character order");
  if (m == 0) throw SchemaError("character order must be positive");
  if (j.contains("weights")) {
    std::vector<std::int64_t> w;
    if (j["weights"].is_number_integer()) {
      w.push_back(j["weights"].get<std::int64_t>());
    } else {
      if (!j["weights"].is_array()) throw SchemaError("weights: expected a list of integers");
      for (const auto& v : j["weights"]) w.push_back(as_int(v, "weight"));
    }
    return std::make_unique<LinearCharacter>(m, std::move(w));
  }
  if (j.contains("table")) return std::make_unique<TableCharacter>(m, as_unsigned_list(j["table"], "exponent"));
  throw SchemaError("character needs \"weights\" or \"table\"");
}

std::unique_ptr<AdditiveColoring> coloring_from_json(const Json& j) {
  const auto& type = require(j, "type");
  if (type == "associated") {
    auto g = semigroup_from_json(require(j, "semigroup"));
    const auto& gens = require(j, "generators");
    if (!gens.is_array() || gens.empty()) throw SchemaError("generators: expected a nonempty list");
    std::vector<Element> a;
    for (const auto& e : gens) a.push_back(element_from_json(e, *g));
    return std::make_unique<AssociatedColoring>(std::move(g), std::move(a));
  }
  if (type == "explicit") {
    const std::size_t k = as_unsigned(require(j, "k"), "k");
    const unsigned bound = as_unsigned(require(j, "bound"), "bound");
    const auto& table = require(j, "table");
    if (!table.is_array()) throw SchemaError("table: expected a flat list of colors");
    // Labels are arbitrary JSON values, numbered by first appearance.
    std::map<std::string, std::int64_t> ids;
    std::vector<Color> colors;
    for (const auto& c : table) {
      auto [it, fresh] = ids.try_emplace(c.dump(), static_cast<std::int64_t>(ids.size()));
      colors.push_back({it->second});
    }
    try {
      return std::make_unique<ExplicitColoring>(k, bound, std::move(colors));
    } catch (const PreconditionError& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("coloring type must be \"associated\" or \"explicit\"");
}

RationalPolytope polytope_from_json(const Json& j) {
  const auto& vs = require(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw SchemaError("vertices: expected a nonempty list of points");
  std::vector<std::vector<Rational>> vertices;
  for (const auto& v : vs) {
    if (!v.is_array()) throw SchemaError("vertex: expected a list of rationals");
    std::vector<Rational> p;
    for (const auto& c : v) p.push_back(rational_from_json(c));
    vertices.push_back(std::move(p));
  }
  try {
    return RationalPolytope(std::move(vertices));
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  } catch (const ArityError& e) {
    throw SchemaError(e.what());
  }
}

MapFamily family_from_json(const Json& j) {
  MapFamily f;
  f.ground_size = as_unsigned(require(j, "ground_size"), "ground_size");
  const auto& maps = require(j, "maps");
  if (!maps.is_array() || maps.empty()) throw SchemaError("maps: expected a nonempty list of tables");
  for (const auto& m : maps) {
    auto t = as_unsigned_list(m, "map value");
    f.maps.emplace_back(t.begin(), t.end());
  }
  f.partition = j.contains("partition") ? partition_from_json(j["partition"], f.maps.size()) : single_block(f.maps.size());
  try {
    f.check();
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
  return f;
}

GroundSet ground_set_from_json(const Json& j) {
  auto v = as_unsigned_list(j, "ground set element");
  return GroundSet(v.begin(), v.end());
}

Json fit_report_to_json(const FitReport& r) {
  Json mm = Json::array();
  for (const auto& m : r.mismatches)
    mm.push_back({{"point", m.point}, {"expected", scalar_to_json(m.expected)}, {"actual", scalar_to_json(m.actual)}});
  return {{"checked", r.checked}, {"mismatches", mm}, {"ok", r.ok()}};
}

}  // namespace evpoly::io
