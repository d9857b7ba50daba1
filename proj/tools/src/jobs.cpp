#include "evpoly_cli/jobs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace evpoly::cli {
namespace {

using namespace evpoly::io;

// Mathematical rejection carrying a witness document.
struct Rejection {
  std::string message;
  Json witness;
};

struct Context {
  const Json& job;
  const Overrides& over;

  const Json* find(const std::string& key) const {
    auto it = job.find(key);
    return it == job.end() ? nullptr : &*it;
  }
  unsigned get_unsigned(const std::string& key, unsigned fallback) const {
    const Json* v = find(key);
    return v ? as_unsigned(*v, key) : fallback;
  }
  bool get_bool(const std::string& key, bool fallback) const {
    const Json* v = find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) throw SchemaError(key + ": expected true or false");
    return v->get<bool>();
  }
  std::string get_string(const std::string& key, const std::string& fallback = {}) const {
    const Json* v = find(key);
    if (!v) {
      if (fallback.empty()) throw SchemaError("missing field \"" + key + "\"");
      return fallback;
    }
    if (!v->is_string()) throw SchemaError(key + ": expected a string");
    return v->get<std::string>();
  }
  std::size_t cap(std::size_t fallback) const {
    if (over.cap) return *over.cap;
    const Json* v = find("cap");
    return v ? as_unsigned(*v, "cap") : fallback;
  }
};

Json ok(Json body) {
  body["status"] = "ok";
  return body;
}

Json shift_witness_json(const ShiftWitness& w) { return {{"a", w.a}, {"c", w.c}, {"b", w.b}}; }

Json commute_witness_json(const CommuteWitness& w) { return {{"i", w.i + 1}, {"j", w.j + 1}, {"x", w.x}}; }

void require_commuting(const MapFamily& f) {
  if (auto w = validate_commuting(f))
    throw Rejection{"maps do not commute", commute_witness_json(*w)};
}

void require_additive(const AdditiveColoring& chi) {
  if (const auto* e = dynamic_cast<const ExplicitColoring*>(&chi); e && e->shift_witness())
    throw Rejection{"coloring is not shift-stable", shift_witness_json(*e->shift_witness())};
}

GrowthOptions growth_options(const Context& cx) {
  GrowthOptions o;
  if (const Json* b = cx.find("box")) {
    if (b->is_object()) {
      o.start_box = b->contains("start") ? as_unsigned((*b)["start"], "box.start") : o.start_box;
      o.step = b->contains("step") ? as_unsigned((*b)["step"], "box.step") : o.step;
      o.max_box = b->contains("max") ? as_unsigned((*b)["max"], "box.max") : o.max_box;
    } else {
      o.max_box = as_unsigned(*b, "box");
    }
  }
  if (cx.over.box) o.max_box = *cx.over.box;
  if (o.step == 0) throw SchemaError("box.step must be positive");
  o.cap = cx.cap(o.cap);
  o.verify_max = cx.get_unsigned("verify_max", o.verify_max);
  return o;
}

Json stages_json(const std::vector<GrowthStage>& stages) {
  Json out = Json::array();
  for (const auto& s : stages)
    out.push_back({{"box", s.box}, {"antichain", antichain_to_json(s.antichain)}, {"complete", s.complete}});
  return out;
}

Json counts_json(const std::vector<std::pair<long long, Rational>>& counts) {
  Json out = Json::array();
  for (const auto& [n, c] : counts) out.push_back({n, rational_to_json(c)});
  return out;
}

// ---------------------------------------------------------------- commands

JobResult cmd_ehrhart(const Context& cx) {
  auto p = polytope_from_json(require(cx.job, "polytope"));
  Quasipolynomial q = ehrhart_fit(p);
  Json body{{"dimension", p.dimension()}, {"denominator", p.denominator()}, {"quasipolynomial", quasipolynomial_to_json(q)}};
  if (q.period == 1) body["polynomial"] = format_polynomial(q.constituents[0]);
  if (const Json* last = cx.find("counts_through")) {
    std::vector<std::pair<long long, Rational>> counts;
    for (unsigned n = 0; n <= as_unsigned(*last, "counts_through"); ++n)
      counts.emplace_back(n, Rational(static_cast<long>(lattice_points(p, n).size())));
    body["counts"] = counts_json(counts);
  }
  return {ok(body), kOk};
}

JobResult cmd_colorcount(const Context& cx) {
  auto p = polytope_from_json(require(cx.job, "polytope"));
  auto chi = coloring_from_json(require(cx.job, "coloring"));
  require_additive(*chi);
  if (const Json* n = cx.find("n")) {
    const unsigned v = as_unsigned(*n, "n");
    return {ok({{"n", v}, {"count", color_count(p, *chi, v)}}), kOk};
  }
  ColorCountOptions o;
  if (const Json* d = cx.find("degree")) o.degree = as_unsigned(*d, "degree");
  o.max_start = cx.get_unsigned("max_start", o.max_start);
  o.held_out = cx.get_unsigned("held_out", o.held_out);
  auto fit = color_count_fit(p, *chi, o);
  return {ok({{"start", fit.start},
              {"fit", quasipolynomial_to_json(fit.fit)},
              {"verification", fit_report_to_json(fit.verification)},
              {"reduction_checked", fit.reduction_checked}}),
          kOk};
}

JobResult cmd_sumset(const Context& cx) {
  auto g = semigroup_from_json(require(cx.job, "semigroup"));
  auto sets = sets_from_json(require(cx.job, "sets"), *g);
  auto n = as_unsigned_list(require(cx.job, "n"), "n");
  std::vector<ElementSet> ss;
  for (const auto& a : sets) ss.emplace_back(a.begin(), a.end());
  auto s = multi_sumset(ss, n, *g);
  Json elems = Json::array();
  for (const auto& e : s) elems.push_back(element_to_json(e));
  return {ok({{"n", n}, {"size", s.size()}, {"elements", elems}}), kOk};
}

JobResult cmd_sep(const Context& cx) {
  auto g = semigroup_from_json(require(cx.job, "semigroup"));
  auto sets = sets_from_json(require(cx.job, "sets"), *g);
  auto rep = sumset_growth_sep(sets, g, growth_options(cx));
  Json body{{"stages", stages_json(rep.stages)}};
  if (rep.status == PipelineStatus::kInconclusive) {
    body["status"] = "inconclusive";
    body["message"] = "minimal non-substantial elements did not stabilize within the box limit";
    return {body, kInconclusive};
  }
  body["sep"] = sep_to_json(*rep.sep);
  body["verification"] = fit_report_to_json(rep.verification);
  return {ok(body), kOk};
}

JobResult cmd_charsum(const Context& cx) {
  auto g = semigroup_from_json(require(cx.job, "semigroup"));
  auto sets = sets_from_json(require(cx.job, "sets"), *g);
  auto psi = character_from_json(require(cx.job, "character"));
  if (const Json* n = cx.find("n")) {
    auto nv = as_unsigned_list(*n, "n");
    std::vector<ElementSet> ss;
    for (const auto& a : sets) ss.emplace_back(a.begin(), a.end());
    return {ok({{"n", nv}, {"value", scalar_to_json(character_sum(multi_sumset(ss, nv, *g), *psi))}}), kOk};
  }
  auto rep = character_sumset_exp_poly(sets, g, *psi, growth_options(cx));
  Json body{{"stages", stages_json(rep.stages)}};
  if (rep.status == PipelineStatus::kInconclusive) {
    body["status"] = "inconclusive";
    body["message"] = "minimal non-substantial elements did not stabilize within the box limit";
    return {body, kInconclusive};
  }
  body["exp_poly"] = exp_poly_to_json(*rep.exp_poly);
  body["verification"] = fit_report_to_json(rep.verification);
  return {ok(body), kOk};
}

JobResult cmd_gf(const Context& cx) {
  const std::string op = cx.get_string("op");
  if (op == "from-numerator") {
    SimpleSet s(0);
    const std::size_t cell_cap = cx.cap(kDefaultCellCap);
    if (const Json* f = cx.find("gf")) {
      s = simple_set_from_gf(gf_from_json(*f), cell_cap);
    } else {
      const std::size_t k = as_unsigned(require(cx.job, "arity"), "arity");
      std::map<Point, Rational> num;
      const auto& terms = require(cx.job, "numerator");
      if (!terms.is_array()) throw SchemaError("numerator: expected a list of terms");
      for (const auto& t : terms) {
        auto e = as_unsigned_list(require(t, "exponent"), "exponent");
        if (e.size() != k) throw SchemaError("numerator exponent must have length arity");
        num[e] += rational_from_json(require(t, "coeff"));
      }
      s = simple_set_from_numerator(k, num, cell_cap);
    }
    return {ok({{"set", simple_set_to_json(s)}}), kOk};
  }
  RationalGF f = gf_from_json(require(cx.job, "gf"));
  if (op == "coefficient") {
    auto n = as_unsigned_list(require(cx.job, "n"), "n");
    if (n.size() != f.arity()) throw SchemaError("n must have length arity");
    return {ok({{"n", n}, {"coefficient", scalar_to_json(coefficient(f, n))}}), kOk};
  }
  if (op == "substitute") {
    auto p = partition_from_json(require(cx.job, "partition"), f.arity());
    return {ok({{"gf", gf_to_json(p_substitution(f, p))}}), kOk};
  }
  if (op == "extract") {
    const std::string form = cx.get_string("form", "sep");
    if (form == "sep") return {ok({{"sep", sep_to_json(extract_sep(f))}}), kOk};
    if (form == "exp_poly") return {ok({{"exp_poly", exp_poly_to_json(extract_exp_poly(f))}}), kOk};
    throw SchemaError("form must be \"sep\" or \"exp_poly\"");
  }
  throw SchemaError("gf op must be coefficient, substitute, extract or from-numerator");
}

JobResult cmd_orthants(const Context& cx) {
  const std::string op = cx.get_string("op");
  const std::size_t k = as_unsigned(require(cx.job, "dimension"), "dimension");
  auto set_arg = [&](const std::string& key) { return simple_set_from_json(require(cx.job, key), k); };
  if (op == "intersect") {
    std::vector<GeneralizedOrthant> os;
    const auto& list = require(cx.job, "orthants");
    if (!list.is_array()) throw SchemaError("orthants: expected a list");
    for (const auto& o : list) os.push_back(orthant_from_json(o, k));
    return {ok({{"orthant", orthant_to_json(orthant_intersect(os))}}), kOk};
  }
  if (op == "complement") {
    if (const Json* o = cx.find("orthant"))
      return {ok({{"set", simple_set_to_json(orthant_complement(orthant_from_json(*o, k)))}}), kOk};
    return {ok({{"set", simple_set_to_json(simplify(simple_complement(set_arg("set"))))}}), kOk};
  }
  if (op == "union" || op == "intersection") {
    const auto& sets = require(cx.job, "sets");
    if (!sets.is_array() || sets.empty()) throw SchemaError("sets: expected a nonempty list");
    SimpleSet acc = simple_set_from_json(sets[0], k);
    for (std::size_t i = 1; i < sets.size(); ++i) {
      SimpleSet s = simple_set_from_json(sets[i], k);
      acc = op == "union" ? simple_union(acc, s) : simple_intersect(acc, s);
    }
    return {ok({{"set", simple_set_to_json(simplify(acc))}}), kOk};
  }
  if (op == "simplify") return {ok({{"set", simple_set_to_json(simplify(set_arg("set")))}}), kOk};
  if (op == "membership") {
    auto x = as_unsigned_list(require(cx.job, "point"), "point");
    if (x.size() != k) throw SchemaError("point must have length dimension");
    return {ok({{"point", x}, {"member", membership(set_arg("set"), x)}}), kOk};
  }
  if (op == "gf") return {ok({{"gf", gf_to_json(gf_of_simple_set(set_arg("set"), cx.cap(kDefaultOrthantCap)))}}), kOk};
  if (op == "upper_ideal_gf") {
    Antichain a;
    const auto& list = require(cx.job, "antichain");
    if (!list.is_array()) throw SchemaError("antichain: expected a list of points");
    for (const auto& p : list) {
      a.elements.push_back(as_unsigned_list(p, "antichain point"));
      if (a.elements.back().size() != k) throw SchemaError("antichain points must have length dimension");
    }
    return {ok({{"gf", gf_to_json(gf_of_upper_ideal(k, a, cx.cap(kDefaultOrthantCap)))}}), kOk};
  }
  if (op == "minimal") {
    SimpleSet s = set_arg("set");
    const unsigned box = cx.over.box.value_or(cx.get_unsigned("box", 8));
    auto m = minimal_elements(k, [&](std::span<const unsigned> x) { return membership(s, x); }, box);
    return {ok({{"box", box}, {"antichain", antichain_to_json(m.antichain)}, {"complete", m.complete}}), kOk};
  }
  throw SchemaError("unknown orthants op \"" + op + "\"");
}

JobResult cmd_substantial(const Context& cx) {
  auto chi = coloring_from_json(require(cx.job, "coloring"));
  require_additive(*chi);
  const std::size_t k = chi->arity();
  BlockPartition p = cx.find("partition") ? partition_from_json(*cx.find("partition"), k) : single_block(k);
  if (const Json* n = cx.find("slice")) {
    auto nv = as_unsigned_list(*n, "slice");
    Json pts = Json::array();
    for (const auto& x : substantial_points(*chi, p, nv)) pts.push_back(x);
    return {ok({{"slice", nv}, {"points", pts}}), kOk};
  }
  const unsigned box = cx.over.box.value_or(cx.get_unsigned("box", 8));
  auto rep = substantial_upper_ideal(*chi, p, box);
  Json pts = Json::array();
  for (const auto& x : rep.substantial) pts.push_back(x);
  return {ok({{"box", rep.box},
              {"partition", partition_to_json(p)},
              {"substantial", pts},
              {"minimal_non_substantial", antichain_to_json(rep.minimal_non_substantial)},
              {"complete", rep.complete}}),
          kOk};
}

JobResult cmd_iterimage(const Context& cx) {
  auto f = family_from_json(require(cx.job, "family"));
  auto b = ground_set_from_json(require(cx.job, "B"));
  require_commuting(f);
  if (const Json* n = cx.find("n")) {
    auto nv = as_unsigned_list(*n, "n");
    auto img = iterated_image(f, b, nv, cx.cap(kDefaultApplicationCap));
    return {ok({{"n", nv}, {"size", img.size()}, {"image", Json(std::vector<std::size_t>(img.begin(), img.end()))}}),
            kOk};
  }
  IterImageOptions o;
  o.fit.degree = cx.get_unsigned("degree", o.fit.degree);
  o.fit.min_threshold = cx.get_unsigned("min_threshold", o.fit.min_threshold);
  o.fit.max_threshold = cx.get_unsigned("max_threshold", o.fit.max_threshold);
  o.verify_max = cx.get_unsigned("verify_max", o.verify_max);
  o.structural = cx.get_bool("structural", false);
  o.orthant_cap = cx.cap(o.orthant_cap);
  if (cx.over.box) o.max_box = *cx.over.box;
  auto rep = iterated_image_sep(f, b, o);
  Json body{{"sep", sep_to_json(rep.sep)}, {"verification", fit_report_to_json(rep.verification)}};
  if (o.structural) {
    if (rep.structural) {
      body["structural"] = sep_to_json(*rep.structural);
      body["structural_verification"] = fit_report_to_json(*rep.structural_verification);
    } else {
      body["structural_note"] = rep.structural_note;
    }
  }
  return {ok(body), kOk};
}

GridPoint grid_point(const Json& j) {
  GridPoint p;
  if (j.is_number_integer()) {
    p.push_back(j.get<long long>());
  } else if (j.is_array()) {
    for (const auto& v : j) p.push_back(as_int(v, "point"));
  } else {
    throw SchemaError("sample point: expected an integer or a list of integers");
  }
  return p;
}

JobResult cmd_fit(const Context& cx) {
  const std::string kind = cx.get_string("kind");
  const auto& list = require(cx.job, "samples");
  if (!list.is_array() || list.empty()) throw SchemaError("samples: expected a nonempty list");
  std::map<GridPoint, Scalar> table;
  std::size_t arity = 0;
  for (const auto& s : list) {
    GridPoint p = grid_point(require(s, "point"));
    if (arity == 0) arity = p.size();
    if (p.size() != arity || arity == 0) throw SchemaError("sample points must share one positive length");
    table[p] = scalar_from_json(require(s, "value"));
  }
  auto lookup = [&](std::span<const long long> n) -> const Scalar& {
    auto it = table.find(GridPoint(n.begin(), n.end()));
    if (it == table.end()) {
      std::string where;
      for (long long v : n) where += (where.empty() ? "" : ",") + std::to_string(v);
      throw InconclusiveError("no sample at (" + where + ")");
    }
    return it->second;
  };
  auto rational_at = [&](std::span<const long long> n) {
    auto q = lookup(n).as_rational();
    if (!q) throw SchemaError("this fit needs rational sample values");
    return *q;
  };
  const unsigned degree = cx.get_unsigned("degree", 1);

  if (kind == "polynomial") {
    std::vector<Sample> samples;
    for (const auto& [p, v] : table) samples.push_back({p, rational_at(p)});
    auto poly = fit_polynomial(samples, arity, degree);
    return {ok({{"polynomial", polynomial_to_json(poly)}}), kOk};
  }
  if (kind == "quasipolynomial") {
    if (arity != 1) throw SchemaError("quasipolynomial samples are one-dimensional");
    const unsigned period = cx.get_unsigned("period", 1);
    const long long last = table.rbegin()->first[0];
    auto q = fit_quasipolynomial([&](long long n) { return rational_at(std::span<const long long>(&n, 1)); }, period,
                                 degree, last);
    return {ok({{"quasipolynomial", quasipolynomial_to_json(q)}}), kOk};
  }
  if (kind == "sep") {
    FitSepOptions o;
    o.degree = degree;
    o.min_threshold = cx.get_unsigned("min_threshold", o.min_threshold);
    o.max_threshold = cx.get_unsigned("max_threshold", o.max_threshold);
    auto sep = fit_sep(rational_at, arity, o);
    return {ok({{"sep", sep_to_json(sep)}}), kOk};
  }
  if (kind == "exp_poly") {
    const unsigned order = as_unsigned(require(cx.job, "order"), "order");
    if (order == 0) throw SchemaError("order must be positive");
    std::vector<std::vector<unsigned>> roots;
    const auto& rs = require(cx.job, "roots");
    if (!rs.is_array()) throw SchemaError("roots: expected a list of exponent vectors");
    for (const auto& r : rs) roots.push_back(as_unsigned_list(r, "root"));
    FitExpPolyOptions o;
    o.degree = cx.get_unsigned("degree", 0);
    o.threshold = cx.get_unsigned("threshold", 0);
    auto e = fit_exp_poly(lookup, arity, order, roots, o);
    return {ok({{"exp_poly", exp_poly_to_json(e)}}), kOk};
  }
  throw SchemaError("fit kind must be polynomial, quasipolynomial, sep or exp_poly");
}

// Random corpora for `verify`; all draws come from one seeded engine.
struct Corpus {
  std::mt19937 rng;
  unsigned draw(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); }
};

SimpleSet random_simple_set(Corpus& c, std::size_t k) {
  std::vector<GeneralizedOrthant> os;
  const unsigned count = c.draw(1, 5);
  for (unsigned i = 0; i < count; ++i) {
    Point s(k);
    std::vector<bool> frozen(k);
    for (std::size_t j = 0; j < k; ++j) {
      s[j] = c.draw(0, 4);
      frozen[j] = c.draw(0, 2) == 0;
    }
    os.emplace_back(std::move(s), std::move(frozen));
  }
  return SimpleSet(k, std::move(os));
}

RationalGF random_gf(Corpus& c, std::size_t k) {
  std::vector<GFTerm> terms;
  const unsigned count = c.draw(1, 6);
  for (unsigned i = 0; i < count; ++i) {
    GFTerm t;
    t.gamma = Scalar(make_rational(static_cast<long long>(c.draw(0, 6)) - 3, c.draw(1, 3)));
    for (std::size_t j = 0; j < k; ++j) {
      t.b.push_back(c.draw(0, 2));
      t.e.push_back(c.draw(0, 2));
      t.alpha.push_back(c.draw(0, 3) == 0 ? Scalar(-1) : Scalar(1));
    }
    terms.push_back(std::move(t));
  }
  return RationalGF(k, std::move(terms));
}

std::vector<BlockPartition> all_partitions(std::size_t k) {
  std::vector<BlockPartition> out;
  BlockPartition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      out.push_back(cur);
      return;
    }
    for (auto& blk : cur) {
      blk.push_back(i);
      rec(i + 1);
      blk.pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

Json verify_random(const Context& cx, int& exit_code) {
  const std::uint32_t seed = cx.over.seed.value_or(static_cast<std::uint32_t>(cx.get_unsigned("seed", 1)));
  const std::string corpus = cx.get_string("corpus");
  const unsigned count = cx.get_unsigned("count", 10);
  Corpus c{std::mt19937(seed)};
  Json failures = Json::array();
  if (corpus == "gf_roundtrip") {
    const unsigned box = 12;
    for (unsigned t = 0; t < count; ++t) {
      SimpleSet s = random_simple_set(c, 2);
      RationalGF f = gf_of_simple_set(s, cx.cap(kDefaultOrthantCap));
      SimpleSet back = simple_set_from_gf(f);
      for (unsigned x = 0; x <= box; ++x)
        for (unsigned y = 0; y <= box; ++y) {
          const unsigned pt[] = {x, y};
          const bool in = membership(s, pt);
          if (coefficient(f, pt) != Scalar(in ? 1 : 0) || membership(back, pt) != in) {
            failures.push_back({{"instance", t}, {"set", simple_set_to_json(s)}, {"point", {x, y}}});
            x = y = box + 1;
          }
        }
    }
  } else if (corpus == "p_substitution") {
    for (unsigned t = 0; t < count; ++t) {
      const std::size_t k = c.draw(1, 3);
      RationalGF f = random_gf(c, k);
      for (const auto& p : all_partitions(k)) {
        RationalGF g = p_substitution(f, p);
        const unsigned lim = 4;
        for (const auto& n : box_grid(p.size(), 0, lim)) {
          Scalar expected(0);
          std::vector<unsigned> nu(n.begin(), n.end());
          for (const auto& a : box_grid(k, 0, lim)) {
            std::vector<unsigned> au(a.begin(), a.end());
            if (block_norm(au, p) == nu) expected += coefficient(f, au);
          }
          if (!(coefficient(g, nu) == expected)) {
            failures.push_back({{"instance", t}, {"gf", gf_to_json(f)}, {"partition", partition_to_json(p)}, {"n", nu}});
            break;
          }
        }
      }
    }
  } else if (corpus == "decomposition") {
    for (unsigned t = 0; t < count; ++t) {
      std::vector<std::vector<Rational>> vs;
      const unsigned nv = c.draw(1, 4);
      for (unsigned i = 0; i < nv; ++i) vs.push_back({Rational(c.draw(0, 4)), Rational(c.draw(0, 4))});
      RationalPolytope p(vs);
      for (unsigned n = 2; n <= 6; ++n)
        if (auto w = verify_decomposition_identity(p, n)) {
          Json verts = Json::array();
          for (const auto& v : vs) verts.push_back({rational_to_json(v[0]), rational_to_json(v[1])});
          failures.push_back({{"instance", t}, {"vertices", verts}, {"n", n}, {"point", *w}});
          break;
        }
    }
  } else {
    throw SchemaError("corpus must be gf_roundtrip, p_substitution or decomposition");
  }
  if (!failures.empty()) exit_code = kVerification;
  return {{"check", "random"}, {"corpus", corpus}, {"seed", seed}, {"count", count}, {"failures", failures},
          {"status", failures.empty() ? "ok" : "failed"}};
}

JobResult cmd_verify(const Context& cx) {
  const std::string check = cx.get_string("check");
  auto n_range = [&]() {
    std::vector<unsigned> ns;
    if (const Json* n = cx.find("n")) {
      ns = as_unsigned_list(*n, "n");
    } else {
      auto r = as_unsigned_list(require(cx.job, "range"), "range");
      if (r.size() != 2 || r[0] > r[1]) throw SchemaError("range: expected [lo, hi]");
      for (unsigned v = r[0]; v <= r[1]; ++v) ns.push_back(v);
    }
    return ns;
  };
  if (check == "decomposition" || check == "rational_decomposition") {
    auto p = polytope_from_json(require(cx.job, "polytope"));
    for (unsigned n : n_range()) {
      auto w = check == "decomposition" ? verify_decomposition_identity(p, n) : verify_rational_decomposition(p, n);
      if (w)
        return {{{"check", check}, {"status", "failed"}, {"n", n}, {"counterexample", *w}}, kVerification};
    }
    return {ok({{"check", check}, {"n", n_range()}}), kOk};
  }
  if (check == "shift_stability") {
    auto chi = coloring_from_json(require(cx.job, "coloring"));
    const unsigned box = cx.over.box.value_or(cx.get_unsigned("box", chi->bound().value_or(4)));
    if (auto w = check_shift_stability(*chi, box))
      throw Rejection{"coloring is not shift-stable", shift_witness_json(*w)};
    return {ok({{"check", check}, {"box", box}}), kOk};
  }
  if (check == "commuting") {
    require_commuting(family_from_json(require(cx.job, "family")));
    return {ok({{"check", check}}), kOk};
  }
  if (check == "semigroup") {
    auto g = semigroup_from_json(require(cx.job, "semigroup"));
    const auto* table = dynamic_cast<const CayleyTable*>(g.get());
    if (!table) throw SchemaError("semigroup check needs a table semigroup");
    if (auto w = validate(*table))
      throw Rejection{"table is not a commutative semigroup",
                      {{"kind", w->kind == TableWitness::Kind::kCommutativity ? "commutativity" : "associativity"},
                       {"elements", w->elements}}};
    return {ok({{"check", check}}), kOk};
  }
  if (check == "character") {
    auto g = semigroup_from_json(require(cx.job, "semigroup"));
    auto psi = character_from_json(require(cx.job, "character"));
    std::vector<Element> sample;
    if (auto all = g->elements()) {
      sample = *all;
    } else {
      const auto& list = require(cx.job, "sample");
      if (!list.is_array()) throw SchemaError("sample: expected a list of elements");
      for (const auto& e : list) sample.push_back(element_from_json(e, *g));
    }
    if (auto w = validate_character(*g, *psi, sample))
      throw Rejection{"character is not multiplicative",
                      {{"a", element_to_json(w->first)}, {"b", element_to_json(w->second)}}};
    return {ok({{"check", check}, {"pairs", sample.size() * sample.size()}}), kOk};
  }
  if (check == "key_property" || check == "encoding") {
    auto f = family_from_json(require(cx.job, "family"));
    auto b = ground_set_from_json(require(cx.job, "B"));
    require_commuting(f);
    auto enc = encode_as_coloring(f, b);
    const unsigned box = cx.over.box.value_or(cx.get_unsigned("box", 4));
    if (check == "key_property") {
      if (auto w = check_key_property(enc, box))
        return {{{"check", check},
                 {"status", "failed"},
                 {"witness", {{"i", w->i + 1}, {"j", w->j + 1}, {"z", w->z}, {"z2", w->z2}, {"w", w->w}}}},
                kVerification};
      return {ok({{"check", check}, {"box", box}, {"k", enc.k()}}), kOk};
    }
    if (auto bad = verify_encoding(enc, f, b, box))
      return {{{"check", check}, {"status", "failed"}, {"slice", *bad}}, kVerification};
    return {ok({{"check", check}, {"box", box}, {"k", enc.k()}, {"offsets", enc.offsets()}}), kOk};
  }
  if (check == "random") {
    int code = kOk;
    Json body = verify_random(cx, code);
    return {body, code};
  }
  throw SchemaError("unknown verify check \"" + check + "\"");
}

using Handler = JobResult (*)(const Context&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"ehrhart", cmd_ehrhart},     {"colorcount", cmd_colorcount},   {"sumset", cmd_sumset},
      {"sep", cmd_sep},             {"charsum", cmd_charsum},         {"gf", cmd_gf},
      {"orthants", cmd_orthants},   {"substantial", cmd_substantial}, {"iterimage", cmd_iterimage},
      {"fit", cmd_fit},             {"verify", cmd_verify},
  };
  return table;
}

Json failure(const std::string& status, const std::string& kind, const std::string& message) {
  return {{"status", status}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

JobResult run(const Json& job, const std::string& command, const Overrides& overrides) {
  std::string name = command;
  JobResult result;
  try {
    if (!job.is_object()) throw SchemaError("a job document must be a JSON object");
    if (name.empty()) {
      auto it = job.find("command");
      if (it == job.end() || !it->is_string()) throw SchemaError("missing field \"command\"");
      name = it->get<std::string>();
    }
    auto h = handlers().find(name);
    if (h == handlers().end()) throw SchemaError("unknown command \"" + name + "\"");
    result = h->second(Context{job, overrides});
  } catch (const Rejection& r) {
    result = {{{"status", "rejected"}, {"error", {{"kind", "rejected"}, {"message", r.message}}}, {"witness", r.witness}},
              kRejected};
  } catch (const SchemaError& e) {
    result = {failure("error", "schema", e.what()), kSchema};
  } catch (const Json::exception& e) {
    result = {failure("error", "schema", e.what()), kSchema};
  } catch (const PreconditionError& e) {
    result = {failure("error", "precondition", e.what()), kSchema};
  } catch (const ArityError& e) {
    result = {failure("error", "arity", e.what()), kSchema};
  } catch (const ContextError& e) {
    result = {failure("error", "context", e.what()), kSchema};
  } catch (const ResourceError& e) {
    result = {failure("error", "resource", e.what()), kResourceCap};
  } catch (const InconclusiveError& e) {
    result = {failure("inconclusive", "inconclusive", e.what()), kInconclusive};
  } catch (const VerificationError& e) {
    result = {failure("error", "verification", e.what()), kVerification};
  } catch (const NotASetError& e) {
    result = {failure("rejected", "not_a_set", e.what()), kRejected};
  } catch (const FitError& e) {
    result = {failure("rejected", "fit", e.what()), kRejected};
  } catch (const UnsupportedError& e) {
    result = {failure("rejected", "unsupported", e.what()), kRejected};
  } catch (const Error& e) {
    result = {failure("error", "internal", e.what()), kVerification};
  }
  if (!name.empty()) result.document["command"] = name;
  return result;
}

JobResult run_text(const std::string& text, const std::string& command, const Overrides& overrides) {
  Json job;
  try {
    job = Json::parse(text);
  } catch (const Json::parse_error& e) {
    JobResult r{failure("error", "schema", std::string("invalid JSON: ") + e.what()), kSchema};
    if (!command.empty()) r.document["command"] = command;
    return r;
  }
  return run(job, command, overrides);
}

}  // namespace evpoly::cli
