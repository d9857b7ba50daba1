#include "evpoly/commuting_maps.hpp"

#include <algorithm>
#include <map>

#include "evpoly/colorings.hpp"
#include "evpoly/errors.hpp"

namespace evpoly {
namespace {

std::vector<Point> box_points_from(std::size_t k, unsigned lo, unsigned hi) {
  std::vector<Point> out;
  Point x(k, lo);
  while (true) {
    out.push_back(x);
    std::size_t i = k;
    while (i > 0 && x[i - 1] == hi) {
      x[i - 1] = lo;
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  return out;
}

std::size_t apply_powers(const MapFamily& f, std::size_t x, std::span<const unsigned> e) {
  for (std::size_t j = f.maps.size(); j-- > 0;)
    for (unsigned t = 0; t < e[j]; ++t) x = f.maps[j][x];
  return x;
}

std::vector<unsigned> block_sizes(const BlockPartition& p) {
  std::vector<unsigned> d;
  for (const auto& blk : p) d.push_back(static_cast<unsigned>(blk.size()));
  return d;
}

}  // namespace

void MapFamily::check() const {
  if (maps.empty()) throw PreconditionError("a map family needs at least one map");
  for (const auto& m : maps) {
    if (m.size() != ground_size) throw PreconditionError("map table size differs from the ground set size");
    for (std::size_t v : m)
      if (v >= ground_size) throw PreconditionError("map value " + std::to_string(v) + " outside the ground set");
  }
  validate_partition(partition, maps.size());
}

std::optional<CommuteWitness> validate_commuting(const MapFamily& f) {
  f.check();
  for (std::size_t i = 0; i < f.maps.size(); ++i)
    for (std::size_t j = i + 1; j < f.maps.size(); ++j)
      for (std::size_t x = 0; x < f.ground_size; ++x)
        if (f.maps[i][f.maps[j][x]] != f.maps[j][f.maps[i][x]]) return CommuteWitness{i, j, x};
  return std::nullopt;
}

GroundSet iterated_image(const MapFamily& f, const GroundSet& b, std::span<const unsigned> n, std::size_t cap) {
  if (auto w = validate_commuting(f))
    throw PreconditionError("maps f" + std::to_string(w->i + 1) + " and f" + std::to_string(w->j + 1) +
                            " do not commute at x=" + std::to_string(w->x));
  if (n.size() != f.partition.size()) throw ArityError("iterated_image: one exponent per block expected");
  for (std::size_t x : b)
    if (x >= f.ground_size) throw PreconditionError("B contains " + std::to_string(x) + " outside the ground set");
  std::size_t work = 0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    work += static_cast<std::size_t>(n[j]) * f.partition[j].size() * f.ground_size;
    if (work > cap) throw ResourceError("iterated_image: map applications exceed the cap");
  }
  // By commutativity the union over exponent vectors factors into the
  // block-wise operators S -> union_{f in block} f(S), applied n_j times.
  std::vector<char> cur(f.ground_size, 0), next(f.ground_size);
  for (std::size_t x : b) cur[x] = 1;
  for (std::size_t j = 0; j < n.size(); ++j)
    for (unsigned t = 0; t < n[j]; ++t) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t x = 0; x < f.ground_size; ++x)
        if (cur[x])
          for (std::size_t i : f.partition[j]) next[f.maps[i][x]] = 1;
      cur.swap(next);
    }
  GroundSet out;
  for (std::size_t x = 0; x < f.ground_size; ++x)
    if (cur[x]) out.insert(x);
  return out;
}

PaddedFamily pad_family(const MapFamily& f, const GroundSet& b) {
  f.check();
  if (b.empty()) throw PreconditionError("B must be nonempty");
  PaddedFamily out{f, std::vector<std::size_t>(b.begin(), b.end())};
  const std::size_t k = std::max(f.maps.size(), b.size());
  const std::size_t last = f.maps.size() - 1;
  const std::size_t last_block = block_index(f.partition, f.maps.size())[last];
  while (out.family.maps.size() < k) {
    out.family.partition[last_block].push_back(out.family.maps.size());
    out.family.maps.push_back(f.maps[last]);
  }
  while (out.elements.size() < k) out.elements.push_back(out.elements.back());
  return out;
}

EncodedColoring::EncodedColoring(PaddedFamily padded)
    : padded_(std::move(padded)), k_(padded_.family.maps.size()) {
  if (padded_.elements.size() != k_) throw PreconditionError("encoding needs as many elements as maps");
  const auto blk = block_index(padded_.family.partition, k_);
  partition_.assign(padded_.family.partition.size(), {});
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) partition_[blk[j]].push_back(i * k_ + j);
  for (auto& b : partition_) std::sort(b.begin(), b.end());
  offsets_ = block_sizes(padded_.family.partition);
}

std::size_t EncodedColoring::chunk_color(std::size_t i, std::span<const unsigned> z) const {
  std::vector<unsigned> e(k_);
  for (std::size_t j = 0; j < k_; ++j) {
    if (z[j] == 0) throw PreconditionError("chunk coordinates of a colored point are positive");
    e[j] = z[j] - 1;
  }
  return apply_powers(padded_.family, padded_.elements[i], e);
}

std::optional<std::size_t> EncodedColoring::color(std::span<const unsigned> x) const {
  if (x.size() != arity()) throw ArityError("encoded coloring arity mismatch");
  std::optional<std::size_t> chunk;
  for (std::size_t i = 0; i < k_; ++i) {
    auto part = x.subspan(i * k_, k_);
    const bool zero = std::all_of(part.begin(), part.end(), [](unsigned v) { return v == 0; });
    const bool positive = std::all_of(part.begin(), part.end(), [](unsigned v) { return v > 0; });
    if (zero) continue;
    if (!positive || chunk) return std::nullopt;
    chunk = i;
  }
  if (!chunk) return std::nullopt;
  return chunk_color(*chunk, x.subspan(*chunk * k_, k_));
}

std::set<std::size_t> EncodedColoring::slice_colors(std::span<const unsigned> n) const {
  const auto& p = padded_.family.partition;
  if (n.size() != p.size()) throw ArityError("slice norm must have one entry per block");
  std::vector<unsigned> m(n.size());
  for (std::size_t r = 0; r < n.size(); ++r) {
    if (n[r] < offsets_[r]) return {};
    m[r] = n[r] - offsets_[r];
  }
  std::set<std::size_t> out;
  for (const auto& e : slice_points(k_, p, m))
    for (std::size_t i = 0; i < k_; ++i) out.insert(apply_powers(padded_.family, padded_.elements[i], e));
  return out;
}

EncodedColoring encode_as_coloring(const MapFamily& f, const GroundSet& b) {
  if (auto w = validate_commuting(f))
    throw PreconditionError("maps f" + std::to_string(w->i + 1) + " and f" + std::to_string(w->j + 1) +
                            " do not commute at x=" + std::to_string(w->x));
  return EncodedColoring(pad_family(f, b));
}

std::optional<KeyPropertyWitness> check_key_property(const EncodedColoring& enc, unsigned box) {
  const std::size_t k = enc.k();
  const auto chunks = box_points_from(k, 1, box);
  Point y2(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& z : chunks) {
        const std::size_t cz = enc.chunk_color(i, z);
        for (const auto& w : chunks) {
          if (enc.chunk_color(j, w) != cz) continue;
          for (const auto& z2 : chunks) {
            bool above = true;
            for (std::size_t t = 0; t < k && above; ++t) above = z2[t] >= z[t];
            if (!above) continue;
            for (std::size_t t = 0; t < k; ++t) y2[t] = w[t] + z2[t] - z[t];
            if (enc.chunk_color(i, z2) != enc.chunk_color(j, y2)) return KeyPropertyWitness{i, j, z, z2, w};
          }
        }
      }
  return std::nullopt;
}

std::optional<GridPoint> verify_encoding(const EncodedColoring& enc, const MapFamily& f, const GroundSet& b,
                                         unsigned max) {
  const std::size_t l = enc.offsets().size();
  for (const auto& m : box_grid(l, 0, max)) {
    std::vector<unsigned> n(l), e(l);
    for (std::size_t r = 0; r < l; ++r) {
      e[r] = static_cast<unsigned>(m[r]);
      n[r] = e[r] + enc.offsets()[r];
    }
    if (enc.slice_colors(n).size() != iterated_image(f, b, e).size()) {
      GridPoint bad(n.begin(), n.end());
      return bad;
    }
  }
  return std::nullopt;
}

namespace {

// Substantial points of C_i in exponent coordinates w = z - 1: the first
// point of each color in lex order, where every colored point of C_j with
// j > i precedes all of C_i.
class ChunkClassifier {
 public:
  ChunkClassifier(const EncodedColoring& enc, std::size_t i) : enc_(enc), i_(i) {}

  bool non_substantial(std::span<const unsigned> w) {
    const auto& p = enc_.padded().family.partition;
    auto n = block_norm(w, p);
    auto it = cache_.find(n);
    if (it == cache_.end()) it = cache_.emplace(n, classify(n)).first;
    return !it->second.count(Point(w.begin(), w.end()));
  }

 private:
  std::set<Point> classify(const std::vector<unsigned>& n) const {
    const auto& fam = enc_.padded().family;
    const auto& elems = enc_.padded().elements;
    const auto pts = slice_points(enc_.k(), fam.partition, n);
    std::set<std::size_t> seen;
    for (const auto& e : pts)
      for (std::size_t j = i_ + 1; j < enc_.k(); ++j) seen.insert(apply_powers(fam, elems[j], e));
    std::set<Point> out;
    for (const auto& e : pts)
      if (seen.insert(apply_powers(fam, elems[i_], e)).second) out.insert(e);
    return out;
  }

  const EncodedColoring& enc_;
  std::size_t i_;
  std::map<std::vector<unsigned>, std::set<Point>> cache_;
};

std::optional<SEPDescription> structural_sep(const EncodedColoring& enc, const IterImageOptions& options,
                                             std::string& note) {
  const std::size_t k = enc.k();
  RationalGF total(k);
  for (std::size_t i = 0; i < k; ++i) {
    ChunkClassifier cls(enc, i);
    std::vector<Antichain> seen;
    bool stable = false;
    for (unsigned box = options.start_box; box <= options.max_box && !stable; box += options.step) {
      auto mins = minimal_elements(k, [&](std::span<const unsigned> w) { return cls.non_substantial(w); }, box);
      seen.push_back(mins.antichain);
      const std::size_t s = seen.size();
      stable = s >= 3 && mins.complete && seen[s - 1] == seen[s - 2] && seen[s - 2] == seen[s - 3];
    }
    if (!stable) {
      note = "minimal elements did not stabilize for element " + std::to_string(i + 1);
      return std::nullopt;
    }
    total = total + RationalGF::untwisted(std::vector<unsigned>(k, 0), std::vector<unsigned>(k, 1)) -
            gf_of_upper_ideal(k, seen.back(), options.orthant_cap);
  }
  return extract_sep(p_substitution(total, enc.padded().family.partition));
}

}  // namespace

IterImageReport iterated_image_sep(const MapFamily& f, const GroundSet& b, const IterImageOptions& options) {
  if (auto w = validate_commuting(f))
    throw PreconditionError("maps f" + std::to_string(w->i + 1) + " and f" + std::to_string(w->j + 1) +
                            " do not commute at x=" + std::to_string(w->x));
  const std::size_t l = f.partition.size();
  auto oracle = [&](std::span<const long long> n) {
    std::vector<unsigned> m(n.begin(), n.end());
    return Rational(static_cast<long>(iterated_image(f, b, m).size()));
  };
  IterImageReport rep;
  rep.sep = fit_sep(oracle, l, options.fit);
  const auto grid = box_grid(l, 0, options.verify_max);
  rep.verification = verify_fit(rep.sep, oracle, grid);
  if (!rep.verification.ok())
    throw InconclusiveError("fitted table disagrees with direct images on the verification grid");

  if (options.structural) {
    const auto enc = encode_as_coloring(f, b);
    if (enc.arity() > options.structural_dimension_cap) {
      rep.structural_note = "k^2 = " + std::to_string(enc.arity()) + " exceeds the structural cap";
    } else if (auto sep = structural_sep(enc, options, rep.structural_note)) {
      rep.structural_verification = verify_fit(*sep, oracle, grid);
      if (!rep.structural_verification->ok())
        throw VerificationError("structural table disagrees with direct images");
      rep.structural = std::move(sep);
    }
  }
  return rep;
}

}  // namespace evpoly
