#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "evpoly/fitting.hpp"
#include "evpoly/orthants.hpp"
#include "evpoly/partition.hpp"
#include "evpoly/rational_gf.hpp"

namespace evpoly {

using GroundSet = std::set<std::size_t>;

/// Maps f_1..f_k on {0..size-1} given as tables, grouped into blocks.
struct MapFamily {
  std::size_t ground_size = 0;
  std::vector<std::vector<std::size_t>> maps;
  BlockPartition partition;

  /// Checks table shapes and the partition (PreconditionError).
  void check() const;
};

struct CommuteWitness {
  std::size_t i, j, x;  // f_i(f_j(x)) != f_j(f_i(x)), zero-based
};

/// First failure over i < j, then x, in increasing order.
std::optional<CommuteWitness> validate_commuting(const MapFamily& f);

inline constexpr std::size_t kDefaultApplicationCap = std::size_t{1} << 28;

/// Union of (f_1^{e_1} o ... o f_k^{e_k})(B) over e with block sums n.
/// Throws PreconditionError for a non-commuting family, ResourceError when
/// the number of map applications would exceed `cap`.
GroundSet iterated_image(const MapFamily& f, const GroundSet& b, std::span<const unsigned> n,
                         std::size_t cap = kDefaultApplicationCap);

/// Repeats maps (the last map of each short block goes first) and elements
/// of B until both have the same length k. Iterated images are unchanged.
struct PaddedFamily {
  MapFamily family;
  std::vector<std::size_t> elements;
};
PaddedFamily pad_family(const MapFamily& f, const GroundSet& b);

/// Partial coloring of N_0^{k^2}: the i-th chunk of k coordinates carries
/// C_i = {x : chunk i >= 1, other chunks 0}, colored by
/// (f_1^{z_1-1} o ... o f_k^{z_k-1})(b_i) with z the i-th chunk. All other
/// points are uncolored.
class EncodedColoring {
 public:
  explicit EncodedColoring(PaddedFamily padded);

  std::size_t k() const { return k_; }
  std::size_t arity() const { return k_ * k_; }
  /// Coordinate i*k + j lies in the block of f_j.
  const BlockPartition& partition() const { return partition_; }
  /// Block sizes after padding, the smallest block norm a colored point has.
  const std::vector<unsigned>& offsets() const { return offsets_; }

  /// nullopt for uncolored points.
  std::optional<std::size_t> color(std::span<const unsigned> x) const;
  /// Color of the point of C_i whose chunk is z (all z_j >= 1).
  std::size_t chunk_color(std::size_t i, std::span<const unsigned> z) const;
  /// Distinct colors on the slice of block norm n.
  std::set<std::size_t> slice_colors(std::span<const unsigned> n) const;

  const PaddedFamily& padded() const { return padded_; }

 private:
  PaddedFamily padded_;
  std::size_t k_;
  BlockPartition partition_;
  std::vector<unsigned> offsets_;
};

EncodedColoring encode_as_coloring(const MapFamily& f, const GroundSet& b);

struct KeyPropertyWitness {
  std::size_t i, j;
  Point z, z2, w;  // chunks of x, y in C_i and x' in C_j
};

/// Exhaustive check over chunks in [1, box]^k of: x <= y in C_i, x' in C_j,
/// chi(x) = chi(x') implies chi(y) = chi(x' + (y - x) moved to chunk j).
std::optional<KeyPropertyWitness> check_key_property(const EncodedColoring& enc, unsigned box);

/// First n in [d, d + max]^l (d the offsets) with
/// |slice_colors(n)| != |iterated_image(n - d)|.
std::optional<GridPoint> verify_encoding(const EncodedColoring& enc, const MapFamily& f, const GroundSet& b,
                                         unsigned max);

struct IterImageOptions {
  FitSepOptions fit{0, 1, 16};
  unsigned verify_max = 8;
  bool structural = false;
  /// The structural route runs only when k^2 is at most this.
  std::size_t structural_dimension_cap = 16;
  unsigned start_box = 2;
  unsigned step = 2;
  unsigned max_box = 12;
  std::size_t orthant_cap = kDefaultOrthantCap;
};

struct IterImageReport {
  SEPDescription sep;
  FitReport verification;
  std::optional<SEPDescription> structural;
  std::optional<FitReport> structural_verification;
  /// Why the structural route did not run, when requested.
  std::string structural_note;
};

/// |iterated_image(n)| fitted as a strongly eventually polynomial function
/// and verified on [0, verify_max]^l.
IterImageReport iterated_image_sep(const MapFamily& f, const GroundSet& b, const IterImageOptions& options = {});

}  // namespace evpoly
