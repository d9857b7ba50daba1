#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "evpoly/fitting.hpp"
#include "evpoly/orthants.hpp"
#include "evpoly/partition.hpp"
#include "evpoly/rational_gf.hpp"
#include "evpoly/semigroups.hpp"

namespace evpoly {

/// Colors are canonical semigroup elements (or labels for explicit tables).
using Color = Element;

class AdditiveColoring {
 public:
  virtual ~AdditiveColoring() = default;
  virtual std::size_t arity() const = 0;
  virtual Color color(std::span<const unsigned> v) const = 0;
  /// Largest coordinate value the coloring is defined on, if bounded.
  virtual std::optional<unsigned> bound() const { return std::nullopt; }
  /// True when additivity is known (by construction or by a passed check).
  virtual bool known_additive() const = 0;
};

/// chi(v) = v_1 a_1 + ... + v_k a_k.
class AssociatedColoring final : public AdditiveColoring {
 public:
  AssociatedColoring(std::shared_ptr<const Semigroup> g, std::vector<Element> generators);
  std::size_t arity() const override { return gens_.size(); }
  Color color(std::span<const unsigned> v) const override;
  bool known_additive() const override { return true; }

  const Semigroup& semigroup() const { return *g_; }
  const std::vector<Element>& generators() const { return gens_; }

 private:
  std::shared_ptr<const Semigroup> g_;
  std::vector<Element> gens_;
};

struct ShiftWitness {
  Point a, c, b;
};

/// A total map on [0, bound]^k, row-major with the last coordinate fastest.
/// Shift-stability is checked once at construction.
class ExplicitColoring final : public AdditiveColoring {
 public:
  ExplicitColoring(std::size_t k, unsigned bound, std::vector<Color> table);
  std::size_t arity() const override { return k_; }
  Color color(std::span<const unsigned> v) const override;
  std::optional<unsigned> bound() const override { return bound_; }
  bool known_additive() const override { return !witness_; }
  const std::optional<ShiftWitness>& shift_witness() const { return witness_; }

 private:
  std::size_t k_;
  unsigned bound_;
  std::vector<Color> table_;
  std::optional<ShiftWitness> witness_;
};

/// Scans a, c, b in [0, n]^k (a before c in lex order) for
/// chi(a) = chi(c) but chi(a+b) != chi(c+b). Triples whose sums leave the
/// coloring's domain are skipped.
std::optional<ShiftWitness> check_shift_stability(const AdditiveColoring& chi, unsigned n);

/// Per-block coordinate sums.
std::vector<unsigned> block_norm(std::span<const unsigned> v, const BlockPartition& p);

/// All x with block_norm(x, p) = n, in increasing lex order.
std::vector<Point> slice_points(std::size_t k, const BlockPartition& p, std::span<const unsigned> n);

/// The lex-least point of each color on the slice, sorted.
std::vector<Point> substantial_points(const AdditiveColoring& chi, const BlockPartition& p,
                                      std::span<const unsigned> n);

struct SubstantialSetReport {
  unsigned box = 0;
  std::vector<Point> substantial;  // inside [0, box]^k
  Antichain minimal_non_substantial;
  bool complete = false;
};

/// Classifies [0, box]^k and checks that non-substantial points are upward
/// closed there (VerificationError otherwise).
SubstantialSetReport substantial_upper_ideal(const AdditiveColoring& chi, const BlockPartition& p, unsigned box);

struct GrowthOptions {
  unsigned start_box = 2;
  unsigned step = 2;
  unsigned max_box = 12;
  std::size_t cap = kDefaultOrthantCap;
  /// Verification grid: every coordinate in [0, verify_max].
  unsigned verify_max = 8;
};

enum class PipelineStatus { kOk, kInconclusive };

struct GrowthStage {
  unsigned box;
  Antichain antichain;
  bool complete;
};

struct SumsetGrowthReport {
  PipelineStatus status = PipelineStatus::kInconclusive;
  std::vector<GrowthStage> stages;
  std::optional<SEPDescription> sep;
  FitReport verification;
};

struct CharacterSumReport {
  PipelineStatus status = PipelineStatus::kInconclusive;
  std::vector<GrowthStage> stages;
  std::optional<ExpPolyDescription> exp_poly;
  FitReport verification;
};

/// The associated coloring of A_1, ..., A_l listed one after another (with
/// multiplicities) and the partition of its coordinates into the l lists.
struct SumsetColoring {
  std::shared_ptr<AssociatedColoring> coloring;
  BlockPartition partition;
};
SumsetColoring sumset_coloring(const std::vector<std::vector<Element>>& sets, std::shared_ptr<const Semigroup> g);

/// |n_1*A_1 + ... + n_l*A_l| as a strongly eventually polynomial function,
/// checked against direct enumeration. Throws VerificationError on mismatch.
SumsetGrowthReport sumset_growth_sep(const std::vector<std::vector<Element>>& sets,
                                     std::shared_ptr<const Semigroup> g, const GrowthOptions& options = {});

/// sum of psi over n_1*A_1 + ... + n_l*A_l as an exponential polynomial.
CharacterSumReport character_sumset_exp_poly(const std::vector<std::vector<Element>>& sets,
                                             std::shared_ptr<const Semigroup> g, const Character& psi,
                                             const GrowthOptions& options = {});

}  // namespace evpoly
