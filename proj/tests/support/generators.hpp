#pragma once

#include <evpoly/orthants.hpp>
#include <evpoly/partition.hpp>
#include <evpoly/rational_gf.hpp>

#include <functional>
#include <random>
#include <vector>

namespace gen {

using evpoly::BlockPartition;
using evpoly::GFTerm;
using evpoly::RationalGF;
using evpoly::Scalar;

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline evpoly::Rational small_rational(std::mt19937& rng) {
  int num = uniform(rng, -5, 5);
  if (num == 0) num = 1;
  return evpoly::make_rational(num, uniform(rng, 1, 3));
}

// Random series with up to `max_terms` terms in k variables. With order > 1
// the twists are random powers of zeta_order.
inline RationalGF random_gf(std::mt19937& rng, std::size_t k, int max_terms, unsigned order = 1,
                            unsigned max_b = 3, unsigned max_e = 2) {
  std::vector<GFTerm> terms;
  int count = uniform(rng, 1, max_terms);
  for (int t = 0; t < count; ++t) {
    GFTerm term;
    term.gamma = Scalar(small_rational(rng));
    for (std::size_t i = 0; i < k; ++i) {
      term.b.push_back(static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_b))));
      term.e.push_back(static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_e))));
      term.alpha.push_back(order == 1 ? Scalar(1)
                                      : Scalar::root_of_unity(order, uniform(rng, 0, static_cast<int>(order) - 1)));
    }
    terms.push_back(std::move(term));
  }
  return RationalGF(k, std::move(terms));
}

// Every set partition of {0..k-1}, via restricted growth strings.
inline std::vector<BlockPartition> all_partitions(std::size_t k) {
  std::vector<BlockPartition> out;
  std::vector<std::size_t> a(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == k) {
      BlockPartition p(blocks);
      for (std::size_t j = 0; j < k; ++j) p[a[j]].push_back(j);
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      a[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (k > 0) rec(0, 0);
  return out;
}

// Up to max_orthants orthants with base in [0, max_s]^k and random frozen sets.
inline evpoly::SimpleSet random_simple_set(std::mt19937& rng, std::size_t k, int max_orthants, unsigned max_s = 4) {
  std::vector<evpoly::GeneralizedOrthant> os;
  int count = uniform(rng, 0, max_orthants);
  for (int t = 0; t < count; ++t) {
    evpoly::Point s(k);
    std::vector<bool> frozen(k);
    for (std::size_t i = 0; i < k; ++i) {
      s[i] = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_s)));
      frozen[i] = uniform(rng, 0, 2) == 0;
    }
    os.emplace_back(std::move(s), std::move(frozen));
  }
  return evpoly::SimpleSet(k, std::move(os));
}

}  // namespace gen
