#pragma once

#include "hfkit/mewo.hpp"
#include "hfkit/ordinal.hpp"
#include "hfkit/pointed_graph.hpp"
#include "hfkit/universe.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

/// Brute-force decision procedures and structure generators. Nothing here
/// calls the code-based or segment-matching paths it is used to check.
namespace hfkit::oracle {

inline constexpr std::size_t max_enum_size = 6;

/// Every map alpha -> beta satisfying monotonicity and the initial segment
/// property, found by trying all |beta|^|alpha| maps. Throws LimitError
/// above max_enum_size.
std::vector<std::vector<std::size_t>> enum_simulations(const FinOrd& alpha, const FinOrd& beta);

/// As above for mewos, with marking preservation as the extra clause.
std::vector<std::vector<std::size_t>> enum_simulations(const Mewo& x, const Mewo& y);

/// All pairs (b, e) where e is an order isomorphism from alpha onto the
/// elements below b.
std::vector<std::pair<std::size_t, std::vector<std::size_t>>> enum_bounded_sims(const FinOrd& alpha,
                                                                                 const FinOrd& beta);

/// All pairs (y0, e) with y0 marked and e an isomorphism of marked orders
/// from x onto the segment transitively below y0 (marked there iff an
/// immediate predecessor of y0).
std::vector<std::pair<std::size_t, std::vector<std::size_t>>> enum_bounded_sims(const Mewo& x, const Mewo& y);

/// All bijections preserving and reflecting order and marking.
std::vector<std::vector<std::size_t>> enum_isomorphisms(const Mewo& x, const Mewo& y);

/// Permutation search for an isomorphism.
bool isomorphic(const Mewo& x, const Mewo& y);

/// Every set of rank below `level` (counts 0, 1, 2, 4, 16, 65536).
/// Throws LimitError above level 5.
std::vector<SetHandle> enumerate_v(std::size_t level, SetUniverse& u);

/// All mewos on {0..size-1} up to isomorphism. Throws LimitError above 4.
std::vector<Mewo> enumerate_mewos(std::size_t size);

/// enumerate_mewos(0) ... enumerate_mewos(max_size).
std::vector<Mewo> enumerate_mewos_up_to(std::size_t max_size);

/// Every ordinal on the labelled carrier {0..size-1}, one per linear order
/// (size! of them). Throws LimitError above 8.
std::vector<FinOrd> enumerate_ordinals(std::size_t size);

/// Every acyclic graph on {0..size-1} with edges only from higher to lower
/// indices; up to relabelling this is every acyclic graph.
std::vector<std::vector<std::vector<std::size_t>>> enumerate_dags(std::size_t size);

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t max_width = 4;
    std::size_t max_depth = 4;
    std::size_t count = 100;
};

/// Seeded generator with a portable bounded draw.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish draw in [0, bound); bound must be positive.
    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
    bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// Random hereditarily finite sets of rank at most cfg.max_depth with at
/// most cfg.max_width members per node (before duplicates collapse).
class RandomSets {
public:
    RandomSets(const GenConfig& cfg, SetUniverse& u) : cfg_(cfg), u_(u), rng_(cfg.seed) {}
    SetHandle next();

private:
    SetHandle draw(std::size_t depth);

    GenConfig cfg_;
    SetUniverse& u_;
    Rng rng_;
};

std::vector<SetHandle> gen_random_sets(const GenConfig& cfg, SetUniverse& u);

/// Random mewos of size at most cfg.max_width: a random acyclic relation,
/// repaired for extensionality by merging vertices with equal predecessor
/// sets until none remain, then a random marking and random labels.
class RandomMewos {
public:
    RandomMewos(const GenConfig& cfg, bool covered_only) : cfg_(cfg), covered_only_(covered_only), rng_(cfg.seed) {}
    Mewo next();

private:
    Mewo draw();

    GenConfig cfg_;
    bool covered_only_;
    Rng rng_;
};

std::vector<Mewo> gen_random_mewos(const GenConfig& cfg, bool covered_only = false);

/// A random acyclic pointed graph with 1..max_vertices vertices, randomly
/// labelled.
PointedGraph random_graph(Rng& rng, std::size_t max_vertices);

/// A bisimilar copy of `g` with extra duplicate vertices, repeated edges
/// and shuffled labels.
PointedGraph redundant_copy(Rng& rng, const PointedGraph& g);

/// Random numeral n <= max_depth and a list of its members in which every
/// member occurs and duplicates pad the list up to max_width (or n, if
/// larger), shuffled.
std::pair<SetHandle, std::vector<SetHandle>> random_presentation(Rng& rng, SetUniverse& u, std::size_t max_width,
                                                                 std::size_t max_depth);

/// Large acyclic graph where vertex i has up to max_out successors below i,
/// so every prefix {0..k-1} is closed under successors.
std::vector<std::vector<std::size_t>> random_layered_dag(Rng& rng, std::size_t vertices, std::size_t max_out);

} // namespace hfkit::oracle
