#pragma once
// Bosonic occupation bases and the walk duality: N bosons hopping on a
// primary graph become a single walker on the graph whose vertices are the
// Fock states. Moving one boson from site i to site j multiplies the primary
// amplitude by sqrt(n_i (n_j + 1)).

#include <string>
#include <unordered_map>
#include <vector>

#include "bosewalk/graph.hpp"

namespace bosewalk {

using FockState = std::vector<int>;

inline constexpr long long kDefaultBasisCap = 200000;

// "2,0,1" style occupation string.
std::string occupation_label(const FockState& s);

class FockBasis {
public:
    // Every occupation vector over `sites` summing to `bosons`, ordered
    // descending lexicographically: all bosons on site 0 first, all on the
    // last site last. Sizes beyond `cap` are rejected up front.
    FockBasis(int sites, int bosons, long long cap = kDefaultBasisCap);

    int sites() const { return sites_; }
    int bosons() const { return bosons_; }
    long long size() const { return static_cast<long long>(states_.size()); }
    const std::vector<FockState>& states() const { return states_; }

    // Ordinal of a state; rejects vectors of the wrong length or total.
    int index_of(const FockState& s) const;

    // (bosons + sites - 1) choose (sites - 1), saturating instead of
    // overflowing.
    static long long dimension(int sites, int bosons);

private:
    struct StateHash {
        size_t operator()(const FockState& s) const;
    };
    int sites_ = 0;
    int bosons_ = 0;
    std::vector<FockState> states_;
    std::unordered_map<FockState, int, StateHash> index_;
};

// Fock-space dual of an n_bosons walk on g. Vertices are the FockBasis
// states of g.vertex_count() sites (labels are occupation strings); each
// primary edge (i, j, w) induces, for every state with n_i >= 1, an edge of
// weight w * sqrt(n_i (n_j + 1)) to the state with one boson moved i -> j.
// For a two-vertex primary with unit weight the result is build_g_line.
WeightedGraph dual_graph(const WeightedGraph& g, int n_bosons,
                         long long cap = kDefaultBasisCap);

// Fixed spin composition: the Cartesian product over sectors of
// dual_graph(g, n_sigma), skipping empty sectors. All sectors empty is an
// error. With sector_counts (1,1,...,1) on a two-vertex primary this is the
// unit hypercube.
WeightedGraph multi_spin_dual(const WeightedGraph& g,
                              const std::vector<int>& sector_counts,
                              long long cap = kDefaultBasisCap);

struct SectorPattern {
    std::vector<int> parts;      // weakly decreasing positive counts, sum = bosons
    long long multiplicity = 0;  // ordered assignments of distinct spin labels
};

// All multisets of positive sector sizes summing to `bosons` with at most
// `spins` parts, listed in descending lexicographic order. The multiplicity
// counts ordered assignments of distinct spin labels to the parts: the
// falling factorial spins * (spins-1) * ... over the part count, divided by
// the permutations of equal-sized parts.
std::vector<SectorPattern> spin_sector_decomposition(int bosons, int spins);

// Occupations carried along a relabeling of the primary sites: the boson
// count at site i moves to site perm[i]. An involution permutation gives an
// involution on states.
FockState partner_state(const FockState& s, const std::vector<int>& perm);

}  // namespace bosewalk
