#include "bosewalk/fock.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>

#include "bosewalk/errors.hpp"

namespace bosewalk {

std::string occupation_label(const FockState& s) {
    std::string out;
    for (size_t k = 0; k < s.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(s[k]);
    }
    return out;
}

size_t FockBasis::StateHash::operator()(const FockState& s) const {
    // FNV-1a over the occupation bytes
    size_t h = 14695981039346656037ull;
    for (int n : s) {
        for (int b = 0; b < 4; ++b) {
            h ^= (static_cast<unsigned>(n) >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    return h;
}

long long FockBasis::dimension(int sites, int bosons) {
    if (sites < 1 || bosons < 0) return 0;
    // C(bosons + sites - 1, sites - 1) with saturation
    long long result = 1;
    const int k = sites - 1;
    for (int step = 1; step <= k; ++step) {
        const long long num = bosons + step;
        __int128 wide = static_cast<__int128>(result) * num;
        wide /= step;  // exact: result already holds C(bosons + step - 1, step - 1) scaled
        if (wide > LLONG_MAX) return LLONG_MAX;
        result = static_cast<long long>(wide);
    }
    return result;
}

FockBasis::FockBasis(int sites, int bosons, long long cap)
    : sites_(sites), bosons_(bosons) {
    if (sites < 1)
        throw ValidationError("basis needs at least one site, got " + std::to_string(sites));
    if (bosons < 0)
        throw ValidationError("boson count cannot be negative, got " + std::to_string(bosons));
    const long long dim = dimension(sites, bosons);
    if (dim > cap)
        throw ValidationError("basis of " + std::to_string(sites) + " sites and " +
                              std::to_string(bosons) + " bosons has " + std::to_string(dim) +
                              " states, above the cap of " + std::to_string(cap));
    states_.reserve(static_cast<size_t>(dim));
    FockState current(sites, 0);
    // descending lexicographic fill: the first site takes as much as possible
    auto fill = [&](auto&& self, int site, int remaining) -> void {
        if (site == sites - 1) {
            current[site] = remaining;
            states_.push_back(current);
            return;
        }
        for (int n = remaining; n >= 0; --n) {
            current[site] = n;
            self(self, site + 1, remaining - n);
        }
    };
    fill(fill, 0, bosons);
    index_.reserve(states_.size() * 2);
    for (size_t k = 0; k < states_.size(); ++k)
        index_.emplace(states_[k], static_cast<int>(k));
}

int FockBasis::index_of(const FockState& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        throw ValidationError("state " + occupation_label(s) + " is not in the basis of " +
                              std::to_string(sites_) + " sites and " +
                              std::to_string(bosons_) + " bosons");
    return it->second;
}

WeightedGraph dual_graph(const WeightedGraph& g, int n_bosons, long long cap) {
    if (n_bosons < 1)
        throw ValidationError("dual needs at least one boson, got " +
                              std::to_string(n_bosons));
    FockBasis basis(g.vertex_count(), n_bosons, cap);

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(basis.size()));
    for (const auto& s : basis.states()) labels.push_back(occupation_label(s));

    FockState moved;
    for (long long si = 0; si < basis.size(); ++si) {
        const FockState& s = basis.states()[static_cast<size_t>(si)];
        for (const auto& e : g.edges()) {
            if (s[e.i] < 1) continue;
            moved = s;
            moved[e.i] -= 1;
            moved[e.j] += 1;
            // hop along the stored low-to-high direction lowers the state in
            // descending lex order, so the target index is always larger
            const int ti = basis.index_of(moved);
            const double factor = std::sqrt(double(s[e.i]) * double(s[e.j] + 1));
            edges.push_back({static_cast<int>(si), ti, e.w * factor});
        }
    }
    return WeightedGraph(static_cast<int>(basis.size()), std::move(edges), std::move(labels));
}

WeightedGraph multi_spin_dual(const WeightedGraph& g,
                              const std::vector<int>& sector_counts,
                              long long cap) {
    if (sector_counts.empty())
        throw ValidationError("spin composition is empty");
    __int128 total = 1;
    bool any = false;
    for (int n : sector_counts) {
        if (n < 0)
            throw ValidationError("sector count cannot be negative, got " + std::to_string(n));
        if (n == 0) continue;
        any = true;
        total *= FockBasis::dimension(g.vertex_count(), n);
        if (total > cap) break;
    }
    if (!any)
        throw ValidationError("spin composition has no bosons in any sector");
    if (total > cap)
        throw ValidationError("composite basis has " +
                              (total > LLONG_MAX ? std::string("over ") + std::to_string(LLONG_MAX)
                                                 : std::to_string(static_cast<long long>(total))) +
                              " states, above the cap of " + std::to_string(cap));

    WeightedGraph result;
    bool first = true;
    for (int n : sector_counts) {
        if (n == 0) continue;
        WeightedGraph sector = dual_graph(g, n, cap);
        result = first ? std::move(sector) : cartesian_product(result, sector);
        first = false;
    }
    return result;
}

std::vector<SectorPattern> spin_sector_decomposition(int bosons, int spins) {
    if (bosons < 1)
        throw ValidationError("boson count must be positive, got " + std::to_string(bosons));
    if (spins < 1)
        throw ValidationError("spin count must be positive, got " + std::to_string(spins));

    std::vector<SectorPattern> out;
    std::vector<int> parts;
    auto emit = [&]() {
        // falling factorial of the spin count over the part count, divided
        // by the permutations of equal part sizes
        long long mult = 1;
        for (size_t k = 0; k < parts.size(); ++k) mult *= spins - static_cast<long long>(k);
        long long run = 1;
        for (size_t k = 1; k <= parts.size(); ++k) {
            if (k < parts.size() && parts[k] == parts[k - 1]) {
                ++run;
                continue;
            }
            for (long long r = 2; r <= run; ++r) mult /= r;
            run = 1;
        }
        out.push_back({parts, mult});
    };
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            if (!parts.empty()) emit();
            return;
        }
        if (static_cast<int>(parts.size()) == spins) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    recurse(recurse, bosons, bosons);
    return out;
}

FockState partner_state(const FockState& s, const std::vector<int>& perm) {
    if (perm.size() != s.size())
        throw ValidationError("permutation has " + std::to_string(perm.size()) +
                              " entries for " + std::to_string(s.size()) + " sites");
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw ValidationError("site map is not a permutation of 0.." +
                                  std::to_string(n - 1));
        seen[p] = true;
    }
    FockState out(s.size(), 0);
    for (int i = 0; i < n; ++i) out[perm[i]] = s[i];
    return out;
}

}  // namespace bosewalk
