#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "wirt/coloring.hpp"
#include "wirt/diagram.hpp"
#include "wirt/errors.hpp"

namespace wirt {

// Volume of the regular hyperbolic ideal 3-simplex, 3·Λ(π/3) with Λ the
// Lobachevsky function. Derived by numerical quadrature (scripts/v3_oracle.py
// and the quadrature oracle in the test suite reproduce it to 1e-12).
inline constexpr double kIdealSimplexVolume = 1.0149416064096536;

// Maximal chain of crossings joined by stacked bigons; a lone crossing in no
// bigon forms a chain of length one.
struct TwistRegion {
    std::vector<int> crossings;
};

struct VolumeBound {
    double v3 = kIdealSimplexVolume;
    double c_const = kIdealSimplexVolume / 6.0;
    int beta_upper = 1;
    double lower_bound = 0.0; // c_const * beta_upper
    double floor_bound = 0.0; // max(v3/2 * (beta/2 - 2), 2*v3)
};

namespace detail {

struct CrossingUnionFind {
    std::vector<int> parent;

    explicit CrossingUnionFind(int n) : parent(static_cast<size_t>(n + 1)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Consecutive crossing-visit pairs along each component, cyclically.
inline std::map<std::pair<int, int>, int> edge_counts(const Diagram& d) {
    std::map<std::pair<int, int>, int> counts;
    for (const auto& comp : d.code().components) {
        const size_t len = comp.size();
        for (size_t t = 0; t < len; ++t) {
            int a = std::abs(comp[t]), b = std::abs(comp[(t + 1) % len]);
            if (a != b)
                counts[std::minmax(a, b)]++;
        }
    }
    return counts;
}

// Orders a region's crossings along the bigon chain when it is a path;
// wrap-around chains fall back to ascending ids.
inline std::vector<int> chain_order(const std::vector<int>& members,
                                    const std::map<std::pair<int, int>, int>& edges) {
    if (members.size() <= 2) {
        std::vector<int> out = members;
        std::sort(out.begin(), out.end());
        return out;
    }
    std::map<int, std::vector<int>> adj;
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            auto it = edges.find(std::minmax(members[i], members[j]));
            if (it != edges.end() && it->second >= 2) {
                adj[members[i]].push_back(members[j]);
                adj[members[j]].push_back(members[i]);
            }
        }
    std::vector<int> ends;
    for (int m : members)
        if (adj[m].size() == 1)
            ends.push_back(m);
    if (ends.size() != 2) {
        std::vector<int> out = members;
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<int> out{std::min(ends[0], ends[1])};
    int prev = -1;
    while (out.size() < members.size()) {
        int cur = out.back(), next = -1;
        for (int nb : adj[cur])
            if (nb != prev) {
                next = nb;
                break;
            }
        if (next < 0)
            break;
        prev = cur;
        out.push_back(next);
    }
    if (out.size() != members.size()) {
        out = members;
        std::sort(out.begin(), out.end());
    }
    return out;
}

} // namespace detail

// Partitions the crossings into twist regions: crossings joined by a doubled
// edge of the projection (a bigon) are chained together.
inline std::vector<TwistRegion> twist_regions(const Diagram& d) {
    if (d.num_crossings() == 0)
        throw NoCrossings();
    const auto edges = detail::edge_counts(d);
    detail::CrossingUnionFind uf(d.num_crossings());
    for (const auto& [pair, count] : edges)
        if (count >= 2)
            uf.unite(pair.first, pair.second);
    std::map<int, std::vector<int>> groups;
    for (int x = 1; x <= d.num_crossings(); ++x)
        groups[uf.find(x)].push_back(x);
    std::vector<TwistRegion> regions;
    regions.reserve(groups.size());
    for (const auto& [root, members] : groups)
        regions.push_back({detail::chain_order(members, edges)});
    return regions;
}

// Seed strands realizing the 2t bound: every strand that is not properly
// contained in a twist region (it carries an edge that is not a bigon side).
// A region with no such incident edge is a closed chain; seeding its least
// crossing's overstrand and one understrand lets the coloring run around it.
inline std::vector<int> twist_seeding(const Diagram& d, const std::vector<TwistRegion>& regions) {
    if (d.num_crossings() == 0 || regions.empty())
        throw NoCrossings();
    const auto edges = detail::edge_counts(d);
    std::vector<int> region_of(static_cast<size_t>(d.num_crossings() + 1), 0);
    for (size_t r = 0; r < regions.size(); ++r)
        for (int x : regions[r].crossings)
            region_of[static_cast<size_t>(x)] = static_cast<int>(r);
    std::vector<char> seed(static_cast<size_t>(d.num_strands()), 0);
    std::vector<char> region_has_boundary(regions.size(), 0);

    for (size_t comp = 0; comp < d.code().components.size(); ++comp) {
        const auto& seq = d.code().components[comp];
        const size_t len = seq.size();
        if (len == 0)
            continue;
        // Owner strand of each edge (t, t+1) along the component.
        std::vector<int> owner(len, d.component_strands(static_cast<int>(comp)).front());
        std::vector<size_t> negs;
        for (size_t t = 0; t < len; ++t)
            if (seq[t] < 0)
                negs.push_back(t);
        if (negs.size() > 1) {
            const auto& strands = d.component_strands(static_cast<int>(comp));
            for (size_t j = 0; j < negs.size(); ++j) {
                size_t t = negs[j];
                const size_t stop = negs[(j + 1) % negs.size()];
                do {
                    owner[t] = strands[j];
                    t = (t + 1) % len;
                } while (t != stop);
            }
        }
        for (size_t t = 0; t < len; ++t) {
            const int a = std::abs(seq[t]), b = std::abs(seq[(t + 1) % len]);
            bool internal = false;
            if (a != b) {
                auto it = edges.find(std::minmax(a, b));
                internal = it != edges.end() && it->second >= 2;
            }
            if (!internal) {
                seed[static_cast<size_t>(owner[t])] = 1;
                region_has_boundary[static_cast<size_t>(region_of[static_cast<size_t>(a)])] = 1;
                region_has_boundary[static_cast<size_t>(region_of[static_cast<size_t>(b)])] = 1;
            }
        }
    }
    for (size_t r = 0; r < regions.size(); ++r) {
        if (region_has_boundary[r])
            continue;
        const int least = *std::min_element(regions[r].crossings.begin(), regions[r].crossings.end());
        const Crossing& x = d.crossing(least);
        seed[static_cast<size_t>(x.over)] = 1;
        seed[static_cast<size_t>(x.under.first)] = 1;
    }
    // Components untouched by the above (crossing-free curves) still need a seed.
    std::vector<char> comp_seeded(static_cast<size_t>(d.num_components()), 0);
    for (int s = 0; s < d.num_strands(); ++s)
        if (seed[static_cast<size_t>(s)])
            comp_seeded[static_cast<size_t>(d.strand(s).component)] = 1;
    for (int comp = 0; comp < d.num_components(); ++comp)
        if (!comp_seeded[static_cast<size_t>(comp)])
            seed[static_cast<size_t>(d.component_strands(comp).front())] = 1;

    std::vector<int> out;
    for (int s = 0; s < d.num_strands(); ++s)
        if (seed[static_cast<size_t>(s)])
            out.push_back(s);
    return out;
}

inline int bridge_bound_from_twists(const Diagram& d) {
    return 2 * static_cast<int>(twist_regions(d).size());
}

// C·β with C = v3/6, plus the max(v3/2·(β/2-2), 2·v3) floor the constant
// was chosen to stay under.
inline VolumeBound volume_lower_bound(int beta_upper) {
    VolumeBound vb;
    vb.beta_upper = beta_upper;
    vb.lower_bound = vb.c_const * beta_upper;
    vb.floor_bound = std::max(0.5 * vb.v3 * (0.5 * beta_upper - 2.0), 2.0 * vb.v3);
    return vb;
}

} // namespace wirt
