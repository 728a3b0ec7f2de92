#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wirt/coloring.hpp"
#include "wirt/diagram.hpp"
#include "wirt/errors.hpp"

namespace wirt {

struct PropertyReport {
    bool connectivity_ok = true;
    bool unique_max_ok = true;
    bool overstrand_height_ok = true;
    std::vector<std::pair<int, int>> link_exception_crossings; // (color, crossing id)
    std::vector<std::string> violations;

    bool all_ok() const { return connectivity_ok && unique_max_ok && overstrand_height_ok; }
};

struct CriticalPoint {
    enum class Kind { Max, Min };
    Kind kind = Kind::Max;
    int value = 0;
    bool at_strand = true; // otherwise the site is a crossing id
    int site = 0;
};

// Combinatorial height profile of the lifted link: a cyclic alternating list
// of critical points per component.
struct MorseProfile {
    std::vector<std::vector<CriticalPoint>> per_component;
};

struct CutSplitReduction {
    int removed_strand = 0;
    Diagram reduced;
};

namespace detail {

inline std::vector<std::vector<int>> under_adjacency(const Diagram& d) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(d.num_strands()));
    for (const Crossing& x : d.crossings()) {
        if (x.under.first != x.under.second) {
            adj[static_cast<size_t>(x.under.first)].push_back(x.under.second);
            adj[static_cast<size_t>(x.under.second)].push_back(x.under.first);
        }
    }
    return adj;
}

inline std::vector<int> height_by_strand(const Diagram& d, const ColoringSequence& seq) {
    std::vector<int> h(static_cast<size_t>(d.num_strands()), 0);
    for (size_t j = 0; j < seq.order.size(); ++j)
        h[static_cast<size_t>(seq.order[j])] = -static_cast<int>(j) - 1;
    return h;
}

// Replays the sequence and reports the first stage at which some color class
// is not connected under under-adjacency.
inline std::optional<std::string> connectivity_violation(const Diagram& d,
                                                         const ColoringResult& res) {
    const auto adj = under_adjacency(d);
    const auto& seq = res.sequence;
    const int k = seq.seed_count;
    std::vector<char> in_stage(static_cast<size_t>(d.num_strands()), 0);
    std::vector<std::vector<int>> classes(static_cast<size_t>(k + 1));
    for (size_t j = 0; j < seq.order.size(); ++j) {
        int s = seq.order[j];
        in_stage[static_cast<size_t>(s)] = 1;
        classes[static_cast<size_t>(seq.final_colors[static_cast<size_t>(s)])].push_back(s);
        if (j + 1 < static_cast<size_t>(k))
            continue; // seeds enter together at stage 0
        int stage = static_cast<int>(j) + 1 - k;
        for (int color = 1; color <= k; ++color) {
            const auto& members = classes[static_cast<size_t>(color)];
            if (members.size() < 2)
                continue;
            std::vector<char> seen(static_cast<size_t>(d.num_strands()), 0);
            std::vector<int> queue{members.front()};
            seen[static_cast<size_t>(members.front())] = 1;
            size_t reached = 1;
            while (!queue.empty()) {
                int u = queue.back();
                queue.pop_back();
                for (int v : adj[static_cast<size_t>(u)]) {
                    if (seen[static_cast<size_t>(v)] || !in_stage[static_cast<size_t>(v)])
                        continue;
                    if (seq.final_colors[static_cast<size_t>(v)] != color)
                        continue;
                    seen[static_cast<size_t>(v)] = 1;
                    ++reached;
                    queue.push_back(v);
                }
            }
            if (reached != members.size())
                return "color " + std::to_string(color) + " disconnected at stage " +
                       std::to_string(stage);
        }
    }
    return std::nullopt;
}

// Orders a color class along its component cycle. Returns the class as a list
// of strand ids in adjacency order plus whether it wraps the whole component.
struct OrderedClass {
    std::vector<int> strands;
    bool whole_component = false;
};

inline OrderedClass order_class(const Diagram& d, const std::vector<int>& members, int color) {
    OrderedClass oc;
    const int comp = d.strand(members.front()).component;
    for (int s : members)
        if (d.strand(s).component != comp)
            throw NonLinearColorClass("color " + std::to_string(color) + " spans components");
    const auto& cycle = d.component_strands(comp);
    const int m = static_cast<int>(cycle.size());
    std::vector<char> in_class(static_cast<size_t>(m), 0);
    for (int s : members)
        in_class[static_cast<size_t>(d.strand(s).position)] = 1;
    if (members.size() == static_cast<size_t>(m)) {
        oc.strands = cycle;
        oc.whole_component = true;
        return oc;
    }
    int starts = 0, start = -1;
    for (int p = 0; p < m; ++p) {
        if (in_class[static_cast<size_t>(p)] && !in_class[static_cast<size_t>((p + m - 1) % m)]) {
            ++starts;
            start = p;
        }
    }
    if (starts != 1)
        throw NonLinearColorClass("color " + std::to_string(color) + " is not a single arc");
    for (int step = 0; step < static_cast<int>(members.size()); ++step) {
        int p = (start + step) % m;
        if (!in_class[static_cast<size_t>(p)])
            throw NonLinearColorClass("color " + std::to_string(color) + " is not a single arc");
        oc.strands.push_back(cycle[static_cast<size_t>(p)]);
    }
    return oc;
}

inline std::optional<std::string> unique_max_violation(const Diagram& d,
                                                       const ColoringResult& res) {
    const auto h = height_by_strand(d, res.sequence);
    const int k = res.sequence.seed_count;
    std::vector<std::vector<int>> classes(static_cast<size_t>(k + 1));
    for (int s = 0; s < d.num_strands(); ++s)
        classes[static_cast<size_t>(res.sequence.final_colors[static_cast<size_t>(s)])].push_back(s);
    for (int color = 1; color <= k; ++color) {
        const auto& members = classes[static_cast<size_t>(color)];
        auto oc = order_class(d, members, color);
        const int m = static_cast<int>(oc.strands.size());
        int maxima = 0, argmax = -1;
        for (int i = 0; i < m; ++i) {
            const int hi = h[static_cast<size_t>(oc.strands[static_cast<size_t>(i)])];
            bool is_max = true;
            if (oc.whole_component && m > 1) {
                is_max = hi > h[static_cast<size_t>(oc.strands[static_cast<size_t>((i + 1) % m)])] &&
                         hi > h[static_cast<size_t>(oc.strands[static_cast<size_t>((i + m - 1) % m)])];
            } else {
                if (i > 0)
                    is_max = is_max && hi > h[static_cast<size_t>(oc.strands[static_cast<size_t>(i - 1)])];
                if (i + 1 < m)
                    is_max = is_max && hi > h[static_cast<size_t>(oc.strands[static_cast<size_t>(i + 1)])];
            }
            if (is_max) {
                ++maxima;
                argmax = oc.strands[static_cast<size_t>(i)];
            }
        }
        if (maxima != 1)
            return "color " + std::to_string(color) + " has " + std::to_string(maxima) +
                   " local maxima";
        const int seed = res.sequence.order[static_cast<size_t>(color - 1)];
        if (argmax != seed)
            return "color " + std::to_string(color) + " local max at " + d.name_of(argmax) +
                   " instead of seed " + d.name_of(seed);
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<int> detect_cut_split(const Diagram& d) {
    std::vector<char> self_adjacent(static_cast<size_t>(d.num_strands()), 0);
    for (const Crossing& x : d.crossings())
        if (x.under.first == x.under.second)
            self_adjacent[static_cast<size_t>(x.under.first)] = 1;
    for (const Strand& s : d.strands())
        if (s.closed_curve || self_adjacent[static_cast<size_t>(s.id)])
            return s.id;
    return std::nullopt;
}

inline bool check_connectivity(const Diagram& d, const ColoringResult& res) {
    if (!res.complete)
        throw IncompleteColoring();
    return !detail::connectivity_violation(d, res).has_value();
}

// True iff every color class, ordered along its component (cyclically when it
// covers the whole component), has exactly one local height maximum and that
// maximum is the class's seed strand.
inline bool check_unique_local_max(const Diagram& d, const ColoringResult& res) {
    if (!res.complete)
        throw IncompleteColoring();
    return !detail::unique_max_violation(d, res).has_value();
}

// Full property report for a non-cut-split diagram. A crossing whose same-
// colored understrands sit above its overstrand is tolerated only when the
// color class is a whole link component and the crossing is the unique such
// crossing on that component; those are recorded, not failed.
inline PropertyReport check_overstrand_height(const Diagram& d, const ColoringResult& res) {
    if (!res.complete)
        throw IncompleteColoring();
    if (detect_cut_split(d))
        throw CutSplitInput();
    PropertyReport report;
    if (auto v = detail::connectivity_violation(d, res)) {
        report.connectivity_ok = false;
        report.violations.push_back(*v);
    }
    if (auto v = detail::unique_max_violation(d, res)) {
        report.unique_max_ok = false;
        report.violations.push_back(*v);
    }

    const auto h = detail::height_by_strand(d, res.sequence);
    const auto& colors = res.sequence.final_colors;
    std::map<std::pair<int, int>, std::vector<int>> candidates; // (component, color) -> crossings
    for (const Crossing& x : d.crossings()) {
        const int p = x.under.first, q = x.under.second;
        if (colors[static_cast<size_t>(p)] != colors[static_cast<size_t>(q)])
            continue;
        if (h[static_cast<size_t>(x.over)] >
            std::min(h[static_cast<size_t>(p)], h[static_cast<size_t>(q)]))
            continue;
        candidates[{d.strand(p).component, colors[static_cast<size_t>(p)]}].push_back(x.id);
    }
    for (const auto& [key, xs] : candidates) {
        const auto [comp, color] = key;
        int members = 0;
        for (int s = 0; s < d.num_strands(); ++s)
            if (colors[static_cast<size_t>(s)] == color)
                ++members;
        // The tolerated case: the class is exactly one whole component and
        // this is its only such crossing.
        const auto& comp_strands = d.component_strands(comp);
        const bool whole =
            members == static_cast<int>(comp_strands.size()) &&
            std::all_of(comp_strands.begin(), comp_strands.end(),
                        [&](int s) { return colors[static_cast<size_t>(s)] == color; });
        if (whole && xs.size() == 1) {
            report.link_exception_crossings.emplace_back(color, xs.front());
        } else {
            report.overstrand_height_ok = false;
            for (int xid : xs)
                report.violations.push_back("overstrand below understrands at crossing " +
                                            std::to_string(xid));
        }
    }
    return report;
}

// Property checks as a total function: on cut-split diagrams the overstrand
// condition is out of scope and reported as unchecked.
struct PropertySummary {
    bool cut_split = false;
    bool overstrand_checked = false;
    PropertyReport report;

    bool passed() const {
        return report.connectivity_ok && report.unique_max_ok &&
               (!overstrand_checked || report.overstrand_height_ok);
    }
};

inline PropertySummary run_property_checks(const Diagram& d, const ColoringResult& res) {
    PropertySummary summary;
    summary.cut_split = detect_cut_split(d).has_value();
    if (!summary.cut_split) {
        summary.report = check_overstrand_height(d, res);
        summary.overstrand_checked = true;
        return summary;
    }
    if (auto v = detail::connectivity_violation(d, res)) {
        summary.report.connectivity_ok = false;
        summary.report.violations.push_back(*v);
    }
    if (auto v = detail::unique_max_violation(d, res)) {
        summary.report.unique_max_ok = false;
        summary.report.violations.push_back(*v);
    }
    return summary;
}

// Walks each component in cyclic strand order and emits the critical points
// of the lifted embedding: a maximum on each strand that tops its color class,
// a minimum at each crossing where the walk changes color or where a
// monochromatic component dips under its own overstrand.
inline MorseProfile reconstruct_morse_profile(const Diagram& d, const ColoringResult& res) {
    if (!res.complete)
        throw IncompleteColoring();
    const PropertySummary summary = run_property_checks(d, res);
    if (!summary.passed()) {
        throw PropertyViolation(summary.report.violations.empty()
                                    ? "checks failed"
                                    : summary.report.violations.front());
    }

    const auto h = detail::height_by_strand(d, res.sequence);
    const auto& colors = res.sequence.final_colors;
    const int k = res.sequence.seed_count;

    // Unique height maximum per class (unique-max check passed above).
    std::vector<int> class_max(static_cast<size_t>(k + 1), -1);
    for (int s = 0; s < d.num_strands(); ++s) {
        int c = colors[static_cast<size_t>(s)];
        if (class_max[static_cast<size_t>(c)] < 0 ||
            h[static_cast<size_t>(s)] > h[static_cast<size_t>(class_max[static_cast<size_t>(c)])])
            class_max[static_cast<size_t>(c)] = s;
    }

    const int min_value = -d.num_crossings() - 1;
    MorseProfile profile;
    for (int comp = 0; comp < d.num_components(); ++comp) {
        const auto& cycle = d.component_strands(comp);
        const int m = static_cast<int>(cycle.size());
        std::vector<std::pair<int, CriticalPoint>> points; // walk key -> point
        int lowest = cycle.front();
        for (int i = 0; i < m; ++i) {
            const int s = cycle[static_cast<size_t>(i)];
            if (h[static_cast<size_t>(s)] < h[static_cast<size_t>(lowest)])
                lowest = s;
            if (class_max[static_cast<size_t>(colors[static_cast<size_t>(s)])] == s)
                points.push_back({2 * i, {CriticalPoint::Kind::Max, h[static_cast<size_t>(s)], true, s}});
            const auto boundary = d.underpass_after(s);
            if (!boundary)
                continue; // crossing-free closed curve
            const int next = cycle[static_cast<size_t>((i + 1) % m)];
            const Crossing& x = d.crossing(*boundary);
            bool min_here = false;
            if (colors[static_cast<size_t>(s)] != colors[static_cast<size_t>(next)]) {
                min_here = true; // color change: the underpass dips to the floor
            } else if (m == 1 || h[static_cast<size_t>(x.over)] <=
                                     std::min(h[static_cast<size_t>(s)], h[static_cast<size_t>(next)])) {
                min_here = true; // self-underpass or recorded exception crossing
            }
            if (min_here)
                points.push_back({2 * i + 1, {CriticalPoint::Kind::Min, min_value, false, x.id}});
        }
        int maxima = 0, minima = 0;
        for (const auto& [key, pt] : points)
            (pt.kind == CriticalPoint::Kind::Max ? maxima : minima)++;
        if (maxima == minima + 1) {
            // Monochromatic component whose underpasses all stay below their
            // overstrands: the minimum sits on the lowest strand itself.
            points.push_back({2 * d.strand(lowest).position,
                              {CriticalPoint::Kind::Min, h[static_cast<size_t>(lowest)], true, lowest}});
            ++minima;
        }
        if (maxima != minima)
            throw PropertyViolation("component " + std::to_string(comp) +
                                    " profile does not alternate");
        std::stable_sort(points.begin(), points.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<CriticalPoint> list;
        list.reserve(points.size());
        for (auto& [key, pt] : points)
            list.push_back(pt);
        profile.per_component.push_back(std::move(list));
    }
    return profile;
}

inline int count_local_maxima(const MorseProfile& profile) {
    int total = 0;
    for (const auto& comp : profile.per_component)
        for (const CriticalPoint& pt : comp)
            if (pt.kind == CriticalPoint::Kind::Max)
                ++total;
    return total;
}

// Removes the splitting strand's component; crossings it participated in
// disappear and the surviving understrand arcs re-fuse in traversal order.
inline CutSplitReduction reduce_cut_split(const Diagram& d) {
    const auto split = detect_cut_split(d);
    if (!split)
        throw NotCutSplit();
    CutSplitReduction out;
    out.removed_strand = *split;
    const int comp = d.strand(*split).component;
    std::vector<char> removed_label(static_cast<size_t>(d.num_crossings() + 1), 0);
    for (int v : d.code().components[static_cast<size_t>(comp)])
        removed_label[static_cast<size_t>(std::abs(v))] = 1;
    std::vector<std::vector<int>> comps;
    for (size_t c = 0; c < d.code().components.size(); ++c) {
        if (static_cast<int>(c) == comp)
            continue;
        std::vector<int> seq;
        for (int v : d.code().components[c])
            if (!removed_label[static_cast<size_t>(std::abs(v))])
                seq.push_back(v);
        comps.push_back(std::move(seq));
    }
    if (!comps.empty())
        out.reduced = Diagram::build(GaussCode::from_components(std::move(comps)));
    return out;
}

} // namespace wirt
