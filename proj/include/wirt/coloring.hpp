#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wirt/diagram.hpp"
#include "wirt/errors.hpp"

namespace wirt {

// Partial coloring (A, f): color 0 means uncolored, seeds carry 1..k and are
// never recolored. stage == |colored| - k.
struct ColoringState {
    std::vector<int> color;
    int seed_count = 0;
    int stage = 0;
    size_t diagram_ref = 0;

    bool is_colored(int s) const { return color[static_cast<size_t>(s)] != 0; }
    int color_of(int s) const { return color[static_cast<size_t>(s)]; }
    int colored_count() const {
        return static_cast<int>(color.size() - std::count(color.begin(), color.end(), 0));
    }
};

// Records the order strands were colored: seeds first in seed order, then one
// entry per move. The height function is h(order[j]) = -(j+1).
struct ColoringSequence {
    std::vector<int> order;
    int seed_count = 0;
    std::vector<int> final_colors; // by strand id; 0 = never colored

    bool contains(int s) const {
        return std::find(order.begin(), order.end(), s) != order.end();
    }
};

struct ColoringResult {
    bool complete = false;
    ColoringState state;
    ColoringSequence sequence;
};

struct ColoringMove {
    int crossing = 0;
    int strand = 0;
    int color = 0;
};

namespace detail {

inline void check_state(const Diagram& d, const ColoringState& st) {
    if (st.diagram_ref != d.signature() || st.color.size() != static_cast<size_t>(d.num_strands()))
        throw Error("coloring state is bound to a different diagram");
}

} // namespace detail

inline ColoringState seed_coloring(const Diagram& d, std::span<const int> seeds) {
    ColoringState st;
    st.color.assign(static_cast<size_t>(d.num_strands()), 0);
    st.diagram_ref = d.signature();
    for (int s : seeds) {
        if (s < 0 || s >= d.num_strands())
            throw UnknownStrand(std::to_string(s));
        if (st.color[static_cast<size_t>(s)] != 0)
            throw DuplicateSeed(d.name_of(s));
        st.color[static_cast<size_t>(s)] = ++st.seed_count;
    }
    if (st.seed_count == 0)
        throw Error("seed set is empty");
    return st;
}

// Returns the next coloring move, scanning colored strands by (color, id) and
// each strand's over-crossings in ascending order. A move needs the crossing's
// overstrand colored and exactly one of its understrands colored; the uncolored
// understrand receives the colored one's color. Self-adjacent understrand
// pairs never admit a move, so such strands can only be seeded.
inline std::optional<ColoringMove> find_coloring_move(const Diagram& d, const ColoringState& st) {
    detail::check_state(d, st);
    std::vector<int> colored;
    colored.reserve(st.color.size());
    for (int s = 0; s < d.num_strands(); ++s)
        if (st.is_colored(s))
            colored.push_back(s);
    std::sort(colored.begin(), colored.end(),
              [&](int a, int b) { return std::pair(st.color_of(a), a) < std::pair(st.color_of(b), b); });
    for (int s : colored) {
        for (int cid : d.over_crossings(s)) {
            const auto [p, q] = d.crossing(cid).under;
            const bool cp = st.is_colored(p), cq = st.is_colored(q);
            if (cp && !cq)
                return ColoringMove{cid, q, st.color_of(p)};
            if (cq && !cp)
                return ColoringMove{cid, p, st.color_of(q)};
        }
    }
    return std::nullopt;
}

inline ColoringResult extend_to_fixpoint(const Diagram& d, std::span<const int> seeds) {
    ColoringResult res;
    res.state = seed_coloring(d, seeds);
    res.sequence.seed_count = res.state.seed_count;
    res.sequence.order.assign(seeds.begin(), seeds.end());
    while (auto move = find_coloring_move(d, res.state)) {
        res.state.color[static_cast<size_t>(move->strand)] = move->color;
        res.state.stage++;
        res.sequence.order.push_back(move->strand);
    }
    res.sequence.final_colors = res.state.color;
    res.complete = res.state.colored_count() == d.num_strands();
    return res;
}

inline int height(const ColoringSequence& seq, int strand_id) {
    auto it = std::find(seq.order.begin(), seq.order.end(), strand_id);
    if (it == seq.order.end())
        throw UncoloredStrand(std::to_string(strand_id));
    return -static_cast<int>(it - seq.order.begin()) - 1;
}

// --- collapsed single-color closure, the hot path of the search ---

struct ClosureBits {
    std::vector<uint64_t> words;
    int count = 0;

    explicit ClosureBits(int n) : words(static_cast<size_t>((n + 63) / 64), 0) {}
    bool test(int i) const { return (words[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1u; }
    void set(int i) {
        uint64_t& w = words[static_cast<size_t>(i >> 6)];
        uint64_t bit = uint64_t(1) << (i & 63);
        if (!(w & bit)) {
            w |= bit;
            ++count;
        }
    }
};

// Colored-set closure under the coloring move, ignoring colors (composing f
// with a constant function extends the same set of strands).
inline ClosureBits closure_bits(const Diagram& d, std::span<const int> seeds) {
    ClosureBits bits(d.num_strands());
    for (int s : seeds) {
        if (s < 0 || s >= d.num_strands())
            throw UnknownStrand(std::to_string(s));
        bits.set(s);
    }
    const int n = d.num_strands();
    bool changed = true;
    while (changed && bits.count < n) {
        changed = false;
        for (const Crossing& x : d.crossings()) {
            if (!bits.test(x.over))
                continue;
            const bool cp = bits.test(x.under.first), cq = bits.test(x.under.second);
            if (cp != cq) {
                bits.set(cp ? x.under.second : x.under.first);
                changed = true;
            }
        }
    }
    return bits;
}

inline bool is_generating_system(const Diagram& d, std::span<const int> seeds) {
    std::vector<int> uniq(seeds.begin(), seeds.end());
    std::sort(uniq.begin(), uniq.end());
    if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end())
        throw DuplicateSeed("seed set has repeats");
    if (uniq.empty())
        throw Error("seed set is empty");
    return closure_bits(d, uniq).count == d.num_strands();
}

} // namespace wirt
