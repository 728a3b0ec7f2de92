#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wirt/errors.hpp"
#include "wirt/gauss_code.hpp"

namespace wirt {

// A maximal arc of the diagram between consecutive underpasses. A component
// that never goes under yields a single closed-curve strand.
struct Strand {
    int id = 0;
    int component = 0;
    int position = 0;             // index in the component's cyclic strand order
    std::vector<int> visits;      // signed subsequence, begins/ends with an under-visit
    std::vector<int> over_at;     // crossing ids where this strand is the overstrand
    bool closed_curve = false;
};

// `under` holds the two understrands in traversal order (strand ending at the
// underpass, strand beginning there). The pair collapses to one strand exactly
// in cut-split diagrams; `over` may coincide with an understrand (a kink).
struct Crossing {
    int id = 0;
    int over = 0;
    std::pair<int, int> under{0, 0};
};

namespace detail {

inline std::string letters_name(int index) {
    std::string name;
    ++index; // bijective base 26: a..z, aa, ab, ...
    while (index > 0) {
        --index;
        name.insert(name.begin(), static_cast<char>('a' + index % 26));
        index /= 26;
    }
    return name;
}

} // namespace detail

class Diagram {
public:
    Diagram() = default;

    static Diagram build(const GaussCode& code) {
        Diagram d;
        d.code_ = code;
        const int c = code.crossings;
        d.crossings_.resize(c);
        for (int i = 0; i < c; ++i)
            d.crossings_[i].id = i + 1;
        d.component_strands_.resize(code.components.size());

        std::vector<int> over_strand_of(c + 1, -1);
        for (size_t comp = 0; comp < code.components.size(); ++comp) {
            const auto& seq = code.components[comp];
            std::vector<size_t> negs;
            for (size_t i = 0; i < seq.size(); ++i)
                if (seq[i] < 0)
                    negs.push_back(i);

            if (negs.empty()) {
                Strand s;
                s.id = static_cast<int>(d.strands_.size());
                s.component = static_cast<int>(comp);
                s.position = 0;
                s.visits = seq;
                s.closed_curve = true;
                for (int v : seq) {
                    s.over_at.push_back(v);
                    over_strand_of[v] = s.id;
                }
                d.component_strands_[comp].push_back(s.id);
                d.strands_.push_back(std::move(s));
                continue;
            }

            // One strand per underpass: strand j runs from the j-th negative
            // entry to the next one, wrapping, inclusive of both endpoints.
            const int m = static_cast<int>(negs.size());
            const int base = static_cast<int>(d.strands_.size());
            const size_t len = seq.size();
            for (int j = 0; j < m; ++j) {
                Strand s;
                s.id = base + j;
                s.component = static_cast<int>(comp);
                s.position = j;
                size_t from = negs[j];
                size_t to = negs[(j + 1) % m];
                size_t span = (to + len - from) % len;
                if (span == 0)
                    span = len; // single underpass: wrap the whole component
                for (size_t step = 0; step <= span; ++step) {
                    int v = seq[(from + step) % len];
                    s.visits.push_back(v);
                    if (v > 0 && step > 0 && step < span) {
                        s.over_at.push_back(v);
                        over_strand_of[v] = s.id;
                    }
                }
                d.component_strands_[comp].push_back(s.id);
                d.strands_.push_back(std::move(s));
            }
            for (int j = 0; j < m; ++j) {
                // The underpass at the start of strand j joins strand j-1 to j.
                int label = -seq[negs[j]];
                Crossing& x = d.crossings_[label - 1];
                x.under = {base + (j + m - 1) % m, base + j};
            }
        }
        for (int i = 0; i < c; ++i)
            d.crossings_[i].over = over_strand_of[i + 1];

        d.assign_names();
        d.signature_ = std::hash<std::string>{}(emit_gauss(code));
        return d;
    }

    bool empty() const { return strands_.empty(); }
    int num_strands() const { return static_cast<int>(strands_.size()); }
    int num_crossings() const { return static_cast<int>(crossings_.size()); }
    int num_components() const { return static_cast<int>(component_strands_.size()); }
    size_t signature() const { return signature_; }

    const GaussCode& code() const { return code_; }
    const std::vector<Strand>& strands() const { return strands_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Strand& strand(int id) const { return strands_.at(static_cast<size_t>(id)); }
    const Crossing& crossing(int id) const { return crossings_.at(static_cast<size_t>(id - 1)); }
    const std::vector<int>& component_strands(int comp) const {
        return component_strands_.at(static_cast<size_t>(comp));
    }

    // The knot dictionary entry for a strand: crossings where it is over.
    const std::vector<int>& over_crossings(int strand_id) const {
        return strand(strand_id).over_at;
    }

    // Crossing id at the boundary between a strand and the next strand of its
    // component, in traversal order. Empty for closed-curve strands.
    std::optional<int> underpass_after(int strand_id) const {
        const Strand& s = strand(strand_id);
        if (s.closed_curve)
            return std::nullopt;
        return -s.visits.back();
    }

    const std::string& name_of(int strand_id) const {
        return names_.at(static_cast<size_t>(strand_id));
    }

    int strand_by_name(const std::string& name) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return static_cast<int>(i);
        throw UnknownStrand(name);
    }

private:
    void assign_names() {
        names_.resize(strands_.size());
        int cut = 0, closed = 0;
        for (const Strand& s : strands_)
            names_[static_cast<size_t>(s.id)] =
                s.closed_curve ? "u" + std::to_string(closed++) : detail::letters_name(cut++);
    }

    GaussCode code_;
    std::vector<Strand> strands_;
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> component_strands_;
    std::vector<std::string> names_;
    size_t signature_ = 0;
};

inline Diagram build_diagram(const GaussCode& code) { return Diagram::build(code); }

// Human-readable dictionary listing, one entry per line, deterministic order.
inline std::string emit_diagram(const Diagram& d) {
    std::string out;
    for (const Strand& s : d.strands()) {
        out += d.name_of(s.id);
        out += " -> {";
        for (size_t k = 0; k < s.over_at.size(); ++k) {
            if (k)
                out += ", ";
            const Crossing& x = d.crossing(s.over_at[k]);
            int p = x.under.first, q = x.under.second;
            if (d.name_of(q) < d.name_of(p))
                std::swap(p, q);
            out += "(" + d.name_of(p) + "," + d.name_of(q) + ")";
        }
        out += "}";
        if (s.closed_curve)
            out += " (closed curve)";
        out += "\n";
    }
    return out;
}

} // namespace wirt
