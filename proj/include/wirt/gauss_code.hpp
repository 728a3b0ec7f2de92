#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wirt/errors.hpp"

namespace wirt {

// A validated Gauss code: one signed visit sequence per link component.
// Negative entries are under-visits, positive entries over-visits. Every
// crossing label appears exactly twice, once with each sign, and labels are
// normalized to {1..c} in the order their under-visits occur along the
// traversal (component order, then position). A component may be an empty
// sequence: a closed curve that is never cut by an underpass.
struct GaussCode {
    std::vector<std::vector<int>> components;
    int crossings = 0;

    bool operator==(const GaussCode&) const = default;

    // Validates and normalizes raw visit sequences.
    static GaussCode from_components(std::vector<std::vector<int>> comps) {
        if (comps.empty())
            throw EmptyInput();
        std::map<int, int> pos_count, neg_count;
        for (const auto& comp : comps) {
            for (int v : comp) {
                if (v == 0)
                    throw MalformedSyntax("crossing label 0 is not allowed");
                (v > 0 ? pos_count : neg_count)[std::abs(v)]++;
            }
        }
        for (const auto& [label, n] : pos_count) {
            if (n != 1 || neg_count[label] != 1)
                throw UnbalancedCrossing("label " + std::to_string(label));
        }
        for (const auto& [label, n] : neg_count) {
            if (n != 1 || pos_count[label] != 1)
                throw UnbalancedCrossing("label " + std::to_string(label));
        }

        // Relabel to 1..c in under-visit order, so structurally identical
        // inputs compare equal and crossing i is the i-th underpass.
        std::map<int, int> relabel;
        int next = 1;
        for (const auto& comp : comps)
            for (int v : comp)
                if (v < 0)
                    relabel[-v] = next++;
        GaussCode code;
        code.crossings = next - 1;
        code.components = std::move(comps);
        for (auto& comp : code.components)
            for (int& v : comp)
                v = v > 0 ? relabel[v] : -relabel[-v];
        return code;
    }
};

namespace detail {

inline void skip_ws(std::string_view text, size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
}

inline std::vector<int> parse_component(std::string_view text) {
    size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size() || text[i] != '[')
        throw MalformedSyntax("expected '[' at start of component");
    ++i;
    std::vector<int> visits;
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws(text, i);
            size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+'))
                ++i;
            size_t digits = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == digits)
                throw MalformedSyntax("expected signed integer in component");
            visits.push_back(std::atoi(std::string(text.substr(start, i - start)).c_str()));
            skip_ws(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw MalformedSyntax("expected ',' or ']' in component");
        }
    }
    skip_ws(text, i);
    if (i != text.size())
        throw MalformedSyntax("trailing characters after ']'");
    return visits;
}

} // namespace detail

// Parses the bracketed text form, e.g. "[-1,3,-2,1,-3,2]" with components
// joined by ';'. Whitespace is optional everywhere.
inline GaussCode parse_gauss(std::string_view text) {
    size_t i = 0;
    detail::skip_ws(text, i);
    size_t j = text.size();
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1])))
        --j;
    if (i >= j)
        throw EmptyInput();
    std::string_view body = text.substr(i, j - i);
    std::vector<std::vector<int>> comps;
    size_t start = 0;
    for (;;) {
        size_t sep = body.find(';', start);
        std::string_view piece =
            sep == std::string_view::npos ? body.substr(start) : body.substr(start, sep - start);
        comps.push_back(detail::parse_component(piece));
        if (sep == std::string_view::npos)
            break;
        start = sep + 1;
    }
    return GaussCode::from_components(std::move(comps));
}

// Canonical text form; parse(emit_gauss(g)) == g.
inline std::string emit_gauss(const GaussCode& code) {
    std::string out;
    for (size_t c = 0; c < code.components.size(); ++c) {
        if (c)
            out += ';';
        out += '[';
        for (size_t k = 0; k < code.components[c].size(); ++k) {
            if (k)
                out += ',';
            out += std::to_string(code.components[c][k]);
        }
        out += ']';
    }
    return out;
}

} // namespace wirt
