#pragma once

#include <stdexcept>
#include <string>

namespace wirt {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- codec ---
struct MalformedSyntax : Error {
    explicit MalformedSyntax(const std::string& msg) : Error("malformed gauss code: " + msg) {}
};
struct UnbalancedCrossing : Error {
    explicit UnbalancedCrossing(const std::string& msg) : Error("unbalanced crossing: " + msg) {}
};
struct EmptyInput : Error {
    EmptyInput() : Error("empty input: no components") {}
};

// --- coloring ---
struct UnknownStrand : Error {
    explicit UnknownStrand(const std::string& msg) : Error("unknown strand: " + msg) {}
};
struct DuplicateSeed : Error {
    explicit DuplicateSeed(const std::string& msg) : Error("duplicate seed: " + msg) {}
};
struct UncoloredStrand : Error {
    explicit UncoloredStrand(const std::string& msg) : Error("uncolored strand: " + msg) {}
};

// --- search ---
struct KOutOfRange : Error {
    explicit KOutOfRange(const std::string& msg) : Error("k out of range: " + msg) {}
};
struct NotApplicable : Error {
    explicit NotApplicable(const std::string& msg) : Error("not applicable: " + msg) {}
};

// --- verify ---
struct IncompleteColoring : Error {
    IncompleteColoring() : Error("coloring is not complete") {}
};
struct NonLinearColorClass : Error {
    explicit NonLinearColorClass(const std::string& msg)
        : Error("color class is neither a path nor a full component cycle: " + msg) {}
};
struct CutSplitInput : Error {
    CutSplitInput() : Error("diagram is cut-split") {}
};
struct PropertyViolation : Error {
    explicit PropertyViolation(const std::string& msg) : Error("property violation: " + msg) {}
};
struct NotCutSplit : Error {
    NotCutSplit() : Error("diagram is not cut-split") {}
};

// --- bounds ---
struct NoCrossings : Error {
    NoCrossings() : Error("diagram has no crossings") {}
};

// --- tabulate ---
struct UnreadableInput : Error {
    explicit UnreadableInput(const std::string& msg) : Error("unreadable input: " + msg) {}
};
struct MalformedHeader : Error {
    explicit MalformedHeader(const std::string& msg) : Error("malformed header: " + msg) {}
};

} // namespace wirt
