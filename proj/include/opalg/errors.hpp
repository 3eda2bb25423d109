#pragma once

#include <stdexcept>
#include <string>

namespace opalg {

struct SourceSpan {
    int line = 0;
    int column = 0;
    bool valid() const { return line >= 1 && column >= 1; }
};

// Script text could not be parsed; span points inside the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, const std::string& what_arg)
        : std::runtime_error(what_arg), span_(span) {}
    SourceSpan span() const { return span_; }

private:
    SourceSpan span_;
};

// A commutator could not be resolved where full closure was demanded
// (or an operation received an opaque commutator it cannot handle).
class UnresolvedCommutator : public std::runtime_error {
public:
    explicit UnresolvedCommutator(const std::string& pair_text)
        : std::runtime_error("unresolved commutator " + pair_text), pair_(pair_text) {}
    const std::string& pair_text() const { return pair_; }

private:
    std::string pair_;
};

// Grid violates the momentum-origin exclusion (H^-1 and 1/p^2 are singular at p=0).
class GridOriginError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Test function has no usable mass on the interior points.
class DegenerateTestFunction : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace opalg
