#ifndef LAPMATCH_ERRORS_HPP
#define LAPMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lapmatch {

/// Thrown when an operation's stated precondition is violated by the input.
/// Drivers treat these as "skip this input, record the reason" rather than bugs.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed external input (graph6 line, edge list). `offset` is the byte
/// offset of the first offending byte within the parsed text.
struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset_) + ")"),
          offset(offset_) {}
};

/// Iterative eigensolver hit its sweep cap before reaching the target
/// off-diagonal norm. Never silently ignored.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lapmatch

#endif
