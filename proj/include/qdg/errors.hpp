#ifndef QDG_ERRORS_HPP
#define QDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdg {

// Malformed textual input (edge lists, graph6 lines, labeling files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid input whose sizes do not fit together (N != m*n etc).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qdg

#endif // QDG_ERRORS_HPP
