/*
 * errors.hpp
 *
 * Error types shared across the library. Index and rank violations use
 * std::out_of_range directly.
 */

#ifndef RLM_ERRORS_HPP
#define RLM_ERRORS_HPP

#include <stdexcept>

namespace rlm {

// malformed text or RLBWT input
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// structures that cannot be combined (mismatched alphabets, bad specs)
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an interleave-run stream inconsistent with its source structures
struct stream_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fast path disagrees with the brute-force reference
struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rlm

#endif // RLM_ERRORS_HPP
