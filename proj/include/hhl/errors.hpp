/* This file is part of hhl.
 * SPDX-License-Identifier: Apache-2.0 */
#ifndef HHL_ERRORS_HPP
#define HHL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hhl {

// Error categories; kept in sync with the hhl_status codes of the C API.
enum class errc {
    ok = 0,
    invalid_argument = 1,
    domain = 2,
    no_bound_level = 3,   // light-particle level merged with the continuum
    no_reference = 4,     // mass ratio not in the reference s0 table
    insufficient_levels = 5,
    constraint_violation = 6,
    io = 7,
    internal = 8,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace hhl

#endif
