#pragma once

#include <stdexcept>
#include <string>

namespace ltdkit {

// Bad call: out-of-range vertex, malformed input, parameter outside the
// documented range. CLI maps these to exit code 2.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but outside the operation's domain (graph has twins,
// isolated vertex, wrong class, ...). CLI maps these to exit code 1.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A proof-claimed impossibility fired at runtime. Always a bug in this
// library, never an input error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Always-on check for claims the theorems guarantee. Not assert(): these must
// survive NDEBUG builds, a violation is a high-value test signal.
#define LTDKIT_CHECK(cond, msg)                                                  \
    do {                                                                         \
        if (!(cond)) throw ::ltdkit::internal_error(std::string("check failed: ") + (msg)); \
    } while (0)

}  // namespace ltdkit
