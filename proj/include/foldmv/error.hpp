#pragma once

#include <stdexcept>
#include <string>

namespace foldmv {

// Invalid input or an unsatisfiable request (bad Cartan label, non-reduced
// word, non-dominant lambda, ...).  The CLI maps this to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or word-graph walk grew past the configured cap.
// Carries how far it got so callers can report a lower bound.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, long long reached)
        : Error(what), reached(reached) {}
    long long reached;
};

// A consistency condition that the theory guarantees failed to hold.
// Always a bug, never a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace foldmv
