#pragma once

#include <stdexcept>
#include <string>

namespace modlie {

/// Malformed input: bad literals, wrong dimensions, invalid algebra data.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured search or enumeration budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InputError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

}  // namespace modlie
