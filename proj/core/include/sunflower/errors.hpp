#pragma once

#include <stdexcept>
#include <string>

namespace sunflower {

/// A caller-supplied parameter or object violates an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search ran out of its node budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An invariant that must hold mathematically was observed to fail.
/// Raised loudly; the CLI maps it to its own exit code.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define SUNFLOWER_ENSURE(cond, msg)                                                    \
    do {                                                                               \
        if (!(cond)) {                                                                 \
            throw ::sunflower::InternalError(std::string(__FILE__) + ":" +             \
                                             std::to_string(__LINE__) + ": " + (msg)); \
        }                                                                              \
    } while (false)

}  // namespace sunflower
