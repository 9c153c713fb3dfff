#pragma once

#include <stdexcept>
#include <string>

namespace panconnect
{
    /// Caller violated a documented precondition (bad parameters, mismatched ground sets, ...).
    /// The CLI maps this to exit code 2.
    class UsageError : public std::invalid_argument
    {
    public:
        explicit UsageError(const std::string & what) : std::invalid_argument(what) {}
    };

    /// A condition that must never hold if the library is correct, e.g. an explicit
    /// isomorphism failing certification.
    class InternalError : public std::logic_error
    {
    public:
        explicit InternalError(const std::string & what) : std::logic_error(what) {}
    };
}
