#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

// Library-wide error with a machine-readable kind. The CLI maps kinds to
// exit codes; tests match on kind rather than message text.
class Error : public std::runtime_error {
public:
    enum class Kind {
        EmptySpec,           // no generators and no threshold
        NonCoprime,          // gcd(generators) > 1 without a threshold
        ZeroGenerator,       // a generator equal to zero
        BaseNotInSemigroup,  // Apery base s with s not a nonzero element
        TrivialSemigroup,    // operation undefined for the full monoid N
        BadParams,           // invalid numeric parameters
        SpecInvalid,         // malformed sweep specification
        Parse,               // malformed textual input
        Io,                  // file read/write failure
    };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace nsg
