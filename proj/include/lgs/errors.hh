#ifndef LGS_ERRORS_HH
#define LGS_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgs
{
    struct Error : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    // malformed concrete syntax; position is a byte offset into the input
    struct SyntaxError : Error
    {
        std::size_t position;

        SyntaxError(const std::string & message, std::size_t pos) :
            Error(message + " (at position " + std::to_string(pos) + ")"),
            position(pos)
        {
        }
    };

    // a well-formed file whose contents break the schema
    struct SchemaError : Error
    {
        using Error::Error;
    };

    // an operation invoked outside its stated contract
    struct PreconditionError : Error
    {
        using Error::Error;
    };

    // instance too large for an exhaustive procedure
    struct CapExceededError : Error
    {
        using Error::Error;
    };

    // a constructed value breaks its own type invariants
    struct InvariantError : Error
    {
        using Error::Error;
    };
}

#endif
