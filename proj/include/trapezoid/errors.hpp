#pragma once

#include <stdexcept>
#include <string>

namespace trapezoid {

// Root of every error the library throws. Each subclass maps to one
// failure class of the CLI exit-code table.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed numeral text.
class SyntaxError : public Error {
public:
    using Error::Error;
};

// An argument outside the operation's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Reduced denominator has a prime factor other than 2, 3, 5.
class NonTerminating : public Error {
public:
    using Error::Error;
};

// Terminating expansion, but longer than the caller allowed.
class PlacesExceeded : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

class IrrationalRoots : public Error {
public:
    using Error::Error;
};

}  // namespace trapezoid
