#pragma once

#include <stdexcept>
#include <string>

namespace twocoh {

/// Base class for all library errors, so callers can catch the whole family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mixing scalars/matrices over different fields, or requesting an operation
/// that the field cannot support (e.g. enumerating an infinite field).
struct FieldError : Error {
    using Error::Error;
};

/// Malformed textual input (scalars, documents).
struct ParseError : Error {
    using Error::Error;
};

/// Matrix/vector dimensions do not fit the requested operation.
struct ShapeError : Error {
    using Error::Error;
};

/// An element / face / codec index outside its valid range.
struct IndexError : Error {
    using Error::Error;
};

/// A degree parameter outside the implemented truncation range.
struct DegreeError : Error {
    using Error::Error;
};

/// A map parameter (face number, polynomial degree, ...) outside its range.
struct RangeError : Error {
    using Error::Error;
};

/// Horizontal composition of arrows whose source/target do not match.
struct ComposabilityError : Error {
    using Error::Error;
};

/// quotient_dim detected an "image" vector outside the "kernel" span:
/// the two spaces do not form a subquotient (a broken complex upstream).
struct ContainmentError : Error {
    using Error::Error;
};

/// A requested identity/map instance lies beyond what is implemented.
struct UnsupportedError : Error {
    using Error::Error;
};

/// A degree-2 cochain that was required to be a cocycle is not one.
struct NotACocycleError : Error {
    using Error::Error;
};

/// An extension tuple violating one of its defining conditions.
struct TupleInvalidError : Error {
    using Error::Error;
};

}  // namespace twocoh
