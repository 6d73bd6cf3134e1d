#pragma once

#include <stdexcept>
#include <string>

namespace syt {

// Base of every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input sequence is not weakly decreasing or has a negative entry.
class NotAPartition : public Error {
public:
    using Error::Error;
};

// Shape has more positive rows than the requested dimension r.
class HeightExceedsR : public Error {
public:
    using Error::Error;
};

// Point or exponent vector arity differs from the object's dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A vertex-function box cannot hold the staircase base point.
class BoxOverflow : public Error {
public:
    using Error::Error;
};

// Shape exceeds the enumeration cell cap.
class ShapeTooLarge : public Error {
public:
    using Error::Error;
};

// The triangular-lattice route only handles shapes of height <= 3.
class HeightExceedsThree : public Error {
public:
    using Error::Error;
};

// Rounded spectral count rejected: residual at or above the tolerance.
class ToleranceExceeded : public Error {
public:
    using Error::Error;
};

// Exact integer division failed; indicates a bug, never a valid state.
class InternalNonInteger : public Error {
public:
    using Error::Error;
};

// A configured sweep or precision cap was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

} // namespace syt
