#pragma once

#include <stdexcept>
#include <string>

namespace uenv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A NaN or infinite coordinate reached a module boundary.
class NonFiniteInput : public Error {
public:
    using Error::Error;
};

class NonFiniteQuery : public Error {
public:
    using Error::Error;
};

/// Sampling range with from > to, or a non-positive step.
class InvalidRange : public Error {
public:
    using Error::Error;
};

/// Radius <= 0, zero direction, or non-finite frame parameters.
class InvalidFrame : public Error {
public:
    using Error::Error;
};

/// Segment tables that break the envelope invariants (e.g. a corrupted document).
class InvalidEnvelope : public Error {
public:
    using Error::Error;
};

/// The transition scan observed more than one change of ownership.
class MultipleSwitches : public Error {
public:
    using Error::Error;
};

}  // namespace uenv
