#pragma once

#include <stdexcept>
#include <string>

namespace derand {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContractViolation : public Error {
public:
    using Error::Error;
};

class ProfileMismatch : public Error {
public:
    ProfileMismatch() : Error("polynomial systems have different degree profiles") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// The Jacobian restricted to z^perp is numerically singular.
class SingularJacobian : public Error {
public:
    SingularJacobian() : Error("restricted Jacobian is singular") {}
};

class AntipodalEndpoints : public Error {
public:
    AntipodalEndpoints() : Error("geodesic endpoints are antipodal") {}
};

class DegenerateKernel : public Error {
public:
    DegenerateKernel() : Error("matrix kernel is not one-dimensional") {}
};

class NotARoot : public Error {
public:
    NotARoot() : Error("starting point is not a root of the start system") {}
};

/// All fractional parts vanished: the input carries no more noise at this precision.
class EntropyExhausted : public Error {
public:
    EntropyExhausted() : Error("input noise exhausted at this precision") {}
};

}  // namespace derand
