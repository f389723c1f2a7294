#pragma once

#include <stdexcept>
#include <string>

namespace elcx {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 4*alpha - beta^2 <= 0: the algebra is parabolic or hyperbolic.
class EllipticityViolation : public error {
public:
    using error::error;
};

class DivisionByZero : public error {
public:
    using error::error;
};

/// A kernel function was evaluated exactly at its pole.
class PoleEvaluation : public error {
public:
    using error::error;
};

/// The evaluation point of a representation formula is not strictly inside
/// the domain or curve.
class PoleOutsideDomain : public error {
public:
    using error::error;
};

class NotStarShaped : public error {
public:
    using error::error;
};

class NotHolomorphic : public error {
public:
    using error::error;
};

} // namespace elcx
