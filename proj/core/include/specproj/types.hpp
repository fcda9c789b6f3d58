#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace specproj {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Error taxonomy shared by all modules. Everything derives from Error so
// callers can catch the whole family at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation exactly at a pole of the function.
struct PoleError : Error {
    using Error::Error;
};

// Lower hypergeometric parameter at a nonpositive integer.
struct ParameterPole : Error {
    using Error::Error;
};

struct ToleranceNotMet : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Geodesic inversion applied where its rational formula degenerates.
struct SingularPoint : Error {
    using Error::Error;
};

struct IllConditioned : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace specproj
