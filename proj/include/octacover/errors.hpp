#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octacover {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid file could not be read or does not have the documented shape.
struct ParseError : Error {
    using Error::Error;
};

struct NonMonotoneAxis : Error {
    NonMonotoneAxis(char axis_, std::size_t index_);
    char axis;
    std::size_t index;
};

struct GOutOfRange : Error {
    GOutOfRange(std::size_t k_, std::size_t l_, double value_);
    std::size_t k, l;
    double value;
};

struct BoundaryNotCollinear : Error {
    BoundaryNotCollinear(std::string edge_, double deviation_, double tolerance_);
    std::string edge;
    double deviation;
    double tolerance;
};

struct TooFewMaps : Error {
    TooFewMaps(std::size_t n_, std::size_t m_);
    explicit TooFewMaps(std::size_t count_);  // selection over < 2 values
    std::size_t n, m;
};

struct ContractionNotStrict : Error {
    explicit ContractionNotStrict(double constant_);
    double constant;
};

struct SystemTooLarge : Error {
    SystemTooLarge(std::size_t requested_, std::size_t cap_);
    std::size_t requested, cap;
};

}  // namespace octacover
