#include "octacover/errors.hpp"

#include <cstdio>

namespace octacover {
namespace {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

}  // namespace

NonMonotoneAxis::NonMonotoneAxis(char axis_, std::size_t index_)
    : Error(fmt("axis '%c' must be strictly increasing (violated at index %zu)",
                axis_, index_)),
      axis(axis_),
      index(index_) {}

GOutOfRange::GOutOfRange(std::size_t k_, std::size_t l_, double value_)
    : Error(fmt("vertical scaling g[%zu][%zu] = %.17g; magnitude must be below 1",
                k_, l_, value_)),
      k(k_),
      l(l_),
      value(value_) {}

BoundaryNotCollinear::BoundaryNotCollinear(std::string edge_, double deviation_,
                                           double tolerance_)
    : Error(fmt("boundary edge %s: nodes deviate from the end-to-end chord by "
                "%.17g (tolerance %.17g); boundary data must be collinear",
                edge_.c_str(), deviation_, tolerance_)),
      edge(std::move(edge_)),
      deviation(deviation_),
      tolerance(tolerance_) {}

TooFewMaps::TooFewMaps(std::size_t n_, std::size_t m_)
    : Error(fmt("grid yields %zu x %zu maps; need at least one subrectangle "
                "per axis (two nodes per axis)",
                n_, m_)),
      n(n_),
      m(m_) {}

TooFewMaps::TooFewMaps(std::size_t count_)
    : Error(fmt("need at least 2 values, got %zu", count_)),
      n(count_),
      m(0) {}

ContractionNotStrict::ContractionNotStrict(double constant_)
    : Error(fmt("map Lipschitz constant %.17g is not a strict contraction "
                "(must be below 1)",
                constant_)),
      constant(constant_) {}

SystemTooLarge::SystemTooLarge(std::size_t requested_, std::size_t cap_)
    : Error(fmt("composed system requires %zu maps, above the cap %zu",
                requested_, cap_)),
      requested(requested_),
      cap(cap_) {}

}  // namespace octacover
