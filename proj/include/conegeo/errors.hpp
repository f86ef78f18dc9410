#pragma once

#include <stdexcept>
#include <string>

namespace conegeo {

// Base class for all geometric failures raised by this library.
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Requested triangle does not exist (triangle inequality violated,
// degenerate angle data, divergent rays, ...).
class NoSuchTriangle : public GeometryError {
public:
    explicit NoSuchTriangle(const std::string& what) : GeometryError(what) {}
};

// The apex of a cone is not strictly enclosed by the given points.
class ApexOutside : public GeometryError {
public:
    explicit ApexOutside(const std::string& what) : GeometryError(what) {}
};

// Combinatorial or metric defect in a PL surface description.
class MeshError : public GeometryError {
public:
    explicit MeshError(const std::string& what) : GeometryError(what) {}
};

// A geodesic left the parameter domain of a chart.
class DomainExit : public GeometryError {
public:
    DomainExit(const std::string& what, double x, double y)
        : GeometryError(what), exit_x(x), exit_y(y) {}
    double exit_x;
    double exit_y;
};

// An iterative solve failed to converge.
class NoConvergence : public GeometryError {
public:
    explicit NoConvergence(const std::string& what) : GeometryError(what) {}
};

// The interior rays of a triangle decomposition failed to intersect the
// way the construction needs. A recorded outcome, not a bug.
class DecompositionFailed : public GeometryError {
public:
    explicit DecompositionFailed(const std::string& what) : GeometryError(what) {}
};

} // namespace conegeo
