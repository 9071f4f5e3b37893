#pragma once

#include "latpoly/hull.hpp"
#include "latpoly/point.hpp"

#include <optional>
#include <vector>

namespace latpoly {

enum class LocationStatus { vertex, boundary_nonvertex, interior, outside };

// where a point sits relative to a hull; the minimal face is the
// intersection of all facets tight at the point, reported by its vertex set.
// Interior is only reported for full-dimensional hulls; points in the
// relative interior of a degenerate hull are boundary points of R^d.
struct PointLocation {
    LocationStatus status = LocationStatus::outside;
    std::vector<int> minimal_face; // indices into hull.vertices, ascending; empty when outside
    int face_dim = -1;             // -1 when outside
};

// exactly the lattice points of the hull (within its affine span when
// degenerate), sorted lexicographically
std::vector<LatticePoint> enumerate_lattice_points(const HullStructure& hull);

PointLocation locate(const HullStructure& hull, const LatticePoint& p);

struct ParityWitness {
    LatticePoint x, y, midpoint; // x < y lexicographically, midpoint = (x+y)/2
};

// first pair (in lexicographic pair order over the sorted input) agreeing
// with each other mod 2 in every coordinate; guaranteed to exist when
// |points| > 2^d
std::optional<ParityWitness> parity_witness(const std::vector<LatticePoint>& points);

} // namespace latpoly
