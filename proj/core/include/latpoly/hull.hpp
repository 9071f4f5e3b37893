#pragma once

#include "latpoly/linalg.hpp"
#include "latpoly/point.hpp"
#include "latpoly/types.hpp"

#include <vector>

namespace latpoly {

// facet inequality normal.x <= offset; normal is primitive and outward, so
// equal hulls produce bit-equal facet lists
struct Facet {
    std::vector<Int> normal;
    Int offset;
    std::vector<int> vertex_indices; // indices into HullStructure::vertices, ascending

    friend bool operator<(const Facet& a, const Facet& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

// affine-hull equality normal.x == offset, satisfied by every hull point
struct SpanEquality {
    std::vector<Int> normal;
    Int offset;
};

// lattice-preserving chart of the affine hull: ambient p = origin + basis*u,
// local u = cobasis^T (p - origin); basis columns span the saturated lattice
// of span directions, so lattice points of the flat correspond exactly to
// integer local coordinates
struct AffineChart {
    LatticePoint origin;
    Matrix basis;   // d x affine_dim
    Matrix cobasis; // d x affine_dim, basis^T cobasis = I
};

struct HullStructure {
    int d = 0;
    int affine_dim = 0;
    std::vector<LatticePoint> generators; // deduplicated input, sorted
    std::vector<LatticePoint> vertices;   // sorted lexicographically
    std::vector<Facet> facets;            // sorted by (normal, offset)
    std::vector<SpanEquality> equalities; // empty iff full-dimensional
    AffineChart chart;                    // only meaningful when affine_dim < d

    bool full_dimensional() const { return affine_dim == d; }
    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

enum class Containment { closed, open };

// exact convex hull; degenerate (lower-dimensional) input is legal and is
// hulled inside its affine span
HullStructure convex_hull(const std::vector<LatticePoint>& points);

// rank of the difference set; 0 for a single point
int affine_dimension(const std::vector<LatticePoint>& points);

// closed: all facet inequalities hold weakly (and span equalities exactly);
// open: topological interior, always false on non-full-dimensional hulls
bool contains(const HullStructure& hull, const RationalPoint& p, Containment mode);
bool contains(const HullStructure& hull, const LatticePoint& p, Containment mode);

// local-coordinate views used by enumeration and location; identity when the
// hull is full-dimensional
std::vector<LatticePoint> local_vertices(const HullStructure& hull);
std::vector<Facet> local_facets(const HullStructure& hull);
LatticePoint to_ambient(const HullStructure& hull, const LatticePoint& local);

} // namespace latpoly
