#include "latpoly/hull.hpp"

#include "latpoly/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>

namespace latpoly {

namespace {

using Vec = std::vector<Int>;

struct BuiltFacet {
    Vec normal; // primitive, outward
    Int offset;
    std::vector<int> tight; // indices into the local point list
};

struct BuiltHull {
    std::vector<int> vertex_indices;
    std::vector<BuiltFacet> facets;
};

void reduce_primitive(Vec& n, Int& c) {
    Int g = gcd_of(n);
    assert(g != 0);
    if (g > 1) {
        for (Int& x : n) x /= g;
        c /= g; // exact: c = n.v for a lattice point v on the facet
    }
}

Int dot_vec(const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BuiltHull build_dim1(const std::vector<Vec>& pts) {
    // pts sorted lexicographically, so endpoints are first and last
    BuiltHull h;
    const int lo = 0;
    const int hi = static_cast<int>(pts.size()) - 1;
    h.vertex_indices = {lo, hi};
    h.facets.push_back({{Int(1)}, pts[static_cast<size_t>(hi)][0], {hi}});
    h.facets.push_back({{Int(-1)}, -pts[static_cast<size_t>(lo)][0], {lo}});
    return h;
}

Int cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

BuiltHull build_dim2(const std::vector<Vec>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> hull; // counterclockwise, strict turns only
    for (int pass = 0; pass < 2; ++pass) {
        const size_t base = hull.size();
        for (int k = 0; k < n; ++k) {
            const int i = pass == 0 ? k : n - 1 - k;
            while (hull.size() >= base + 2 &&
                   cross2(pts[static_cast<size_t>(hull[hull.size() - 2])],
                          pts[static_cast<size_t>(hull[hull.size() - 1])],
                          pts[static_cast<size_t>(i)]) <= 0)
                hull.pop_back();
            hull.push_back(i);
        }
        hull.pop_back(); // each pass re-adds the other pass's first point
    }

    BuiltHull h;
    h.vertex_indices = hull;
    const int m = static_cast<int>(hull.size());
    for (int i = 0; i < m; ++i) {
        const int u = hull[static_cast<size_t>(i)];
        const int v = hull[static_cast<size_t>((i + 1) % m)];
        const Vec& p = pts[static_cast<size_t>(u)];
        const Vec& q = pts[static_cast<size_t>(v)];
        Vec normal = {q[1] - p[1], p[0] - q[0]}; // outward for ccw order
        Int offset = dot_vec(normal, p);
        reduce_primitive(normal, offset);
        h.facets.push_back({std::move(normal), std::move(offset), {u, v}});
    }
    return h;
}

struct TriFacet {
    std::vector<int> vs; // ascending
    Vec normal;          // primitive, outward
    Int offset;
};

// incremental insertion (beneath-beyond) with exact orientation predicates;
// coplanar tri-facets are merged into true facets afterwards
BuiltHull build_general(const std::vector<Vec>& pts, int a) {
    const int n = static_cast<int>(pts.size());

    // greedy affinely independent seed simplex; input is full-dimensional
    std::vector<int> simplex = {0};
    {
        std::vector<LatticePoint> chosen = {LatticePoint(pts[0])};
        for (int i = 1; i < n && static_cast<int>(simplex.size()) < a + 1; ++i) {
            chosen.push_back(LatticePoint(pts[static_cast<size_t>(i)]));
            if (affine_rank(chosen) == static_cast<int>(simplex.size())) {
                simplex.push_back(i);
            } else {
                chosen.pop_back();
            }
        }
    }
    assert(static_cast<int>(simplex.size()) == a + 1);

    Vec ref(static_cast<size_t>(a), Int(0)); // (a+1) * interior point
    for (int idx : simplex)
        for (int j = 0; j < a; ++j) ref[static_cast<size_t>(j)] += pts[static_cast<size_t>(idx)][static_cast<size_t>(j)];
    const Int scale = a + 1;

    auto make_facet = [&](std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        Matrix diffs;
        for (size_t i = 1; i < vs.size(); ++i) {
            Vec row(static_cast<size_t>(a));
            for (int j = 0; j < a; ++j)
                row[static_cast<size_t>(j)] =
                    pts[static_cast<size_t>(vs[i])][static_cast<size_t>(j)] - pts[static_cast<size_t>(vs[0])][static_cast<size_t>(j)];
            diffs.push_back(std::move(row));
        }
        TriFacet f;
        f.normal = hyperplane_normal(diffs);
        assert(gcd_of(f.normal) != 0);
        f.offset = dot_vec(f.normal, pts[static_cast<size_t>(vs[0])]);
        const Int side = dot_vec(f.normal, ref) - scale * f.offset;
        assert(side != 0); // the seed centroid is interior to every facet plane
        if (side > 0) {
            for (Int& x : f.normal) x = -x;
            f.offset = -f.offset;
        }
        reduce_primitive(f.normal, f.offset);
        f.vs = std::move(vs);
        return f;
    };

    std::vector<TriFacet> facets;
    for (int skip = 0; skip <= a; ++skip) {
        std::vector<int> vs;
        for (int i = 0; i <= a; ++i)
            if (i != skip) vs.push_back(simplex[static_cast<size_t>(i)]);
        facets.push_back(make_facet(std::move(vs)));
    }

    std::set<int> in_simplex(simplex.begin(), simplex.end());
    for (int ip = 0; ip < n; ++ip) {
        if (in_simplex.count(ip)) continue;
        const Vec& p = pts[static_cast<size_t>(ip)];

        std::vector<char> visible(facets.size(), 0);
        bool any = false;
        for (size_t f = 0; f < facets.size(); ++f) {
            if (dot_vec(facets[f].normal, p) > facets[f].offset) {
                visible[f] = 1;
                any = true;
            }
        }
        if (!any) continue; // inside or on the current hull

        // ridge -> facets sharing it (exactly two on a closed boundary)
        std::map<std::vector<int>, std::vector<int>> ridges;
        for (size_t f = 0; f < facets.size(); ++f) {
            const auto& vs = facets[f].vs;
            for (size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<int> r;
                for (size_t i = 0; i < vs.size(); ++i)
                    if (i != skip) r.push_back(vs[i]);
                ridges[r].push_back(static_cast<int>(f));
            }
        }

        std::vector<TriFacet> next;
        for (size_t f = 0; f < facets.size(); ++f)
            if (!visible[f]) next.push_back(std::move(facets[f]));
        for (const auto& [ridge, owners] : ridges) {
            assert(owners.size() == 2);
            const bool v0 = visible[static_cast<size_t>(owners[0])];
            const bool v1 = visible[static_cast<size_t>(owners[1])];
            if (v0 == v1) continue;
            std::vector<int> vs = ridge;
            vs.push_back(ip);
            next.push_back(make_facet(std::move(vs)));
        }
        facets = std::move(next);
    }

    // merge coplanar tri-facets into true facets
    std::map<std::pair<Vec, Int>, std::set<int>> merged;
    for (const TriFacet& f : facets)
        merged[{f.normal, f.offset}].insert(f.vs.begin(), f.vs.end());

    // a boundary point is a vertex iff its tight facet normals span everything
    std::set<int> candidates;
    for (const auto& [key, vs] : merged) candidates.insert(vs.begin(), vs.end());

    BuiltHull h;
    for (int q : candidates) {
        Matrix tight;
        for (const auto& [key, vs] : merged)
            if (dot_vec(key.first, pts[static_cast<size_t>(q)]) == key.second) tight.push_back(key.first);
        if (rank_of(std::move(tight)) == a) h.vertex_indices.push_back(q);
    }

    for (const auto& [key, vs] : merged) {
        BuiltFacet bf;
        bf.normal = key.first;
        bf.offset = key.second;
        for (int q : h.vertex_indices)
            if (dot_vec(bf.normal, pts[static_cast<size_t>(q)]) == bf.offset) bf.tight.push_back(q);
        h.facets.push_back(std::move(bf));
    }
    return h;
}

BuiltHull build_full_dim(const std::vector<Vec>& pts, int a) {
    if (a == 1) return build_dim1(pts);
    if (a == 2) return build_dim2(pts);
    return build_general(pts, a);
}

} // namespace

int affine_dimension(const std::vector<LatticePoint>& points) { return affine_rank(points); }

HullStructure convex_hull(const std::vector<LatticePoint>& points) {
    require_same_dimension(points);
    std::vector<LatticePoint> gens = points;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    HullStructure hull;
    hull.d = gens.front().dim();
    hull.generators = gens;
    hull.affine_dim = affine_rank(gens);

    const int d = hull.d;
    const int a = hull.affine_dim;

    if (a == d) {
        std::vector<Vec> pts;
        pts.reserve(gens.size());
        for (const LatticePoint& g : gens) pts.push_back(g.coords);
        BuiltHull built = build_full_dim(pts, a);

        for (int idx : built.vertex_indices) hull.vertices.push_back(gens[static_cast<size_t>(idx)]);
        std::sort(hull.vertices.begin(), hull.vertices.end());
        for (BuiltFacet& bf : built.facets) {
            Facet f;
            f.normal = std::move(bf.normal);
            f.offset = std::move(bf.offset);
            for (int idx : bf.tight) {
                auto it = std::lower_bound(hull.vertices.begin(), hull.vertices.end(), gens[static_cast<size_t>(idx)]);
                f.vertex_indices.push_back(static_cast<int>(it - hull.vertices.begin()));
            }
            std::sort(f.vertex_indices.begin(), f.vertex_indices.end());
            hull.facets.push_back(std::move(f));
        }
        std::sort(hull.facets.begin(), hull.facets.end());
        return hull;
    }

    // degenerate: describe the affine hull by integer equalities, chart it
    // with a lattice-preserving basis, and hull inside the chart
    const LatticePoint& p0 = gens.front();
    Matrix diffs_basis;
    {
        std::vector<LatticePoint> chosen = {p0};
        for (size_t i = 1; i < gens.size() && static_cast<int>(diffs_basis.size()) < a; ++i) {
            chosen.push_back(gens[i]);
            if (affine_rank(chosen) == static_cast<int>(diffs_basis.size()) + 1)
                diffs_basis.push_back((gens[i] - p0).coords);
            else
                chosen.pop_back();
        }
    }
    KernelChart perp = integer_kernel(diffs_basis, d); // normals of the span
    Matrix eq_rows;
    for (int j = 0; j < perp.rank; ++j) {
        Vec n(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) n[static_cast<size_t>(i)] = perp.basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
        hull.equalities.push_back({n, dot_vec(n, p0.coords)});
        eq_rows.push_back(std::move(n));
    }

    KernelChart chart = integer_kernel(eq_rows, d);
    assert(chart.rank == a);
    hull.chart.origin = p0;
    hull.chart.basis = chart.basis;
    hull.chart.cobasis = chart.cobasis;

    if (a == 0) {
        hull.vertices = {p0};
        return hull;
    }

    std::vector<Vec> local;
    local.reserve(gens.size());
    for (const LatticePoint& g : gens) {
        Vec u = matT_vec(hull.chart.cobasis, (g - p0).coords);
        assert(mat_vec(hull.chart.basis, u) == (g - p0).coords);
        local.push_back(std::move(u));
    }
    BuiltHull built = build_full_dim(local, a);

    for (int idx : built.vertex_indices) hull.vertices.push_back(gens[static_cast<size_t>(idx)]);
    std::sort(hull.vertices.begin(), hull.vertices.end());
    for (BuiltFacet& bf : built.facets) {
        Facet f;
        // cobasis * m is an ambient preimage of the local normal m under B^T
        f.normal = mat_vec(hull.chart.cobasis, bf.normal);
        f.offset = bf.offset + dot_vec(f.normal, p0.coords);
        reduce_primitive(f.normal, f.offset);
        for (int idx : bf.tight) {
            auto it = std::lower_bound(hull.vertices.begin(), hull.vertices.end(), gens[static_cast<size_t>(idx)]);
            f.vertex_indices.push_back(static_cast<int>(it - hull.vertices.begin()));
        }
        std::sort(f.vertex_indices.begin(), f.vertex_indices.end());
        hull.facets.push_back(std::move(f));
    }
    std::sort(hull.facets.begin(), hull.facets.end());
    return hull;
}

bool contains(const HullStructure& hull, const RationalPoint& p, Containment mode) {
    if (p.dim() != hull.d) throw input_error("contains: dimension mismatch");
    if (mode == Containment::open && !hull.full_dimensional()) return false;
    for (const SpanEquality& eq : hull.equalities)
        if (dot(eq.normal, p) != Rat(eq.offset)) return false;
    for (const Facet& f : hull.facets) {
        const Rat v = dot(f.normal, p);
        if (mode == Containment::open ? v >= Rat(f.offset) : v > Rat(f.offset)) return false;
    }
    return true;
}

bool contains(const HullStructure& hull, const LatticePoint& p, Containment mode) {
    return contains(hull, RationalPoint(p), mode);
}

std::vector<LatticePoint> local_vertices(const HullStructure& hull) {
    std::vector<LatticePoint> out;
    out.reserve(hull.vertices.size());
    if (hull.full_dimensional()) {
        out = hull.vertices;
        return out;
    }
    for (const LatticePoint& v : hull.vertices)
        out.emplace_back(matT_vec(hull.chart.cobasis, (v - hull.chart.origin).coords));
    return out;
}

std::vector<Facet> local_facets(const HullStructure& hull) {
    if (hull.full_dimensional()) return hull.facets;
    std::vector<Facet> out;
    out.reserve(hull.facets.size());
    for (const Facet& f : hull.facets) {
        Facet g;
        g.normal = matT_vec(hull.chart.basis, f.normal); // B^T n recovers the local normal
        g.offset = f.offset - dot_vec(f.normal, hull.chart.origin.coords);
        g.vertex_indices = f.vertex_indices;
        out.push_back(std::move(g));
    }
    return out;
}

LatticePoint to_ambient(const HullStructure& hull, const LatticePoint& local) {
    if (hull.full_dimensional()) return local;
    LatticePoint p = hull.chart.origin;
    Vec shift = mat_vec(hull.chart.basis, local.coords);
    for (int i = 0; i < hull.d; ++i) p[i] += shift[static_cast<size_t>(i)];
    return p;
}

} // namespace latpoly
