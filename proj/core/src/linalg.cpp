#include "latpoly/linalg.hpp"

#include "latpoly/errors.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace latpoly {

int rank_of(Matrix a) {
    if (a.empty()) return 0;
    const int m = static_cast<int>(a.size());
    const int n = static_cast<int>(a.front().size());
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

int affine_rank(const std::vector<LatticePoint>& points) {
    require_same_dimension(points);
    if (points.size() == 1) return 0;
    const int d = points.front().dim();
    Matrix diffs;
    diffs.reserve(points.size() - 1);
    for (size_t i = 1; i < points.size(); ++i) {
        std::vector<Int> row(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) row[static_cast<size_t>(j)] = points[i][j] - points[0][j];
        diffs.push_back(std::move(row));
    }
    return rank_of(std::move(diffs));
}

Int determinant(Matrix a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<Int> hyperplane_normal(const Matrix& diffs) {
    const int a = diffs.empty() ? 1 : static_cast<int>(diffs.front().size());
    assert(static_cast<int>(diffs.size()) == a - 1);
    std::vector<Int> n(static_cast<size_t>(a));
    for (int skip = 0; skip < a; ++skip) {
        Matrix minor;
        minor.reserve(diffs.size());
        for (const auto& row : diffs) {
            std::vector<Int> r;
            r.reserve(static_cast<size_t>(a - 1));
            for (int j = 0; j < a; ++j)
                if (j != skip) r.push_back(row[static_cast<size_t>(j)]);
            minor.push_back(std::move(r));
        }
        Int det = determinant(std::move(minor));
        n[static_cast<size_t>(skip)] = (skip % 2 == 0) ? det : -det;
    }
    return n;
}

namespace {

// integer row echelon on the first `ncols` columns via unimodular row ops,
// mirrored on the full rows; returns the number of pivot rows
int echelonize(Matrix& rows, int ncols) {
    const int m = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < ncols && r < m; ++c) {
        for (;;) {
            int best = -1;
            for (int i = r; i < m; ++i) {
                if (rows[i][static_cast<size_t>(c)] == 0) continue;
                if (best < 0 || abs(rows[i][static_cast<size_t>(c)]) < abs(rows[best][static_cast<size_t>(c)]))
                    best = i;
            }
            if (best < 0) break;
            std::swap(rows[r], rows[best]);
            bool clean = true;
            const Int p = rows[r][static_cast<size_t>(c)];
            for (int i = r + 1; i < m; ++i) {
                const Int& v = rows[i][static_cast<size_t>(c)];
                if (v == 0) continue;
                Int q = v / p; // truncated division keeps |remainder| < |p|
                if (q != 0)
                    for (size_t j = 0; j < rows[i].size(); ++j)
                        rows[i][j] -= q * rows[r][j];
                if (rows[i][static_cast<size_t>(c)] != 0) clean = false;
            }
            if (clean) { ++r; break; }
        }
    }
    return r;
}

} // namespace

KernelChart integer_kernel(const Matrix& m, int d) {
    const int r = static_cast<int>(m.size());
    // stacked rows (column i of m | e_i); unimodular row ops keep the
    // identity part a change-of-basis matrix of Z^d
    Matrix rows(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(r + d), Int(0)));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < r; ++j) rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = m[static_cast<size_t>(j)][static_cast<size_t>(i)];
        rows[static_cast<size_t>(i)][static_cast<size_t>(r + i)] = 1;
    }
    const int pivots = echelonize(rows, r);
    const int k = d - pivots;

    Matrix c(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c[static_cast<size_t>(i)][static_cast<size_t>(j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(r + j)];
    Matrix cinv = unimodular_inverse(c);

    KernelChart chart;
    chart.rank = k;
    chart.basis.assign(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(k)));
    chart.cobasis.assign(static_cast<size_t>(d), std::vector<Int>(static_cast<size_t>(k)));
    for (int j = 0; j < k; ++j) {
        const int row = pivots + j; // kernel rows sit below the pivot rows
        for (int i = 0; i < d; ++i) {
            chart.basis[static_cast<size_t>(i)][static_cast<size_t>(j)] = c[static_cast<size_t>(row)][static_cast<size_t>(i)];
            chart.cobasis[static_cast<size_t>(i)][static_cast<size_t>(j)] = cinv[static_cast<size_t>(i)][static_cast<size_t>(row)];
        }
    }
    return chart;
}

Matrix unimodular_inverse(const Matrix& c) {
    const int n = static_cast<int>(c.size());
    RatMatrix a(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(2 * n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(c[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { piv = i; break; }
        if (piv < 0) throw input_error("unimodular_inverse: singular matrix");
        std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(piv)]);
        const Rat p = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int j = 0; j < 2 * n; ++j) a[static_cast<size_t>(k)][static_cast<size_t>(j)] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const Rat f = a[static_cast<size_t>(i)][static_cast<size_t>(k)];
            if (f == 0) continue;
            for (int j = 0; j < 2 * n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    }
    Matrix inv(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& q = a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
            if (!rat_is_integer(q)) throw input_error("unimodular_inverse: non-integer inverse");
            inv[static_cast<size_t>(i)][static_cast<size_t>(j)] = rat_num(q);
        }
    return inv;
}

std::vector<Int> mat_vec(const Matrix& a, const std::vector<Int>& x) {
    std::vector<Int> y(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

std::vector<Int> matT_vec(const Matrix& a, const std::vector<Int>& x) {
    if (a.empty()) return {};
    std::vector<Int> y(a.front().size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) y[j] += a[i][j] * x[i];
    return y;
}

} // namespace latpoly
