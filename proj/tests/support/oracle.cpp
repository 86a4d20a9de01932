#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("oracle: 64-bit overflow");
    return static_cast<std::int64_t>(v);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

std::size_t count_simplices(const delcoh::simplicial::SimplicialComplex& K, int n) {
    return K.simplices(n).size();
}

// gcd of k x k minors; stops as soon as the gcd reaches 1.
std::int64_t minor_gcd(const Mat& m, std::size_t k) {
    const std::size_t r = m.size(), c = r ? m[0].size() : 0;
    if (k == 0) return 1;
    std::int64_t g = 0;
    auto minor = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
        Mat sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[rows[i]][cols[j]];
        return determinant(sub);
    };
    // Random probes first: unit minors are common in boundary matrices.
    std::mt19937_64 gen(12345);
    std::vector<std::size_t> ri(r), ci(c);
    std::iota(ri.begin(), ri.end(), 0);
    std::iota(ci.begin(), ci.end(), 0);
    for (int probe = 0; probe < 4000 && g != 1; ++probe) {
        std::shuffle(ri.begin(), ri.end(), gen);
        std::shuffle(ci.begin(), ci.end(), gen);
        std::vector<std::size_t> rows(ri.begin(), ri.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<std::size_t> cols(ci.begin(), ci.begin() + static_cast<std::ptrdiff_t>(k));
        g = gcd64(g, minor(rows, cols));
    }
    if (g == 1) return 1;
    // Exhaustive pass.
    std::vector<bool> rsel(r, false), csel(c, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < r; ++i)
            if (rsel[i]) rows.push_back(i);
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < c; ++j)
                if (csel[j]) cols.push_back(j);
            g = gcd64(g, minor(rows, cols));
            if (g == 1) return 1;
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return g;
}

}  // namespace

Mat boundary(const delcoh::simplicial::SimplicialComplex& K, int n) {
    const auto& faces = K.simplices(n - 1);
    const auto& cells = K.simplices(n);
    Mat m(n >= 1 ? faces.size() : 0, std::vector<std::int64_t>(cells.size(), 0));
    if (n < 1) return m;
    for (std::size_t j = 0; j < cells.size(); ++j)
        for (std::size_t i = 0; i < cells[j].size(); ++i) {
            std::vector<int> face;
            for (std::size_t t = 0; t < cells[j].size(); ++t)
                if (t != i) face.push_back(cells[j][t]);
            auto it = std::find(faces.begin(), faces.end(), face);
            if (it == faces.end()) throw std::logic_error("oracle: missing face");
            m[static_cast<std::size_t>(it - faces.begin())][j] = (i % 2 == 0) ? 1 : -1;
        }
    return m;
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), std::vector<std::int64_t>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

std::size_t rank(const Mat& input) {
    Mat a = input;
    const std::size_t r = a.size(), c = r ? a[0].size() : 0;
    std::size_t rk = 0;
    std::int64_t prev = 1;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t p = rk;
        while (p < r && a[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(a[p], a[rk]);
        for (std::size_t i = rk + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j) {
                __int128 v = static_cast<__int128>(a[rk][col]) * a[i][j] - static_cast<__int128>(a[i][col]) * a[rk][j];
                a[i][j] = checked(v / prev);
            }
            a[i][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

std::int64_t determinant(const Mat& input) {
    Mat a = input;
    const std::size_t n = a.size();
    if (n == 0) return 1;
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 v = static_cast<__int128>(a[k][k]) * a[i][j] - static_cast<__int128>(a[i][k]) * a[k][j];
                a[i][j] = checked(v / prev);
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<std::int64_t> torsion_factors(const Mat& m) {
    std::size_t r = rank(m);
    std::vector<std::int64_t> g(r + 1, 1);
    // g_r first: when it is 1 every smaller one is 1 too.
    for (std::size_t k = r; k >= 1; --k) {
        g[k] = minor_gcd(m, k);
        if (g[k] == 1) break;
    }
    std::vector<std::int64_t> out;
    for (std::size_t k = 1; k <= r; ++k) {
        std::int64_t d = g[k] / g[k - 1];
        if (d > 1) out.push_back(d);
    }
    return out;
}

std::string Cohomology::to_string() const {
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (auto t : torsion) {
        if (!s.empty()) s += " ⊕ ";
        s += "Z/" + std::to_string(t);
    }
    return s.empty() ? "0" : s;
}

Cohomology integral_cohomology(const delcoh::simplicial::SimplicialComplex& K, int n) {
    // δ^n = ∂_{n+1}^T, δ^{n-1} = ∂_n^T
    Mat dn = boundary(K, n + 1);
    Mat dn_prev = boundary(K, n);
    std::size_t dim = count_simplices(K, n);
    std::size_t rank_out = dn.empty() ? 0 : rank(dn);
    std::size_t rank_in = dn_prev.empty() ? 0 : rank(dn_prev);
    Cohomology h;
    h.free_rank = dim - rank_out - rank_in;
    if (!dn_prev.empty()) h.torsion = torsion_factors(dn_prev);
    return h;
}

namespace {

// Indices of the degree-n simplices of X that are not images of simplices of Y.
std::vector<std::size_t> outside_image(const delcoh::simplicial::SimplicialMap& f, int n) {
    const auto& X = f.target();
    const auto& Y = f.source();
    const auto& cells = X.simplices(n);
    std::vector<bool> hit(cells.size(), false);
    for (const auto& s : Y.simplices(n)) {
        std::vector<int> img;
        for (int v : s) img.push_back(f(v));
        std::sort(img.begin(), img.end());
        if (std::adjacent_find(img.begin(), img.end()) != img.end())
            throw std::invalid_argument("oracle: map is not an embedding");
        auto it = std::find(cells.begin(), cells.end(), img);
        std::size_t i = static_cast<std::size_t>(it - cells.begin());
        if (hit[i]) throw std::invalid_argument("oracle: map is not an embedding");
        hit[i] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!hit[i]) out.push_back(i);
    return out;
}

Mat relative_boundary(const delcoh::simplicial::SimplicialMap& f, int n) {
    if (n < 1) return {};
    Mat full = boundary(f.target(), n);
    auto rows = outside_image(f, n - 1);
    auto cols = outside_image(f, n);
    if (rows.empty() || cols.empty()) return {};
    Mat m(rows.size(), std::vector<std::int64_t>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = full[rows[i]][cols[j]];
    return m;
}

}  // namespace

Cohomology relative_integral_cohomology(const delcoh::simplicial::SimplicialMap& f, int n) {
    Mat dn = relative_boundary(f, n + 1);
    Mat dn_prev = relative_boundary(f, n);
    std::size_t dim = outside_image(f, n).size();
    Cohomology h;
    h.free_rank = dim - (dn.empty() ? 0 : rank(dn)) - (dn_prev.empty() ? 0 : rank(dn_prev));
    if (!dn_prev.empty()) h.torsion = torsion_factors(dn_prev);
    return h;
}

}  // namespace oracle
