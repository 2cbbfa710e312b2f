#include "cartanlift/fp_solver.hpp"

#include <cassert>
#include <stdexcept>

namespace cartanlift {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime; Fermat
    std::uint64_t r = 1, b = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

using Matrix = std::vector<std::vector<std::uint32_t>>;

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Matrix& m, std::uint32_t p) {
    std::vector<int> pivots;
    size_t row = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        std::uint64_t inv = inv_mod(m[row][col], p);
        for (auto& v : m[row]) v = static_cast<std::uint32_t>(v * inv % p);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::uint64_t f = m[i][col];
            for (size_t j = 0; j < cols; ++j)
                m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p - f % p) * m[row][j]) % p);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

// Matrix of the coboundary from degree d to d+1: rows (d+1)-simplices, cols d-simplices.
Matrix delta_matrix(const SimplicialSetBase* host, int d, std::uint32_t p) {
    int rows = host->count(d + 1), cols = host->count(d);
    Matrix m(rows, std::vector<std::uint32_t>(cols, 0));
    for (int c = 0; c < cols; ++c) {
        Cochain dual = Cochain::dual(host, d, c).coboundary();
        for (const auto& [idx, v] : dual.values())
            m[idx][c] = v.mod(p);
    }
    return m;
}

}  // namespace

std::vector<Cochain> cocycle_basis(const SimplicialSetBase* host, int degree, std::uint32_t p) {
    int cols = host->count(degree);
    std::vector<Cochain> out;
    if (cols == 0) return out;
    Matrix m = degree + 1 > host->top_dim() ? Matrix{} : delta_matrix(host, degree, p);
    std::vector<int> pivots = rref(m, p);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Cochain c(host, degree);
        c.set(free_col, BigInt(1));
        for (size_t r = 0; r < pivots.size(); ++r) {
            std::uint32_t v = m[r][free_col];
            if (v) c.set(pivots[r], BigInt(static_cast<long long>(p - v)));
        }
        out.push_back(std::move(c));
    }
    return out;
}

CoboundaryResult is_coboundary(const Cochain& c, std::uint32_t p) {
    if (!c.is_cocycle_mod(p)) throw std::invalid_argument("is_coboundary: input not a cocycle");
    const SimplicialSetBase* host = c.host();
    int d = c.cdeg();
    CoboundaryResult res;
    if (c.is_zero_mod(p)) {
        res.solvable = true;
        res.witness = Cochain(host, d - 1);
        return res;
    }
    if (d == 0 || d > host->top_dim()) {
        // nonzero cochain with no candidates below
        res.solvable = false;
        res.refuting_functional.assign(host->count(d), 0);
        // any functional vanishing on im(delta) that pairs nontrivially works;
        // with no (d-1)-simplices every functional vanishes on im(delta)
        for (const auto& [idx, v] : c.values()) {
            res.refuting_functional[idx] = 1;
            break;
        }
        return res;
    }
    int rows = host->count(d), cols = host->count(d - 1);
    Matrix m(rows, std::vector<std::uint32_t>(cols + 1, 0));
    {
        Matrix dm = delta_matrix(host, d - 1, p);
        for (int r = 0; r < rows; ++r)
            for (int cc = 0; cc < cols; ++cc) m[r][cc] = dm[r][cc];
    }
    for (const auto& [idx, v] : c.values()) m[idx][cols] = v.mod(p);

    // track row operations to extract a refuting functional on failure
    Matrix ident(rows, std::vector<std::uint32_t>(rows, 0));
    for (int r = 0; r < rows; ++r) ident[r][r] = 1;
    Matrix aug(rows);
    for (int r = 0; r < rows; ++r) {
        aug[r] = m[r];
        aug[r].insert(aug[r].end(), ident[r].begin(), ident[r].end());
    }
    // eliminate on the first cols columns only
    std::vector<int> pivots;
    size_t row = 0;
    for (int col = 0; col < cols && row < aug.size(); ++col) {
        size_t sel = row;
        while (sel < aug.size() && aug[sel][col] == 0) ++sel;
        if (sel == aug.size()) continue;
        std::swap(aug[row], aug[sel]);
        std::uint64_t inv = inv_mod(aug[row][col], p);
        for (auto& v : aug[row]) v = static_cast<std::uint32_t>(v * inv % p);
        for (size_t i = 0; i < aug.size(); ++i) {
            if (i == row || aug[i][col] == 0) continue;
            std::uint64_t f = aug[i][col];
            for (size_t j = 0; j < aug[i].size(); ++j)
                aug[i][j] =
                    static_cast<std::uint32_t>((aug[i][j] + (p - f % p) * aug[row][j]) % p);
        }
        pivots.push_back(col);
        ++row;
    }
    // inconsistent iff some row has zero coefficients but nonzero rhs
    for (size_t r = row; r < aug.size(); ++r) {
        if (aug[r][cols] != 0) {
            res.solvable = false;
            res.refuting_functional.assign(rows, 0);
            for (int j = 0; j < rows; ++j) res.refuting_functional[j] = aug[r][cols + 1 + j];
            return res;
        }
    }
    res.solvable = true;
    Cochain w(host, d - 1);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (aug[r][cols]) w.set(pivots[r], BigInt(static_cast<long long>(aug[r][cols])));
    res.witness = std::move(w);
    return res;
}

bool cohomologous(const Cochain& c1, const Cochain& c2, std::uint32_t p) {
    return is_coboundary(c1 - c2, p).solvable;
}

}  // namespace cartanlift
