#pragma once

// Independent brute-force 1-cocycle solver used as an oracle. Builds the
// relator constraint system by naive recursive word expansion (front letter
// plus expanded tail) and solves it with its own rational Gauss-Jordan
// elimination on plain mpq matrices. Shares no linear algebra with the
// library under test.

#include "affolab/group.hpp"

#include <gmpxx.h>
#include <vector>

namespace naive {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
using Vec = std::vector<Q>;

inline Mat mat_zero(int r, int c) {
    return Mat(static_cast<size_t>(r), std::vector<Q>(static_cast<size_t>(c)));
}

inline Mat mat_id(int n) {
    Mat m = mat_zero(n, n);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    int r = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int c = static_cast<int>(b[0].size());
    Mat out = mat_zero(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t)
            for (int j = 0; j < c; ++j)
                out[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    a[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                    b[static_cast<size_t>(t)][static_cast<size_t>(j)];
    return out;
}

inline Mat mat_add(Mat a, const Mat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
    return a;
}

inline Mat mat_neg(Mat a) {
    for (auto& row : a)
        for (auto& x : row) x = -x;
    return a;
}

inline Mat mat_inv(Mat a) {
    int n = static_cast<int>(a.size());
    Mat inv = mat_id(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[static_cast<size_t>(piv)][static_cast<size_t>(col)] == 0) ++piv;
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
        std::swap(inv[static_cast<size_t>(piv)], inv[static_cast<size_t>(col)]);
        Q d = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int j = 0; j < n; ++j) {
            a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= d;
            inv[static_cast<size_t>(col)][static_cast<size_t>(j)] /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            Q f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
                inv[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * inv[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
    }
    return inv;
}

/// Row echelon elimination; returns the rank, reduces `m` in place.
inline int eliminate(Mat& m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int piv = -1;
        for (int i = lead; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(lead)]);
        Q d = m[static_cast<size_t>(lead)][static_cast<size_t>(col)];
        for (int j = 0; j < cols; ++j) m[static_cast<size_t>(lead)][static_cast<size_t>(j)] /= d;
        for (int i = 0; i < rows; ++i) {
            if (i == lead) continue;
            Q f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * m[static_cast<size_t>(lead)][static_cast<size_t>(j)];
        }
        ++lead;
    }
    return lead;
}

inline int rank_of(Mat m) {
    return eliminate(m);
}

/// Recursive expansion of c(w) into per-generator coefficient matrices:
/// c(l w') = coeff(l) + rho(l) c(w').
inline std::vector<Mat> expand_word(const affolab::Word& w, size_t at, const std::vector<Mat>& rho,
                                    const std::vector<Mat>& rho_inv, int m) {
    int gens = static_cast<int>(rho.size());
    if (at == w.size()) return std::vector<Mat>(static_cast<size_t>(gens), mat_zero(m, m));
    const affolab::Letter& l = w[at];
    std::vector<Mat> tail = expand_word(w, at + 1, rho, rho_inv, m);
    const Mat& act = l.exp > 0 ? rho[static_cast<size_t>(l.gen)] : rho_inv[static_cast<size_t>(l.gen)];
    std::vector<Mat> out;
    out.reserve(static_cast<size_t>(gens));
    for (int g = 0; g < gens; ++g) out.push_back(mat_mul(act, tail[static_cast<size_t>(g)]));
    if (l.exp > 0)
        out[static_cast<size_t>(l.gen)] = mat_add(out[static_cast<size_t>(l.gen)], mat_id(m));
    else
        out[static_cast<size_t>(l.gen)] =
            mat_add(out[static_cast<size_t>(l.gen)], mat_neg(rho_inv[static_cast<size_t>(l.gen)]));
    return out;
}

/// Basis of Z^1 as stacked rational vectors of length gens*m.
inline std::vector<Vec> z1_basis(const std::vector<affolab::Word>& relators,
                                 const std::vector<Mat>& rho, int m) {
    int gens = static_cast<int>(rho.size());
    std::vector<Mat> rho_inv;
    for (const auto& a : rho) rho_inv.push_back(mat_inv(a));

    Mat system = mat_zero(static_cast<int>(relators.size()) * m, gens * m);
    for (size_t rel = 0; rel < relators.size(); ++rel) {
        auto coeff = expand_word(relators[rel], 0, rho, rho_inv, m);
        for (int g = 0; g < gens; ++g)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    system[rel * static_cast<size_t>(m) + static_cast<size_t>(i)]
                          [static_cast<size_t>(g * m + j)] =
                              coeff[static_cast<size_t>(g)][static_cast<size_t>(i)]
                                   [static_cast<size_t>(j)];
    }

    // Kernel from the echelon form.
    Mat reduced = system;
    int rank = eliminate(reduced);
    int cols = gens * m;
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int i = 0; i < rank; ++i) {
        int col = 0;
        while (col < cols && reduced[static_cast<size_t>(i)][static_cast<size_t>(col)] == 0) ++col;
        pivot_col.push_back(col);
        is_pivot[static_cast<size_t>(col)] = true;
    }
    std::vector<Vec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        Vec v(static_cast<size_t>(cols));
        v[static_cast<size_t>(free)] = 1;
        for (int i = 0; i < rank; ++i)
            v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
                -reduced[static_cast<size_t>(i)][static_cast<size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of B^1 by eliminating the stacked columns of m -> rho(g)m - m.
inline std::vector<Vec> b1_basis(const std::vector<Mat>& rho, int m) {
    int gens = static_cast<int>(rho.size());
    if (gens == 0) return {};
    std::vector<Vec> cand;
    for (int j = 0; j < m; ++j) {
        Vec v(static_cast<size_t>(gens * m));
        for (int g = 0; g < gens; ++g)
            for (int i = 0; i < m; ++i) {
                Q x = rho[static_cast<size_t>(g)][static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (i == j) x -= 1;
                v[static_cast<size_t>(g * m + i)] = x;
            }
        cand.push_back(std::move(v));
    }
    // Keep an independent subset, checked by rank growth.
    std::vector<Vec> basis;
    for (const auto& v : cand) {
        Mat probe;
        for (const auto& b : basis) probe.push_back(b);
        probe.push_back(v);
        if (rank_of(probe) == static_cast<int>(probe.size())) basis.push_back(v);
    }
    return basis;
}

/// True iff the two families span the same rational subspace.
inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    if (a.empty() && b.empty()) return true;
    Mat ma, mb, mu;
    for (const auto& v : a) {
        ma.push_back(v);
        mu.push_back(v);
    }
    for (const auto& v : b) {
        mb.push_back(v);
        mu.push_back(v);
    }
    int ra = a.empty() ? 0 : rank_of(ma);
    int rb = b.empty() ? 0 : rank_of(mb);
    return ra == rb && rank_of(mu) == ra;
}

}  // namespace naive
