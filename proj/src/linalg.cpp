#include "quatcm/linalg.hpp"

#include <algorithm>

namespace quatcm::linalg {

QMat transpose(const QMat& a) {
    if (a.empty()) return {};
    QMat t(a[0].size(), QVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

ZMat transpose(const ZMat& a) {
    if (a.empty()) return {};
    ZMat t(a[0].size(), ZVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Rat det(QMat a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    Rat d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            d = -d;
        }
        d *= a[c][c];
        Rat inv = 1 / a[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rat f = a[r][c] * inv;
            for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return d;
}

namespace {

// Row echelon with column pivot tracking; returns pivot column per row.
std::vector<long> echelonize(QMat& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<long> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Rat inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(static_cast<long>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

long rank(QMat a) { return static_cast<long>(echelonize(a).size()); }

std::optional<QVec> solve_square(QMat a, QVec b) {
    size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_square: size mismatch");
    for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    std::vector<long> piv = echelonize(a);
    if (piv.size() != n || (n > 0 && piv.back() == static_cast<long>(n)))
        return std::nullopt;
    QVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

QVec solve_full_column_rank(const QMat& a, const QVec& b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve: size mismatch");
    QMat aug = a;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<long> piv = echelonize(aug);
    QVec x(cols, Rat(0));
    size_t solved = 0;
    for (size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == static_cast<long>(cols))
            throw std::domain_error("solve: inconsistent system");
        x[piv[i]] = aug[i][cols];
        ++solved;
    }
    if (solved != cols) throw std::invalid_argument("solve: matrix not of full column rank");
    return x;
}

std::vector<QVec> nullspace(QMat a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<long> piv = echelonize(a);
    std::vector<bool> is_pivot(cols, false);
    for (long p : piv) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// In-place column operations used by both HNF routines.
void col_sub(ZMat& m, size_t dst, size_t src, const Int& q) {
    for (auto& row : m) row[dst] -= q * row[src];
}
void col_swap(ZMat& m, size_t i, size_t j) {
    for (auto& row : m) std::swap(row[i], row[j]);
}
void col_neg(ZMat& m, size_t i) {
    for (auto& row : m) row[i] = -row[i];
}

}  // namespace

ZMat hnf_rows(ZMat a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    size_t top = 0;
    for (size_t c = 0; c < cols && top < rows; ++c) {
        // Gcd-combine rows top..end in column c.
        while (true) {
            size_t best = rows;
            for (size_t r = top; r < rows; ++r)
                if (a[r][c] != 0 && (best == rows || abs(a[r][c]) < abs(a[best][c]))) best = r;
            if (best == rows) break;  // column is zero below top
            std::swap(a[best], a[top]);
            bool clean = true;
            for (size_t r = top + 1; r < rows; ++r) {
                if (a[r][c] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[top][c].get_mpz_t());
                for (size_t j = 0; j < cols; ++j) a[r][j] -= q * a[top][j];
                if (a[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[top][c] == 0) continue;
        if (a[top][c] < 0)
            for (size_t j = 0; j < cols; ++j) a[top][j] = -a[top][j];
        for (size_t r = 0; r < top; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[top][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < cols; ++j) a[r][j] -= q * a[top][j];
        }
        ++top;
    }
    a.resize(top);
    return a;
}

ZMat kernel_int(const ZMat& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    if (cols == 0) return {};
    ZMat h = a;
    ZMat u(cols, ZVec(cols, 0));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;

    size_t c = 0;
    for (size_t r = 0; r < rows && c < cols; ++r) {
        while (true) {
            size_t best = cols;
            for (size_t j = c; j < cols; ++j)
                if (h[r][j] != 0 && (best == cols || abs(h[r][j]) < abs(h[r][best]))) best = j;
            if (best == cols) break;
            if (best != c) {
                col_swap(h, best, c);
                col_swap(u, best, c);
            }
            bool clean = true;
            for (size_t j = c + 1; j < cols; ++j) {
                if (h[r][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h[r][j].get_mpz_t(), h[r][c].get_mpz_t());
                col_sub(h, j, c, q);
                col_sub(u, j, c, q);
                if (h[r][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (h[r][c] != 0) {
            if (h[r][c] < 0) {
                col_neg(h, c);
                col_neg(u, c);
            }
            ++c;
        }
    }
    // Columns c..cols-1 of h vanish; the matching columns of u span the kernel.
    ZMat basis;
    for (size_t j = c; j < cols; ++j) {
        ZVec v(cols);
        for (size_t i = 0; i < cols; ++i) v[i] = u[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

QMat integral_preimage(const QMat& m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    if (cols == 0) return {};
    Int den = 1;
    for (const auto& row : m)
        for (const Rat& x : row) den = lcm_int(den, x.get_den());
    ZMat n(rows, ZVec(cols));
    QMat nq(rows, QVec(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            Rat scaled = m[i][j] * den;
            n[i][j] = scaled.get_num();
            nq[i][j] = Rat(n[i][j]);
        }

    // W = Z^rows intersected with the column space of n, cut out by the
    // rational left-kernel of n.
    ZMat w_basis;
    std::vector<QVec> lk = nullspace(transpose(nq));
    if (lk.empty()) {
        w_basis.assign(rows, ZVec(rows, 0));
        for (size_t i = 0; i < rows; ++i) w_basis[i][i] = 1;
    } else {
        ZMat k(lk.size(), ZVec(rows));
        for (size_t i = 0; i < lk.size(); ++i) {
            Int d = 1;
            for (const Rat& x : lk[i]) d = lcm_int(d, x.get_den());
            for (size_t j = 0; j < rows; ++j) {
                Rat scaled = lk[i][j] * d;
                k[i][j] = scaled.get_num();
            }
        }
        w_basis = kernel_int(k);
    }
    if (w_basis.size() != cols)
        throw std::invalid_argument("integral_preimage: matrix lacks full column rank");

    QMat result;
    for (const ZVec& w : w_basis) {
        QVec rhs(rows);
        for (size_t i = 0; i < rows; ++i) rhs[i] = Rat(w[i]) * den;
        result.push_back(solve_full_column_rank(nq, rhs));
    }
    return result;
}

}  // namespace quatcm::linalg
