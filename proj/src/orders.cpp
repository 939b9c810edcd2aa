#include "quatcm/orders.hpp"

#include <algorithm>
#include <optional>

namespace quatcm {

using linalg::QMat;
using linalg::QVec;
using linalg::ZMat;
using linalg::ZVec;

QuatLattice::QuatLattice(const QuatAlgebra& alg, const QMat& generator_rows) : alg_(alg), den_(1) {
    for (const auto& row : generator_rows)
        if (row.size() != 4)
            throw std::invalid_argument("QuatLattice: generators must have four coordinates");
    for (const auto& row : generator_rows)
        for (const Rat& x : row) den_ = lcm_int(den_, x.get_den());
    ZMat m(generator_rows.size(), ZVec(4));
    for (size_t i = 0; i < generator_rows.size(); ++i)
        for (size_t j = 0; j < 4; ++j) {
            Rat scaled = generator_rows[i][j] * den_;
            m[i][j] = scaled.get_num();
        }
    basis_ = linalg::hnf_rows(std::move(m));
    if (basis_.size() != 4) throw std::invalid_argument("QuatLattice: generators must span rank 4");
    Int content = den_;
    for (const auto& row : basis_)
        for (const Int& x : row) content = gcd_int(content, x);
    if (content > 1) {
        den_ /= content;
        for (auto& row : basis_)
            for (Int& x : row) x /= content;
    }
}

QuatLattice QuatLattice::from_elements(const QuatAlgebra& alg,
                                       const std::vector<QuatElement>& gens) {
    QMat rows;
    rows.reserve(gens.size());
    for (const QuatElement& g : gens) {
        if (!(g.algebra() == alg))
            throw std::invalid_argument("QuatLattice: generator from a different algebra");
        rows.push_back({g[0], g[1], g[2], g[3]});
    }
    return QuatLattice{alg, rows};
}

QuatElement QuatLattice::basis_element(size_t k) const {
    return {alg_, make_rat(basis_[k][0], den_), make_rat(basis_[k][1], den_),
            make_rat(basis_[k][2], den_), make_rat(basis_[k][3], den_)};
}

std::vector<QuatElement> QuatLattice::basis() const {
    std::vector<QuatElement> out;
    for (size_t k = 0; k < 4; ++k) out.push_back(basis_element(k));
    return out;
}

QMat QuatLattice::basis_rows() const {
    QMat rows(4, QVec(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) rows[i][j] = make_rat(basis_[i][j], den_);
    return rows;
}

bool QuatLattice::contains(const QuatElement& x) const {
    if (!(x.algebra() == alg_)) return false;
    // Solve c * B = den * x over the transposed system.
    QMat bt(4, QVec(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) bt[i][j] = Rat(basis_[j][i]);
    QVec rhs(4);
    for (size_t i = 0; i < 4; ++i) rhs[i] = x[i] * den_;
    auto sol = linalg::solve_square(bt, rhs);
    if (!sol) return false;
    for (const Rat& c : *sol)
        if (c.get_den() != 1) return false;
    return true;
}

bool QuatLattice::contains(const QuatLattice& other) const {
    for (size_t k = 0; k < 4; ++k)
        if (!contains(other.basis_element(k))) return false;
    return true;
}

Rat QuatLattice::index_in(const QuatLattice& other) const {
    QMat a = basis_rows(), b = other.basis_rows();
    Rat da = linalg::det(a), db = linalg::det(b);
    Rat idx = da / db;
    if (idx < 0) idx = -idx;
    return idx;
}

bool QuatLattice::operator==(const QuatLattice& o) const {
    return alg_ == o.alg_ && den_ == o.den_ && basis_ == o.basis_;
}

QuatOrderD::QuatOrderD(const QuatLattice& lattice) : lattice_(lattice) {
    if (!lattice_.contains(QuatElement::one(lattice_.algebra())))
        throw std::invalid_argument("order must contain 1");
    std::vector<QuatElement> b = lattice_.basis();
    for (const QuatElement& x : b) {
        if (trace(x).get_den() != 1 || norm(x).get_den() != 1)
            throw std::invalid_argument("order basis must have integral reduced trace and norm");
    }
    for (const QuatElement& x : b)
        for (const QuatElement& y : b)
            if (!lattice_.contains(x * y))
                throw std::invalid_argument("lattice is not multiplicatively closed");
}

QuatOrderD order_from_basis(const QuatAlgebra& D, const std::vector<QuatElement>& generators) {
    return QuatOrderD{QuatLattice::from_elements(D, generators)};
}

QuatOrderD standard_order(const QuatAlgebra& D) {
    if (D.a.get_den() != 1 || D.b.get_den() != 1)
        throw std::invalid_argument("standard_order: structure constants must be integers");
    std::vector<QuatElement> gens{
        QuatElement{D, 1, 0, 0, 0}, QuatElement{D, 0, 1, 0, 0},
        QuatElement{D, 0, 0, 1, 0}, QuatElement{D, 0, 0, 0, 1}};
    return order_from_basis(D, gens);
}

Rat reduced_discriminant(const QuatLattice& lattice) {
    std::vector<QuatElement> b = lattice.basis();
    QMat gram(4, QVec(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) gram[i][j] = trace(b[i] * conj(b[j]));
    Rat d = linalg::det(gram);
    if (d < 0) d = -d;
    return make_rat(sqrt_exact(d.get_num()), sqrt_exact(d.get_den()));
}

Int reduced_discriminant(const QuatOrderD& order) {
    Rat rd = reduced_discriminant(order.lattice());
    if (rd.get_den() != 1) throw std::logic_error("order has non-integral reduced discriminant");
    return rd.get_num();
}

bool is_maximal(const QuatOrderD& order) {
    return reduced_discriminant(order) == disc_of(order.algebra());
}

namespace {

// Coordinates of x in the lattice basis, scaled by nothing (exact rationals).
QVec coords_in(const QuatLattice& L, const QuatElement& x) {
    QMat bt(4, QVec(4));
    QMat rows = L.basis_rows();
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) bt[i][j] = rows[j][i];
    QVec rhs{x[0], x[1], x[2], x[3]};
    auto sol = linalg::solve_square(bt, rhs);
    if (!sol) throw std::logic_error("coords_in: lattice basis singular");
    return *sol;
}

// Two-sided idealizer { x in D : x I <= I and I x <= I } as a lattice.
QuatLattice two_sided_idealizer(const QuatLattice& I) {
    const QuatAlgebra& A = I.algebra();
    std::vector<QuatElement> g = I.basis();
    QMat constraints;  // rows of the map x -> (coords of g_k x and x g_k in I)
    for (size_t k = 0; k < 4; ++k) {
        QMat left(4, QVec(4)), right(4, QVec(4));
        for (size_t m = 0; m < 4; ++m) {
            std::array<Rat, 4> unit{Rat(0), Rat(0), Rat(0), Rat(0)};
            unit[m] = 1;
            QuatElement em{A, unit};
            QVec cl = coords_in(I, g[k] * em);
            QVec cr = coords_in(I, em * g[k]);
            for (size_t r = 0; r < 4; ++r) {
                left[r][m] = cl[r];
                right[r][m] = cr[r];
            }
        }
        for (size_t r = 0; r < 4; ++r) constraints.push_back(left[r]);
        for (size_t r = 0; r < 4; ++r) constraints.push_back(right[r]);
    }
    QMat basis_rows = linalg::integral_preimage(constraints);
    return QuatLattice{A, basis_rows};
}

// Multiplication table of O/pO: coords of b_i b_j in the order basis, mod p.
std::vector<std::vector<ZVec>> structure_mod_p(const QuatOrderD& O, const Int& p) {
    std::vector<QuatElement> b = O.lattice().basis();
    std::vector<std::vector<ZVec>> table(4, std::vector<ZVec>(4, ZVec(4)));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            QVec c = coords_in(O.lattice(), b[i] * b[j]);
            for (size_t k = 0; k < 4; ++k) {
                if (c[k].get_den() != 1) throw std::logic_error("order structure not integral");
                table[i][j][k] = mod_floor(c[k].get_num(), p);
            }
        }
    return table;
}

// Radical of O/pO for odd p: kernel of the reduced-trace pairing mod p.
std::vector<ZVec> radical_mod_p_odd(const QuatOrderD& O, const Int& p) {
    std::vector<QuatElement> b = O.lattice().basis();
    // Gram matrix tr(b_i b_j) mod p, reduced over F_p.
    std::vector<ZVec> gram(4, ZVec(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            Rat t = trace(b[i] * b[j]);
            gram[i][j] = mod_floor(t.get_num(), p);  // denominators are 1 for orders
        }
    // Kernel over F_p by Gaussian elimination.
    std::vector<ZVec> m = gram;
    std::vector<long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < 4 && r < 4; ++c) {
        size_t piv = r;
        while (piv < 4 && m[piv][c] == 0) ++piv;
        if (piv == 4) continue;
        std::swap(m[piv], m[r]);
        Int inv;
        mpz_invert(inv.get_mpz_t(), m[r][c].get_mpz_t(), p.get_mpz_t());
        for (size_t j = 0; j < 4; ++j) m[r][j] = mod_floor(m[r][j] * inv, p);
        for (size_t i = 0; i < 4; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Int f = m[i][c];
            for (size_t j = 0; j < 4; ++j) m[i][j] = mod_floor(m[i][j] - f * m[r][j], p);
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    std::vector<bool> is_piv(4, false);
    for (long c : pivot_col) is_piv[c] = true;
    std::vector<ZVec> kernel;
    for (size_t free = 0; free < 4; ++free) {
        if (is_piv[free]) continue;
        ZVec v(4, 0);
        v[free] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = mod_floor(-m[i][free], p);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Exact radical of the 16-element algebra O/2O: the span of those x whose
// generated two-sided ideal consists of nilpotents.
std::vector<ZVec> radical_mod_2(const QuatOrderD& O) {
    const Int two = 2;
    auto table = structure_mod_p(O, two);
    auto mul = [&](unsigned u, unsigned v) {
        ZVec acc(4, 0);
        for (size_t i = 0; i < 4; ++i) {
            if (!(u >> i & 1)) continue;
            for (size_t j = 0; j < 4; ++j) {
                if (!(v >> j & 1)) continue;
                for (size_t k = 0; k < 4; ++k) acc[k] += table[i][j][k];
            }
        }
        unsigned mask = 0;
        for (size_t k = 0; k < 4; ++k)
            if (mod_floor(acc[k], two) == 1) mask |= 1u << k;
        return mask;
    };
    auto nilpotent = [&](unsigned x) {
        unsigned x2 = mul(x, x);
        return mul(x2, x2) == 0;
    };
    // F_2 span closure of a set of masks.
    auto span_closure = [&](std::vector<unsigned> gens) {
        std::vector<char> in(16, 0);
        in[0] = 1;
        bool changed = true;
        std::vector<unsigned> members{0};
        for (unsigned g : gens)
            if (!in[g]) {
                in[g] = 1;
                members.push_back(g);
            }
        while (changed) {
            changed = false;
            for (size_t i = 0; i < members.size(); ++i)
                for (size_t j = 0; j < members.size(); ++j) {
                    unsigned s = members[i] ^ members[j];
                    if (!in[s]) {
                        in[s] = 1;
                        members.push_back(s);
                        changed = true;
                    }
                }
        }
        return members;
    };
    std::vector<unsigned> radical_masks;
    for (unsigned x = 1; x < 16; ++x) {
        // Two-sided ideal generated by x, closed under multiplication by the
        // basis on both sides and under addition.
        std::vector<unsigned> gens{x};
        for (size_t round = 0; round < 4; ++round) {
            std::vector<unsigned> next = gens;
            for (unsigned g : gens)
                for (unsigned e = 1; e < 16; e <<= 1) {
                    next.push_back(mul(e, g));
                    next.push_back(mul(g, e));
                }
            next = span_closure(next);
            if (next.size() == gens.size()) break;
            gens = next;
        }
        bool all_nil = true;
        for (unsigned y : span_closure(gens))
            if (!nilpotent(y)) {
                all_nil = false;
                break;
            }
        if (all_nil) radical_masks.push_back(x);
    }
    std::vector<ZVec> out;
    for (unsigned x : radical_masks) {
        ZVec v(4, 0);
        for (size_t k = 0; k < 4; ++k) v[k] = (x >> k & 1) ? 1 : 0;
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<QuatOrderD> try_idealizer_step(const QuatOrderD& O, const Int& p) {
    std::vector<ZVec> rad =
        (p == 2) ? radical_mod_2(O) : radical_mod_p_odd(O, p);
    std::vector<QuatElement> b = O.lattice().basis();
    std::vector<QuatElement> gens;
    for (const QuatElement& x : b) gens.push_back(x * Rat(p));
    for (const ZVec& v : rad) {
        QuatElement x = QuatElement::zero(O.algebra());
        for (size_t k = 0; k < 4; ++k) x = x + b[k] * Rat(v[k]);
        gens.push_back(x);
    }
    QuatLattice J = QuatLattice::from_elements(O.algebra(), gens);
    QuatLattice bigger = two_sided_idealizer(J);
    if (bigger == O.lattice() || !bigger.contains(O.lattice())) return std::nullopt;
    return QuatOrderD{bigger};
}

std::optional<QuatOrderD> try_coset_enlargement(const QuatOrderD& O, const Int& p) {
    std::vector<QuatElement> b = O.lattice().basis();
    std::vector<Int> v(4, 0);
    auto advance = [&]() {
        for (size_t k = 0; k < 4; ++k) {
            v[k] += 1;
            if (v[k] < p) return true;
            v[k] = 0;
        }
        return false;
    };
    while (advance()) {
        QuatElement x = QuatElement::zero(O.algebra());
        for (size_t k = 0; k < 4; ++k) x = x + b[k] * Rat(v[k]);
        x = x * make_rat(1, p);
        if (trace(x).get_den() != 1 || norm(x).get_den() != 1) continue;
        std::vector<QuatElement> gens = b;
        gens.push_back(x);
        QuatLattice candidate = QuatLattice::from_elements(O.algebra(), gens);
        if (candidate == O.lattice()) continue;
        bool closed = true;
        std::vector<QuatElement> cb = candidate.basis();
        for (const QuatElement& y : cb) {
            if (trace(y).get_den() != 1 || norm(y).get_den() != 1) {
                closed = false;
                break;
            }
            for (const QuatElement& z : cb)
                if (!candidate.contains(y * z)) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) return QuatOrderD{candidate};
    }
    return std::nullopt;
}

}  // namespace

QuatOrderD maximalize(const QuatOrderD& order) {
    Int target = disc_of(order.algebra());
    QuatOrderD cur = order;
    while (true) {
        Int rd = reduced_discriminant(cur);
        if (rd == target) return cur;
        Int excess = rd / target;
        if (excess * target != rd)
            throw std::logic_error("maximalize: reduced discriminant not a multiple of disc(D)");
        bool progressed = false;
        for (const Int& p : factorize(excess).primes()) {
            if (auto next = try_idealizer_step(cur, p)) {
                cur = *next;
                progressed = true;
                break;
            }
            if (auto next = try_coset_enlargement(cur, p)) {
                cur = *next;
                progressed = true;
                break;
            }
        }
        if (!progressed) throw std::logic_error("maximalize: saturation stalled");
    }
}

QuatOrderD maximal_order(const QuatAlgebra& D) { return maximalize(standard_order(D)); }

Int embedding_conductor(const QuatOrderD& O, const Embedding& g, const ImagQuadField& L) {
    if (!(g.algebra() == O.algebra()))
        throw std::invalid_argument("embedding_conductor: algebra mismatch");
    if (g.delta >= 0)
        throw std::invalid_argument("embedding_conductor: embedding must be imaginary");
    if (squarefree_part(square_class_rep(-g.delta)) != L.d)
        throw std::invalid_argument("embedding_conductor: g does not generate the given field");

    // Lattice of (s, t) with s + t g in O.
    QMat rows = O.lattice().basis_rows();
    QMat bt(4, QVec(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) bt[i][j] = rows[j][i];
    auto coord_column = [&](const QuatElement& x) {
        QVec rhs{x[0], x[1], x[2], x[3]};
        auto sol = linalg::solve_square(bt, rhs);
        if (!sol) throw std::logic_error("embedding_conductor: singular basis");
        return *sol;
    };
    QVec c1 = coord_column(QuatElement::one(O.algebra()));
    QVec cg = coord_column(g.image);
    QMat m(4, QVec(2));
    for (size_t r = 0; r < 4; ++r) {
        m[r][0] = c1[r];
        m[r][1] = cg[r];
    }
    QMat st = linalg::integral_preimage(m);  // two rows (s_i, t_i)

    std::vector<QuatElement> w;
    for (const QVec& v : st)
        w.push_back(QuatElement::scalar(O.algebra(), v[0]) + g.image * v[1]);
    QMat gram(2, QVec(2));
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) gram[i][j] = trace(w[i] * w[j]);
    Rat disc = linalg::det(gram);
    Rat ratio = disc / Rat(L.disc());
    if (ratio.get_den() != 1 || ratio <= 0)
        throw std::logic_error("embedding_conductor: intersection is not an order over L");
    return sqrt_exact(ratio.get_num());
}

bool optimal_embedding_exists(const Int& discD, const ImagQuadField& L, const Int& c) {
    if (discD <= 0 || !is_squarefree(discD))
        throw std::invalid_argument("optimal_embedding_exists: bad discriminant");
    if (c <= 0) throw std::invalid_argument("optimal_embedding_exists: conductor must be positive");
    if (!splits(L, discD)) return false;
    if (discD == 1) return true;
    for (const Int& p : factorize(discD).primes())
        if (c % p == 0) return false;
    return true;
}

}  // namespace quatcm
