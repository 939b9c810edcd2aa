#pragma once

#include <vector>

#include "quatcm/linalg.hpp"
#include "quatcm/localsym.hpp"
#include "quatcm/quat.hpp"

namespace quatcm {

/*
 * A full rank-4 lattice in a rational quaternion algebra, held as the unique
 * Hermite-normal basis (integer matrix over a reduced positive denominator),
 * so lattice equality is syntactic.
 */
class QuatLattice {
  public:
    QuatLattice(const QuatAlgebra& alg, const linalg::QMat& generator_rows);

    static QuatLattice from_elements(const QuatAlgebra& alg,
                                     const std::vector<QuatElement>& gens);

    const QuatAlgebra& algebra() const { return alg_; }
    QuatElement basis_element(size_t k) const;
    std::vector<QuatElement> basis() const;
    linalg::QMat basis_rows() const;
    const Int& denominator() const { return den_; }

    bool contains(const QuatElement& x) const;
    bool contains(const QuatLattice& other) const;

    // [other : this] for a sublattice, as a positive rational in general.
    Rat index_in(const QuatLattice& other) const;

    bool operator==(const QuatLattice& o) const;

  private:
    QuatAlgebra alg_;
    linalg::ZMat basis_;  // 4x4 row HNF
    Int den_;             // positive, coprime to the matrix content
};

// A lattice that is a subring containing 1, with integral reduced trace and
// norm on its basis and multiplicative closure checked on basis products.
class QuatOrderD {
  public:
    explicit QuatOrderD(const QuatLattice& lattice);

    const QuatLattice& lattice() const { return lattice_; }
    const QuatAlgebra& algebra() const { return lattice_.algebra(); }

    bool operator==(const QuatOrderD& o) const { return lattice_ == o.lattice_; }

  private:
    QuatLattice lattice_;
};

// The imaginary quadratic order Z + c*O_L of conductor c, disc = c^2 disc(L).
struct QuadOrder {
    ImagQuadField L;
    Int c;

    QuadOrder(const ImagQuadField& L_, const Int& c_) : L(L_), c(c_) {
        if (c <= 0) throw std::invalid_argument("QuadOrder: conductor must be positive");
    }

    Int disc() const { return c * c * L.disc(); }

    bool operator==(const QuadOrder& o) const = default;
};

QuatOrderD order_from_basis(const QuatAlgebra& D, const std::vector<QuatElement>& generators);

// The Z-span of 1, i, j, ij; requires integral structure constants.
QuatOrderD standard_order(const QuatAlgebra& D);

// sqrt(|det tr(b_i conj(b_j))|) for a basis; an integer for orders.
Rat reduced_discriminant(const QuatLattice& lattice);
Int reduced_discriminant(const QuatOrderD& order);

bool is_maximal(const QuatOrderD& order);

// Saturates the order at every prime of its excess until the reduced
// discriminant reaches disc(D): radical idealizer steps, with a direct
// index-p coset enlargement as fallback.
QuatOrderD maximalize(const QuatOrderD& order);

// A maximal order of D, computed deterministically from the standard basis
// (structure constants are cleared to integers first).
QuatOrderD maximal_order(const QuatAlgebra& D);

/*
 * The conductor c with (Q + Q g) intersect O = Z + c O_L: the intersection
 * is computed as a rank-2 lattice, recognized as a quadratic order through
 * its discriminant c^2 disc(L).  g must generate a subfield isomorphic to L.
 */
Int embedding_conductor(const QuatOrderD& O, const Embedding& g, const ImagQuadField& L);

// Existence criterion for an embedding of O_{L,c} hitting the maximal order
// optimally: L splits D and no ramified prime divides c.
bool optimal_embedding_exists(const Int& discD, const ImagQuadField& L, const Int& c);

}  // namespace quatcm
