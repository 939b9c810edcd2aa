#pragma once

#include <vector>

#include "quatcm/quat.hpp"

namespace quatcm {

/*
 * The places where a rational quaternion algebra is a division algebra.
 * The total count (finite primes plus the infinite place) is always even.
 */
struct RamificationSet {
    std::vector<Int> primes;  // strictly increasing
    bool includes_infinity = false;

    size_t cardinality() const { return primes.size() + (includes_infinity ? 1 : 0); }
};

// L = Q(sqrt(-d)) for squarefree d > 0; disc is -d when -d = 1 mod 4, else -4d.
struct ImagQuadField {
    Int d;

    explicit ImagQuadField(const Int& d_) : d(d_) {
        if (d <= 0) throw std::invalid_argument("ImagQuadField: d must be positive");
        if (!is_squarefree(d)) throw std::invalid_argument("ImagQuadField: d must be squarefree");
    }

    Int disc() const { return mod_floor(d, 4) == 3 ? Int(-d) : Int(-4 * d); }

    bool operator==(const ImagQuadField& o) const = default;
};

// (a,b)_p for finite p, computed by the closed local formulas.
int hilbert_formula(const Int& a, const Int& b, const Int& p);

// (a,b)_p decided independently: search for a primitive zero of
// z^2 = a x^2 + b y^2 over Z_p, lifting residue solutions Hensel-style.
// Square parts of a, b are stripped first (a change of variables); the
// 2-adic search then runs modulo 2^k with k = v_2(4ab) + 3.
int hilbert_oracle(const Int& a, const Int& b, const Int& p);

// (a,b)_infinity: -1 exactly when a < 0 and b < 0.
int hilbert_infinity(const Int& a, const Int& b);

RamificationSet ramification_set(const QuatAlgebra& D);

// Product of the finite ramified primes; 1 for split algebras.
Int disc_of(const QuatAlgebra& D);

// Whether the imaginary quadratic field L splits D (D totally indefinite
// required): no finite ramified prime of D may split in L.
bool splits(const ImagQuadField& L, const QuatAlgebra& D);

// Same criterion given only the (squarefree) product of ramified primes.
bool splits(const ImagQuadField& L, const Int& discD);

// Smallest integer pair (a, b) presenting the indefinite algebra of the
// given squarefree discriminant, in a fixed deterministic search order.
QuatAlgebra presentation_search(const Int& discD);

// Square-class representative num*den of a nonzero rational.
Int square_class_rep(const Rat& x);

}  // namespace quatcm
