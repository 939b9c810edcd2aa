#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace quatcm {

using Int = mpz_class;
using Rat = mpq_class;

// Rational in lowest terms with positive denominator (mpq_class keeps this
// canonical form once canonicalize() has run).
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/*
 * Factorization of a nonzero integer n.
 * sign(n) * prod p_i^e_i == n, primes strictly increasing, every e_i >= 1.
 * n == 1 and n == -1 have an empty factor list.
 */
struct PrimeFactorization {
    Int n;
    std::vector<std::pair<Int, unsigned>> factors;

    bool negative() const { return n < 0; }
    std::vector<Int> primes() const;
    Int unfactor() const;  // sign * prod p^e, for consistency checks
};

bool is_prime(const Int& n);

PrimeFactorization factorize(const Int& n);

// v_p(x) = max{ k : p^k | x }, extended to rationals as v_p(num) - v_p(den).
long valuation(const Int& x, const Int& p);
long valuation(const Rat& x, const Int& p);

// Kronecker symbol (a/n), the full multiplicative extension of the Legendre
// symbol to arbitrary integers n.
int kronecker(const Int& a, const Int& n);

// Smallest nonnegative solution of x = r_i (mod m_i).  Moduli need not be
// pairwise coprime; inconsistent overlapping congruences throw.
Int crt_solve(const std::vector<std::pair<Int, Int>>& congruences);

// The squarefree s (carrying the sign of n) with n/s a perfect square.
Int squarefree_part(const Int& n);

bool is_squarefree(const Int& n);

// Positive divisors of |n| in increasing order.
std::vector<Int> divisors(const Int& n);

Int pow_int(const Int& base, unsigned long exp);

// a mod m normalized into [0, m).
Int mod_floor(const Int& a, const Int& m);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// Exact integer square root; throws if n is not a perfect square.
Int sqrt_exact(const Int& n);

}  // namespace quatcm
