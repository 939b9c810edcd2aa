#pragma once

#include <optional>

#include "quatcm/localsym.hpp"

namespace quatcm {

// Product of the odd primes dividing discD that do not divide disc(L).
Int compute_m0(const Int& discD, const ImagQuadField& L);

/*
 * Outcome of testing whether (disc(L), theta / Q) presents the indefinite
 * algebra of discriminant discD.  The verdict is always the ground truth
 * (ramification set compared against the prime divisors of discD); the
 * fast path evaluates the per-prime congruence conditions on m = theta/m0
 * and any disagreement is flagged as a defect.
 */
struct ThetaCheck {
    bool verdict = false;
    bool fast_path = false;
    bool discrepancy = false;

    bool m0_divides = false;
    // Diagnostics for the individual fast-path conditions; unset entries
    // were not reached (e.g. everything after a failed divisibility gate).
    std::optional<bool> positive;          // 1: m > 0
    std::optional<bool> away_primes;       // 2: odd p away from m0*disc(L)
    std::optional<bool> m0_primes;         // 3: odd p | m0
    std::optional<bool> disc_primes;       // 4: odd p | disc(L)
    std::optional<bool> two_adic;          // 5: p = 2
    char two_adic_case = 0;                // 'a'..'d' when evaluated
};

ThetaCheck check_theta(const Int& theta, const Int& discD, const ImagQuadField& L);

/*
 * The coprime presentation pair: theta_i = 2^s * m0 * m_i with
 * gcd(m1, m2) = 1 and gcd(m_i, 2 m0 disc(L)) = 1, both thetas verified
 * against the ramification ground truth.  (m1, m2) is the lexicographically
 * smallest valid pair; s = 1 exactly when disc(L) = 5 mod 8 and 2 | discD.
 */
struct ThetaPair {
    Int m0;
    int s = 0;
    Int m1, m2;
    Int theta1, theta2;
};

ThetaPair find_theta_pair(const Int& discD, const ImagQuadField& L);

// Whether the algebra of discriminant discD is presented by (disc(L), m0),
// the criterion for the two split elliptic factors to be isomorphic.
bool iso_criterion(const Int& discD, const ImagQuadField& L);

}  // namespace quatcm
