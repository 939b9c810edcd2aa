#include "quatcm/thetasearch.hpp"

namespace quatcm {

namespace {

void require_disc(const Int& discD) {
    if (discD <= 0 || !is_squarefree(discD))
        throw std::invalid_argument("discriminant must be positive and squarefree");
}

int eps2(const Int& x) { return mod_floor((x - 1) / 2, 2).get_si(); }
int omega2(const Int& x) { return mod_floor((x * x - 1) / 8, 2).get_si(); }

}  // namespace

Int compute_m0(const Int& discD, const ImagQuadField& L) {
    require_disc(discD);
    Int delta = L.disc();
    Int m0 = 1;
    for (const Int& p : factorize(discD).primes())
        if (p != 2 && delta % p != 0) m0 *= p;
    return m0;
}

ThetaCheck check_theta(const Int& theta, const Int& discD, const ImagQuadField& L) {
    require_disc(discD);
    if (theta == 0) throw std::invalid_argument("check_theta: theta must be nonzero");
    Int delta = L.disc();

    ThetaCheck out;

    // Ground truth: the ramification locus of (disc(L), theta) must equal the
    // prime divisors of discD, with nothing at infinity.
    RamificationSet sigma = ramification_set(QuatAlgebra{Rat(delta), Rat(theta)});
    std::vector<Int> want = (discD == 1) ? std::vector<Int>{} : factorize(discD).primes();
    out.verdict = !sigma.includes_infinity && sigma.primes == want;

    Int m0 = compute_m0(discD, L);
    out.m0_divides = (theta % m0 == 0);
    if (out.m0_divides) {
        Int m = theta / m0;
        bool ok = true;

        out.positive = (m > 0);
        ok = ok && *out.positive;

        // Odd primes away from m0 * disc(L): the symbol reduces to
        // (disc(L)/p)^{v_p(m)} and must be +1 there.
        bool away = true;
        for (const Int& p : factorize(m).primes()) {
            if (p == 2 || m0 % p == 0 || delta % p == 0) continue;
            if (valuation(m, p) % 2 != 0 && kronecker(delta, p) != 1) away = false;
        }
        out.away_primes = away;
        ok = ok && away;

        // Odd primes dividing m0: symbol (disc(L)/p)^{v_p(m)+1} must be -1.
        bool at_m0 = true;
        for (const Int& p : factorize(m0).primes()) {
            bool symbol_minus = (kronecker(delta, p) == -1) && (valuation(m, p) % 2 == 0);
            if (!symbol_minus) at_m0 = false;
        }
        out.m0_primes = at_m0;
        ok = ok && at_m0;

        // Odd primes dividing disc(L): compare the closed symbol formula with
        // the required ramification behaviour.
        bool at_delta = true;
        for (const Int& p : factorize(delta).primes()) {
            if (p == 2) continue;
            long v = valuation(m, p);
            Int mt = m / pow_int(p, static_cast<unsigned long>(labs(v)));
            int symbol = ((v * eps2(p)) % 2 != 0) ? -1 : 1;
            if (v % 2 != 0) symbol *= kronecker(delta / p, p);
            symbol *= kronecker(m0, p) * kronecker(mt, p);
            int target = (discD % p == 0) ? -1 : 1;
            if (symbol != target) at_delta = false;
        }
        out.disc_primes = at_delta;
        ok = ok && at_delta;

        // p = 2, split by the congruence class of disc(L).
        bool two_ok;
        bool two_ramified = (discD % 2 == 0);
        long v2m = (m == 0) ? 0 : valuation(m, Int(2));
        Int theta_tilde = theta / pow_int(2, static_cast<unsigned long>(valuation(theta, Int(2))));
        if (mod_floor(delta, 8) == 5) {
            out.two_adic_case = 'a';
            two_ok = ((v2m % 2 != 0) == two_ramified);
        } else if (mod_floor(delta, 8) == 1) {
            out.two_adic_case = 'b';
            two_ok = !two_ramified;
        } else if (L.d % 2 != 0) {
            // disc(L) = -4d with d odd, so -d = 3 mod 4.
            out.two_adic_case = 'c';
            long e = eps2(theta_tilde) + v2m * omega2(-L.d);
            two_ok = ((e % 2 != 0) == two_ramified);
        } else {
            out.two_adic_case = 'd';
            Int dh = L.d / 2;
            long e = eps2(-dh) * eps2(theta_tilde) + omega2(theta_tilde) + v2m * omega2(-dh);
            two_ok = ((e % 2 != 0) == two_ramified);
        }
        out.two_adic = two_ok;
        ok = ok && two_ok;

        out.fast_path = ok;
    }
    out.discrepancy = (out.fast_path != out.verdict);
    return out;
}

ThetaPair find_theta_pair(const Int& discD, const ImagQuadField& L) {
    require_disc(discD);
    if (discD > 1 && factorize(discD).factors.size() % 2 != 0)
        throw std::invalid_argument(
            "find_theta_pair: an indefinite algebra has an even number of ramified primes");
    if (!splits(L, discD)) throw std::domain_error("not a splitting field");

    ThetaPair out;
    out.m0 = compute_m0(discD, L);
    Int delta = L.disc();
    out.s = (mod_floor(delta, 8) == 5 && discD % 2 == 0) ? 1 : 0;
    Int lead = pow_int(2, static_cast<unsigned long>(out.s)) * out.m0;

    // Residue classes cutting down the search: m coprime to 2 m0 disc(L),
    // with the Legendre class at every odd p | disc(L) matching the required
    // local behaviour.  Every surviving candidate is still verified against
    // the ramification ground truth.
    std::vector<std::pair<Int, int>> legendre_targets;
    for (const Int& p : factorize(delta).primes()) {
        if (p == 2) continue;
        int target = (discD % p == 0) ? -1 : 1;
        int lead_class = kronecker(out.m0, p) * (out.s == 1 ? kronecker(Int(2), p) : 1);
        legendre_targets.emplace_back(p, target * lead_class);
    }
    Int coprimality = 2 * out.m0 * abs(delta);

    auto admissible = [&](const Int& m) {
        if (gcd_int(m, coprimality) != 1) return false;
        for (const auto& [p, target] : legendre_targets)
            if (kronecker(m, p) != target) return false;
        return check_theta(lead * m, discD, L).verdict;
    };

    Int m1 = 0;
    for (Int m = 1; m < 1000000; ++m) {
        if (m1 == 0) {
            if (admissible(m)) m1 = m;
            continue;
        }
        if (m != m1 && gcd_int(m, m1) == 1 && admissible(m)) {
            out.m1 = m1;
            out.m2 = m;
            out.theta1 = lead * m1;
            out.theta2 = lead * m;
            return out;
        }
    }
    throw std::logic_error("find_theta_pair: search bound exceeded");
}

bool iso_criterion(const Int& discD, const ImagQuadField& L) {
    require_disc(discD);
    if (!splits(L, discD)) throw std::domain_error("not a splitting field");
    Int m0 = compute_m0(discD, L);
    return check_theta(m0, discD, L).verdict;
}

}  // namespace quatcm
