#include "quatcm/localsym.hpp"

#include <algorithm>
#include <set>

namespace quatcm {

namespace {

void require_nonzero(const Int& a, const Int& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol: zero argument");
}

// (x-1)/2 mod 2 for odd x.
int eps2(const Int& x) { return mod_floor((x - 1) / 2, 2).get_si(); }

// (x^2-1)/8 mod 2 for odd x.
int omega2(const Int& x) { return mod_floor((x * x - 1) / 8, 2).get_si(); }

// Strip the square part of the p-valuation: x -> x / p^(2*floor(v/2)).
Int strip_square_part(Int x, const Int& p) {
    Int p2 = p * p;
    while (x % p2 == 0) x /= p2;
    return x;
}

long mod_long(const Int& x, long p) { return mod_floor(x, Int(p)).get_si(); }

// Does U x^2 + V y^2 = 0 (mod p) admit a solution with (x, y) != (0, 0)?
// U, V are units mod p; any such solution has both coordinates nonzero, so
// it suffices to scan y = 1.
bool nonzero_binary_solution(long U, long V, long p) {
    long target = (p - V % p) % p;
    for (long x = 0; x < p; ++x)
        if ((U * x % p) * x % p == target) return true;
    return false;
}

// Isotropy of the diagonal ternary form A x^2 + B y^2 + C z^2 over Q_p, p odd.
// Coefficient valuations are first normalized into {0, 1}; the remaining
// cases reduce to residue searches mod p whose hits are nonsingular points
// (some partial derivative is a unit), hence lift by Hensel's lemma.
bool isotropic_ternary_odd(std::array<Int, 3> coeff, const Int& pz) {
    if (pz > 10000000)
        throw std::invalid_argument("hilbert_oracle: prime too large for a residue search");
    long p = pz.get_si();
    std::array<int, 3> val{};
    for (int k = 0; k < 3; ++k) {
        coeff[k] = strip_square_part(coeff[k], pz);
        val[k] = (coeff[k] % pz == 0) ? 1 : 0;
    }
    if (val[0] + val[1] + val[2] == 3) {
        for (auto& c : coeff) c /= pz;
        val = {0, 0, 0};
    }
    int ones = val[0] + val[1] + val[2];

    if (ones == 0) {
        // Smooth conic: any nonzero residue solution lifts.  Scan the two
        // affine charts z = 0 and z = 1.
        long A = mod_long(coeff[0], p), B = mod_long(coeff[1], p), C = mod_long(coeff[2], p);
        if (nonzero_binary_solution(A, B, p)) return true;
        std::vector<char> is_square(p, 0);
        for (long t = 0; t < p; ++t) is_square[t * t % p] = 1;
        Int binv_z;
        mpz_invert(binv_z.get_mpz_t(), Int(B).get_mpz_t(), Int(p).get_mpz_t());
        long binv = binv_z.get_si();
        for (long x = 0; x < p; ++x) {
            long rest = ((A * x % p) * x + C) % p;           // A x^2 + C
            long need = (p - rest) % p * binv % p;           // y^2 = -(A x^2 + C)/B
            if (is_square[need]) return true;
        }
        return false;
    }

    if (ones == 1) {
        // Say C = p C' with A, B units.  A primitive zero forces a nonzero
        // residue solution of A x^2 + B y^2 = 0 mod p, and conversely such a
        // solution lifts with z = 0.
        std::array<long, 2> units;
        size_t u = 0;
        for (int k = 0; k < 3; ++k)
            if (val[k] == 0) units[u++] = mod_long(coeff[k], p);
        return nonzero_binary_solution(units[0], units[1], p);
    }

    // Two divided coefficients: the unit variable is forced to vanish mod p;
    // substituting and dividing the equation by p leaves the one-divided
    // shape on the unit parts of the two divided coefficients.
    std::array<long, 2> parts;
    size_t u = 0;
    for (int k = 0; k < 3; ++k)
        if (val[k] == 1) parts[u++] = mod_long(coeff[k] / pz, p);
    return nonzero_binary_solution(parts[0], parts[1], p);
}

// Isotropy of a x^2 + b y^2 - z^2 over Q_2 by exhausting primitive residue
// triples modulo 2^k, k = v_2(4ab) + 3; a, b carry 2-valuation at most 1.
// Any primitive solution mod 2^k has a partial derivative of valuation <= 2,
// so k >= 5 guarantees a Hensel lift; absence of primitive solutions mod 2^k
// certifies anisotropy since a genuine zero would reduce to one.
bool isotropic_two_adic(const Int& a, const Int& b) {
    long k = 2 + valuation(a, 2) + valuation(b, 2) + 3;
    unsigned long M = 1ul << static_cast<unsigned long>(k);
    long am = mod_floor(a, Int(M)).get_si();
    long bm = mod_floor(b, Int(M)).get_si();
    std::vector<char> sq_any(M, 0), sq_odd(M, 0);
    for (unsigned long z = 0; z < M; ++z) {
        unsigned long r = (z * z) % M;
        sq_any[r] = 1;
        if (z % 2 == 1) sq_odd[r] = 1;
    }
    for (unsigned long x = 0; x < M; ++x) {
        unsigned long ax2 = (static_cast<unsigned long>(am) * ((x * x) % M)) % M;
        for (unsigned long y = 0; y < M; ++y) {
            unsigned long r = (ax2 + static_cast<unsigned long>(bm) * ((y * y) % M)) % M;
            if (x % 2 == 0 && y % 2 == 0) {
                if (sq_odd[r]) return true;
            } else if (sq_any[r]) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

int hilbert_formula(const Int& a, const Int& b, const Int& p) {
    require_nonzero(a, b);
    if (!is_prime(p)) throw std::invalid_argument("hilbert_formula: p must be prime");
    long va = valuation(a, p), vb = valuation(b, p);
    Int at = a / pow_int(p, static_cast<unsigned long>(va));
    Int bt = b / pow_int(p, static_cast<unsigned long>(vb));
    if (p == 2) {
        long e = eps2(at) * eps2(bt) + va * omega2(bt) + vb * omega2(at);
        return (e % 2 != 0) ? -1 : 1;
    }
    int sign = ((va * vb * eps2(p)) % 2 != 0) ? -1 : 1;
    int la = (vb % 2 != 0) ? kronecker(at, p) : 1;
    int lb = (va % 2 != 0) ? kronecker(bt, p) : 1;
    return sign * la * lb;
}

int hilbert_oracle(const Int& a, const Int& b, const Int& p) {
    require_nonzero(a, b);
    if (!is_prime(p)) throw std::invalid_argument("hilbert_oracle: p must be prime");
    Int ar = strip_square_part(a, p);
    Int br = strip_square_part(b, p);
    if (p == 2) return isotropic_two_adic(ar, br) ? 1 : -1;
    return isotropic_ternary_odd({ar, br, Int(-1)}, p) ? 1 : -1;
}

int hilbert_infinity(const Int& a, const Int& b) {
    require_nonzero(a, b);
    return (a < 0 && b < 0) ? -1 : 1;
}

Int square_class_rep(const Rat& x) {
    if (x == 0) throw std::invalid_argument("square_class_rep: zero input");
    return x.get_num() * x.get_den();
}

RamificationSet ramification_set(const QuatAlgebra& D) {
    Int a = square_class_rep(D.a);
    Int b = square_class_rep(D.b);
    RamificationSet sigma;
    sigma.includes_infinity = hilbert_infinity(a, b) == -1;
    // Away from 2ab every symbol is +1.
    std::set<Int> candidates{Int(2)};
    for (const Int& p : factorize(a).primes()) candidates.insert(p);
    for (const Int& p : factorize(b).primes()) candidates.insert(p);
    for (const Int& p : candidates)
        if (hilbert_formula(a, b, p) == -1) sigma.primes.push_back(p);
    std::sort(sigma.primes.begin(), sigma.primes.end());
    return sigma;
}

Int disc_of(const QuatAlgebra& D) {
    Int d = 1;
    for (const Int& p : ramification_set(D).primes) d *= p;
    return d;
}

bool splits(const ImagQuadField& L, const Int& discD) {
    if (discD <= 0 || !is_squarefree(discD))
        throw std::invalid_argument("splits: discriminant must be positive and squarefree");
    Int delta = L.disc();
    for (const Int& p : factorize(discD).primes())
        if (kronecker(delta, p) == 1) return false;
    return true;
}

bool splits(const ImagQuadField& L, const QuatAlgebra& D) {
    RamificationSet sigma = ramification_set(D);
    if (sigma.includes_infinity) throw std::domain_error("totally indefinite required");
    Int delta = L.disc();
    for (const Int& p : sigma.primes)
        if (kronecker(delta, p) == 1) return false;
    return true;
}

QuatAlgebra presentation_search(const Int& discD) {
    if (discD <= 0 || !is_squarefree(discD))
        throw std::invalid_argument("presentation_search: need a positive squarefree discriminant");
    if (discD > 1 && factorize(discD).factors.size() % 2 != 0)
        throw std::domain_error(
            "presentation_search: an indefinite algebra has an even number of ramified primes");
    for (Int h = 1;; ++h) {
        for (Int a = -h; a <= h; ++a) {
            if (a == 0) continue;
            for (Int b = -h; b <= h; ++b) {
                if (b == 0) continue;
                if (abs(a) != h && abs(b) != h) continue;  // new pairs only
                if (a < 0 && b < 0) continue;              // definite
                QuatAlgebra D{Rat(a), Rat(b)};
                if (disc_of(D) == discD) return D;
            }
        }
    }
}

}  // namespace quatcm
