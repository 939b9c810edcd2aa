#include "quatcm/arith.hpp"

#include <algorithm>
#include <map>

namespace quatcm {

std::vector<Int> PrimeFactorization::primes() const {
    std::vector<Int> ps;
    ps.reserve(factors.size());
    for (const auto& [p, e] : factors) ps.push_back(p);
    return ps;
}

Int PrimeFactorization::unfactor() const {
    Int m = (n < 0) ? -1 : 1;
    for (const auto& [p, e] : factors) m *= pow_int(p, e);
    return m;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int mod_floor(const Int& a, const Int& m) {
    if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int sqrt_exact(const Int& n) {
    if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0)
        throw std::domain_error("sqrt_exact: not a perfect square");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

// Pollard rho (Floyd cycle) with deterministic increment sweep.  Inputs here
// are survivors of trial division up to 10^6, so any composite is a product
// of primes > 10^6 and the walk terminates quickly at the scales we handle.
Int pollard_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = mod_floor(x * x + c, n);
            y = mod_floor(y * y + c, n);
            y = mod_floor(y * y + c, n);
            d = gcd_int(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& m, std::map<Int, unsigned>& out) {
    if (m == 1) return;
    if (is_prime(m)) {
        out[m] += 1;
        return;
    }
    Int d = pollard_rho(m);
    factor_into(d, out);
    factor_into(m / d, out);
}

}  // namespace

PrimeFactorization factorize(const Int& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero input");
    PrimeFactorization pf;
    pf.n = n;
    Int m = abs(n);
    std::map<Int, unsigned> acc;
    for (Int d = 2; d <= 1000000 && d * d <= m; d += (d == 2 ? 1 : 2)) {
        while (m % d == 0) {
            acc[d] += 1;
            m /= d;
        }
    }
    if (m > 1) factor_into(m, acc);
    pf.factors.assign(acc.begin(), acc.end());
    return pf;
}

long valuation(const Int& x, const Int& p) {
    if (x == 0) throw std::domain_error("valuation of zero undefined");
    if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    long v = 0;
    Int m = x;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long valuation(const Rat& x, const Int& p) {
    if (x == 0) throw std::domain_error("valuation of zero undefined");
    Int num = x.get_num(), den = x.get_den();
    if (!is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Int crt_solve(const std::vector<std::pair<Int, Int>>& congruences) {
    Int r = 0, m = 1;
    for (const auto& [ri, mi] : congruences) {
        if (mi < 1) throw std::invalid_argument("crt_solve: modulus must be >= 1");
        Int g = gcd_int(m, mi);
        Int diff = ri - r;
        if (diff % g != 0) throw std::domain_error("crt_solve: inconsistent congruences");
        Int m_red = m / g, mi_red = mi / g;
        // v_p(m/g) and v_p(mi/g) cannot both be positive, so these are coprime.
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), m_red.get_mpz_t(), mi_red.get_mpz_t()) == 0 && mi_red != 1)
            throw std::logic_error("crt_solve: inversion failed");
        Int t = mod_floor((diff / g) * inv, mi_red);
        r += m * t;
        m *= mi_red;
        r = mod_floor(r, m);
    }
    return r;
}

Int squarefree_part(const Int& n) {
    PrimeFactorization pf = factorize(n);
    Int s = (n < 0) ? -1 : 1;
    for (const auto& [p, e] : pf.factors)
        if (e % 2 == 1) s *= p;
    return s;
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    PrimeFactorization pf = factorize(n);
    for (const auto& [p, e] : pf.factors)
        if (e > 1) return false;
    return true;
}

std::vector<Int> divisors(const Int& n) {
    if (n == 0) throw std::invalid_argument("divisors: zero input");
    PrimeFactorization pf = factorize(n);
    std::vector<Int> ds{1};
    for (const auto& [p, e] : pf.factors) {
        std::vector<Int> next;
        Int pk = 1;
        for (unsigned k = 0; k <= e; ++k) {
            for (const Int& d : ds) next.push_back(d * pk);
            pk *= p;
        }
        ds = std::move(next);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace quatcm
