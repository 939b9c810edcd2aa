#include "quatcm/classgrp.hpp"

#include <algorithm>
#include <set>

namespace quatcm {

bool QuadForm::reduced() const {
    if (a <= 0) return false;
    Int ab = abs(b);
    if (!(ab <= a && a <= c)) return false;
    if ((ab == a || a == c) && b < 0) return false;
    return true;
}

bool QuadForm::operator<(const QuadForm& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
}

Int eval_form(const QuadForm& f, const Int& x, const Int& y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}

QuadForm reduce(QuadForm f) {
    if (f.disc() >= 0) throw std::invalid_argument("reduce: discriminant must be negative");
    if (f.a <= 0) throw std::invalid_argument("reduce: leading coefficient must be positive");
    while (true) {
        // Normalize b into (-a, a].
        Int shift;
        mpz_fdiv_q(shift.get_mpz_t(), Int(f.b + f.a).get_mpz_t(), Int(2 * f.a).get_mpz_t());
        if (f.b - 2 * shift * f.a == -f.a) --shift;
        if (shift != 0) {
            f.c = f.c - shift * f.b + shift * shift * f.a;
            f.b = f.b - 2 * shift * f.a;
        }
        if (f.a > f.c) {
            f = QuadForm{f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

QuadForm principal_form(const Int& disc) {
    Int r = mod_floor(disc, 4);
    if (disc >= 0 || (r != 0 && r != 1))
        throw std::invalid_argument("principal_form: not a negative discriminant");
    if (r == 0) return QuadForm{1, 0, -disc / 4};
    return QuadForm{1, 1, (1 - disc) / 4};
}

QuadForm opposite(const QuadForm& f) { return reduce(QuadForm{f.a, -f.b, f.c}); }

QuadForm form_with_leading_coprime_to(const QuadForm& f, const Int& m) {
    if (m == 0) throw std::invalid_argument("form_with_leading_coprime_to: zero modulus");
    Int mm = abs(m);
    if (mm == 1 || gcd_int(f.a, mm) == 1) return f;
    if (!f.primitive())
        throw std::invalid_argument("form_with_leading_coprime_to: form must be primitive");
    Int bound = 2 * mm + 3;
    for (Int s = 1; s <= bound; ++s) {
        for (Int x = -s; x <= s; ++x) {
            for (Int y = -s; y <= s; ++y) {
                if (abs(x) != s && abs(y) != s) continue;
                if (gcd_int(x, y) != 1) continue;
                Int v = eval_form(f, x, y);
                if (gcd_int(v, mm) != 1) continue;
                // Extend (x, y) to an SL2 matrix [[x, -t], [y, s0]].
                Int g, s0, t;
                mpz_gcdext(g.get_mpz_t(), s0.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
                           y.get_mpz_t());
                Int u = -t, w = s0;  // det = x*w - y*u = x*s0 + y*t = 1
                Int a2 = v;
                Int b2 = 2 * f.a * x * u + f.b * (x * w + u * y) + 2 * f.c * y * w;
                Int c2 = eval_form(f, u, w);
                return QuadForm{a2, b2, c2};
            }
        }
    }
    throw std::logic_error("form_with_leading_coprime_to: scan bound exceeded");
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
    Int D = f.disc();
    if (D != g.disc()) throw std::invalid_argument("compose: discriminant mismatch");
    if (D >= 0) throw std::invalid_argument("compose: discriminant must be negative");
    if (!f.primitive() || !g.primitive())
        throw std::invalid_argument("compose: forms must be primitive");
    QuadForm g2 = form_with_leading_coprime_to(g, f.a);
    // United representatives: align middle coefficients mod 2a1 and 2a2.
    Int B = crt_solve({{f.b, 2 * f.a}, {g2.b, 2 * g2.a}});
    Int A = f.a * g2.a;
    Int num = B * B - D;
    if (num % (4 * A) != 0) throw std::logic_error("compose: composite not integral");
    return reduce(QuadForm{A, B, num / (4 * A)});
}

bool ClassGroup::contains(const QuadForm& f) const {
    return std::binary_search(elements.begin(), elements.end(), f);
}

ClassGroup class_group_of_discriminant(const Int& disc) {
    Int r = mod_floor(disc, 4);
    if (disc >= 0 || (r != 0 && r != 1))
        throw std::invalid_argument("class_group: not a negative discriminant");
    ClassGroup cg;
    cg.disc = disc;
    for (Int a = 1; 3 * a * a <= -disc; ++a) {
        for (Int b = -a; b <= a; ++b) {
            if (mod_floor(b, 2) != mod_floor(disc, 2)) continue;
            Int num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            QuadForm f{a, b, c};
            if (!f.reduced() || !f.primitive()) continue;
            cg.elements.push_back(f);
        }
    }
    std::sort(cg.elements.begin(), cg.elements.end());
    return cg;
}

ClassGroup class_group(const QuadOrder& order) {
    return class_group_of_discriminant(order.disc());
}

Int class_number(const Int& disc) {
    return class_group_of_discriminant(disc).order();
}

Int IdealClassSet::total_size() const {
    Int n = 0;
    for (const auto& [c, grp] : strata) n += grp.order();
    return n;
}

IdealClassSet ideal_class_set(const QuadOrder& order) {
    IdealClassSet out{order, {}};
    for (const Int& cp : divisors(order.c))
        out.strata.emplace(cp, class_group_of_discriminant(cp * cp * order.L.disc()));
    return out;
}

QuadForm project(const QuadForm& cls, const QuadOrder& from, const Int& cprime) {
    if (cprime <= 0 || from.c % cprime != 0)
        throw std::invalid_argument("project: target conductor must divide the source conductor");
    if (cls.disc() != from.disc())
        throw std::invalid_argument("project: class has the wrong discriminant");
    if (cprime == from.c) return reduce(cls);

    Int t = from.c / cprime;
    Int disc_target = cprime * cprime * from.L.disc();
    QuadForm f = form_with_leading_coprime_to(reduce(cls), from.c);
    Int A = f.a;
    // Extend the ideal to the larger order: solve t B' = B (mod 2A) and keep
    // the solution compatible with the target discriminant.
    Int g = gcd_int(t, 2 * A);
    if (f.b % g != 0) throw std::logic_error("project: congruence not solvable");
    Int modulus = 2 * A / g;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(t / g).get_mpz_t(), modulus.get_mpz_t()) == 0 &&
        modulus != 1)
        throw std::logic_error("project: inversion failed");
    Int b0 = mod_floor((f.b / g) * inv, modulus);
    for (Int k = 0; k < g; ++k) {
        Int bp = b0 + k * modulus;
        Int num = bp * bp - disc_target;
        if (num % (4 * A) == 0) return reduce(QuadForm{A, bp, num / (4 * A)});
    }
    throw std::logic_error("project: no compatible middle coefficient");
}

QuadForm act(const QuadForm& J, const QuadOrder& order, const Int& cprime, const QuadForm& x) {
    if (cprime <= 0 || order.c % cprime != 0)
        throw std::invalid_argument("act: stratum conductor must divide the order conductor");
    Int disc_target = cprime * cprime * order.L.disc();
    if (x.disc() != disc_target) throw std::invalid_argument("act: element not in the stratum");
    return compose(project(J, order, cprime), x);
}

Int count_A_Dc(const Int& discD, const ImagQuadField& L, const Int& c,
               const std::vector<Int>& gamma) {
    if (discD <= 0 || !is_squarefree(discD))
        throw std::invalid_argument("count_A_Dc: bad discriminant");
    if (c <= 0) throw std::invalid_argument("count_A_Dc: conductor must be positive");
    std::set<Int> closure;
    for (const Int& g : gamma) {
        if (g <= 0 || c % g != 0)
            throw std::invalid_argument("count_A_Dc: gamma must consist of divisors of c");
        for (const Int& d : divisors(g)) closure.insert(d);
    }
    Int total = 0;
    for (const Int& cp : closure) total += class_number(cp * cp * L.disc());
    return total;
}

}  // namespace quatcm
