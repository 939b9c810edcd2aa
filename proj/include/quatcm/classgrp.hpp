#pragma once

#include <map>
#include <vector>

#include "quatcm/orders.hpp"

namespace quatcm {

/*
 * Integral binary quadratic form A x^2 + B xy + C y^2 of negative
 * discriminant with A > 0.  Reduced means |B| <= A <= C with B >= 0 whenever
 * |B| = A or A = C; each class of forms has a unique reduced representative.
 */
struct QuadForm {
    Int a, b, c;

    Int disc() const { return b * b - 4 * a * c; }
    bool primitive() const { return gcd_int(gcd_int(a, b), c) == 1; }
    bool reduced() const;

    bool operator==(const QuadForm& o) const = default;
    bool operator<(const QuadForm& o) const;
};

QuadForm reduce(QuadForm f);

// The identity class: (1, 0, -D/4) or (1, 1, (1-D)/4).
QuadForm principal_form(const Int& disc);

// The inverse class of f.
QuadForm opposite(const QuadForm& f);

// Gauss composition of primitive forms of equal discriminant, returned
// reduced.  Implemented through united representatives: g is moved to a
// form with leading coefficient coprime to that of f, the middle
// coefficients are aligned by CRT, and the composite is read off directly.
QuadForm compose(const QuadForm& f, const QuadForm& g);

// An equivalent form whose leading coefficient is coprime to m, found by a
// deterministic scan over represented values.
QuadForm form_with_leading_coprime_to(const QuadForm& f, const Int& m);

// Evaluate f at (x, y).
Int eval_form(const QuadForm& f, const Int& x, const Int& y);

struct ClassGroup {
    Int disc;
    std::vector<QuadForm> elements;  // reduced, sorted

    const QuadForm& identity() const { return elements.front(); }
    Int order() const { return Int(elements.size()); }
    bool contains(const QuadForm& f) const;
};

ClassGroup class_group_of_discriminant(const Int& disc);
ClassGroup class_group(const QuadOrder& order);
Int class_number(const Int& disc);

/*
 * Id(O_{L,c}) up to isomorphism: classes stratified by multiplicator ring.
 * The stratum of conductor c' | c is Pic(O_{L,c'}); the total size is the
 * sum of the class numbers h(c'^2 disc(L)) over divisors c' of c.
 */
struct IdealClassSet {
    QuadOrder order;
    std::map<Int, ClassGroup> strata;

    Int total_size() const;
};

IdealClassSet ideal_class_set(const QuadOrder& order);

// Extension of classes to the order of conductor c' | c: a surjective group
// homomorphism Pic(O_{L,c}) -> Pic(O_{L,c'}).
QuadForm project(const QuadForm& cls, const QuadOrder& from, const Int& cprime);

// The Picard action on the stratum of conductor c': J.x = project(J, c') * x.
QuadForm act(const QuadForm& J, const QuadOrder& order, const Int& cprime, const QuadForm& x);

// |A_{D,c}| given the attained conductor set gamma: the divisor-closure of
// gamma is formed and the class numbers of its strata are summed.
Int count_A_Dc(const Int& discD, const ImagQuadField& L, const Int& c,
               const std::vector<Int>& gamma);

}  // namespace quatcm
