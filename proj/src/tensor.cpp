#include "quatcm/tensor.hpp"

#include "quatcm/linalg.hpp"

namespace quatcm {

TensorElement::TensorElement(const TensorAlgebra& parent, const QuatElement& a,
                             const QuatElement& b)
    : parent_(parent), a_(a), b_(b) {
    if (!(a.algebra() == parent.D) || !(b.algebra() == parent.D))
        throw std::invalid_argument("TensorElement: components from a different algebra");
}

TensorElement TensorElement::zero(const TensorAlgebra& parent) {
    return {parent, QuatElement::zero(parent.D), QuatElement::zero(parent.D)};
}

TensorElement TensorElement::one(const TensorAlgebra& parent) {
    return {parent, QuatElement::one(parent.D), QuatElement::zero(parent.D)};
}

namespace {
void require_same_parent(const TensorElement& x, const TensorElement& y) {
    if (!(x.parent() == y.parent()))
        throw std::invalid_argument("tensor elements from different algebras");
}
}  // namespace

TensorElement TensorElement::operator+(const TensorElement& o) const {
    require_same_parent(*this, o);
    return {parent_, a_ + o.a_, b_ + o.b_};
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    require_same_parent(*this, o);
    return {parent_, a_ - o.a_, b_ - o.b_};
}

TensorElement TensorElement::operator*(const TensorElement& o) const { return tmul(*this, o); }

bool TensorElement::operator==(const TensorElement& o) const {
    return parent_ == o.parent_ && a_ == o.a_ && b_ == o.b_;
}

TensorElement tmul(const TensorElement& x, const TensorElement& y) {
    require_same_parent(x, y);
    const Rat& delta = x.parent().delta;
    QuatElement a = x.a() * y.a() + (x.b() * y.b()) * delta;
    QuatElement b = x.a() * y.b() + x.b() * y.a();
    return {x.parent(), a, b};
}

TensorElement tconj(const TensorElement& x) {
    return {x.parent(), conj(x.a()), conj(x.b())};
}

LElement ttrace(const TensorElement& x) { return {trace(x.a()), trace(x.b())}; }

LElement tnorm(const TensorElement& x) {
    TensorElement prod = tmul(x, tconj(x));
    if (!prod.a().is_scalar() || !prod.b().is_scalar())
        throw std::logic_error("tnorm: x * conj(x) is not an L-scalar");
    return {prod.a()[0], prod.b()[0]};
}

Idempotent::Idempotent(const TensorElement& e) : e_(e) {
    if (!(tmul(e, e) == e)) throw std::invalid_argument("Idempotent: e^2 != e");
    if (ttrace(e) != LElement{Rat(1), Rat(0)})
        throw std::invalid_argument("Idempotent: reduced trace must be 1");
    if (tnorm(e) != LElement{Rat(0), Rat(0)})
        throw std::invalid_argument("Idempotent: reduced norm must be 0");
    if (!(tconj(e) == TensorElement::one(e.parent()) - e))
        throw std::invalid_argument("Idempotent: conjugate must be the complement");
}

TensorElement Idempotent::complement() const {
    return TensorElement::one(e_.parent()) - e_;
}

Idempotent idempotent_from_embedding(const TensorAlgebra& M, const Embedding& g) {
    if (!(g.algebra() == M.D))
        throw std::invalid_argument("idempotent_from_embedding: algebra mismatch");
    if (g.delta != M.delta)
        throw std::invalid_argument("idempotent_from_embedding: delta mismatch");
    Rat half(1, 2);
    QuatElement a = QuatElement::one(M.D) * half;
    QuatElement b = qinv(g.image) * half;
    return Idempotent{TensorElement{M, a, b}};
}

Embedding embedding_from_idempotent(const Idempotent& e) {
    const QuatElement& b = e.element().b();
    if (b.is_zero() || norm(b) == 0)
        throw std::domain_error(
            "embedding_from_idempotent: degenerate idempotent (alpha-component not invertible)");
    QuatElement g = e.element().a() * qinv(b);
    Embedding emb = embedding_from_element(g);
    if (emb.delta != e.parent().delta)
        throw std::logic_error("embedding_from_idempotent: recovered square disagrees with delta");
    return emb;
}

Idempotent rescale_alpha(const Idempotent& e, const Rat& lambda) {
    if (lambda == 0) throw std::invalid_argument("rescale_alpha: lambda must be nonzero");
    TensorAlgebra scaled{e.parent().D, lambda * lambda * e.parent().delta};
    QuatElement b = e.element().b() * (1 / lambda);
    return Idempotent{TensorElement{scaled, e.element().a(), b}};
}

IotaIdentityReport verify_iota_identities(const Embedding& g, const Idempotent& e) {
    const TensorAlgebra& M = e.parent();
    if (!(g.algebra() == M.D) || g.delta != M.delta)
        throw std::invalid_argument("verify_iota_identities: embedding does not match parent");
    const QuatElement& x1 = e.element().a();
    const QuatElement& x2 = e.element().b();
    if (x2.is_zero() || norm(x2) == 0)
        throw std::invalid_argument("verify_iota_identities: alpha-component not invertible");
    if (!(x1 * qinv(x2) == g.image))
        throw std::invalid_argument("verify_iota_identities: e is not associated to g");

    TensorElement iota{M, g.image, QuatElement::zero(M.D)};
    TensorElement alpha{M, QuatElement::zero(M.D), QuatElement::one(M.D)};
    TensorElement E = e.element();
    TensorElement Ebar = e.complement();

    IotaIdentityReport rep;
    TensorElement lhs1 = Ebar * iota;
    rep.id1 = (lhs1 == Ebar * iota * Ebar) && (lhs1 == Ebar * (TensorElement::zero(M) - alpha));
    rep.id2 = (E * iota * E == E * alpha);

    QuatElement d1 = conj(x1) - x1;
    TensorElement rhs3{M, g.image * d1, d1};
    TensorElement lhs3 = E * iota * Ebar;
    rep.id3 = (lhs3 == rhs3);
    rep.id4 = ((E - Ebar) * iota - alpha == lhs3);
    rep.aux = (Ebar * iota * E == TensorElement::zero(M));
    return rep;
}

QuatElement anticommuting_unit(const Embedding& g) {
    const QuatAlgebra& A = g.algebra();
    // u g + g u = 0 is linear in the coordinates of u; the solution space is
    // two-dimensional for a non-central trace-zero g.
    linalg::QMat sys(4, linalg::QVec(4));
    for (size_t m = 0; m < 4; ++m) {
        std::array<Rat, 4> coords{Rat(0), Rat(0), Rat(0), Rat(0)};
        coords[m] = 1;
        QuatElement em{A, coords};
        QuatElement w = em * g.image + g.image * em;
        for (size_t r = 0; r < 4; ++r) sys[r][m] = w[r];
    }
    std::vector<linalg::QVec> basis = linalg::nullspace(sys);
    if (basis.size() != 2)
        throw std::domain_error("anticommuting_unit: anticommutant is not two-dimensional");

    auto to_element = [&](const linalg::QVec& v) {
        return QuatElement{A, v[0], v[1], v[2], v[3]};
    };
    std::vector<QuatElement> candidates{to_element(basis[0]), to_element(basis[1]),
                                        to_element(basis[0]) + to_element(basis[1])};
    for (const QuatElement& u : candidates) {
        if (norm(u) == 0) continue;
        // Clear denominators to integer coordinates.
        Int den = 1;
        for (size_t k = 0; k < 4; ++k) den = lcm_int(den, u[k].get_den());
        return u * Rat(den);
    }
    throw std::logic_error("anticommuting_unit: no candidate with nonzero square");
}

}  // namespace quatcm
