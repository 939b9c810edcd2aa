#include "quatcm/quat.hpp"

namespace quatcm {

namespace {
void require_same_algebra(const QuatElement& x, const QuatElement& y) {
    if (!(x.algebra() == y.algebra()))
        throw std::invalid_argument("quaternion elements from different algebras");
}
}  // namespace

QuatElement QuatElement::operator+(const QuatElement& o) const {
    require_same_algebra(*this, o);
    return {alg_, c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
}

QuatElement QuatElement::operator-(const QuatElement& o) const {
    require_same_algebra(*this, o);
    return {alg_, c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
}

QuatElement QuatElement::operator-() const { return {alg_, -c_[0], -c_[1], -c_[2], -c_[3]}; }

QuatElement QuatElement::operator*(const QuatElement& o) const { return qmul(*this, o); }

QuatElement QuatElement::operator*(const Rat& s) const {
    return {alg_, c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s};
}

bool QuatElement::operator==(const QuatElement& o) const {
    return alg_ == o.alg_ && c_ == o.c_;
}

std::string QuatElement::str() const {
    std::string s = "(";
    for (size_t k = 0; k < 4; ++k) {
        if (k) s += ", ";
        s += c_[k].get_str();
    }
    return s + ")";
}

QuatElement qmul(const QuatElement& x, const QuatElement& y) {
    require_same_algebra(x, y);
    const QuatAlgebra& A = x.algebra();
    const Rat &a = A.a, &b = A.b;
    const auto& u = x.coords();
    const auto& v = y.coords();
    Rat z0 = u[0] * v[0] + a * u[1] * v[1] + b * u[2] * v[2] - a * b * u[3] * v[3];
    Rat z1 = u[0] * v[1] + u[1] * v[0] - b * u[2] * v[3] + b * u[3] * v[2];
    Rat z2 = u[0] * v[2] + u[2] * v[0] + a * u[1] * v[3] - a * u[3] * v[1];
    Rat z3 = u[0] * v[3] + u[3] * v[0] + u[1] * v[2] - u[2] * v[1];
    return {A, z0, z1, z2, z3};
}

QuatElement conj(const QuatElement& x) {
    return {x.algebra(), x[0], -x[1], -x[2], -x[3]};
}

Rat trace(const QuatElement& x) { return 2 * x[0]; }

Rat norm(const QuatElement& x) {
    const Rat &a = x.algebra().a, &b = x.algebra().b;
    return x[0] * x[0] - a * x[1] * x[1] - b * x[2] * x[2] + a * b * x[3] * x[3];
}

QuatElement qinv(const QuatElement& x) {
    Rat n = norm(x);
    if (n == 0) throw std::domain_error("non-invertible element");
    return conj(x) * (1 / n);
}

Embedding embedding_from_element(const QuatElement& g) {
    if (g.is_zero()) throw std::invalid_argument("embedding_from_element: zero element");
    if (trace(g) != 0)
        throw std::invalid_argument("embedding_from_element: element must have trace zero");
    return Embedding{g, -norm(g)};
}

}  // namespace quatcm
