#pragma once

#include <array>
#include <string>

#include "quatcm/arith.hpp"

namespace quatcm {

/*
 * The rational quaternion algebra with basis 1, i, j, ij and relations
 * i^2 = a, j^2 = b, ij = -ji.
 */
struct QuatAlgebra {
    Rat a;
    Rat b;

    QuatAlgebra(const Rat& a_, const Rat& b_) : a(a_), b(b_) {
        if (a == 0 || b == 0)
            throw std::invalid_argument("QuatAlgebra: structure constants must be nonzero");
    }

    bool operator==(const QuatAlgebra& o) const = default;
};

class QuatElement {
  public:
    QuatElement(const QuatAlgebra& alg, const Rat& x0, const Rat& x1, const Rat& x2,
                const Rat& x3)
        : alg_(alg), c_{x0, x1, x2, x3} {}
    QuatElement(const QuatAlgebra& alg, const std::array<Rat, 4>& c) : alg_(alg), c_(c) {}

    static QuatElement zero(const QuatAlgebra& alg) { return {alg, 0, 0, 0, 0}; }
    static QuatElement one(const QuatAlgebra& alg) { return {alg, 1, 0, 0, 0}; }
    static QuatElement scalar(const QuatAlgebra& alg, const Rat& s) { return {alg, s, 0, 0, 0}; }

    const QuatAlgebra& algebra() const { return alg_; }
    const Rat& operator[](size_t k) const { return c_[k]; }
    const std::array<Rat, 4>& coords() const { return c_; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    // True when the element lies in Q.1.
    bool is_scalar() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    QuatElement operator+(const QuatElement& o) const;
    QuatElement operator-(const QuatElement& o) const;
    QuatElement operator-() const;
    QuatElement operator*(const QuatElement& o) const;
    QuatElement operator*(const Rat& s) const;
    bool operator==(const QuatElement& o) const;

    std::string str() const;

  private:
    QuatAlgebra alg_;
    std::array<Rat, 4> c_;
};

QuatElement qmul(const QuatElement& x, const QuatElement& y);
QuatElement conj(const QuatElement& x);
Rat trace(const QuatElement& x);
Rat norm(const QuatElement& x);
QuatElement qinv(const QuatElement& x);

/*
 * A trace-zero generator of a quadratic subfield: the element g determines
 * the embedding of Q(sqrt(delta)) sending sqrt(delta) to g, where
 * delta = g^2 = -norm(g).
 */
struct Embedding {
    QuatElement image;
    Rat delta;

    const QuatAlgebra& algebra() const { return image.algebra(); }
};

Embedding embedding_from_element(const QuatElement& g);

}  // namespace quatcm
