#pragma once

#include "quatcm/quat.hpp"

namespace quatcm {

/*
 * M = D tensor_Q L for L = Q(alpha) imaginary quadratic with alpha^2 = delta.
 * Elements are pairs (a, b) standing for a(x)1 + b(x)alpha; since 1(x)L is
 * central, (a1,b1)(a2,b2) = (a1 a2 + delta b1 b2, a1 b2 + b1 a2).
 */
struct TensorAlgebra {
    QuatAlgebra D;
    Rat delta;

    TensorAlgebra(const QuatAlgebra& D_, const Rat& delta_) : D(D_), delta(delta_) {
        if (delta >= 0) throw std::invalid_argument("TensorAlgebra: delta must be negative");
    }

    bool operator==(const TensorAlgebra& o) const = default;
};

// An element of L presented in the basis 1, alpha.
using LElement = std::pair<Rat, Rat>;

class TensorElement {
  public:
    TensorElement(const TensorAlgebra& parent, const QuatElement& a, const QuatElement& b);

    static TensorElement zero(const TensorAlgebra& parent);
    static TensorElement one(const TensorAlgebra& parent);

    const TensorAlgebra& parent() const { return parent_; }
    const QuatElement& a() const { return a_; }
    const QuatElement& b() const { return b_; }

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;
    bool operator==(const TensorElement& o) const;

  private:
    TensorAlgebra parent_;
    QuatElement a_, b_;
};

TensorElement tmul(const TensorElement& x, const TensorElement& y);
TensorElement tconj(const TensorElement& x);
LElement ttrace(const TensorElement& x);
// Reduced norm over L; throws if x * tconj(x) fails to be an L-scalar
// (cannot happen for well-formed elements).
LElement tnorm(const TensorElement& x);

/*
 * A non-trivial idempotent of M: e^2 = e, ttrace(e) = 1, tnorm(e) = 0 and
 * tconj(e) = 1 - e.  Construction validates all four.
 */
class Idempotent {
  public:
    explicit Idempotent(const TensorElement& e);

    const TensorElement& element() const { return e_; }
    const TensorAlgebra& parent() const { return e_.parent(); }
    // Complement 1 - e.
    TensorElement complement() const;

    bool operator==(const Idempotent& o) const { return e_ == o.e_; }

  private:
    TensorElement e_;
};

// e = (1/2) (1(x)1 + g^{-1}(x)alpha) for the trace-zero g with g^2 = delta.
// The embedding's delta must equal the tensor algebra's delta exactly.
Idempotent idempotent_from_embedding(const TensorAlgebra& M, const Embedding& g);

// Recovers g = a b^{-1} from e = a(x)1 + b(x)alpha; requires b invertible.
Embedding embedding_from_idempotent(const Idempotent& e);

// Replacing alpha by lambda*alpha maps (a, b) to (a, b/lambda) and delta to
// lambda^2 delta; the induced embedding of the field is unchanged.
Idempotent rescale_alpha(const Idempotent& e, const Rat& lambda);

/*
 * The product identities tying an idempotent e = x1(x)1 + x2(x)alpha to the
 * embedding image i(alpha) = x1 x2^{-1} = g:
 *   1. econj * i(a) = econj * i(a) * econj = econj * (-1(x)alpha)
 *   2. e * i(a) * e = e * (1(x)alpha)
 *   3. e * i(a) * econj = i(a)(conj(x1)-x1)(x)1 + (conj(x1)-x1)(x)alpha
 *   4. (e - econj) * i(a) - 1(x)alpha = e * i(a) * econj
 *   aux. econj * i(a) * e = 0
 */
struct IotaIdentityReport {
    bool id1 = false;
    bool id2 = false;
    bool id3 = false;
    bool id4 = false;
    bool aux = false;

    bool all() const { return id1 && id2 && id3 && id4 && aux; }
};

IotaIdentityReport verify_iota_identities(const Embedding& g, const Idempotent& e);

// An element u with u g = -g u and u^2 a nonzero scalar, integer coordinates,
// chosen deterministically from the anticommutant's basis.
QuatElement anticommuting_unit(const Embedding& g);

}  // namespace quatcm
