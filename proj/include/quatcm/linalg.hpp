#pragma once

#include <optional>
#include <vector>

#include "quatcm/arith.hpp"

// Small exact linear algebra over Q and Z.  Everything here works on the
// tiny matrices that arise from rank-4 lattices; no attempt at asymptotics.
namespace quatcm::linalg {

using QVec = std::vector<Rat>;
using QMat = std::vector<std::vector<Rat>>;
using ZVec = std::vector<Int>;
using ZMat = std::vector<std::vector<Int>>;

QMat transpose(const QMat& a);
ZMat transpose(const ZMat& a);

Rat det(QMat a);

// Unique solution of the square system a x = b; nullopt if a is singular.
std::optional<QVec> solve_square(QMat a, QVec b);

// Consistent overdetermined system (full column rank); throws if inconsistent.
QVec solve_full_column_rank(const QMat& a, const QVec& b);

// Basis of the right kernel { x : a x = 0 } over Q.
std::vector<QVec> nullspace(QMat a);

long rank(QMat a);

// Row-style Hermite normal form of the lattice generated by the rows of a.
// Zero rows are dropped; pivots are positive and entries above a pivot are
// reduced into [0, pivot).  The result is the unique canonical basis.
ZMat hnf_rows(ZMat a);

// Basis (as rows) of { x in Z^n : a x = 0 } for an integer matrix a (m x n).
// The returned lattice is saturated.
ZMat kernel_int(const ZMat& a);

// Basis (as rows) of the lattice { x in Q^n : m x in Z^k }.
// m must have full column rank n.
QMat integral_preimage(const QMat& m);

}  // namespace quatcm::linalg
