#pragma once

#include <cstddef>

#include "baut/matrix.hpp"

namespace baut {

enum class FormSign { plus, minus };

/// A class [Q] in Q_+(Z^h), held through one integer representative matrix.
/// Two representatives describe the same class exactly when they differ by
/// an antisymmetric matrix.
struct QuadFormClass {
    std::size_t h = 0;  // rank; the nonorientable genus for the standard family
    IntMatrix q;        // h x h representative
    FormSign sign = FormSign::plus;
};

enum class Definiteness { positive, negative, indefinite };

/// The symmetric bilinear form A = Q + Q^T together with its exact
/// determinant and definiteness.
struct SymmetrizedForm {
    IntMatrix a;
    Definiteness definiteness = Definiteness::indefinite;
    Int det;

    bool definite() const { return definiteness != Definiteness::indefinite; }
};

/// The genus-indexed family: first row all 4, rows 2..h carry 2 on and above
/// the diagonal, 0 below; negated when sign == minus. Ranks outside 1..8 are
/// allowed but fall outside the certified range (see within_certified_range).
QuadFormClass standard_family(std::size_t h, FormSign sign = FormSign::plus);

/// The triviality criterion is only asserted for 1 <= h <= 8.
bool within_certified_range(std::size_t h);

SymmetrizedForm symmetrize(const QuadFormClass& f);

/// True iff q1 - q2 is antisymmetric, i.e. the representatives define the
/// same class in Q_+(Z^h); equivalently the symmetrizations coincide.
bool qplus_equivalent(const QuadFormClass& f1, const QuadFormClass& f2);

/// Representative p^T q p; p must be unimodular of size h.
QuadFormClass change_basis(const QuadFormClass& f, const IntMatrix& p);

/// x^T q x
Int evaluate(const QuadFormClass& f, const IntVector& x);

} // namespace baut
