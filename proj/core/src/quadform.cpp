#include "baut/quadform.hpp"

namespace baut {

QuadFormClass standard_family(std::size_t h, FormSign sign) {
    if (h < 1) throw invalid_input("standard_family: rank must be at least 1");
    IntMatrix q(h, h);
    for (std::size_t j = 0; j < h; ++j) q(0, j) = 4;
    for (std::size_t i = 1; i < h; ++i)
        for (std::size_t j = i; j < h; ++j) q(i, j) = 2;
    if (sign == FormSign::minus) q = -q;
    return QuadFormClass{h, std::move(q), sign};
}

bool within_certified_range(std::size_t h) { return h >= 1 && h <= 8; }

SymmetrizedForm symmetrize(const QuadFormClass& f) {
    SymmetrizedForm s;
    s.a = f.q + f.q.transposed();
    s.det = determinant(s.a);
    // Leading principal minors decide definiteness exactly.
    const std::size_t n = s.a.rows();
    bool pos = true, neg = true;
    for (std::size_t k = 1; k <= n && (pos || neg); ++k) {
        IntMatrix mk(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) mk(i, j) = s.a(i, j);
        const Int dk = determinant(mk);
        if (dk <= 0) pos = false;
        if ((k % 2 == 1 && dk >= 0) || (k % 2 == 0 && dk <= 0)) neg = false;
    }
    s.definiteness = pos   ? Definiteness::positive
                     : neg ? Definiteness::negative
                           : Definiteness::indefinite;
    return s;
}

bool qplus_equivalent(const QuadFormClass& f1, const QuadFormClass& f2) {
    if (f1.h != f2.h) throw invalid_input("qplus_equivalent: rank mismatch");
    return (f1.q - f2.q).is_antisymmetric();
}

QuadFormClass change_basis(const QuadFormClass& f, const IntMatrix& p) {
    if (!p.square() || p.rows() != f.h)
        throw invalid_input("change_basis: transform has wrong size");
    if (!is_unimodular(p)) throw invalid_input("change_basis: transform is not unimodular");
    return QuadFormClass{f.h, p.transposed() * f.q * p, f.sign};
}

Int evaluate(const QuadFormClass& f, const IntVector& x) {
    if (x.size() != f.h) throw invalid_input("evaluate: vector length mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < f.h; ++i)
        for (std::size_t j = 0; j < f.h; ++j) acc += x[i] * f.q(i, j) * x[j];
    return acc;
}

} // namespace baut
