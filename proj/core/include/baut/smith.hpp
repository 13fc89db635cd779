#pragma once

#include "baut/matrix.hpp"

namespace baut {

/// Smith normal form u * m * v = s with u, v unimodular, s diagonal with
/// nonnegative entries d_1 | d_2 | ... The transforms are whatever the pivot
/// sequence yields; downstream results are basis-independent.
struct SnfDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
    /// Diagonal of s in divisibility order (includes unit and zero factors).
    std::vector<Int> invariant_factors;
};

SnfDecomposition snf(const IntMatrix& m);

} // namespace baut
