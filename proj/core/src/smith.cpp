#include "baut/smith.hpp"

#include <cstdlib>

namespace baut {

namespace {

// Position of the nonzero entry of least absolute value in s[t.., t..],
// scanning row-major so the choice is deterministic.
bool least_abs_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs(s(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SnfDecomposition snf(const IntMatrix& m) {
    if (m.rows() == 0) throw invalid_input("snf: empty matrix");
    const std::size_t nr = m.rows(), nc = m.cols();
    SnfDecomposition d;
    d.s = m;
    d.u = IntMatrix::identity(nr);
    d.v = IntMatrix::identity(nc);
    IntMatrix& s = d.s;

    const std::size_t steps = nr < nc ? nr : nc;
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi = t, pj = t;
        if (!least_abs_pivot(s, t, pi, pj)) break; // remaining block is zero
        s.swap_rows(t, pi);
        d.u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        d.v.swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot. Pivoting by least absolute
            // value keeps the Euclidean remainders shrinking.
            bool changed = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (s(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
                if (q != 0) {
                    s.add_row(i, t, -q);
                    d.u.add_row(i, t, -q);
                }
                if (s(i, t) != 0) { // remainder strictly smaller; make it the pivot
                    s.swap_rows(t, i);
                    d.u.swap_rows(t, i);
                    changed = true;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (s(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
                if (q != 0) {
                    s.add_col(j, t, -q);
                    d.v.add_col(j, t, -q);
                }
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    d.v.swap_cols(t, j);
                    changed = true;
                }
            }
            if (changed) continue;

            // Pivot must divide every entry of the trailing block, otherwise
            // fold an offending row in and keep reducing.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < nr && divides_all; ++i)
                for (std::size_t j = t + 1; j < nc; ++j) {
                    if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
                        s.add_row(t, i, 1);
                        d.u.add_row(t, i, 1);
                        divides_all = false;
                        break;
                    }
                }
            if (divides_all) break;
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            d.u.negate_row(t);
        }
    }

    const std::size_t diag = nr < nc ? nr : nc;
    d.invariant_factors.resize(diag);
    for (std::size_t i = 0; i < diag; ++i) d.invariant_factors[i] = s(i, i);
    return d;
}

} // namespace baut
