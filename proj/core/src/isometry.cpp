#include "baut/isometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>

#include "search_support.hpp"

namespace baut {

namespace {

// Coefficients q with Q(x) = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2,
// obtained by exact rational elimination. Throws unless the form is positive
// definite (every pivot must stay positive).
std::vector<std::vector<Rat>> ldl_coefficients(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = a(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i][i] <= 0)
            throw invalid_input("short-vector enumeration requires a positive definite form");
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    return q;
}

// Largest integer x with (x+u <= 0) or (x+u)^2 <= w, i.e. floor(-u + sqrt(w)).
// Double guess, exact fixup.
long long upper_root_bound(const Rat& u, const Rat& w) {
    auto pred = [&](long long x) {
        Rat s = Rat(x) + u;
        return s <= 0 || s * s <= w;
    };
    long long x = std::llround(-u.get_d() + std::sqrt(std::max(0.0, w.get_d())));
    while (pred(x + 1)) ++x;
    while (!pred(x)) --x;
    return x;
}

// Smallest integer x with (x+u >= 0) or (x+u)^2 <= w, i.e. ceil(-u - sqrt(w)).
long long lower_root_bound(const Rat& u, const Rat& w) {
    auto pred = [&](long long x) {
        Rat s = Rat(x) + u;
        return s >= 0 || s * s <= w;
    };
    long long x = std::llround(-u.get_d() - std::sqrt(std::max(0.0, w.get_d())));
    while (!pred(x)) ++x;
    while (pred(x - 1)) --x;
    return x;
}

} // namespace

std::vector<std::vector<std::int32_t>> short_vectors(const IntMatrix& a, const Int& norm) {
    if (!a.square() || a.rows() == 0) throw invalid_input("short_vectors: matrix must be square");
    const std::size_t n = a.rows();
    const auto q = ldl_coefficients(a);
    std::vector<std::vector<std::int32_t>> out;
    if (norm <= 0) return out;

    std::vector<long long> x(n, 0);
    // Coordinates are fixed from the last index down; the decomposition
    // telescopes so each level sees an exact remaining budget.
    auto rec = [&](auto&& self, std::size_t level, const Rat& budget) -> void {
        const std::size_t i = level - 1;
        Rat u = 0;
        for (std::size_t j = i + 1; j < n; ++j) u += q[i][j] * Rat((long)x[j]);
        const Rat w = budget / q[i][i];
        const long long lo = lower_root_bound(u, w);
        const long long hi = upper_root_bound(u, w);
        for (long long xi = lo; xi <= hi; ++xi) {
            Rat s = Rat(xi) + u;
            Rat rest = budget - q[i][i] * s * s;
            if (rest < 0) continue;
            x[i] = xi;
            if (i == 0) {
                if (rest == 0) {
                    std::vector<std::int32_t> v(n);
                    for (std::size_t t = 0; t < n; ++t) {
                        if (x[t] < INT32_MIN || x[t] > INT32_MAX)
                            throw invalid_input("short_vectors: coordinate out of range");
                        v[t] = static_cast<std::int32_t>(x[t]);
                    }
                    out.push_back(std::move(v));
                }
            } else {
                self(self, i, rest);
            }
        }
        x[i] = 0;
    };
    rec(rec, n, Rat(norm));
    return out;
}

IsometrySet::IsometrySet(SymmetrizedForm form, std::size_t dim, std::vector<std::int32_t> flat)
    : form_(std::move(form)), dim_(dim), flat_(std::move(flat)) {
    detail::sort_flat_blocks(flat_, dim_ * dim_);
}

IsometrySet IsometrySet::from_matrices(SymmetrizedForm form, const std::vector<IntMatrix>& elements) {
    const std::size_t n = form.a.rows();
    std::vector<std::int32_t> flat;
    flat.reserve(elements.size() * n * n);
    for (const auto& g : elements) {
        if (g.rows() != n || g.cols() != n)
            throw invalid_input("IsometrySet: element has wrong dimensions");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!g(i, j).fits_sint_p())
                    throw invalid_input("IsometrySet: entry out of range");
                flat.push_back(static_cast<std::int32_t>(g(i, j).get_si()));
            }
    }
    return IsometrySet(std::move(form), n, std::move(flat));
}

IntMatrix IsometrySet::matrix(std::size_t i) const {
    IntMatrix g(dim_, dim_);
    const auto r = raw(i);
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b) g(a, b) = r[a * dim_ + b];
    return g;
}

bool IsometrySet::contains(const IntMatrix& g) const {
    if (g.rows() != dim_ || g.cols() != dim_) return false;
    std::vector<std::int32_t> key(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!g(i, j).fits_sint_p()) return false;
            key[i * dim_ + j] = static_cast<std::int32_t>(g(i, j).get_si());
        }
    return contains_raw(key);
}

bool IsometrySet::contains_raw(std::span<const std::int32_t> g) const {
    if (g.size() != dim_ * dim_) return false;
    return detail::flat_blocks_contain(flat_, dim_ * dim_, g.data());
}

IsometrySet enumerate_isometries(const SymmetrizedForm& a, const SearchOptions& opts) {
    if (!a.a.square() || a.a.rows() == 0)
        throw invalid_input("enumerate_isometries: form must be square and nonempty");
    if (!a.definite())
        throw invalid_input("enumerate_isometries: form must be definite (the vector sets are infinite otherwise)");
    SymmetrizedForm work = a;
    if (a.definiteness == Definiteness::negative) {
        work.a = -a.a; // Aut(A) = Aut(-A)
        work.definiteness = Definiteness::positive;
    }
    const std::size_t n = work.a.rows();

    // Candidate vectors per distinct diagonal norm, shared across columns.
    std::map<Int, std::vector<std::vector<std::int32_t>>> by_norm;
    for (std::size_t j = 0; j < n; ++j) {
        const Int& norm = work.a(j, j);
        if (norm <= 0) throw invalid_input("enumerate_isometries: form must be definite");
        if (!by_norm.count(norm)) by_norm[norm] = short_vectors(work.a, norm);
    }

    // Everything below runs on int64; reject inputs where Gram products
    // could overflow.
    Int max_a = 0, max_c = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int v = abs(work.a(i, j));
            if (v > max_a) max_a = v;
        }
    for (const auto& [norm, vecs] : by_norm)
        for (const auto& v : vecs)
            for (std::int32_t c : v)
                if (Int t = abs(Int(c)); t > max_c) max_c = t;
    if (Int(n) * max_a * max_c * max_c > (Int(1) << 62))
        throw invalid_input("enumerate_isometries: entries too large for exact fast path");

    std::vector<std::int64_t> a64(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a64[i * n + j] = work.a(i, j).get_si();

    // Per column: candidate vectors plus cached A*v rows for O(n) pair checks.
    struct ColumnCands {
        std::size_t count = 0;
        std::vector<std::int32_t> v;    // count * n
        std::vector<std::int64_t> av;   // count * n
    };
    std::map<Int, ColumnCands> packs;
    for (auto& [norm, vecs] : by_norm) {
        ColumnCands p;
        p.count = vecs.size();
        p.v.reserve(vecs.size() * n);
        p.av.reserve(vecs.size() * n);
        for (const auto& v : vecs) {
            for (std::size_t i = 0; i < n; ++i) p.v.push_back(v[i]);
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += a64[i * n + j] * v[j];
                p.av.push_back(acc);
            }
        }
        packs[norm] = std::move(p);
    }
    std::vector<const ColumnCands*> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = &packs[work.a(j, j)];

    detail::CancelToken token(opts.deadline);
    const unsigned threads = detail::resolve_threads(opts.threads);
    std::atomic<std::size_t> next_first{0};
    std::vector<std::vector<std::int32_t>> results(threads);

    auto worker = [&](unsigned wid) {
        unsigned tick = 0;
        std::vector<std::int32_t>& out = results[wid];
        std::vector<const std::int32_t*> chosen(n);

        // filtered[d][j]: candidate indices for column j still compatible
        // with the columns fixed at depths < d.
        std::vector<std::vector<std::vector<std::uint32_t>>> filtered(n + 1);
        for (std::size_t d = 0; d <= n; ++d) filtered[d].resize(n);
        std::vector<std::vector<std::uint32_t>> full(n);
        for (std::size_t j = 1; j < n; ++j) {
            full[j].resize(col[j]->count);
            for (std::uint32_t c = 0; c < col[j]->count; ++c) full[j][c] = c;
        }

        auto descend = [&](auto&& self, std::size_t d) -> void {
            if (token.poll(tick)) return;
            if (d == n) {
                const std::size_t base = out.size();
                out.resize(base + n * n);
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t r = 0; r < n; ++r) out[base + r * n + c] = chosen[c][r];
                return;
            }
            for (std::uint32_t idx : filtered[d][d]) {
                chosen[d] = col[d]->v.data() + std::size_t(idx) * n;
                const std::int64_t* aw = col[d]->av.data() + std::size_t(idx) * n;
                bool viable = true;
                for (std::size_t j = d + 1; j < n && viable; ++j) {
                    auto& dst = filtered[d + 1][j];
                    dst.clear();
                    const std::int64_t target = a64[d * n + j];
                    for (std::uint32_t cand : filtered[d][j]) {
                        const std::int32_t* v = col[j]->v.data() + std::size_t(cand) * n;
                        std::int64_t acc = 0;
                        for (std::size_t t = 0; t < n; ++t) acc += aw[t] * v[t];
                        if (acc == target) dst.push_back(cand);
                    }
                    if (dst.empty()) viable = false;
                }
                if (viable) self(self, d + 1);
                if (token.expired()) return;
            }
        };

        // Workers claim first-column candidates through a shared counter;
        // the final canonical sort makes the schedule irrelevant.
        for (;;) {
            const std::size_t first = next_first.fetch_add(1, std::memory_order_relaxed);
            if (first >= col[0]->count || token.expired()) break;
            filtered[0][0].assign(1, static_cast<std::uint32_t>(first));
            for (std::size_t j = 1; j < n; ++j) filtered[0][j] = full[j];
            descend(descend, 0);
        }
    };

    detail::run_workers(threads, worker);
    token.throw_if_expired("enumerate_isometries: time budget exceeded");

    std::size_t total = 0;
    for (const auto& r : results) total += r.size();
    std::vector<std::int32_t> flat;
    flat.reserve(total);
    for (const auto& r : results) flat.insert(flat.end(), r.begin(), r.end());
    return IsometrySet(std::move(work), n, std::move(flat));
}

bool group_closure_check(const IsometrySet& s) {
    const std::size_t n = s.dim();
    if (n == 0 || s.size() == 0) return false;
    if (!s.contains(IntMatrix::identity(n))) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        IntMatrix g = s.matrix(i);
        if (!is_unimodular(g)) return false;
        if (!s.contains(unimodular_inverse(g))) return false;
    }
    std::vector<std::int32_t> prod(n * n);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto gi = s.raw(i);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const auto gj = s.raw(j);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    std::int64_t acc = 0;
                    for (std::size_t k = 0; k < n; ++k)
                        acc += std::int64_t(gi[r * n + k]) * gj[k * n + c];
                    prod[r * n + c] = static_cast<std::int32_t>(acc);
                }
            if (!s.contains_raw(prod)) return false;
        }
    }
    return true;
}

} // namespace baut
