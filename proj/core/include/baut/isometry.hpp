#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "baut/quadform.hpp"

namespace baut {

/// Options shared by the parallel searches. threads == 0 means hardware
/// concurrency. Output is canonical (schedule-independent) either way.
struct SearchOptions {
    unsigned threads = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static SearchOptions with_budget(double seconds, unsigned threads = 0) {
        SearchOptions o;
        o.threads = threads;
        o.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(seconds));
        return o;
    }
};

/// The finite group { g in GL_h(Z) : g^T a g = a } for definite a, stored
/// flat and canonically ordered (lexicographic on flattened entries).
class IsometrySet {
public:
    IsometrySet(SymmetrizedForm form, std::size_t dim, std::vector<std::int32_t> flat);
    static IsometrySet from_matrices(SymmetrizedForm form, const std::vector<IntMatrix>& elements);

    std::size_t size() const { return flat_.size() / (dim_ * dim_); }
    std::size_t dim() const { return dim_; }
    const SymmetrizedForm& form() const { return form_; }

    std::span<const std::int32_t> raw(std::size_t i) const {
        return {flat_.data() + i * dim_ * dim_, dim_ * dim_};
    }
    IntMatrix matrix(std::size_t i) const;
    bool contains(const IntMatrix& g) const;
    bool contains_raw(std::span<const std::int32_t> g) const;

    bool operator==(const IsometrySet& o) const { return dim_ == o.dim_ && flat_ == o.flat_; }

private:
    SymmetrizedForm form_;
    std::size_t dim_;
    std::vector<std::int32_t> flat_; // size * dim * dim, sorted blocks
};

/// Complete enumeration of Aut(V, lambda) = Aut(V, theta) by depth-first
/// column assembly over short-vector candidate sets from an exact rational
/// LDL^T factorization. Negative definite input is negated first; indefinite
/// or degenerate input is rejected.
IsometrySet enumerate_isometries(const SymmetrizedForm& a, const SearchOptions& opts = {});

/// All integer vectors v with v^T a v == norm, a positive definite.
/// Deterministic order; both v and -v appear.
std::vector<std::vector<std::int32_t>> short_vectors(const IntMatrix& a, const Int& norm);

/// True iff s contains the identity and is closed under products and
/// inverses.
bool group_closure_check(const IsometrySet& s);

} // namespace baut
