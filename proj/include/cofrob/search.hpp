#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cofrob/linalg.hpp"

namespace cofrob {

enum class SearchStatus { found, absent, inconclusive };
enum class SearchPhase { trivial, randomized, grid, common_kernel };

std::string to_string(SearchStatus s);
std::string to_string(SearchPhase p);

struct SearchOptions {
    std::uint64_t seed = 0;
    int random_trials = 64;
    /// Go straight to the deterministic grid (used to cross-check verdicts).
    bool grid_only = false;
    /// Largest grid {0..n}^s that will be enumerated.
    std::uint64_t grid_limit = 200000;
};

/// Outcome of looking for a nonsingular member of a linear space of square
/// matrices spanned by `pencil`.
struct PencilResult {
    SearchStatus status = SearchStatus::inconclusive;
    SearchPhase phase = SearchPhase::trivial;
    std::vector<Scalar> coefficients;  // set when found
    Matrix value;                      // the nonsingular combination
    std::uint64_t evaluations = 0;
};

/// det(sum t_i M_i) is a polynomial of degree <= n. Random integer points in
/// [-n*s, n*s]^s are tried first; if none works, every point of {0..n}^s is
/// evaluated, which decides the question exactly (a nonzero polynomial of
/// degree <= n in each variable cannot vanish on that grid). When the grid is
/// too large, a common left or right kernel still certifies absence;
/// otherwise the result is inconclusive.
PencilResult find_nonsingular(std::span<const Matrix> pencil, std::size_t n, const SearchOptions& opts);

/// Search result carrying an optional witness.
template <class T>
struct Decision {
    SearchStatus status = SearchStatus::inconclusive;
    SearchPhase phase = SearchPhase::trivial;
    std::optional<T> witness;

    bool found() const { return status == SearchStatus::found; }
    bool absent() const { return status == SearchStatus::absent; }
};

}  // namespace cofrob
