#include "cofrob/search.hpp"

#include <random>

#include "cofrob/error.hpp"

namespace cofrob {

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::absent:
        return "absent";
    case SearchStatus::inconclusive:
        return "inconclusive";
    }
    return "?";
}

std::string to_string(SearchPhase p)
{
    switch (p) {
    case SearchPhase::trivial:
        return "trivial";
    case SearchPhase::randomized:
        return "randomized";
    case SearchPhase::grid:
        return "grid";
    case SearchPhase::common_kernel:
        return "common-kernel";
    }
    return "?";
}

namespace {

bool grid_fits(std::size_t base, std::size_t s, std::uint64_t limit)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < s; ++i) {
        if (count > limit / base)
            return false;
        count *= base;
    }
    return count <= limit;
}

bool common_kernel_nonzero(std::span<const Matrix> pencil, bool transpose)
{
    const std::size_t n = pencil[0].cols();
    RowReducer red(n);
    for (const auto& m : pencil) {
        const Matrix a = transpose ? m.transpose() : m;
        for (std::size_t r = 0; r < a.rows(); ++r)
            red.add(a.row(r));
    }
    return red.rank() < n;
}

}  // namespace

PencilResult find_nonsingular(std::span<const Matrix> pencil, std::size_t n, const SearchOptions& opts)
{
    PencilResult res;
    for (const auto& m : pencil)
        if (m.rows() != n || m.cols() != n)
            throw InvalidInput("find_nonsingular: pencil matrices must be n x n");

    if (n == 0) {
        res.status = SearchStatus::found;
        res.value = Matrix(0, 0);
        res.coefficients.assign(pencil.size(), Scalar(0));
        return res;
    }
    if (pencil.empty()) {
        res.status = SearchStatus::absent;
        return res;
    }
    const std::size_t s = pencil.size();

    auto try_point = [&](const std::vector<Scalar>& t) {
        ++res.evaluations;
        Matrix m = linear_combination(pencil, t);
        if (det(m).is_zero())
            return false;
        res.status = SearchStatus::found;
        res.coefficients = t;
        res.value = std::move(m);
        return true;
    };

    if (!opts.grid_only) {
        res.phase = SearchPhase::randomized;
        std::mt19937_64 rng(opts.seed);
        const long bound = static_cast<long>(n * s);
        std::uniform_int_distribution<long> dist(-bound, bound);
        std::vector<Scalar> t(s);
        for (int trial = 0; trial < opts.random_trials; ++trial) {
            for (auto& x : t)
                x = Scalar(dist(rng));
            if (try_point(t))
                return res;
        }
    }

    if (grid_fits(n + 1, s, opts.grid_limit)) {
        res.phase = SearchPhase::grid;
        std::vector<long> idx(s, 0);
        std::vector<Scalar> t(s);
        while (true) {
            for (std::size_t i = 0; i < s; ++i)
                t[i] = Scalar(idx[i]);
            if (try_point(t))
                return res;
            std::size_t pos = 0;
            while (pos < s && idx[pos] == static_cast<long>(n)) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == s)
                break;
            ++idx[pos];
        }
        res.status = SearchStatus::absent;
        return res;
    }

    if (common_kernel_nonzero(pencil, false) || common_kernel_nonzero(pencil, true)) {
        res.phase = SearchPhase::common_kernel;
        res.status = SearchStatus::absent;
        return res;
    }
    res.status = SearchStatus::inconclusive;
    return res;
}

}  // namespace cofrob
