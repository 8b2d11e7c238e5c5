#include <random>

#include "cofrob/coalgebra.hpp"

namespace cofrob {

namespace {

bool is_grouplike(const Coalgebra& c, const Vector& g)
{
    const std::size_t n = c.dim();
    if (dot(c.counit(), g) != Scalar(1))
        return false;
    Vector dg = c.coproduct(g);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            if (dg[j * n + k] != g[j] * g[k])
                return false;
    return true;
}

}  // namespace

std::vector<Vector> grouplike_elements(const Coalgebra& c, std::uint64_t seed, int trials)
{
    const std::size_t n = c.dim();
    std::vector<Vector> found;
    auto keep = [&](const Vector& g) {
        for (const auto& h : found)
            if (h == g)
                return;
        found.push_back(g);
    };
    for (std::size_t i : grouplike_basis_elements(c))
        keep(unit_vector(n, i));

    // Each grouplike lies in one eigenspace of every combination, so the
    // pieces are refined by intersecting with successive eigenspaces.
    std::mt19937_64 rng(seed);
    const long bound = 3 * static_cast<long>(n);
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Subspace> pieces{Subspace::full(n)};
    for (int t = 0; t < trials && !pieces.empty(); ++t) {
        Matrix x(n, n);
        for (std::size_t k = 0; k < n; ++k)
            x += Scalar(dist(rng)) * c.left_hit_matrix(k);
        auto roots = rational_roots(characteristic_polynomial(x));
        std::vector<Subspace> next;
        for (const auto& p : pieces)
            for (const auto& lambda : roots) {
                Subspace q = p.intersection(kernel(x - lambda * Matrix::identity(n)));
                if (q.dim() == 0)
                    continue;
                if (q.dim() > 1) {
                    next.push_back(std::move(q));
                    continue;
                }
                Vector v = q.vectors().front();
                Scalar eps = dot(c.counit(), v);
                if (!eps.is_zero() && is_grouplike(c, (Scalar(1) / eps) * v))
                    keep((Scalar(1) / eps) * v);
            }
        pieces = std::move(next);
    }
    return found;
}

}  // namespace cofrob
