#pragma once

// Random perturbations of structure constants that cannot leave the axioms
// intact. Perturbing an arbitrary entry is not enough: Delta x += s x (x) x
// on the dual numbers (eps(x) = 0) is again a coalgebra. The classes below
// each break an identity no matter which entry is hit:
//   counit entry eps_m       (eps (x) id) Delta c_m has a c_m term, so some
//                            left counit equation changes
//   delta entry (i, j, k)    with eps_j != 0 or eps_k != 0: one counit
//                            equation changes by s * eps
//   mult entry (a, b, k)     with u_a != 0 or u_b != 0: the unit law changes
//   unit entry u_a           e_a * e_b != 0 for b = 1, so the unit law changes
//   antipode entry           the antipode of a bialgebra is unique

#include <random>
#include <string>

#include "cofrob/hopf.hpp"

namespace mutation {

using namespace cofrob;

inline Scalar nonzero(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> d(1, 4);
    std::bernoulli_distribution neg(0.5);
    Scalar s(d(rng), d(rng) == 4 ? 3 : 1);
    return neg(rng) ? -s : s;
}

inline Coalgebra mutate(const Coalgebra& c, std::mt19937_64& rng, std::string& what)
{
    const std::size_t n = c.dim();
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    Tensor3 d = c.delta_tensor();
    Vector eps = c.counit();
    if (std::bernoulli_distribution(0.3)(rng)) {
        std::size_t m = idx(rng);
        eps[m] += nonzero(rng);
        what = "counit[" + std::to_string(m) + "]";
    }
    else {
        std::size_t i, j, k;
        do {
            i = idx(rng), j = idx(rng), k = idx(rng);
        } while (eps[j].is_zero() && eps[k].is_zero());
        d(i, j, k) += nonzero(rng);
        what = "delta[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
    }
    return Coalgebra(c.name() + "~", c.basis_names(), std::move(d), std::move(eps));
}

inline HopfAlgebra mutate(const HopfAlgebra& h, std::mt19937_64& rng, std::string& what)
{
    const std::size_t n = h.dim();
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> cls(0, 3);
    HopfAlgebra out = h;
    switch (cls(rng)) {
    case 0:
        out.coalgebra = mutate(h.coalgebra, rng, what);
        break;
    case 1: {
        Tensor3 m = h.algebra.mult_tensor();
        const Vector& u = h.algebra.unit();
        std::size_t a, b, k;
        do {
            a = idx(rng), b = idx(rng), k = idx(rng);
        } while (u[a].is_zero() && u[b].is_zero());
        m(a, b, k) += nonzero(rng);
        out.algebra = Algebra(h.name(), h.algebra.basis_names(), std::move(m), u);
        what = "mult[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + "]";
        break;
    }
    case 2: {
        Vector u = h.algebra.unit();
        std::size_t a = idx(rng);
        u[a] += nonzero(rng);
        out.algebra = Algebra(h.name(), h.algebra.basis_names(), h.algebra.mult_tensor(), std::move(u));
        what = "unit[" + std::to_string(a) + "]";
        break;
    }
    default: {
        std::size_t r = idx(rng), c = idx(rng);
        out.antipode(r, c) += nonzero(rng);
        what = "antipode[" + std::to_string(r) + "," + std::to_string(c) + "]";
        break;
    }
    }
    return out;
}

}  // namespace mutation
