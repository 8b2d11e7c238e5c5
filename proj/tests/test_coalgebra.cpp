#include <doctest.h>

#include <random>

#include "cofrob/corpus.hpp"
#include "cofrob/error.hpp"
#include "cofrob/search.hpp"
#include "oracles.hpp"

using namespace cofrob;

TEST_CASE("every corpus coalgebra satisfies the axioms by the brute-force oracle")
{
    for (const auto& e : corpus::coalgebras()) {
        CAPTURE(e.coalgebra.name());
        CHECK(validate(e.coalgebra).ok());
        CHECK(oracle::coassociative(e.coalgebra));
        CHECK(oracle::counital(e.coalgebra));
    }
}

TEST_CASE("validate locates a broken counit")
{
    Coalgebra m2 = matrix_coalgebra(2);
    Vector eps = m2.counit();
    eps[1] = 1;
    Coalgebra bad("bad", m2.basis_names(), m2.delta_tensor(), eps);
    auto rep = validate(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK_FALSE(oracle::counital(bad));
    bool names_counit = false;
    for (const auto& v : rep.violations)
        names_counit = names_counit || v.axiom.find("counit") != std::string::npos;
    CHECK(names_counit);
}

TEST_CASE("validate catches a non-coassociative comultiplication")
{
    Tensor3 d(3, 3, 3);
    d(0, 0, 0) = 1;
    d(1, 0, 1) = 1;
    d(1, 1, 0) = 1;
    d(2, 0, 2) = 1;
    d(2, 2, 0) = 1;
    d(2, 1, 1) = 1;  // Delta y = g(x)y + y(x)g + x(x)x: coassociative (divided powers)
    Coalgebra ok("dp", {"g", "x", "y"}, d, {1, 0, 0});
    CHECK(validate(ok).ok());
    CHECK(oracle::coassociative(ok));
    d(2, 1, 2) = 1;
    Coalgebra bad("bad", {"g", "x", "y"}, d, {1, 0, 0});
    CHECK_FALSE(oracle::coassociative(bad));
    CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("constructors reject bad shapes")
{
    CHECK_THROWS_AS(Coalgebra("z", {}, Tensor3(0, 0, 0), {}), InvalidInput);
    CHECK_THROWS_AS(Coalgebra("z", {"a"}, Tensor3(2, 2, 2), {1}), InvalidInput);
    CHECK_THROWS_AS(matrix_coalgebra(0), InvalidInput);
}

TEST_CASE("hit actions agree with the oracle")
{
    std::mt19937_64 rng(5);
    for (const auto& e : corpus::coalgebras()) {
        const Coalgebra& c = e.coalgebra;
        if (c.dim() > 8)
            continue;
        CAPTURE(c.name());
        for (int t = 0; t < 3; ++t) {
            Vector f = oracle::random_vector(rng, c.dim());
            Vector x = oracle::random_vector(rng, c.dim());
            CHECK(c.hit_left(f, x) == oracle::hit_left(c, f, x));
            CHECK(c.hit_right(x, f) == oracle::hit_right(c, x, f));
            CHECK(c.left_hit_matrix(f) * x == oracle::hit_left(c, f, x));
            CHECK(c.right_hit_matrix(f) * x == oracle::hit_right(c, x, f));
        }
    }
}

TEST_CASE("dual algebra is convolution")
{
    std::mt19937_64 rng(6);
    for (const auto& e : corpus::coalgebras()) {
        const Coalgebra& c = e.coalgebra;
        if (c.dim() > 8)
            continue;
        CAPTURE(c.name());
        Algebra a = dual_algebra(c);
        CHECK(validate(a).ok());
        CHECK(a.unit() == c.counit());
        Vector f = oracle::random_vector(rng, c.dim()), g = oracle::random_vector(rng, c.dim());
        CHECK(a.multiply(f, g) == oracle::convolve(c, f, g));
        // (f g) . x = f . (g . x) for the left hit, the reverse for the right hit
        Vector x = oracle::random_vector(rng, c.dim());
        CHECK(c.hit_left(a.multiply(f, g), x) == c.hit_left(f, c.hit_left(g, x)));
        CHECK(c.hit_right(x, a.multiply(f, g)) == c.hit_right(c.hit_right(x, f), g));
    }
}

TEST_CASE("dual coalgebra of an algebra round-trips")
{
    Algebra a = corpus::lam_algebra(Scalar(3));
    Coalgebra c = dual_coalgebra(a, "c");
    CHECK(validate(c).ok());
    CHECK(dual_algebra(c).mult_tensor() == a.mult_tensor());
}

TEST_CASE("constructions")
{
    Coalgebra g = grouplike_coalgebra({"g", "h"});
    Coalgebra m2 = matrix_coalgebra(2);
    Coalgebra s = direct_sum(g, m2);
    Coalgebra t = tensor(m2, g);
    CHECK(s.dim() == 6);
    CHECK(t.dim() == 8);
    CHECK(validate(s).ok());
    CHECK(validate(t).ok());
    CHECK(oracle::coassociative(t));
    Coalgebra op = opposite(corpus::lam_dual(Scalar(2)));
    CHECK(validate(op).ok());
    CHECK(op.delta(3, 1, 2) == corpus::lam_dual(Scalar(2)).delta(3, 2, 1));
    // Delta(e_12) = e_11 (x) e_12 + e_12 (x) e_22
    CHECK(m2.delta(1, 0, 1) == Scalar(1));
    CHECK(m2.delta(1, 1, 3) == Scalar(1));
    CHECK(m2.delta(1, 1, 0) == Scalar(0));
}

TEST_CASE("coideals and subcoalgebras")
{
    Coalgebra p = corpus::path_a2();
    Subspace ab = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    Subspace ap = Subspace::span(3, {{1, 0, 0}, {0, 0, 1}});
    Subspace bp = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
    CHECK(is_subcoalgebra(p, ab));
    // Delta p = a (x) p + p (x) b
    CHECK(is_coideal(p, ap, CoidealSide::right));
    CHECK_FALSE(is_coideal(p, ap, CoidealSide::left));
    CHECK(is_coideal(p, bp, CoidealSide::left));
    CHECK_FALSE(is_coideal(p, bp, CoidealSide::right));
    CHECK(right_coideal_generated(p, {0, 0, 1}) == ap);
    CHECK(left_coideal_generated(p, {0, 0, 1}) == bp);
    CHECK(subcoalgebra_generated(p, {0, 0, 1}) == Subspace::full(3));
    CHECK_THROWS_AS(restrict_to_subcoalgebra(p, ap, "x"), InvalidInput);
    Coalgebra r = restrict_to_subcoalgebra(p, ab, "ab");
    CHECK(validate(r).ok());
    CHECK(r.dim() == 2);
}

TEST_CASE("generated coideals are coideals (property)")
{
    std::mt19937_64 rng(8);
    for (const auto& e : corpus::coalgebras()) {
        const Coalgebra& c = e.coalgebra;
        if (c.dim() > 9)
            continue;
        CAPTURE(c.name());
        for (int t = 0; t < 4; ++t) {
            Vector x = oracle::random_vector(rng, c.dim(), 2);
            Subspace r = right_coideal_generated(c, x), l = left_coideal_generated(c, x);
            CHECK(r.contains(x));
            CHECK(l.contains(x));
            CHECK(is_coideal(c, r, CoidealSide::right));
            CHECK(is_coideal(c, l, CoidealSide::left));
            CHECK(is_subcoalgebra(c, subcoalgebra_generated(c, x)));
        }
    }
}

TEST_CASE("cocommutative elements")
{
    for (const auto& e : corpus::coalgebras()) {
        const Coalgebra& c = e.coalgebra;
        CAPTURE(c.name());
        Subspace s = cocommutative_elements(c);
        for (const auto& v : s.vectors())
            CHECK(oracle::cocommutative(c, v));
        // the oracle's membership test on every basis vector agrees
        for (std::size_t i = 0; i < c.dim(); ++i)
            CHECK(s.contains(unit_vector(c.dim(), i)) == oracle::cocommutative(c, oracle::unit(c.dim(), i)));
    }
    // M^c(2): cocommutative part is spanned by e11 + e22 and e12, e21 are not
    Subspace s = cocommutative_elements(matrix_coalgebra(2));
    CHECK(s.dim() == 1);
    CHECK(s.contains(Vector{1, 0, 0, 1}));
}

TEST_CASE("grouplike scan")
{
    // kG: exactly the group elements
    auto g = grouplike_elements(corpus::klein_group_algebra().coalgebra);
    CHECK(g.size() == 4);
    // k^G for nonabelian G has |G/[G,G]| = 2 grouplikes
    auto f = grouplike_elements(corpus::function_algebra(corpus::s3_group_algebra(), "k^S3").coalgebra);
    CHECK(f.size() == 2);
    // M^c(2) has none
    CHECK(grouplike_elements(matrix_coalgebra(2)).empty());
    // every returned element is grouplike by the definition
    for (const auto& e : corpus::coalgebras()) {
        const Coalgebra& c = e.coalgebra;
        for (const auto& x : grouplike_elements(c)) {
            CHECK(dot(c.counit(), x) == Scalar(1));
            Vector d = c.coproduct(x);
            for (std::size_t j = 0; j < c.dim(); ++j)
                for (std::size_t k = 0; k < c.dim(); ++k)
                    CHECK(d[j * c.dim() + k] == x[j] * x[k]);
        }
    }
}

TEST_CASE("comodules")
{
    Coalgebra c = corpus::lam_dual(Scalar(2));
    Comodule r = regular_comodule(c);
    CHECK(validate(r).ok());
    CHECK(validate(zero_comodule(c)).ok());
    // action of c^k on the regular comodule is the left hit
    for (std::size_t k = 0; k < c.dim(); ++k)
        CHECK(r.action_matrix(k) == c.left_hit_matrix(k));
    Subspace s = right_coideal_generated(c, unit_vector(4, 3));
    Subcomodule sub = subcomodule(r, s, "sub");
    CHECK(validate(sub.module).ok());
    CHECK(is_comodule_morphism(sub.module, r, sub.inclusion));
    // I + E_03 is the right hit by eps + c^3, so it is a morphism; rescaling
    // c_0 alone is not
    Matrix hit = Matrix::identity(4);
    hit(0, 3) = 1;
    CHECK(is_comodule_morphism(r, r, hit));
    Matrix not_map = Matrix::identity(4);
    not_map(0, 0) = 2;
    CHECK_FALSE(is_comodule_morphism(r, r, not_map));
}

TEST_CASE("nonsingular pencil search")
{
    SearchOptions o;
    // span{E11, E22}: nonsingular members exist
    std::vector<Matrix> p1{Matrix{{1, 0}, {0, 0}}, Matrix{{0, 0}, {0, 1}}};
    auto r1 = find_nonsingular(p1, 2, o);
    CHECK(r1.status == SearchStatus::found);
    CHECK_FALSE(det(r1.value).is_zero());
    // span{E12, E11}: every member has a zero second row
    std::vector<Matrix> p2{Matrix{{0, 1}, {0, 0}}, Matrix{{1, 0}, {0, 0}}};
    auto r2 = find_nonsingular(p2, 2, o);
    CHECK(r2.status == SearchStatus::absent);
    // nilpotent pencil span{E12, E23, E13}: singular everywhere, grid decides
    std::vector<Matrix> p3{Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, Matrix{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}},
                           Matrix{{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}};
    auto r3 = find_nonsingular(p3, 3, o);
    CHECK(r3.status == SearchStatus::absent);
    // [[a, a], [a, b]] has det a(b - a): zero on the first grid points
    std::vector<Matrix> p4{Matrix{{1, 1}, {1, 0}}, Matrix{{0, 0}, {0, 1}}};
    SearchOptions grid;
    grid.grid_only = true;
    auto r4 = find_nonsingular(p4, 2, grid);
    CHECK(r4.status == SearchStatus::found);
    CHECK(r4.phase == SearchPhase::grid);
    // same seed, same answer
    auto a = find_nonsingular(p4, 2, o), b = find_nonsingular(p4, 2, o);
    CHECK(a.coefficients == b.coefficients);
}

TEST_CASE("grid cap falls back to the common-kernel certificate or gives up")
{
    // 2x2 pencil with 20 generators all with zero second column:
    // grid {0..2}^20 is above the cap, common right kernel certifies absence.
    std::vector<Matrix> p;
    for (int i = 0; i < 20; ++i)
        p.push_back(Matrix{{i + 1, 0}, {1, 0}});
    SearchOptions o;
    o.grid_only = true;
    auto r = find_nonsingular(p, 2, o);
    CHECK(r.status == SearchStatus::absent);
    CHECK(r.phase == SearchPhase::common_kernel);
    // 3x3 skew-symmetric pencil: singular everywhere, no common kernel.
    std::vector<Matrix> skew{Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}, Matrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}},
                             Matrix{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}};
    SearchOptions tiny;
    tiny.grid_limit = 10;
    auto s = find_nonsingular(skew, 3, tiny);
    CHECK(s.status == SearchStatus::inconclusive);
    SearchOptions full;
    auto s2 = find_nonsingular(skew, 3, full);
    CHECK(s2.status == SearchStatus::absent);
    CHECK(s2.phase == SearchPhase::grid);
}
