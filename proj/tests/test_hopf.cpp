#include <doctest.h>

#include <random>

#include "cofrob/corpus.hpp"
#include "cofrob/error.hpp"
#include "cofrob/hopf.hpp"
#include "cofrob/nakayama.hpp"
#include "oracles.hpp"

using namespace cofrob;

namespace {

using oracle::Vec;

Vec act(const Matrix& m, const Vec& v)
{
    Vec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r] += m(r, c) * v[c];
    return out;
}

// m (S (x) id) Delta = 1 eps = m (id (x) S) Delta on every basis element.
bool antipode_law(const HopfAlgebra& h)
{
    const std::size_t n = h.dim();
    for (std::size_t i = 0; i < n; ++i) {
        Vec l(n), r(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar d = h.coalgebra.delta(i, j, k);
                if (d.is_zero())
                    continue;
                Vec a = oracle::multiply(h.algebra, h.antipode.column(j), oracle::unit(n, k));
                Vec b = oracle::multiply(h.algebra, oracle::unit(n, j), h.antipode.column(k));
                for (std::size_t t = 0; t < n; ++t) {
                    l[t] += d * a[t];
                    r[t] += d * b[t];
                }
            }
        Vec want = h.coalgebra.counit()[i] * h.algebra.unit();
        if (l != want || r != want)
            return false;
    }
    return true;
}

// Integral lines by brute force: each candidate line is checked against the
// defining identity on the whole dual basis.
bool left_integral_on(const HopfAlgebra& h, const Vec& t)
{
    const std::size_t n = h.dim();
    for (std::size_t k = 0; k < n; ++k)
        if (oracle::convolve(h.coalgebra, oracle::unit(n, k), t) != h.algebra.unit()[k] * t)
            return false;
    return true;
}

bool right_integral_on(const HopfAlgebra& h, const Vec& t)
{
    const std::size_t n = h.dim();
    for (std::size_t k = 0; k < n; ++k)
        if (oracle::convolve(h.coalgebra, t, oracle::unit(n, k)) != h.algebra.unit()[k] * t)
            return false;
    return true;
}

bool left_integral_in(const HopfAlgebra& h, const Vec& t)
{
    const std::size_t n = h.dim();
    for (std::size_t a = 0; a < n; ++a)
        if (oracle::multiply(h.algebra, oracle::unit(n, a), t) != h.coalgebra.counit()[a] * t)
            return false;
    return true;
}

bool right_integral_in(const HopfAlgebra& h, const Vec& t)
{
    const std::size_t n = h.dim();
    for (std::size_t a = 0; a < n; ++a)
        if (oracle::multiply(h.algebra, t, oracle::unit(n, a)) != h.coalgebra.counit()[a] * t)
            return false;
    return true;
}

// D(x, y) = t(x S(y)) from the structure constants.
oracle::Mat gram_oracle(const HopfAlgebra& h, const Vec& t)
{
    const std::size_t n = h.dim();
    oracle::Mat g(n, Vec(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec p = oracle::multiply(h.algebra, oracle::unit(n, a), h.antipode.column(b));
            for (std::size_t k = 0; k < n; ++k)
                g[a][b] += t[k] * p[k];
        }
    return g;
}

// {x : (phi (x) psi)(Delta x) = 0 for phi in X^perp, psi in Y^perp}.
std::size_t wedge_dim_oracle(const Coalgebra& c, const Subspace& x, const Subspace& y)
{
    const std::size_t n = c.dim();
    oracle::Mat rows;
    for (const auto& phi : x.annihilator().vectors())
        for (const auto& psi : y.annihilator().vectors()) {
            Vec row(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        row[i] += c.delta(i, j, k) * phi[j] * psi[k];
            rows.push_back(row);
        }
    return n - oracle::rank(rows);
}

}  // namespace

TEST_CASE("corpus Hopf algebras satisfy all axioms")
{
    for (const auto& h : corpus::hopf_algebras()) {
        CAPTURE(h.name());
        CHECK(validate(h).ok());
        CHECK(antipode_law(h));
        CHECK(oracle::coassociative(h.coalgebra));
    }
}

TEST_CASE("broken antipode is caught")
{
    HopfAlgebra h = corpus::sweedler();
    h.antipode(2, 3) = 0;
    CHECK_FALSE(validate(h).ok());
    CHECK_FALSE(antipode_law(h));
}

TEST_CASE("dual Hopf algebra")
{
    for (const auto& h : corpus::hopf_algebras()) {
        CAPTURE(h.name());
        HopfAlgebra d = dual_hopf(h, "d");
        CHECK(validate(d).ok());
        HopfAlgebra dd = dual_hopf(d, h.name());
        CHECK(dd.coalgebra.delta_tensor() == h.coalgebra.delta_tensor());
        CHECK(dd.algebra.mult_tensor() == h.algebra.mult_tensor());
        CHECK(dd.antipode == h.antipode);
    }
}

TEST_CASE("integrals match the defining identities")
{
    for (const auto& h : corpus::hopf_algebras()) {
        CAPTURE(h.name());
        IntegralData d = integrals(h);
        CHECK(d.left_on.dim() == 1);
        CHECK(d.right_on.dim() == 1);
        CHECK(d.left_in.dim() == 1);
        CHECK(d.right_in.dim() == 1);
        const std::size_t n = h.dim();
        Vec lo = d.left_on.vectors()[0], ro = d.right_on.vectors()[0];
        Vec li = d.left_in.vectors()[0], ri = d.right_in.vectors()[0];
        CHECK(left_integral_on(h, lo));
        CHECK(right_integral_on(h, ro));
        CHECK(left_integral_in(h, li));
        CHECK(right_integral_in(h, ri));
        CHECK(d.unimodular_on == right_integral_on(h, lo));
        CHECK(d.unimodular_in == right_integral_in(h, li));
        // leading coordinate normalized to 1
        for (const Vec* v : {&lo, &ro, &li, &ri}) {
            std::size_t first = 0;
            while (first < n && (*v)[first].is_zero())
                ++first;
            REQUIRE(first < n);
            CHECK((*v)[first] == Scalar(1));
        }
    }
}

TEST_CASE("Sweedler algebra: integral lines by hand")
{
    HopfAlgebra h = corpus::sweedler();
    IntegralData d = integrals(h);
    // basis 1, g, x, gx: Lambda = x + gx is a left integral, x - gx a right one
    CHECK(d.left_in.contains(Vector{0, 0, 1, 1}));
    CHECK(d.right_in.contains(Vector{0, 0, 1, -1}));
    CHECK_FALSE(d.unimodular_in);
    CHECK_FALSE(d.unimodular_on);
}

TEST_CASE("form from a two-sided integral has Nakayama automorphism S^2")
{
    int two_sided = 0;
    for (const auto& h : corpus::hopf_algebras()) {
        CAPTURE(h.name());
        IntegralData d = integrals(h);
        if (!d.unimodular_on) {
            CHECK_THROWS_AS(form_from_integral(h, d.left_on.vectors()[0]), InvalidInput);
            continue;
        }
        ++two_sided;
        Vec t = d.left_on.vectors()[0];
        // t o S = t
        CHECK(act(h.antipode.transpose(), t) == t);
        auto g = gram_oracle(h, t);
        CHECK(integral_gram(h, t) == Matrix::from_rows(h.dim(), g));
        CHECK(oracle::balanced(h.coalgebra, g));
        CHECK_FALSE(oracle::det(g).is_zero());
        FrobeniusCertificate cert = form_from_integral(h, t);
        CHECK(nakayama(cert).sigma == h.s2());
        // D(y, x) = D(S^2 x, y) on basis pairs
        Matrix s2 = h.s2();
        for (std::size_t x = 0; x < h.dim(); ++x)
            for (std::size_t y = 0; y < h.dim(); ++y) {
                Scalar rhs = 0;
                for (std::size_t k = 0; k < h.dim(); ++k)
                    rhs += s2(k, x) * g[k][y];
                CHECK(g[y][x] == rhs);
            }
    }
    CHECK(two_sided >= 6);
}

TEST_CASE("symmetry of Hopf algebras")
{
    for (const auto& h : corpus::hopf_algebras()) {
        CAPTURE(h.name());
        HopfSymmetry hs = hopf_symmetric_coalgebra(h);
        CHECK(hs.agrees());
        CHECK(hs.direct == is_symmetric(h.coalgebra).status);
        bool sweedler = h.name() == "H4" || h.name() == "H4*";
        CHECK(hs.verdict == (sweedler ? SearchStatus::absent : SearchStatus::found));
        CHECK(hs.inner.found());
        if (hs.verdict == SearchStatus::found) {
            REQUIRE(hs.form);
            auto g = oracle::to_mat(*hs.form);
            CHECK(hs.form->is_symmetric());
            CHECK_FALSE(oracle::det(g).is_zero());
            CHECK(oracle::balanced(h.coalgebra, g));
            CHECK(hs.form_symmetric);
            CHECK(hs.form_nondegenerate);
            CHECK(hs.form_balanced);
        }
        AlgebraSymmetry as = symmetric_as_algebra(h);
        CHECK(as.agrees());
        CHECK(as.s2_inner.found());
        if (as.s2_inner.witness) {
            // x g = g S^2(x) on basis elements
            const Vec& g = *as.s2_inner.witness;
            for (std::size_t a = 0; a < h.dim(); ++a)
                CHECK(oracle::multiply(h.algebra, oracle::unit(h.dim(), a), g) ==
                      oracle::multiply(h.algebra, g, h.s2().column(a)));
        }
    }
}

TEST_CASE("Sweedler algebra verdicts come from the search, not a table")
{
    HopfAlgebra h = corpus::sweedler();
    IntegralData d = integrals(h);
    HopfSymmetry hs = hopf_symmetric_coalgebra(h);
    AlgebraSymmetry as = symmetric_as_algebra(h);
    CHECK_FALSE(d.unimodular_on);
    CHECK(hs.inner.found());
    CHECK(as.s2_inner.found());
    CHECK(hs.verdict == SearchStatus::absent);
    CHECK(hs.direct == SearchStatus::absent);
    CHECK(as.criterion == (d.unimodular_in && as.s2_inner.found() ? SearchStatus::found : SearchStatus::absent));
    CHECK(as.direct == as.criterion);
}

TEST_CASE("wedge matches the annihilator description")
{
    std::mt19937_64 rng(41);
    HopfAlgebra k2 = corpus::cyclic_group_algebra(2);
    Subspace x = Subspace::span(2, {{1, 1}});
    Subspace w = wedge(k2.coalgebra, x, x);
    CHECK(w == Subspace::span(2, {{1, -1}}));
    for (const auto& e : corpus::coalgebras()) {
        const Coalgebra& c = e.coalgebra;
        if (c.dim() > 8)
            continue;
        CAPTURE(c.name());
        for (int t = 0; t < 3; ++t) {
            Subspace a = Subspace::span(c.dim(), {oracle::random_vector(rng, c.dim(), 2)});
            Subspace b = Subspace::span(c.dim(), {oracle::random_vector(rng, c.dim(), 2),
                                                  oracle::random_vector(rng, c.dim(), 2)});
            Subspace ab = wedge(c, a, b);
            CHECK(ab.dim() == wedge_dim_oracle(c, a, b));
            for (const auto& v : ab.vectors()) {
                // Delta v in A (x) C + C (x) B, tested with the annihilators
                for (const auto& phi : a.annihilator().vectors())
                    for (const auto& psi : b.annihilator().vectors()) {
                        Scalar s = 0;
                        for (std::size_t i = 0; i < c.dim(); ++i)
                            for (std::size_t j = 0; j < c.dim(); ++j)
                                for (std::size_t k = 0; k < c.dim(); ++k)
                                    s += v[i] * c.delta(i, j, k) * phi[j] * psi[k];
                        CHECK(s.is_zero());
                    }
            }
        }
    }
}

TEST_CASE("A infinity")
{
    Coalgebra p = corpus::path_a2();
    AInfinity full = a_infinity(p, Subspace::full(3));
    CHECK(full.space == Subspace::full(3));
    CHECK(full.steps == 1);
    AInfinity ab = a_infinity(p, Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK(ab.space == Subspace::full(3));
    CHECK(ab.steps == 2);
    CHECK(ab.trace == std::vector<std::size_t>{2, 3, 3});

    // a simple summand of a cosemisimple coalgebra is already wedge-closed
    Coalgebra s = direct_sum(matrix_coalgebra(2), grouplike_coalgebra({"g"}));
    Subspace m = Subspace::span(5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
    AInfinity ms = a_infinity(s, m);
    CHECK(ms.space == m);
    CHECK(ms.steps == 1);

    Coalgebra dn = corpus::dual_numbers();
    AInfinity g = a_infinity(dn, Subspace::span(2, {{1, 0}}));
    CHECK(g.space == Subspace::full(2));
    CHECK(g.steps == 2);

    CHECK_THROWS_AS(a_infinity(p, Subspace::span(3, {{0, 0, 1}})), InvalidInput);

    for (const auto& e : corpus::coalgebras()) {
        const Coalgebra& c = e.coalgebra;
        CAPTURE(c.name());
        Subspace a = subcoalgebra_generated(c, unit_vector(c.dim(), 0));
        AInfinity r = a_infinity(c, a);
        CHECK(r.steps <= c.dim());
        CHECK(is_subcoalgebra(c, r.space));
        CHECK(wedge(c, r.space, a) == r.space);
        CHECK(r.space.contains(a));
    }
}

TEST_CASE("H infinity is a Hopf subalgebra")
{
    for (const auto& h : corpus::hopf_algebras()) {
        CAPTURE(h.name());
        HInfinity hi = h_infinity(h);
        CHECK(hi.closure.ok());
        CHECK(hi.a.space.contains(h.algebra.unit()));
        CHECK(is_subcoalgebra(h.coalgebra, hi.a.space));
        CHECK(hopf_subalgebra_check(h, Subspace::full(h.dim())).ok());
    }
    // for H4 the unit line is already a Hopf subalgebra; k{1, g} is one too
    HopfAlgebra h = corpus::sweedler();
    CHECK(hopf_subalgebra_check(h, Subspace::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}})).ok());
    CHECK_FALSE(hopf_subalgebra_check(h, Subspace::span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}})).ok());
    AInfinity a = a_infinity(h.coalgebra, Subspace::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(a.space == Subspace::full(4));
}

TEST_CASE("S^2 preserves subcoalgebras of symmetric Hopf algebras")
{
    std::mt19937_64 rng(43);
    for (const auto& h : corpus::hopf_algebras()) {
        if (hopf_symmetric_coalgebra(h).verdict != SearchStatus::found)
            continue;
        CAPTURE(h.name());
        CHECK(s2_preserves_subcoalgebra(h, unit_line(h)));
        CHECK(s2_preserves_subcoalgebra(h, Subspace::full(h.dim())));
        for (int t = 0; t < 5; ++t) {
            Subspace a = subcoalgebra_generated(h.coalgebra, oracle::random_vector(rng, h.dim(), 2));
            CHECK(s2_preserves_subcoalgebra(h, a));
            for (const auto& v : a.vectors())
                CHECK(a.contains(h.s2() * v));
        }
    }
    CHECK_THROWS_AS(s2_preserves_subcoalgebra(corpus::sweedler(), Subspace::span(4, {{0, 0, 1, 0}})), InvalidInput);
}

TEST_CASE("inner unit restricts to a Hopf subalgebra")
{
    HopfAlgebra fs3 = corpus::function_algebra(corpus::s3_group_algebra(), "k^S3");
    Subspace k = corpus::s3_sign_quotient_functions(fs3);
    CHECK(hopf_subalgebra_check(fs3, k).ok());
    HopfAlgebra kk = restrict_hopf(fs3, k, "K");
    CHECK(validate(kk).ok());
    CHECK(kk.dim() == 2);
    // K's integrals are computed on K itself
    IntegralData d = integrals(kk);
    CHECK(d.unimodular_on);
    HopfSymmetry hs = hopf_symmetric_coalgebra(fs3);
    REQUIRE(hs.inner.witness);
    RestrictionReport r = restrict_inner_unit(fs3, k, *hs.inner.witness);
    CHECK(r.ok());
    CHECK(hopf_symmetric_coalgebra(kk).verdict == SearchStatus::found);

    HopfAlgebra h4 = corpus::sweedler();
    Subspace kg = Subspace::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    HopfSymmetry h4s = hopf_symmetric_coalgebra(h4);
    REQUIRE(h4s.inner.witness);
    CHECK(restrict_inner_unit(h4, kg, *h4s.inner.witness).ok());
    CHECK_THROWS_AS(restrict_hopf(h4, Subspace::span(4, {{1, 0, 0, 0}, {0, 0, 1, 0}}), "bad"), InvalidInput);
}
