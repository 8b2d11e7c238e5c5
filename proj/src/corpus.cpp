#include "cofrob/corpus.hpp"

#include <array>

#include "cofrob/error.hpp"

namespace cofrob::corpus {

namespace {

Algebra algebra_from_table(std::string name, std::vector<std::string> labels,
                           const std::vector<std::array<long, 4>>& products, std::size_t unit)
{
    // products: {a, b, k, value} for e_a e_b; everything else is zero.
    const std::size_t n = labels.size();
    Tensor3 m(n, n, n);
    for (std::size_t b = 0; b < n; ++b) {
        m(unit, b, b) = 1;
        m(b, unit, b) = 1;
    }
    for (const auto& [a, b, k, v] : products)
        m(a, b, k) = v;
    return Algebra(std::move(name), std::move(labels), std::move(m), unit_vector(n, unit));
}

}  // namespace

Coalgebra dual_numbers()
{
    Tensor3 d(2, 2, 2);
    d(0, 0, 0) = 1;
    d(1, 0, 1) = 1;
    d(1, 1, 0) = 1;
    return Coalgebra("dual-numbers", {"g", "x"}, std::move(d), {1, 0});
}

Algebra lam_algebra(const Scalar& q)
{
    Algebra base = algebra_from_table("A_q", {"1", "x", "y", "xy"}, {{1, 2, 3, 1}}, 0);
    Tensor3 m = base.mult_tensor();
    m(2, 1, 3) = Scalar(1) / q;  // yx = q^-1 xy
    return Algebra("A_" + q.str(), base.basis_names(), std::move(m), base.unit());
}

Coalgebra lam_dual(const Scalar& q)
{
    return dual_coalgebra(lam_algebra(q), "lam-dual(" + q.str() + ")");
}

Coalgebra square_zero_dual()
{
    Algebra a = algebra_from_table("k[x,y]/(x,y)^2", {"1", "x", "y"}, {}, 0);
    return dual_coalgebra(a, "square-zero-dual");
}

Coalgebra path_a2()
{
    Tensor3 d(3, 3, 3);
    d(0, 0, 0) = 1;
    d(1, 1, 1) = 1;
    d(2, 0, 2) = 1;
    d(2, 2, 1) = 1;
    return Coalgebra("path-A2", {"a", "b", "p"}, std::move(d), {1, 1, 0});
}

HopfAlgebra group_algebra(std::string name, std::vector<std::string> labels,
                          const std::vector<std::vector<std::size_t>>& table)
{
    const std::size_t n = labels.size();
    if (table.size() != n)
        throw InvalidInput("group_algebra: table size does not match labels");
    Tensor3 delta(n, n, n), mult(n, n, n);
    Matrix s(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        delta(a, a, a) = 1;
        for (std::size_t b = 0; b < n; ++b) {
            mult(a, b, table[a][b]) = 1;
            if (table[a][b] == 0)
                s(b, a) = 1;
        }
    }
    Coalgebra c(name, labels, std::move(delta), Vector(n, Scalar(1)));
    Algebra alg(std::move(name), std::move(labels), std::move(mult), unit_vector(n, 0));
    return {c, alg, s};
}

HopfAlgebra cyclic_group_algebra(std::size_t n)
{
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < n; ++i)
        labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return group_algebra("kC" + std::to_string(n), std::move(labels), t);
}

HopfAlgebra klein_group_algebra()
{
    std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            t[a][b] = a ^ b;
    return group_algebra("kV4", {"1", "a", "b", "ab"}, t);
}

HopfAlgebra s3_group_algebra()
{
    const std::vector<std::array<std::size_t, 3>> perms{
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    auto index = [&](const std::array<std::size_t, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p)
                return i;
        throw TheoremViolation("s3 table: composition left the group");
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> p{};
            for (std::size_t i = 0; i < 3; ++i)
                p[i] = perms[a][perms[b][i]];
            t[a][b] = index(p);
        }
    return group_algebra("kS3", {"e", "(12)", "(13)", "(23)", "(123)", "(132)"}, t);
}

HopfAlgebra function_algebra(const HopfAlgebra& group, std::string name)
{
    return dual_hopf(group, std::move(name));
}

HopfAlgebra sweedler()
{
    // basis 1, g, x, gx
    Tensor3 delta(4, 4, 4);
    delta(0, 0, 0) = 1;
    delta(1, 1, 1) = 1;
    delta(2, 2, 0) = 1;
    delta(2, 1, 2) = 1;
    delta(3, 3, 1) = 1;
    delta(3, 0, 3) = 1;
    std::vector<std::string> labels{"1", "g", "x", "gx"};
    Coalgebra c("H4", labels, std::move(delta), {1, 1, 0, 0});
    Algebra a = algebra_from_table("H4", labels,
                                   {{1, 1, 0, 1},
                                    {1, 2, 3, 1},
                                    {1, 3, 2, 1},
                                    {2, 1, 3, -1},
                                    {3, 1, 2, -1}},
                                   0);
    Matrix s{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    return {c, a, s};
}

Subspace s3_sign_quotient_functions(const HopfAlgebra& k_s3)
{
    if (k_s3.dim() != 6)
        throw InvalidInput("s3_sign_quotient_functions: expects the function algebra on S3");
    Vector even(6), odd(6);
    for (std::size_t i : {0, 4, 5})
        even[i] = 1;
    for (std::size_t i : {1, 2, 3})
        odd[i] = 1;
    return Subspace::span(6, {even, odd});
}

std::vector<HopfAlgebra> hopf_algebras()
{
    HopfAlgebra h4 = sweedler();
    HopfAlgebra s3 = s3_group_algebra();
    return {cyclic_group_algebra(2),
            cyclic_group_algebra(3),
            cyclic_group_algebra(4),
            klein_group_algebra(),
            s3,
            function_algebra(s3, "k^S3"),
            h4,
            dual_hopf(h4, "H4*")};
}

std::vector<Entry> coalgebras()
{
    Coalgebra g1 = grouplike_coalgebra({"g"});
    Coalgebra g2 = grouplike_coalgebra({"g", "h"});
    Coalgebra m2 = matrix_coalgebra(2);
    std::vector<Entry> out{
        {g1, true, true},
        {g2, true, true},
        {m2, true, true},
        {matrix_coalgebra(3), true, true},
        {dual_numbers(), true, true},
        {lam_dual(Scalar(2)), true, false},
        {lam_dual(Scalar(-1)), true, false},
        {opposite(lam_dual(Scalar(2))), true, false},
        {direct_sum(g1, m2), true, true},
        {tensor(m2, g2), true, true},
        {square_zero_dual(), false, false},
        {path_a2(), false, false},
    };
    for (const auto& h : hopf_algebras()) {
        bool sym = h.name() != "H4" && h.name() != "H4*";
        out.push_back({h.coalgebra, true, sym});
    }
    return out;
}

std::vector<std::string> names()
{
    std::vector<std::string> out;
    for (const auto& e : coalgebras())
        out.push_back(e.coalgebra.name());
    return out;
}

Coalgebra coalgebra_by_name(const std::string& name)
{
    for (const auto& e : coalgebras())
        if (e.coalgebra.name() == name)
            return e.coalgebra;
    throw InvalidInput("unknown corpus coalgebra: " + name);
}

HopfAlgebra hopf_by_name(const std::string& name)
{
    for (const auto& h : hopf_algebras())
        if (h.name() == name)
            return h;
    throw InvalidInput("unknown corpus Hopf algebra: " + name);
}

}  // namespace cofrob::corpus
