#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cofrob/frobenius.hpp"

namespace cofrob {

enum class HomTarget { dual, coalgebra, dual_algebra };
std::string to_string(HomTarget t);

/// F(M) = Hom_k(M, k), G(M) = Hom_C*(M, C), H(M) = Hom_C*(M, C*), each with
/// its right C*-action. Maps are stored as matrices acting on coordinate
/// columns of M; F uses 1 x dim M matrices.
struct HomSpace {
    Comodule source;
    HomTarget target;
    std::vector<Matrix> basis;

    std::size_t dim() const { return basis.size(); }
    /// f <- c^k for a map f (not necessarily a basis element).
    Matrix act(const Matrix& f, std::size_t k) const;
    /// Whether f satisfies the defining linear conditions of the space.
    bool contains(const Matrix& f) const;
};

HomSpace compute_F(const Comodule& m);
HomSpace compute_G(const Comodule& m);
HomSpace compute_H(const Comodule& m);

/// alpha(M)(g) = eps o g and (beta(M)(f))(m) = sum f(m_0) m_1.
Matrix alpha_M(const Comodule& m, const Matrix& g);
Matrix beta_M(const Comodule& m, const Matrix& f);

struct EquivalenceReport {
    std::size_t dim_F = 0, dim_G = 0;
    bool beta_lands_in_G = false;
    bool alpha_beta = false;       // alpha o beta = id on F(M)
    bool beta_alpha = false;       // beta o alpha = id on G(M)
    bool alpha_linear = false;     // right C*-linear
    bool beta_linear = false;
    std::optional<bool> natural;   // only when a morphism was supplied
    bool ok() const
    {
        return beta_lands_in_G && alpha_beta && beta_alpha && alpha_linear && beta_linear && natural.value_or(true);
    }
};
/// `morphism` is an optional comodule map phi: N -> M (dim M x dim N); the
/// naturality squares for F(phi), G(phi) are then checked for this one map.
EquivalenceReport equivalence_FG(const Comodule& m, const Comodule* source = nullptr,
                                 const Matrix* morphism = nullptr);

/// f: C -> C left C*-linear and bijective; returns u with f(c) = c . u.
/// Throws InvalidInput when f is not C*-linear or is singular.
Vector automorphism_description(const Coalgebra& c, const Matrix& f);

/// beta(C)(c*) is c -> c . c*; checks beta(C)(c* d*) = beta(C)(d*) o beta(C)(c*).
bool beta_C_anti_isomorphism(const Coalgebra& c);

struct GHSample {
    std::string name;
    std::size_t dim_G = 0, dim_H = 0;
    bool iso_verified = false;  // only attempted for symmetric C
};
struct GHReport {
    SearchStatus symmetric = SearchStatus::inconclusive;
    std::vector<GHSample> samples;
    /// Set when some sample has dim G != dim H, which rules out symmetry.
    bool mismatch_found = false;
};
GHReport symmetric_via_GH(const Coalgebra& c, const std::vector<Comodule>& samples,
                          const SearchOptions& opts = {});

}  // namespace cofrob
