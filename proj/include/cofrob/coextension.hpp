#pragma once

#include <string>
#include <vector>

#include "cofrob/frobenius.hpp"

namespace cofrob {

/// (C, C)-bicomodule on basis m_0..m_{d-1}:
///   left:  m_a -> sum left(a, k, b)  c_k (x) m_b
///   right: m_a -> sum right(a, b, k) m_b (x) c_k
struct Bicomodule {
    std::string name;
    Coalgebra parent;
    std::vector<std::string> basis;
    Tensor3 left;
    Tensor3 right;

    std::size_t dim() const { return basis.size(); }
};

/// Both coactions coassociative and counital, plus the compatibility of the
/// two coactions.
AxiomReport validate(const Bicomodule& m);

/// M = C* (the rational dual, all of it in finite dimension): the right
/// coaction comes from left multiplication in C*, the left coaction from
/// right multiplication. Basis labels are the dual basis of C.
Bicomodule rat_dual_bicomodule(const Coalgebra& c);
Bicomodule zero_bicomodule(const Coalgebra& c);

/// D = C (+) M. Basis: c_0..c_{n-1} followed by m_0..m_{d-1}.
Coalgebra trivial_coextension(const Coalgebra& c, const Bicomodule& m);

/// C* (+) M* with (c*, m*)(b*, n*) = (c* b*, c* n* + m* b*), where the
/// bimodule structure of M* is dual to the coactions of M.
Algebra trivial_extension(const Coalgebra& c, const Bicomodule& m);

struct DualExtensionReport {
    bool multiplicative = false;  // on all basis pairs
    bool unital = false;
    bool square_zero = false;     // (0, m*)(0, n*) = 0
    bool ok() const { return multiplicative && unital && square_zero; }
};
/// Compares D* (computed by convolution on D) with the trivial extension,
/// through the identification of dual bases D* = C* (+) M*.
DualExtensionReport dual_is_trivial_extension(const Coalgebra& c, const Bicomodule& m);

struct EmbeddingReport {
    Coalgebra extension;
    Matrix alpha;                  // alpha(c, m) = (m, sigma(c))
    bool subcoalgebra = false;     // C sits in D as a subcoalgebra
    bool left_linear = false;      // alpha is left D*-linear
    bool right_linear = false;
    bool bijective = false;
    bool proof_identities = false; // the four auxiliary identities of the proof
    bool form_symmetric = false;
    Decision<BilinearForm> search; // independent is_symmetric(D), when run
    bool ok() const
    {
        return subcoalgebra && left_linear && right_linear && bijective && proof_identities && form_symmetric;
    }
};
EmbeddingReport embedding_theorem_check(const Coalgebra& c, bool run_search = true,
                                        const SearchOptions& opts = {});

}  // namespace cofrob
