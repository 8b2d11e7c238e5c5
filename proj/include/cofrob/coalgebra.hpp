#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cofrob/linalg.hpp"

namespace cofrob {

/// Dense three-index array of scalars.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2) : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

    std::size_t extent(int axis) const { return axis == 0 ? d0_ : axis == 1 ? d1_ : d2_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_[(i * d1_ + j) * d2_ + k];
    }
    const std::vector<Scalar>& entries() const { return data_; }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> data_;
};

/// One failed axiom instance, located by basis index.
struct Violation {
    std::string axiom;
    std::size_t index = 0;
    std::string detail;
};

struct AxiomReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n);

// ---------------------------------------------------------------- Coalgebra

/// Finite-dimensional coalgebra over Q given by structure constants:
///   delta(c_i) = sum_{j,k} delta(i,j,k) c_j (x) c_k,   counit(c_i) = eps_i.
/// Cheap to copy (shared immutable data). The constructor checks shapes only;
/// call validate() for the axioms.
class Coalgebra {
public:
    Coalgebra() = default;
    Coalgebra(std::string name, std::vector<std::string> basis, Tensor3 delta, Vector counit);

    const std::string& name() const { return d_->name; }
    std::size_t dim() const { return d_->counit.size(); }
    const std::vector<std::string>& basis_names() const { return d_->basis; }
    const Scalar& delta(std::size_t i, std::size_t j, std::size_t k) const { return d_->delta(i, j, k); }
    const Tensor3& delta_tensor() const { return d_->delta; }
    const Vector& counit() const { return d_->counit; }
    bool valid_handle() const { return static_cast<bool>(d_); }

    /// Column i is delta(c_i) flattened with index j*n + k.
    const Matrix& coproduct_matrix() const { return d_->coproduct; }
    Vector coproduct(const Vector& x) const;

    /// Matrix of x -> c^k . x  = sum c^k(x_2) x_1 for the dual basis vector c^k.
    const Matrix& left_hit_matrix(std::size_t k) const { return d_->left_hits.at(k); }
    /// Matrix of x -> x . c^k  = sum c^k(x_1) x_2.
    const Matrix& right_hit_matrix(std::size_t k) const { return d_->right_hits.at(k); }
    Matrix left_hit_matrix(const Vector& dual) const;
    Matrix right_hit_matrix(const Vector& dual) const;

    Vector hit_left(const Vector& dual, const Vector& x) const;
    Vector hit_right(const Vector& x, const Vector& dual) const;

    Coalgebra renamed(std::string name) const;

    friend bool operator==(const Coalgebra& a, const Coalgebra& b);

private:
    struct Data {
        std::string name;
        std::vector<std::string> basis;
        Tensor3 delta;
        Vector counit;
        Matrix coproduct;
        std::vector<Matrix> left_hits;
        std::vector<Matrix> right_hits;
    };
    void require_dim(const Vector& v, const char* what) const;
    std::shared_ptr<const Data> d_;
};

AxiomReport validate(const Coalgebra& c);

enum class CoidealSide { left, right, two_sided };

/// left: delta(I) in C (x) I;  right: delta(I) in I (x) C;  two-sided: both,
/// i.e. delta(I) in I (x) I (a subcoalgebra).
bool is_coideal(const Coalgebra& c, const Subspace& s, CoidealSide side);
bool is_subcoalgebra(const Coalgebra& c, const Subspace& s);

/// Right coideal generated by x: span{c^k . x}.
Subspace right_coideal_generated(const Coalgebra& c, const Vector& x);
/// Left coideal generated by x: span{x . c^k}.
Subspace left_coideal_generated(const Coalgebra& c, const Vector& x);
/// Smallest subcoalgebra containing x: span{c^j . x . c^k}.
Subspace subcoalgebra_generated(const Coalgebra& c, const Vector& x);

/// Kernel of x -> delta(x) - twist(delta(x)).
Subspace cocommutative_elements(const Coalgebra& c);
/// Basis elements g with delta(g) = g (x) g and eps(g) = 1. Best-effort scan:
/// grouplikes that are not basis vectors are not found.
std::vector<std::size_t> grouplike_basis_elements(const Coalgebra& c);
/// Grouplike elements found by splitting C along rational eigenvalues of
/// random combinations of the left hit matrices (c^k . g = g_k g for a
/// grouplike g). Best effort: every returned element is verified, but
/// grouplikes can be missed when the relevant eigenspaces never separate or
/// the characteristic polynomial has coefficients too large to factor.
std::vector<Vector> grouplike_elements(const Coalgebra& c, std::uint64_t seed = 0, int trials = 8);

// -------------------------------------------------------------- constructors

Coalgebra grouplike_coalgebra(const std::vector<std::string>& labels);
/// Comatrix coalgebra M^c(n): delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = delta_ij.
/// Basis order e_11, e_12, ..., e_nn.
Coalgebra matrix_coalgebra(std::size_t n);
Coalgebra direct_sum(const Coalgebra& c, const Coalgebra& d);
/// delta(c (x) d) = sum (c_1 (x) d_1) (x) (c_2 (x) d_2); basis index i*dim(d) + j.
Coalgebra tensor(const Coalgebra& c, const Coalgebra& d);
/// Co-opposite coalgebra: delta^cop(c) = sum c_2 (x) c_1.
Coalgebra opposite(const Coalgebra& c);
/// Image of a subcoalgebra, in the basis of the given subspace.
Coalgebra restrict_to_subcoalgebra(const Coalgebra& c, const Subspace& s, std::string name);

// ---------------------------------------------------------------- Algebra

/// Finite-dimensional associative unital algebra by structure constants:
///   e_a e_b = sum_k mult(a,b,k) e_k.
class Algebra {
public:
    Algebra() = default;
    Algebra(std::string name, std::vector<std::string> basis, Tensor3 mult, Vector unit);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return unit_.size(); }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const Scalar& mult(std::size_t a, std::size_t b, std::size_t k) const { return mult_(a, b, k); }
    const Tensor3& mult_tensor() const { return mult_; }
    const Vector& unit() const { return unit_; }

    Vector multiply(const Vector& u, const Vector& v) const;
    /// Matrix of v -> u v.
    Matrix left_mult_matrix(const Vector& u) const;
    /// Matrix of v -> v u.
    Matrix right_mult_matrix(const Vector& u) const;
    bool is_invertible(const Vector& u) const;
    std::optional<Vector> inverse(const Vector& u) const;

    Algebra opposite() const;

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    std::string name_;
    std::vector<std::string> basis_;
    Tensor3 mult_;
    Vector unit_;
};

using DualAlgebra = Algebra;

AxiomReport validate(const Algebra& a);

/// C* with convolution (f g)(c) = sum f(c_1) g(c_2) on the dual basis; unit eps.
DualAlgebra dual_algebra(const Coalgebra& c);
/// A* with delta(e^k) = sum mult(i,j,k) e^i (x) e^j and eps(e^k) = unit_k.
Coalgebra dual_coalgebra(const Algebra& a, std::string name);

// ---------------------------------------------------------------- Comodule

/// Right C-comodule: rho(m_a) = sum_{b,k} coaction(a,b,k) m_b (x) c_k.
/// As a left C*-module, c^k . m = sum c^k(m_1) m_0.
class Comodule {
public:
    Comodule() = default;
    Comodule(std::string name, Coalgebra parent, std::vector<std::string> basis, Tensor3 coaction);

    const std::string& name() const { return name_; }
    const Coalgebra& parent() const { return parent_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const Tensor3& coaction() const { return coaction_; }

    /// Matrix of m -> c^k . m.
    Matrix action_matrix(std::size_t k) const;
    Matrix action_matrix(const Vector& dual) const;

private:
    std::string name_;
    Coalgebra parent_;
    std::vector<std::string> basis_;
    Tensor3 coaction_;
};

AxiomReport validate(const Comodule& m);

Comodule regular_comodule(const Coalgebra& c);
Comodule zero_comodule(const Coalgebra& c);

/// A subcomodule given by a subspace closed under the C*-action, together
/// with its inclusion matrix (columns are the subspace basis vectors).
struct Subcomodule {
    Comodule module;
    Matrix inclusion;
};
Subcomodule subcomodule(const Comodule& m, const Subspace& s, std::string name);

/// phi: M -> N (dim N x dim M) commutes with the coactions.
bool is_comodule_morphism(const Comodule& m, const Comodule& n, const Matrix& phi);

}  // namespace cofrob
