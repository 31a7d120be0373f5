#ifndef ORBITATLAS_EXTVECTOR_HPP
#define ORBITATLAS_EXTVECTOR_HPP

#include "orbitatlas/qmatrix.hpp"
#include "orbitatlas/rational.hpp"

#include <map>
#include <vector>

namespace orbitatlas {

/// C^{2N} with the standard symplectic basis (e_1,...,e_N,e_{-N},...,e_{-1}),
/// so that w(e_i, e_j) = w(e_{-i}, e_{-j}) = 0 and w(e_i, e_{-j}) = delta_ij.
/// In this ordering the Gram matrix is the anti-diagonal block form Omega_N.
class SymplecticSpace {
public:
    explicit SymplecticSpace(std::size_t half_dim);

    std::size_t half_dim() const { return n_; }
    std::size_t dim() const { return 2 * n_; }

    /// Labels are 1..N and -1..-N; slots are positions 0..2N-1 in the
    /// canonical basis order above.
    std::size_t slot_of_label(int label) const;
    int label_of_slot(std::size_t slot) const;

    const QMatrix& gram() const { return gram_; }
    Rational omega(int label_a, int label_b) const;

private:
    std::size_t n_;
    QMatrix gram_;
};

/// Anti-diagonal ones J_m.
QMatrix antidiag_ones(std::size_t m);
/// The block form Omega_m = [[0, J_m], [-J_m, 0]].
QMatrix omega_matrix(std::size_t m);

/// Element of the k-th exterior power of C^M over a fixed ordered basis.
/// Terms are keyed by strictly increasing slot subsets; antisymmetry is
/// encoded by the canonical ordering with signs tracked on construction.
class ExtVector {
public:
    using Key = std::vector<int>; // strictly increasing slots

    ExtVector() = default;
    ExtVector(std::size_t ambient_dim, std::size_t degree)
        : ambient_(ambient_dim), degree_(degree) {}

    /// e_{s_1} ^ ... ^ e_{s_k} for the given slots (any order, signs applied;
    /// zero if a slot repeats).
    static ExtVector monomial(std::size_t ambient_dim, std::vector<int> slots,
                              const Rational& coeff = Rational(1));
    static ExtVector unit(std::size_t ambient_dim, int slot);
    /// The scalar 1 in degree 0 (used for spinor-style mixed-degree work
    /// through MixedExt below).
    static ExtVector one(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational coeff(const Key& key) const;
    void add_term(const Key& sorted_key, const Rational& coeff);

    ExtVector operator+(const ExtVector& other) const;
    ExtVector operator-(const ExtVector& other) const;
    ExtVector scaled(const Rational& c) const;
    bool operator==(const ExtVector& other) const = default;

private:
    std::size_t ambient_ = 0, degree_ = 0;
    std::map<Key, Rational> terms_;
};

/// Graded-antisymmetric product. Degree overflow past the ambient dimension
/// gives the zero vector.
ExtVector wedge(const ExtVector& a, const ExtVector& b);

/// Contraction with the covector xi (coordinates over the dual basis):
/// on a monomial, sum of (-1)^{j-1} xi(e_{s_j}) e_{S \ {s_j}}.
ExtVector contract(const ExtVector& v, const std::vector<Rational>& xi);

/// Contraction with the symplectic form (degree drops by two).
ExtVector contract_form(const ExtVector& v, const SymplecticSpace& sp);

/// Membership in the primitive subspace of the k-th exterior power: the
/// kernel of contraction with the symplectic form. The minimal embedding of
/// the Lagrangian Grassmannian lives there.
bool is_primitive(const ExtVector& v, const SymplecticSpace& sp);

/// dim of the primitive subspace in degree k: C(2N,k) - C(2N,k-2).
Integer primitive_dimension(std::size_t half_dim, std::size_t degree);

/// Kernel of v -> v*(q), the contraction of q by w(v, .). For a decomposable
/// isotropic q = [W] the kernel is W itself.
QMatrix psi_kernel(const ExtVector& q, const SymplecticSpace& sp);

/// Kernel of v -> v ^ p on C^M; for decomposable p this is the subspace p
/// represents, and it shrinks exactly with the Hamming distance on rank-2
/// points of the Grassmannian.
QMatrix wedge_kernel(const ExtVector& p);

/// Extend a linear map of C^M (columns are images of basis vectors) to the
/// exterior power containing v.
ExtVector ext_power_apply(const QMatrix& g, const ExtVector& v);

/// Inhomogeneous element of the full exterior algebra of C^M; the spinor
/// variety embeds in the even part.
class MixedExt {
public:
    MixedExt() = default;
    explicit MixedExt(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExtVector::Key, Rational>& terms() const { return terms_; }

    void add_term(const ExtVector::Key& sorted_key, const Rational& coeff);
    MixedExt operator+(const MixedExt& other) const;

    static MixedExt from(const ExtVector& v);

private:
    std::size_t ambient_ = 0;
    std::map<ExtVector::Key, Rational> terms_;
};

MixedExt wedge_unit(int slot, const MixedExt& psi);
MixedExt contract_unit(int slot, const MixedExt& psi);

/// dim of the annihilator of psi inside C^N + (C^N)* acting by wedge and
/// contraction. Pure spinors have an N-dimensional annihilator (the maximal
/// isotropic subspace they represent); for a sum of two pure spinors it drops
/// to the intersection, which separates the distance classes.
std::size_t spinor_annihilator_dim(const MixedExt& psi);

} // namespace orbitatlas

#endif
