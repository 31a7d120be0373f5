#ifndef ORBITATLAS_ROOTSYSTEM_HPP
#define ORBITATLAS_ROOTSYSTEM_HPP

#include "orbitatlas/rational.hpp"

#include <string>
#include <vector>

namespace orbitatlas {

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
    Family family;
    int rank;

    std::string name() const;
};

DynkinType dynkin_from(char family_letter, int rank);

/// Root as an integer coefficient vector over the simple roots a_1..a_N.
using Root = std::vector<long>;

/// Finite irreducible root system built from the Cartan matrix by reflection
/// closure. Roots are ordered by height, then lexicographically, so the
/// enumeration is deterministic. Lengths are normalized so short roots have
/// squared length 2 (long roots then have 4, or 6 in G2).
class RootSystem {
public:
    explicit RootSystem(DynkinType type);

    const DynkinType& type() const { return type_; }
    int rank() const { return type_.rank; }

    /// Cartan matrix entry <a_i | a_j> = 2(a_i|a_j)/(a_j|a_j).
    long cartan(int i, int j) const { return cartan_[i][j]; }
    /// Squared length of the i-th simple root (2, 4 or 6).
    long simple_length_sq(int i) const { return length_sq_[i]; }

    const std::vector<Root>& roots() const { return roots_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& longest_root() const { return longest_; }

    bool is_root(const Root& r) const;
    bool is_positive(const Root& r) const;
    bool is_long(const Root& r) const;

    /// Symmetrized invariant product (b|c), an integer in this normalization.
    long inner(const Root& b, const Root& c) const;
    /// Squared length (r|r).
    long norm_sq(const Root& r) const { return inner(r, r); }

    long height(const Root& r) const;

    /// Coefficient of a_k (1-based node index) in the root.
    long coefficient(const Root& r, int node) const;

private:
    DynkinType type_;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> length_sq_;
    std::vector<Root> roots_;
    std::vector<Root> positive_;
    Root longest_;
    long max_length_sq_ = 2;
};

/// Cartan number <b|a> = 2(b|a)/(a|a); both arguments must be roots.
long cartan_number(const RootSystem& sys, const Root& beta, const Root& alpha);

/// True iff the longest root has coefficient 1 on node k, i.e. the unipotent
/// radical of P_k is abelian.
bool is_cominuscule(const RootSystem& sys, int node);

/// (Phi_k^+, Phi_k^0): positive roots with nonzero coefficient on node k, and
/// all roots with zero coefficient there. Together with -Phi_k^+ they
/// partition the full root set.
struct ParabolicRoots {
    std::vector<Root> radical;  // Phi_k^+
    std::vector<Root> levi;     // Phi_k^0
};
ParabolicRoots parabolic_roots(const RootSystem& sys, int node);

/// Nilpotency class of the unipotent radical of the maximal parabolic P_k:
/// the coefficient of a_k in the longest root.
long nilpotency_class(const RootSystem& sys, int node);

} // namespace orbitatlas

#endif
