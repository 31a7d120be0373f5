#ifndef ORBITATLAS_WEYL_HPP
#define ORBITATLAS_WEYL_HPP

#include "orbitatlas/rational.hpp"
#include "orbitatlas/rootsystem.hpp"

#include <vector>

namespace orbitatlas {

/// Vector in the root space with rational coordinates over the simple roots.
using RootSpaceVector = std::vector<Rational>;

RootSpaceVector to_root_space(const Root& r);

/// Reflection s_beta(v) = v - 2(v|beta)/(beta|beta) beta. Involutive and
/// product-preserving.
RootSpaceVector reflect(const RootSystem& sys, const Root& beta, const RootSpaceVector& v);

/// Word of (not necessarily simple) reflections; entries act right to left.
struct WeylWord {
    std::vector<Root> reflections;
};

RootSpaceVector apply_word(const RootSystem& sys, const WeylWord& w, const RootSpaceVector& v);

/// Ordered maximal sequence of pairwise orthogonal long roots in Phi_k^+.
/// Its length is the invariant d_k^G counting the parabolic orbits.
struct OrthogonalCascade {
    DynkinType dynkin;
    int node;
    std::vector<Root> roots;

    std::size_t length() const { return roots.size(); }
};

/// Greedy cascade: repeatedly take the highest long root of Phi_k^+ among
/// those orthogonal to everything already chosen (height order, then
/// lexicographic on coefficients). Any two maximal orthogonal sequences give
/// conjugate representatives; this fixes one deterministically.
OrthogonalCascade max_orthogonal_cascade(const RootSystem& sys, int node);

/// Exhaustive maximum pairwise-orthogonal subset of the long roots of
/// Phi_k^+, by branch and bound. Independent check that the greedy cascade
/// is maximum, not merely maximal.
std::size_t exhaustive_max_orthogonal(const RootSystem& sys, int node);

/// w_j = s_{b_1} ... s_{b_j} for j = 1..d.
std::vector<WeylWord> secant_weyl_words(const OrthogonalCascade& cascade);

} // namespace orbitatlas

#endif
