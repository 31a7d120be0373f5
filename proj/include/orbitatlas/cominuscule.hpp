#ifndef ORBITATLAS_COMINUSCULE_HPP
#define ORBITATLAS_COMINUSCULE_HPP

#include "orbitatlas/extvector.hpp"
#include "orbitatlas/hasse.hpp"
#include "orbitatlas/rootsystem.hpp"
#include "orbitatlas/weyl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbitatlas {

enum class FamilyName { Grassmannian, Quadric, LagrangianGrassmannian, Spinor, CayleyPlane, E7P7 };

enum class FillStatus { defective, overfills, perfectly_fills, nondefective_proper };

struct CominusculeFamily {
    DynkinType dynkin;
    int node = 0;
    FamilyName name = FamilyName::Grassmannian;
    long dim_x = 0;
    long ambient_proj_dim = 0;
    long d = 0;               // maximal orthogonal long-root sequence length
    long dim_sigma2 = 0;
    FillStatus fill = FillStatus::nondefective_proper;

    /// Classical parameters: Gr(k,N) has ambient C^N, LG(N,2N) and the
    /// spinor family S_N carry their N here; quadrics carry m.
    long param_k = 0;
    long param_n = 0;

    std::string display() const;
};

std::string to_string(FamilyName name);
std::string to_string(FillStatus fill);

/// Family data for a cominuscule (type, node): closed-form dimensions from
/// the classification, d from the orthogonal cascade, fill status from
/// comparing dim sigma_2 against the expected dimension and the ambient.
/// Throws std::domain_error (naming the coefficient m_k(rho)) off the
/// cominuscule list.
CominusculeFamily classify_family(const RootSystem& sys, int node);
CominusculeFamily classify_family(DynkinType type, int node);

/// The orbit poset of the secant variety of lines: base X, the merged node
/// Theta2 = Sigma2, then the tangent chain Theta_j and secant chain Sigma_j
/// joined by rungs Theta_j -> Sigma_j for 3 <= j <= d.
HasseDiagram build_orbit_poset(const CominusculeFamily& fam);

/// Known orbit dimension of the second-to-minimal orbit closure, where the
/// classification states one.
std::optional<long> sigma2_orbit_dim(const CominusculeFamily& fam);

/// Representatives of the distance-j orbits for the exterior-algebra types:
/// Gr(k,N): e_[k] + e_{[k+j]\[k]} ^ e_{[k]\[j]};
/// LG(N,2N): e_[N] + e_{[N]\[j]} ^ e_{-[j]}.
/// Quadrics have no exterior model here and exceptional types are excluded.
std::vector<ExtVector> secant_representatives(const CominusculeFamily& fam);

/// Tangent-orbit representatives theta_j at the base point:
/// Gr: sum of (-1)^{i+1} e_{[k]\{i}} ^ e_{k+i}, a rank-j homomorphism;
/// LG: sum of (-1)^{i+1} e_{[N]\{i}} ^ e_{-i}, a rank-j quadric;
/// Spinor: sum of e_{2i-1} ^ e_{2i} in the second exterior power of C^N.
std::vector<ExtVector> tangent_representatives(const CominusculeFamily& fam);

/// Rank of the matrix block a tangent vector represents (the orbit invariant
/// of the tangent stratification).
long tangent_matrix_rank(const CominusculeFamily& fam, const ExtVector& theta);

/// Spinor points as inhomogeneous even forms: secant x_j = 1 + e_[2j],
/// tangent point 1 + theta_j. Their annihilator dimensions separate the
/// distance classes.
std::vector<MixedExt> spinor_secant_points(const CominusculeFamily& fam);
std::vector<MixedExt> spinor_tangent_points(const CominusculeFamily& fam);

enum class Identifiability { rank_one, unidentifiable, tangential_identifiable, identifiable };
enum class SingularLocus { empty, base_variety, sigma2_closure };
enum class TerraciniLocus { empty, preimage_of_base, preimage_of_sigma2_closure };

struct OrbitVerdict {
    std::string id;
    std::string display;
    std::optional<long> dim;
    Identifiability identifiable = Identifiability::rank_one;
    std::optional<bool> smooth_in_secant;
    bool in_terracini_image = false;
};

struct LociReport {
    CominusculeFamily family;
    std::vector<OrbitVerdict> orbits;
    std::optional<long> decomposition_locus_dim; // of points in Sigma2
    SingularLocus sing_set = SingularLocus::empty;
    long sing_dim = 0; // 0 for the empty locus, as in the published table
    TerraciniLocus terracini = TerraciniLocus::empty;
};

std::string to_string(Identifiability v);
std::string to_string(SingularLocus v);
std::string to_string(TerraciniLocus v);

/// Per-orbit identifiability, smoothness and Terracini verdicts together
/// with the family-level loci data.
LociReport loci_report(const CominusculeFamily& fam);

/// All cominuscule (type, node) pairs with rank bounded by max_rank,
/// deduplicated (E6 node 6 mirrors node 1).
std::vector<std::pair<DynkinType, int>> cominuscule_families(int max_rank);

} // namespace orbitatlas

#endif
