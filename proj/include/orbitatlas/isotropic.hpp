#ifndef ORBITATLAS_ISOTROPIC_HPP
#define ORBITATLAS_ISOTROPIC_HPP

#include "orbitatlas/hasse.hpp"
#include "orbitatlas/qmatrix.hpp"
#include "orbitatlas/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbitatlas {

/// The isotropic Grassmannian IG(k,2N) for a non-cominuscule node
/// 2 <= k <= N-1. Fixes the symplectic basis (e_1..e_N, e_{-N}..e_{-1}) and
/// the flag E_k < E_k^perp < C^{2N}; the tangent space at the base point is
/// Sym^2 E_k* + (E_k* x E_k^perp/E_k).
struct IsoContext {
    std::size_t N = 0;
    std::size_t k = 0;

    IsoContext(std::size_t n, std::size_t kk);

    std::size_t middle_dim() const { return 2 * (N - k); }
    /// dim IG(k,2N) = dim p^u = k(k+1)/2 + k(2N-2k).
    long dim_pu() const;

    /// Basis label of middle coordinate m (0-based): e_{k+1}..e_N then
    /// e_{-N}..e_{-k-1}.
    int middle_label(std::size_t m) const;
    std::size_t middle_position(int label) const;

    /// Gram matrix of the symplectic form restricted to E_k^perp/E_k
    /// (equals Omega_{N-k} in the induced basis).
    QMatrix middle_omega() const;
};

/// Tangent vector sigma + H: a symmetric k x k block and a k x (2N-2k)
/// block. Row i corresponds to the dual coordinate e_{-(i+1)}.
struct TangentElement {
    QMatrix sigma;
    QMatrix H;

    static TangentElement zero(const IsoContext& ctx);
    bool operator==(const TangentElement& other) const = default;
};

void check_dims(const IsoContext& ctx, const TangentElement& x);

/// Complete orbit invariant: r = rank sigma, h = rank of H on the radical of
/// sigma, t = corank of the symplectic form on the image of that restriction.
struct OrbitTriplet {
    long r = 0, h = 0, t = 0;

    auto operator<=>(const OrbitTriplet&) const = default;
    std::string str() const;
};

/// The four published inequalities plus h + t <= 2N - 2k. The extra bound is
/// forced by t = dim(Q n Q^perp) <= dim Q^perp = 2N - 2k - h; it is implied
/// by the published four on every context with N <= 5 but cuts unrealizable
/// triplets at larger sizes.
bool is_valid_triplet(const IsoContext& ctx, const OrbitTriplet& o);

OrbitTriplet classify(const IsoContext& ctx, const TangentElement& x);

/// Normal form sigma_r + H_{(h,t)}: unit diagonal on the last r dual
/// coordinates; t isotropic-image rows, then (h-t)/2 rows paired
/// hyperbolically with the final (h-t)/2 rows.
TangentElement representative(const IsoContext& ctx, const OrbitTriplet& o);

/// All valid triplets, sorted by (r+h, r, t).
std::vector<OrbitTriplet> enumerate_orbits(const IsoContext& ctx);

/// dim O_(r,h,t) = r(r+1)/2 + (r+h)(2N-k-r) + t(t+1)/2 - h^2 - t^2.
long orbit_dim(const IsoContext& ctx, const OrbitTriplet& o);

/// Minimal degenerations: the moves (dh,dt) = (+1,+1), (+1,-1) and
/// (dr,dh,dt) = (+1,-1,+1), (+1,-1,-1) between valid triplets, transitively
/// reduced. Edges carry the witness family name.
HasseDiagram build_hasse(const IsoContext& ctx);

/// One-parameter family x(eps) = base + (1/eps) scaled inside the upper
/// orbit, with limit = base in the lower orbit.
struct DegenerationWitness {
    std::string family; // alpha / beta / gamma / delta / eta
    OrbitTriplet lower, upper;
    TangentElement base;
    TangentElement scaled;

    TangentElement at(const Rational& eps) const;
    const TangentElement& limit() const { return base; }
};

/// Witness for a minimal move, or for upper = (k-1,1,1) the family through
/// the codimension-one orbit.
DegenerationWitness degeneration_witness(const IsoContext& ctx, const OrbitTriplet& lower,
                                         const OrbitTriplet& upper);

/// The family through the codimension-one orbit (k-1,1,1), defined for every
/// valid lower triplet other than the dense and codimension-one orbits.
DegenerationWitness eta_witness(const IsoContext& ctx, const OrbitTriplet& lower);

/// Element of the parabolic P = L P^u. The Levi part is (G, S) in
/// GL(E_k) x Sp(E_k^perp/E_k); the unipotent part is the tensor
/// A in E_k x E_k^perp/E_k together with the corner block B.
struct GroupElement {
    QMatrix gl;        // G, k x k, invertible
    QMatrix gl_inv;
    QMatrix sp;        // S, (2N-2k) x (2N-2k), symplectic for middle_omega
    QMatrix a_tensor;  // A, k x (2N-2k)
    QMatrix corner;    // B, k x k, satisfying B J - J B^t = (A W)(W^t A^t)-style constraint

    static GroupElement identity(const IsoContext& ctx);
};

/// Deterministic element from a seed: unimodular integer G, S a product of
/// symplectic transvections, random integer A, B solved from the corner
/// constraint with a random symmetric part. The assembled matrix is checked
/// to be exactly symplectic.
GroupElement random_group_element(const IsoContext& ctx, std::uint64_t seed);

/// Assembled 2N x 2N matrix (Levi times unipotent) in the basis
/// (e_1..e_N, e_{-N}..e_{-1}).
QMatrix assemble(const IsoContext& ctx, const GroupElement& g);

bool is_symplectic(const QMatrix& g);

/// Parabolic action on the tangent space: the unipotent part adds the
/// contraction 2 sigma A into H (B acts trivially), the Levi part acts by
/// congruence on sigma and by the natural bi-action on H.
TangentElement act(const IsoContext& ctx, const GroupElement& g, const TangentElement& x);

/// Embedding of sigma + H as a strictly block-lower matrix of sp_{2N}, and
/// the inverse projection along p. Ad(assemble(g)) composed with these must
/// equal act; used as an independent oracle on the action conventions.
QMatrix embed_tangent(const IsoContext& ctx, const TangentElement& x);
TangentElement project_tangent(const IsoContext& ctx, const QMatrix& X);

/// Orbit poset of the tangential variety: (1,0,0) and (0,1,1) merge with the
/// zero stratum into the base node IG(k,2N); a node is
/// tangential-identifiable iff r + h >= 3.
HasseDiagram tangential_graph(const IsoContext& ctx);

} // namespace orbitatlas

#endif
