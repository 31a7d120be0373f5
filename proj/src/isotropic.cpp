#include "orbitatlas/isotropic.hpp"

#include "orbitatlas/extvector.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace orbitatlas {

IsoContext::IsoContext(std::size_t n, std::size_t kk) : N(n), k(kk) {
    if (k < 2 || k + 1 > N)
        throw std::invalid_argument(
            "IG(k,2N) requires 2 <= k <= N-1 (k = N is the cominuscule Lagrangian "
            "Grassmannian, k = 1 the projective space)");
}

long IsoContext::dim_pu() const {
    long kk = static_cast<long>(k), nn = static_cast<long>(N);
    return kk * (kk + 1) / 2 + kk * (2 * nn - 2 * kk);
}

int IsoContext::middle_label(std::size_t m) const {
    if (m >= middle_dim()) throw std::invalid_argument("middle position out of range");
    if (m < N - k) return static_cast<int>(k + m) + 1;
    return -static_cast<int>(2 * N - k - m);
}

std::size_t IsoContext::middle_position(int label) const {
    if (label > static_cast<int>(k) && label <= static_cast<int>(N))
        return static_cast<std::size_t>(label) - k - 1;
    if (label < -static_cast<int>(k) && label >= -static_cast<int>(N))
        return 2 * N - k - static_cast<std::size_t>(-label);
    throw std::invalid_argument("label outside E_k^perp/E_k");
}

QMatrix IsoContext::middle_omega() const { return omega_matrix(N - k); }

TangentElement TangentElement::zero(const IsoContext& ctx) {
    return TangentElement{QMatrix(ctx.k, ctx.k), QMatrix(ctx.k, ctx.middle_dim())};
}

void check_dims(const IsoContext& ctx, const TangentElement& x) {
    if (x.sigma.rows() != ctx.k || x.sigma.cols() != ctx.k)
        throw std::invalid_argument("sigma block has wrong dimensions");
    if (!x.sigma.is_symmetric())
        throw std::invalid_argument("sigma block must be symmetric");
    if (x.H.rows() != ctx.k || x.H.cols() != ctx.middle_dim())
        throw std::invalid_argument("H block has wrong dimensions");
}

std::string OrbitTriplet::str() const {
    return "(" + std::to_string(r) + "," + std::to_string(h) + "," + std::to_string(t) + ")";
}

bool is_valid_triplet(const IsoContext& ctx, const OrbitTriplet& o) {
    const long k = static_cast<long>(ctx.k);
    const long mid = static_cast<long>(ctx.middle_dim());
    const long iso = static_cast<long>(ctx.N - ctx.k);
    if (o.r < 0 || o.h < 0 || o.t < 0) return false;
    if (o.r > k) return false;
    if (o.h > std::min(k - o.r, mid)) return false;
    if (o.t > std::min(o.h, iso)) return false;
    if ((o.h - o.t) % 2 != 0) return false;
    if (o.h + o.t > mid) return false; // t <= dim Q^perp
    return true;
}

OrbitTriplet classify(const IsoContext& ctx, const TangentElement& x) {
    check_dims(ctx, x);
    OrbitTriplet o;
    o.r = static_cast<long>(x.sigma.rank());
    // radical of the form, i.e. kernel of the Gram matrix
    QMatrix radical = x.sigma.null_space();
    QMatrix restricted = radical * x.H;
    o.h = static_cast<long>(restricted.rank());
    QMatrix image = restricted.row_basis();
    QMatrix gram = image * ctx.middle_omega() * image.transpose();
    o.t = o.h - static_cast<long>(gram.rank());
    if (!is_valid_triplet(ctx, o))
        throw std::logic_error("classified triplet violates the constraints");
    return o;
}

TangentElement representative(const IsoContext& ctx, const OrbitTriplet& o) {
    if (!is_valid_triplet(ctx, o))
        throw std::invalid_argument("invalid orbit triplet " + o.str());
    TangentElement x = TangentElement::zero(ctx);
    const std::size_t k = ctx.k;
    for (long l = 0; l < o.r; ++l) x.sigma.at(k - 1 - l, k - 1 - l) = 1;
    const long s = (o.h - o.t) / 2;
    for (long i = 1; i <= o.t; ++i)
        x.H.at(i - 1, ctx.middle_position(static_cast<int>(ctx.k) + static_cast<int>(i))) = 1;
    for (long i = 1; i <= s; ++i)
        x.H.at(o.t + i - 1,
               ctx.middle_position(static_cast<int>(ctx.k + o.t + i))) = 1;
    for (long i = 1; i <= s; ++i)
        x.H.at(o.t + s + i - 1,
               ctx.middle_position(-static_cast<int>(ctx.k + o.t + i))) = 1;
    return x;
}

std::vector<OrbitTriplet> enumerate_orbits(const IsoContext& ctx) {
    std::vector<OrbitTriplet> out;
    const long k = static_cast<long>(ctx.k);
    const long mid = static_cast<long>(ctx.middle_dim());
    for (long r = 0; r <= k; ++r)
        for (long h = 0; h <= std::min(k - r, mid); ++h)
            for (long t = h % 2; t <= h; t += 2) {
                OrbitTriplet o{r, h, t};
                if (is_valid_triplet(ctx, o)) out.push_back(o);
            }
    std::sort(out.begin(), out.end(), [](const OrbitTriplet& a, const OrbitTriplet& b) {
        if (a.r + a.h != b.r + b.h) return a.r + a.h < b.r + b.h;
        if (a.r != b.r) return a.r < b.r;
        return a.t < b.t;
    });
    return out;
}

long orbit_dim(const IsoContext& ctx, const OrbitTriplet& o) {
    if (!is_valid_triplet(ctx, o))
        throw std::invalid_argument("invalid orbit triplet " + o.str());
    const long n2 = 2 * static_cast<long>(ctx.N);
    const long k = static_cast<long>(ctx.k);
    return o.r * (o.r + 1) / 2 + (o.r + o.h) * (n2 - k - o.r) + o.t * (o.t + 1) / 2 -
           o.h * o.h - o.t * o.t;
}

namespace {

const std::array<std::pair<std::array<long, 3>, const char*>, 4> kMinimalMoves = {{
    {{0, 1, 1}, "alpha"},
    {{0, 1, -1}, "beta"},
    {{1, -1, 1}, "gamma"},
    {{1, -1, -1}, "delta"},
}};

} // namespace

HasseDiagram build_hasse(const IsoContext& ctx) {
    HasseDiagram d;
    auto orbits = enumerate_orbits(ctx);
    std::sort(orbits.begin(), orbits.end(), [&](const OrbitTriplet& a, const OrbitTriplet& b) {
        long da = orbit_dim(ctx, a), db = orbit_dim(ctx, b);
        if (da != db) return da < db;
        return a < b;
    });
    std::map<OrbitTriplet, std::size_t> index;
    for (const auto& o : orbits) {
        HasseDiagram::Node node;
        node.id = "O" + o.str();
        node.display = o.r + o.h == 0 ? "(0)" : "O" + o.str();
        node.dim = orbit_dim(ctx, o);
        index[o] = d.nodes.size();
        d.nodes.push_back(std::move(node));
    }
    for (const auto& o : orbits)
        for (const auto& [delta, name] : kMinimalMoves) {
            OrbitTriplet up{o.r + delta[0], o.h + delta[1], o.t + delta[2]};
            if (!is_valid_triplet(ctx, up)) continue;
            d.edges.push_back({index[o], index[up], name});
        }
    d.edges = transitive_reduction(d.nodes.size(), std::move(d.edges));

    // postconditions from the classification: strict dimension increase,
    // a unique dense orbit, and a unique codimension-one orbit below it
    for (const auto& e : d.edges)
        if (*d.nodes[e.lower].dim >= *d.nodes[e.upper].dim)
            throw std::logic_error("degeneration does not increase dimension");
    const OrbitTriplet dense{static_cast<long>(ctx.k), 0, 0};
    const OrbitTriplet codense{static_cast<long>(ctx.k) - 1, 1, 1};
    if (orbits.back() != dense || orbit_dim(ctx, dense) != ctx.dim_pu())
        throw std::logic_error("dense orbit is not maximal");
    auto reach = reachability(d.nodes.size(), d.edges);
    std::size_t co = index.at(codense);
    for (const auto& [o, i] : index)
        if (o != dense && o != codense && !reach[i][co])
            throw std::logic_error("orbit does not degenerate from the codim-1 orbit");
    return d;
}

TangentElement DegenerationWitness::at(const Rational& eps) const {
    if (eps == 0) throw std::invalid_argument("witness parameter must be nonzero");
    TangentElement x = base;
    Rational inv = 1 / eps;
    x.sigma = x.sigma + scaled.sigma.scaled(inv);
    x.H = x.H + scaled.H.scaled(inv);
    return x;
}

DegenerationWitness degeneration_witness(const IsoContext& ctx, const OrbitTriplet& lower,
                                         const OrbitTriplet& upper) {
    if (!is_valid_triplet(ctx, lower) || !is_valid_triplet(ctx, upper))
        throw std::invalid_argument("invalid triplet in witness request");
    DegenerationWitness w;
    w.lower = lower;
    w.upper = upper;
    w.base = TangentElement::zero(ctx);
    w.scaled = TangentElement::zero(ctx);
    const long k = static_cast<long>(ctx.k);
    const long dr = upper.r - lower.r, dh = upper.h - lower.h, dt = upper.t - lower.t;
    const long r = lower.r, h = lower.h, t = lower.t;

    if (dr == 0 && dh == 1 && dt == 1) {
        w.family = "alpha";
        w.base = representative(ctx, lower);
        // fresh isotropic middle direction orthogonal to im H_{(h,t)}; the
        // first untouched hyperbolic pair starts at (h+t)/2 + 1
        long col = (h + t) / 2 + 1;
        if (h + 1 <= static_cast<long>(ctx.N - ctx.k)) col = h + 1;
        w.scaled.H.at(h, ctx.middle_position(static_cast<int>(k + col))) = 1;
    } else if (dr == 0 && dh == 1 && dt == -1) {
        w.family = "beta";
        w.base = representative(ctx, upper);
        long row = (h + t) / 2 + 1;
        std::size_t col = ctx.middle_position(-static_cast<int>(k + t));
        w.base.H.at(row - 1, col) = 0;
        w.scaled.H.at(row - 1, col) = 1;
    } else if (dr == 1 && dh == -1 && dt == 1) {
        w.family = "gamma";
        w.base = representative(ctx, lower);
        w.scaled.sigma.at(h - 1, h - 1) = 1;
    } else if (dr == 1 && dh == -1 && dt == -1) {
        w.family = "delta";
        // sigma_{r+1} with the e_{-k}^2 coefficient moved to the scaled part;
        // the appended row must stay orthogonal to im H_{(h-1,t-1)}, so it
        // lands on the dual of the first untouched hyperbolic pair (which is
        // e_{-k-t} itself when h = t)
        w.base = representative(ctx, OrbitTriplet{r + 1, h - 1, t - 1});
        w.base.sigma.at(k - 1, k - 1) = 0;
        w.scaled.sigma.at(k - 1, k - 1) = 1;
        w.base.H.at(k - 1, ctx.middle_position(-static_cast<int>(k + (h + t) / 2))) = 1;
    } else if (upper == OrbitTriplet{k - 1, 1, 1}) {
        return eta_witness(ctx, lower);
    } else {
        throw std::invalid_argument("pair " + lower.str() + " -> " + upper.str() +
                                    " is not a covered degeneration");
    }
    return w;
}

DegenerationWitness eta_witness(const IsoContext& ctx, const OrbitTriplet& lower) {
    const long k = static_cast<long>(ctx.k);
    const OrbitTriplet codense{k - 1, 1, 1};
    if (!is_valid_triplet(ctx, lower) || lower == codense || lower == OrbitTriplet{k, 0, 0})
        throw std::invalid_argument("no eta family for " + lower.str());
    DegenerationWitness w;
    w.family = "eta";
    w.lower = lower;
    w.upper = codense;
    w.base = representative(ctx, lower);
    w.scaled = TangentElement::zero(ctx);
    for (long i = 2; i <= k - lower.r; ++i) w.scaled.sigma.at(i - 1, i - 1) = 1;
    if (lower.h == 0) // the representative has empty H; feed the radical one direction
        w.scaled.H.at(0, ctx.middle_position(static_cast<int>(k) + 1)) = 1;
    return w;
}

GroupElement GroupElement::identity(const IsoContext& ctx) {
    const std::size_t m = ctx.middle_dim();
    return GroupElement{QMatrix::identity(ctx.k), QMatrix::identity(ctx.k),
                        QMatrix::identity(m), QMatrix(ctx.k, m), QMatrix(ctx.k, ctx.k)};
}

namespace {

long small_int(std::mt19937_64& rng, long bound) {
    return static_cast<long>(rng() % (2 * static_cast<unsigned long>(bound) + 1)) - bound;
}

QMatrix random_unimodular(std::mt19937_64& rng, std::size_t k) {
    QMatrix g = QMatrix::identity(k);
    if (k == 1) return g;
    for (std::size_t step = 0; step < 2 * k * k; ++step) {
        std::size_t i = rng() % k, j = rng() % k;
        if (i == j) continue;
        Rational c(small_int(rng, 3));
        for (std::size_t col = 0; col < k; ++col) g.at(i, col) += c * g.at(j, col);
    }
    return g;
}

QMatrix random_symplectic(std::mt19937_64& rng, const QMatrix& omega) {
    const std::size_t m = omega.rows();
    QMatrix s = QMatrix::identity(m);
    for (std::size_t step = 0; step < 3 * m; ++step) {
        QMatrix v(m, 1);
        bool nonzero = false;
        for (std::size_t i = 0; i < m; ++i) {
            v.at(i, 0) = Rational(small_int(rng, 2));
            if (v.at(i, 0) != 0) nonzero = true;
        }
        if (!nonzero) continue;
        Rational c(small_int(rng, 3));
        // transvection x -> x + c w(x,v) v = (I - c v v^t W) x
        QMatrix tv = QMatrix::identity(m) - (v * v.transpose() * omega).scaled(c);
        s = tv * s;
    }
    return s;
}

} // namespace

GroupElement random_group_element(const IsoContext& ctx, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    const std::size_t k = ctx.k, m = ctx.middle_dim();
    GroupElement g;
    g.gl = random_unimodular(rng, k);
    g.gl_inv = g.gl.inverse();
    QMatrix omega = ctx.middle_omega();
    g.sp = random_symplectic(rng, omega);
    g.a_tensor = QMatrix(k, m);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) g.a_tensor.at(i, j) = Rational(small_int(rng, 3));
    // corner block: B J - J B^t = Atilde W Atilde^t with Atilde = A W
    QMatrix atilde = g.a_tensor * omega;
    QMatrix c = atilde * omega * atilde.transpose();
    QMatrix sym(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            sym.at(i, j) = Rational(small_int(rng, 3));
            sym.at(j, i) = sym.at(i, j);
        }
    g.corner = (c.scaled(rat(1, 2)) + sym) * antidiag_ones(k);

    QMatrix full = assemble(ctx, g);
    if (!is_symplectic(full)) throw std::logic_error("assembled group element not symplectic");
    return g;
}

QMatrix assemble(const IsoContext& ctx, const GroupElement& g) {
    const std::size_t k = ctx.k, m = ctx.middle_dim(), n2 = 2 * ctx.N;
    QMatrix jk = antidiag_ones(k);
    QMatrix omega = ctx.middle_omega();
    QMatrix atilde = g.a_tensor * omega;

    QMatrix levi(n2, n2);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) levi.at(i, j) = g.gl.at(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) levi.at(k + i, k + j) = g.sp.at(i, j);
    QMatrix bottom = jk * g.gl_inv.transpose() * jk;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) levi.at(k + m + i, k + m + j) = bottom.at(i, j);

    QMatrix unip = QMatrix::identity(n2);
    QMatrix mid_right = omega * atilde.transpose() * jk;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j) unip.at(i, k + j) = atilde.at(i, j);
        for (std::size_t j = 0; j < k; ++j) unip.at(i, k + m + j) = g.corner.at(i, j);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) unip.at(k + i, k + m + j) = mid_right.at(i, j);

    return levi * unip;
}

bool is_symplectic(const QMatrix& g) {
    if (g.rows() != g.cols() || g.rows() % 2 != 0) return false;
    QMatrix omega = omega_matrix(g.rows() / 2);
    return g.transpose() * omega * g == omega;
}

TangentElement act(const IsoContext& ctx, const GroupElement& g, const TangentElement& x) {
    check_dims(ctx, x);
    // unipotent part first (g = levi * unipotent): H += 2 sigma A, sigma fixed
    QMatrix h1 = x.H + (x.sigma * g.a_tensor).scaled(2);
    // Levi part: congruence on sigma, bi-action on H
    QMatrix ginv_t = g.gl_inv.transpose();
    TangentElement out;
    out.sigma = ginv_t * x.sigma * g.gl_inv;
    out.H = ginv_t * h1 * g.sp.transpose();
    return out;
}

QMatrix embed_tangent(const IsoContext& ctx, const TangentElement& x) {
    check_dims(ctx, x);
    const std::size_t k = ctx.k, m = ctx.middle_dim(), n2 = 2 * ctx.N;
    QMatrix jk = antidiag_ones(k);
    QMatrix X(n2, n2);
    QMatrix p = x.H.transpose();        // block (2,1)
    QMatrix q = jk * x.sigma.scaled(2); // block (3,1), J q = 2 sigma
    QMatrix r = (jk * p.transpose() * ctx.middle_omega()).scaled(-1); // block (3,2)
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) X.at(k + i, j) = p.at(i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) X.at(k + m + i, j) = q.at(i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < m; ++j) X.at(k + m + i, k + j) = r.at(i, j);
    return X;
}

TangentElement project_tangent(const IsoContext& ctx, const QMatrix& X) {
    const std::size_t k = ctx.k, m = ctx.middle_dim();
    QMatrix jk = antidiag_ones(k);
    TangentElement x = TangentElement::zero(ctx);
    QMatrix q(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) q.at(i, j) = X.at(k + m + i, j);
    x.sigma = (jk * q).scaled(rat(1, 2));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j) x.H.at(j, i) = X.at(k + i, j);
    return x;
}

HasseDiagram tangential_graph(const IsoContext& ctx) {
    HasseDiagram tangent = build_hasse(ctx);
    HasseDiagram d;
    HasseDiagram::Node base;
    base.id = "IG";
    base.display = "IG(" + std::to_string(ctx.k) + "," + std::to_string(2 * ctx.N) + ")";
    base.dim = ctx.dim_pu();
    base.attrs["level"] = "1";
    base.attrs["tangential_identifiable"] = "false";
    d.nodes.push_back(base);

    const std::vector<std::string> merged = {"O(0,0,0)", "O(1,0,0)", "O(0,1,1)"};
    const auto orbits = enumerate_orbits(ctx);
    std::map<std::size_t, std::size_t> to_new;
    for (std::size_t i = 0; i < tangent.nodes.size(); ++i) {
        const auto& node = tangent.nodes[i];
        if (std::find(merged.begin(), merged.end(), node.id) != merged.end()) {
            to_new[i] = 0;
            continue;
        }
        HasseDiagram::Node n;
        n.id = "Theta" + node.id.substr(1);
        n.display = n.id;
        // level l = r + h grades the merged poset
        for (const auto& o : orbits)
            if ("O" + o.str() == node.id) {
                n.attrs["level"] = std::to_string(o.r + o.h);
                n.attrs["tangential_identifiable"] = o.r + o.h >= 3 ? "true" : "false";
            }
        to_new[i] = d.nodes.size();
        d.nodes.push_back(std::move(n));
    }
    for (const auto& e : tangent.edges) {
        std::size_t lo = to_new[e.lower], up = to_new[e.upper];
        if (lo == up) continue;
        d.edges.push_back({lo, up, ""});
    }
    d.edges = transitive_reduction(d.nodes.size(), std::move(d.edges));
    return d;
}

} // namespace orbitatlas
