#include "orbitatlas/cominuscule.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitatlas {

std::string to_string(FamilyName name) {
    switch (name) {
        case FamilyName::Grassmannian: return "Grassmannian";
        case FamilyName::Quadric: return "Quadric";
        case FamilyName::LagrangianGrassmannian: return "LagrangianGrassmannian";
        case FamilyName::Spinor: return "Spinor";
        case FamilyName::CayleyPlane: return "CayleyPlane";
        case FamilyName::E7P7: return "E7P7";
    }
    return "?";
}

std::string to_string(FillStatus fill) {
    switch (fill) {
        case FillStatus::defective: return "defective";
        case FillStatus::overfills: return "overfills";
        case FillStatus::perfectly_fills: return "perfectly_fills";
        case FillStatus::nondefective_proper: return "nondefective_proper";
    }
    return "?";
}

std::string CominusculeFamily::display() const {
    switch (name) {
        case FamilyName::Grassmannian:
            return "Gr(" + std::to_string(param_k) + "," + std::to_string(param_n) + ")";
        case FamilyName::Quadric: return "Q_" + std::to_string(param_n);
        case FamilyName::LagrangianGrassmannian:
            return "LG(" + std::to_string(param_n) + "," + std::to_string(2 * param_n) + ")";
        case FamilyName::Spinor: return "S_" + std::to_string(param_n);
        case FamilyName::CayleyPlane: return "OP2";
        case FamilyName::E7P7: return "E7/P7";
    }
    return "?";
}

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (!b.fits_slong_p()) throw std::overflow_error("binomial exceeds long range");
    return b.get_si();
}

FillStatus fill_status(long dim_sigma2, long dim_x, long ambient) {
    long span = 2 * dim_x + 1;
    long expected = std::min(span, ambient);
    if (dim_sigma2 < expected) return FillStatus::defective;
    if (dim_sigma2 == ambient)
        return span == ambient ? FillStatus::perfectly_fills : FillStatus::overfills;
    return FillStatus::nondefective_proper;
}

} // namespace

CominusculeFamily classify_family(const RootSystem& sys, int node) {
    if (node < 1 || node > sys.rank()) throw std::invalid_argument("node index out of range");
    if (!is_cominuscule(sys, node))
        throw std::domain_error("node " + std::to_string(node) + " of " + sys.type().name() +
                                " is not cominuscule: m_k(rho) = " +
                                std::to_string(nilpotency_class(sys, node)));

    CominusculeFamily fam;
    fam.dynkin = sys.type();
    fam.node = node;
    const long rank = sys.rank();

    switch (sys.type().family) {
        case Family::A: {
            const long n = rank + 1, k = node;
            fam.name = FamilyName::Grassmannian;
            fam.param_k = k;
            fam.param_n = n;
            fam.dim_x = k * (n - k);
            fam.ambient_proj_dim = binom(n, k) - 1;
            if (std::min(k, n - k) == 2 && n >= 6)
                fam.dim_sigma2 = 4 * n - 11; // the defective plane case
            else
                fam.dim_sigma2 = std::min(2 * fam.dim_x + 1, fam.ambient_proj_dim);
            break;
        }
        case Family::B:
        case Family::D: {
            if (node == 1) {
                const long m = sys.type().family == Family::B ? 2 * rank - 1 : 2 * rank - 2;
                fam.name = FamilyName::Quadric;
                fam.param_n = m;
                fam.dim_x = m;
                fam.ambient_proj_dim = m + 1;
                fam.dim_sigma2 = m + 1;
            } else {
                const long n = rank;
                fam.name = FamilyName::Spinor;
                fam.param_n = n;
                fam.dim_x = n * (n - 1) / 2;
                fam.ambient_proj_dim = (1L << (n - 1)) - 1;
                fam.dim_sigma2 = std::min(n * (n - 1) + 1, fam.ambient_proj_dim);
            }
            break;
        }
        case Family::C: {
            const long n = rank;
            fam.name = FamilyName::LagrangianGrassmannian;
            fam.param_n = n;
            fam.dim_x = n * (n + 1) / 2;
            fam.ambient_proj_dim = binom(2 * n, n) - binom(2 * n, n - 2) - 1;
            fam.dim_sigma2 = std::min(n * (n + 1) + 1, fam.ambient_proj_dim);
            break;
        }
        case Family::E: {
            if (rank == 6) {
                fam.name = FamilyName::CayleyPlane;
                fam.dim_x = 16;
                fam.ambient_proj_dim = 26;
                fam.dim_sigma2 = 25; // cubic hypersurface
            } else {
                fam.name = FamilyName::E7P7;
                fam.dim_x = 27;
                fam.ambient_proj_dim = 55;
                fam.dim_sigma2 = 55;
            }
            break;
        }
        default:
            throw std::logic_error("unexpected cominuscule family");
    }

    fam.d = static_cast<long>(max_orthogonal_cascade(sys, node).length());
    fam.fill = fill_status(fam.dim_sigma2, fam.dim_x, fam.ambient_proj_dim);

    // dim G/P_k equals the number of radical roots
    if (fam.dim_x != static_cast<long>(parabolic_roots(sys, node).radical.size()))
        throw std::logic_error("closed-form dimension disagrees with |Phi_k^+|");
    return fam;
}

CominusculeFamily classify_family(DynkinType type, int node) {
    RootSystem sys(type);
    return classify_family(sys, node);
}

std::optional<long> sigma2_orbit_dim(const CominusculeFamily& fam) {
    if (fam.d < 2) return std::nullopt;
    if (fam.d == 2) return fam.dim_sigma2; // Sigma2 is dense in sigma_2
    switch (fam.name) {
        case FamilyName::Grassmannian:
            if (fam.param_n >= 7 && std::min(fam.param_k, fam.param_n - fam.param_k) >= 3)
                return fam.dim_x + 2 * fam.param_n - 7;
            return std::nullopt;
        case FamilyName::LagrangianGrassmannian:
            if (fam.param_n >= 4) return fam.dim_x + 2 * fam.param_n - 3;
            return std::nullopt;
        case FamilyName::Spinor:
            if (fam.param_n >= 7) return fam.dim_x + 4 * fam.param_n - 15;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

HasseDiagram build_orbit_poset(const CominusculeFamily& fam) {
    HasseDiagram d;
    HasseDiagram::Node base;
    base.id = "X";
    base.display = fam.display();
    base.dim = fam.dim_x;
    d.nodes.push_back(base);
    if (fam.d < 2) return d;

    HasseDiagram::Node s2;
    s2.id = "Sigma2";
    s2.display = "Theta2=Sigma2";
    s2.dim = sigma2_orbit_dim(fam);
    d.nodes.push_back(s2);
    d.edges.push_back({0, 1, ""});

    std::size_t prev_theta = 1;
    for (long j = 3; j <= fam.d; ++j) {
        HasseDiagram::Node n;
        n.id = "Theta" + std::to_string(j);
        n.display = n.id;
        if (j == fam.d) n.dim = 2 * fam.dim_x; // the tangential variety is dense here
        std::size_t idx = d.nodes.size();
        d.nodes.push_back(n);
        d.edges.push_back({prev_theta, idx, ""});
        prev_theta = idx;
    }
    std::size_t prev_sigma = 0;
    for (long j = 3; j <= fam.d; ++j) {
        HasseDiagram::Node n;
        n.id = "Sigma" + std::to_string(j);
        n.display = n.id;
        if (j == fam.d) n.dim = fam.dim_sigma2;
        std::size_t idx = d.nodes.size();
        d.nodes.push_back(n);
        d.edges.push_back({d.index_of("Theta" + std::to_string(j)), idx, ""});
        if (j > 3) d.edges.push_back({prev_sigma, idx, ""});
        prev_sigma = idx;
    }
    return d;
}

namespace {

void require_exterior_model(const CominusculeFamily& fam) {
    if (fam.name == FamilyName::CayleyPlane || fam.name == FamilyName::E7P7)
        throw std::domain_error("exceptional families carry no vector representatives");
    if (fam.name == FamilyName::Quadric)
        throw std::domain_error("quadric families have no exterior-algebra model");
}

ExtVector range_monomial(std::size_t ambient, int from, int to) { // slots [from, to)
    std::vector<int> slots;
    for (int s = from; s < to; ++s) slots.push_back(s);
    return ExtVector::monomial(ambient, slots);
}

} // namespace

std::vector<ExtVector> secant_representatives(const CominusculeFamily& fam) {
    require_exterior_model(fam);
    std::vector<ExtVector> reps;
    if (fam.name == FamilyName::Grassmannian) {
        const int k = static_cast<int>(fam.param_k), n = static_cast<int>(fam.param_n);
        for (long j = 1; j <= fam.d; ++j) {
            ExtVector left = range_monomial(n, k, k + static_cast<int>(j));
            ExtVector right = range_monomial(n, static_cast<int>(j), k);
            reps.push_back(range_monomial(n, 0, k) + wedge(left, right));
        }
        return reps;
    }
    if (fam.name == FamilyName::LagrangianGrassmannian) {
        const int n = static_cast<int>(fam.param_n);
        SymplecticSpace sp(n);
        for (long j = 1; j <= fam.d; ++j) {
            std::vector<int> slots;
            for (int i = static_cast<int>(j); i < n; ++i) slots.push_back(i);
            for (int i = static_cast<int>(j); i >= 1; --i)
                slots.push_back(static_cast<int>(sp.slot_of_label(-i)));
            reps.push_back(range_monomial(2 * n, 0, n) + ExtVector::monomial(2 * n, slots));
        }
        return reps;
    }
    throw std::domain_error("spinor representatives are inhomogeneous; use spinor_secant_points");
}

std::vector<ExtVector> tangent_representatives(const CominusculeFamily& fam) {
    require_exterior_model(fam);
    std::vector<ExtVector> reps;
    if (fam.name == FamilyName::Grassmannian) {
        const int k = static_cast<int>(fam.param_k), n = static_cast<int>(fam.param_n);
        ExtVector theta(n, static_cast<std::size_t>(k));
        for (long i = 1; i <= fam.d; ++i) {
            std::vector<int> slots;
            for (int s = 0; s < k; ++s)
                if (s != static_cast<int>(i) - 1) slots.push_back(s);
            slots.push_back(k + static_cast<int>(i) - 1);
            theta = theta + ExtVector::monomial(n, slots, rat(i % 2 == 1 ? 1 : -1));
            reps.push_back(theta);
        }
        return reps;
    }
    if (fam.name == FamilyName::LagrangianGrassmannian) {
        const int n = static_cast<int>(fam.param_n);
        SymplecticSpace sp(n);
        ExtVector theta(2 * n, static_cast<std::size_t>(n));
        for (long i = 1; i <= fam.d; ++i) {
            std::vector<int> slots;
            for (int s = 0; s < n; ++s)
                if (s != static_cast<int>(i) - 1) slots.push_back(s);
            slots.push_back(static_cast<int>(sp.slot_of_label(-static_cast<int>(i))));
            theta = theta + ExtVector::monomial(2 * n, slots, rat(i % 2 == 1 ? 1 : -1));
            reps.push_back(theta);
        }
        return reps;
    }
    // spinor: rank-2j two-forms on C^N
    const int n = static_cast<int>(fam.param_n);
    ExtVector theta(n, 2);
    for (long i = 1; i <= fam.d; ++i) {
        theta = theta + ExtVector::monomial(n, {2 * static_cast<int>(i) - 2,
                                                2 * static_cast<int>(i) - 1});
        reps.push_back(theta);
    }
    return reps;
}

long tangent_matrix_rank(const CominusculeFamily& fam, const ExtVector& theta) {
    if (fam.name == FamilyName::Grassmannian) {
        const std::size_t k = static_cast<std::size_t>(fam.param_k);
        const std::size_t n = static_cast<std::size_t>(fam.param_n);
        QMatrix m(k, n - k);
        for (std::size_t i = 0; i < k; ++i) {
            ExtVector::Key key;
            for (std::size_t s = 0; s < k; ++s)
                if (s != i) key.push_back(static_cast<int>(s));
            key.push_back(0);
            for (std::size_t c = 0; c < n - k; ++c) {
                key.back() = static_cast<int>(k + c);
                m.at(i, c) = theta.coeff(key);
            }
        }
        return static_cast<long>(m.rank());
    }
    if (fam.name == FamilyName::LagrangianGrassmannian) {
        const std::size_t n = static_cast<std::size_t>(fam.param_n);
        SymplecticSpace sp(n);
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                ExtVector::Key key;
                for (std::size_t s = 0; s < n; ++s)
                    if (s != i) key.push_back(static_cast<int>(s));
                key.push_back(static_cast<int>(sp.slot_of_label(-static_cast<int>(j) - 1)));
                m.at(i, j) = theta.coeff(key);
            }
        return static_cast<long>(m.rank());
    }
    if (fam.name == FamilyName::Spinor) {
        const std::size_t n = static_cast<std::size_t>(fam.param_n);
        QMatrix m(n, n);
        for (const auto& [key, c] : theta.terms()) {
            m.at(key[0], key[1]) = c;
            m.at(key[1], key[0]) = -c;
        }
        return static_cast<long>(m.rank());
    }
    throw std::domain_error("no matrix model for this family");
}

std::vector<MixedExt> spinor_secant_points(const CominusculeFamily& fam) {
    if (fam.name != FamilyName::Spinor) throw std::domain_error("spinor family expected");
    const std::size_t n = static_cast<std::size_t>(fam.param_n);
    std::vector<MixedExt> points;
    for (long j = 1; j <= fam.d; ++j) {
        MixedExt p(n);
        p.add_term({}, 1);
        ExtVector::Key key;
        for (int s = 0; s < 2 * j; ++s) key.push_back(s);
        p.add_term(key, 1);
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<MixedExt> spinor_tangent_points(const CominusculeFamily& fam) {
    if (fam.name != FamilyName::Spinor) throw std::domain_error("spinor family expected");
    auto thetas = tangent_representatives(fam);
    std::vector<MixedExt> points;
    for (const auto& theta : thetas) {
        MixedExt p = MixedExt::from(theta);
        p.add_term({}, 1);
        points.push_back(std::move(p));
    }
    return points;
}

std::string to_string(Identifiability v) {
    switch (v) {
        case Identifiability::rank_one: return "rank_one";
        case Identifiability::unidentifiable: return "unidentifiable";
        case Identifiability::tangential_identifiable: return "tangential_identifiable";
        case Identifiability::identifiable: return "identifiable";
    }
    return "?";
}

std::string to_string(SingularLocus v) {
    switch (v) {
        case SingularLocus::empty: return "empty";
        case SingularLocus::base_variety: return "base_variety";
        case SingularLocus::sigma2_closure: return "sigma2_closure";
    }
    return "?";
}

std::string to_string(TerraciniLocus v) {
    switch (v) {
        case TerraciniLocus::empty: return "empty";
        case TerraciniLocus::preimage_of_base: return "preimage_of_base";
        case TerraciniLocus::preimage_of_sigma2_closure: return "preimage_of_sigma2_closure";
    }
    return "?";
}

LociReport loci_report(const CominusculeFamily& fam) {
    LociReport rep;
    rep.family = fam;

    switch (fam.name) {
        case FamilyName::Grassmannian: rep.decomposition_locus_dim = 4; break;
        case FamilyName::Quadric: rep.decomposition_locus_dim = fam.param_n; break;
        case FamilyName::LagrangianGrassmannian: rep.decomposition_locus_dim = 3; break;
        case FamilyName::Spinor: rep.decomposition_locus_dim = 6; break;
        case FamilyName::CayleyPlane: rep.decomposition_locus_dim = 8; break;
        case FamilyName::E7P7: rep.decomposition_locus_dim = 10; break;
    }
    if (fam.d < 2) rep.decomposition_locus_dim.reset();

    const bool fills = fam.fill == FillStatus::overfills || fam.fill == FillStatus::perfectly_fills;
    if (fills) {
        rep.sing_set = SingularLocus::empty;
        rep.sing_dim = 0;
    } else if (fam.d == 2) {
        rep.sing_set = SingularLocus::base_variety;
        rep.sing_dim = fam.dim_x;
    } else {
        rep.sing_set = SingularLocus::sigma2_closure;
        auto s2 = sigma2_orbit_dim(fam);
        if (!s2)
            throw std::logic_error("singular locus dimension unknown for " + fam.display());
        rep.sing_dim = *s2;
    }

    const bool hypersurface = fam.dim_x + 1 == fam.ambient_proj_dim;
    if (fam.d < 2 || hypersurface)
        rep.terracini = TerraciniLocus::empty;
    else if (fam.d == 2)
        rep.terracini = TerraciniLocus::preimage_of_base;
    else
        rep.terracini = TerraciniLocus::preimage_of_sigma2_closure;

    HasseDiagram poset = build_orbit_poset(fam);
    for (const auto& node : poset.nodes) {
        OrbitVerdict v;
        v.id = node.id;
        v.display = node.display;
        v.dim = node.dim;
        const bool is_base = node.id == "X";
        const bool is_s2 = node.id == "Sigma2";
        const bool is_theta = node.id.rfind("Theta", 0) == 0;
        if (is_base)
            v.identifiable = Identifiability::rank_one;
        else if (is_s2)
            v.identifiable = Identifiability::unidentifiable;
        else if (is_theta)
            v.identifiable = Identifiability::tangential_identifiable;
        else
            v.identifiable = Identifiability::identifiable;

        if (fam.d < 2)
            v.smooth_in_secant = std::nullopt; // sigma_2 collapses onto X
        else if (fills)
            v.smooth_in_secant = true;
        else if (fam.d == 2)
            v.smooth_in_secant = !is_base;
        else
            v.smooth_in_secant = !(is_base || is_s2);

        switch (rep.terracini) {
            case TerraciniLocus::empty: v.in_terracini_image = false; break;
            case TerraciniLocus::preimage_of_base: v.in_terracini_image = is_base; break;
            case TerraciniLocus::preimage_of_sigma2_closure:
                v.in_terracini_image = is_base || is_s2;
                break;
        }
        rep.orbits.push_back(std::move(v));
    }
    return rep;
}

std::vector<std::pair<DynkinType, int>> cominuscule_families(int max_rank) {
    std::vector<std::pair<DynkinType, int>> out;
    for (int r = 1; r <= max_rank; ++r)
        for (int k = 1; k <= r; ++k) out.push_back({DynkinType{Family::A, r}, k});
    for (int r = 2; r <= max_rank; ++r) out.push_back({DynkinType{Family::B, r}, 1});
    for (int r = 2; r <= max_rank; ++r) out.push_back({DynkinType{Family::C, r}, r});
    for (int r = 3; r <= max_rank; ++r) {
        out.push_back({DynkinType{Family::D, r}, 1});
        out.push_back({DynkinType{Family::D, r}, r - 1});
        out.push_back({DynkinType{Family::D, r}, r});
    }
    if (max_rank >= 6) out.push_back({DynkinType{Family::E, 6}, 1});
    if (max_rank >= 7) out.push_back({DynkinType{Family::E, 7}, 7});
    return out;
}

} // namespace orbitatlas
