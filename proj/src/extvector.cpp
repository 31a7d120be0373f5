#include "orbitatlas/extvector.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitatlas {

QMatrix antidiag_ones(std::size_t m) {
    QMatrix j(m, m);
    for (std::size_t i = 0; i < m; ++i) j.at(i, m - 1 - i) = 1;
    return j;
}

QMatrix omega_matrix(std::size_t m) {
    QMatrix w(2 * m, 2 * m);
    QMatrix j = antidiag_ones(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < m; ++c) {
            w.at(i, m + c) = j.at(i, c);
            w.at(m + i, c) = -j.at(i, c);
        }
    return w;
}

SymplecticSpace::SymplecticSpace(std::size_t half_dim)
    : n_(half_dim), gram_(omega_matrix(half_dim)) {
    if (half_dim == 0) throw std::invalid_argument("symplectic space needs half_dim >= 1");
}

std::size_t SymplecticSpace::slot_of_label(int label) const {
    if (label >= 1 && label <= static_cast<int>(n_)) return label - 1;
    if (label <= -1 && label >= -static_cast<int>(n_)) return 2 * n_ + label;
    throw std::invalid_argument("basis label out of range");
}

int SymplecticSpace::label_of_slot(std::size_t slot) const {
    if (slot >= 2 * n_) throw std::invalid_argument("slot out of range");
    if (slot < n_) return static_cast<int>(slot) + 1;
    return static_cast<int>(slot) - 2 * static_cast<int>(n_);
}

Rational SymplecticSpace::omega(int label_a, int label_b) const {
    return gram_.at(slot_of_label(label_a), slot_of_label(label_b));
}

ExtVector ExtVector::monomial(std::size_t ambient_dim, std::vector<int> slots,
                              const Rational& coeff) {
    // sort slots, track the permutation sign, kill repeats
    int sign = 1;
    for (std::size_t i = 1; i < slots.size(); ++i)
        for (std::size_t j = i; j > 0 && slots[j - 1] >= slots[j]; --j) {
            if (slots[j - 1] == slots[j]) return ExtVector(ambient_dim, slots.size());
            std::swap(slots[j - 1], slots[j]);
            sign = -sign;
        }
    for (int s : slots)
        if (s < 0 || s >= static_cast<int>(ambient_dim))
            throw std::invalid_argument("slot out of ambient range");
    ExtVector v(ambient_dim, slots.size());
    if (coeff != 0) v.terms_[slots] = sign > 0 ? coeff : -coeff;
    return v;
}

ExtVector ExtVector::unit(std::size_t ambient_dim, int slot) {
    return monomial(ambient_dim, {slot});
}

ExtVector ExtVector::one(std::size_t ambient_dim) {
    ExtVector v(ambient_dim, 0);
    v.terms_[{}] = 1;
    return v;
}

Rational ExtVector::coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ExtVector::add_term(const Key& sorted_key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sorted_key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExtVector ExtVector::operator+(const ExtVector& other) const {
    if (ambient_ != other.ambient_ || degree_ != other.degree_)
        throw std::invalid_argument("degree/ambient mismatch in sum");
    ExtVector v = *this;
    for (const auto& [key, c] : other.terms_) v.add_term(key, c);
    return v;
}

ExtVector ExtVector::operator-(const ExtVector& other) const {
    if (ambient_ != other.ambient_ || degree_ != other.degree_)
        throw std::invalid_argument("degree/ambient mismatch in difference");
    ExtVector v = *this;
    for (const auto& [key, c] : other.terms_) v.add_term(key, -c);
    return v;
}

ExtVector ExtVector::scaled(const Rational& c) const {
    ExtVector v(ambient_, degree_);
    if (c == 0) return v;
    for (const auto& [key, q] : terms_) v.terms_[key] = q * c;
    return v;
}

namespace {

// Merge two strictly increasing slot lists; returns false on a repeated slot.
// sign collects the inversions needed to interleave b into a.
bool merge_keys(const ExtVector::Key& a, const ExtVector::Key& b,
                ExtVector::Key& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    sign = 1;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return true;
}

} // namespace

ExtVector wedge(const ExtVector& a, const ExtVector& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("ambient mismatch in wedge");
    std::size_t deg = a.degree() + b.degree();
    ExtVector v(a.ambient_dim(), deg);
    if (deg > a.ambient_dim()) return v; // overflow collapses to zero
    ExtVector::Key merged;
    int sign;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (!merge_keys(ka, kb, merged, sign)) continue;
            Rational prod = ca * cb;
            v.add_term(merged, sign > 0 ? prod : Rational(-prod));
        }
    return v;
}

ExtVector contract(const ExtVector& v, const std::vector<Rational>& xi) {
    if (xi.size() != v.ambient_dim())
        throw std::invalid_argument("covector length mismatch");
    if (v.degree() == 0) return ExtVector(v.ambient_dim(), 0);
    ExtVector out(v.ambient_dim(), v.degree() - 1);
    for (const auto& [key, c] : v.terms()) {
        int sign = 1;
        for (std::size_t j = 0; j < key.size(); ++j) {
            const Rational& x = xi[key[j]];
            if (x != 0) {
                ExtVector::Key rest;
                rest.reserve(key.size() - 1);
                for (std::size_t i = 0; i < key.size(); ++i)
                    if (i != j) rest.push_back(key[i]);
                Rational prod = c * x;
                out.add_term(rest, sign > 0 ? prod : Rational(-prod));
            }
            sign = -sign;
        }
    }
    return out;
}

ExtVector contract_form(const ExtVector& v, const SymplecticSpace& sp) {
    if (v.ambient_dim() != sp.dim())
        throw std::invalid_argument("ambient mismatch with symplectic space");
    if (v.degree() < 2) return ExtVector(v.ambient_dim(), 0);
    ExtVector out(v.ambient_dim(), v.degree() - 2);
    const QMatrix& w = sp.gram();
    for (const auto& [key, c] : v.terms()) {
        for (std::size_t i = 0; i < key.size(); ++i)
            for (std::size_t j = i + 1; j < key.size(); ++j) {
                const Rational& wij = w.at(key[i], key[j]);
                if (wij == 0) continue;
                ExtVector::Key rest;
                rest.reserve(key.size() - 2);
                for (std::size_t t = 0; t < key.size(); ++t)
                    if (t != i && t != j) rest.push_back(key[t]);
                int sign = ((i + j) % 2 == 1) ? 1 : -1; // (-1)^{i+j-1}, 0-based
                Rational prod = c * wij;
                out.add_term(rest, sign > 0 ? prod : Rational(-prod));
            }
    }
    return out;
}

bool is_primitive(const ExtVector& v, const SymplecticSpace& sp) {
    return contract_form(v, sp).is_zero();
}

Integer primitive_dimension(std::size_t half_dim, std::size_t degree) {
    Integer a, b;
    mpz_bin_uiui(a.get_mpz_t(), 2 * half_dim, degree);
    if (degree >= 2)
        mpz_bin_uiui(b.get_mpz_t(), 2 * half_dim, degree - 2);
    return a - b;
}

namespace {

// Kernel of the linear map sending basis vector u of C^dom to images[u].
QMatrix kernel_of_map(std::size_t dom, const std::vector<ExtVector>& images) {
    std::map<ExtVector::Key, std::size_t> row_of;
    for (const auto& img : images)
        for (const auto& [key, c] : img.terms())
            row_of.try_emplace(key, row_of.size());
    QMatrix m(row_of.size(), dom);
    for (std::size_t u = 0; u < dom; ++u)
        for (const auto& [key, c] : images[u].terms()) m.at(row_of[key], u) = c;
    return m.null_space();
}

} // namespace

QMatrix psi_kernel(const ExtVector& q, const SymplecticSpace& sp) {
    if (q.is_zero()) throw std::invalid_argument("psi kernel of the zero vector");
    if (q.ambient_dim() != sp.dim())
        throw std::invalid_argument("ambient mismatch with symplectic space");
    const std::size_t dim = sp.dim();
    std::vector<ExtVector> images;
    images.reserve(dim);
    for (std::size_t u = 0; u < dim; ++u) {
        std::vector<Rational> xi(dim);
        for (std::size_t s = 0; s < dim; ++s) xi[s] = sp.gram().at(u, s);
        images.push_back(contract(q, xi));
    }
    return kernel_of_map(dim, images);
}

QMatrix wedge_kernel(const ExtVector& p) {
    if (p.is_zero()) throw std::invalid_argument("wedge kernel of the zero vector");
    const std::size_t dim = p.ambient_dim();
    std::vector<ExtVector> images;
    images.reserve(dim);
    for (std::size_t u = 0; u < dim; ++u)
        images.push_back(wedge(ExtVector::unit(dim, static_cast<int>(u)), p));
    return kernel_of_map(dim, images);
}

ExtVector ext_power_apply(const QMatrix& g, const ExtVector& v) {
    if (g.rows() != v.ambient_dim() || g.cols() != v.ambient_dim())
        throw std::invalid_argument("map dimension mismatch");
    const std::size_t dim = v.ambient_dim();
    ExtVector out(dim, v.degree());
    for (const auto& [key, c] : v.terms()) {
        ExtVector prod = ExtVector::one(dim).scaled(c);
        for (int slot : key) {
            ExtVector col(dim, 1);
            for (std::size_t r = 0; r < dim; ++r)
                col.add_term({static_cast<int>(r)}, g.at(r, slot));
            prod = wedge(prod, col);
            if (prod.is_zero()) break;
        }
        out = out + prod;
    }
    return out;
}

void MixedExt::add_term(const ExtVector::Key& sorted_key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(sorted_key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MixedExt MixedExt::operator+(const MixedExt& other) const {
    MixedExt v = *this;
    for (const auto& [key, c] : other.terms_) v.add_term(key, c);
    return v;
}

MixedExt MixedExt::from(const ExtVector& v) {
    MixedExt m(v.ambient_dim());
    for (const auto& [key, c] : v.terms()) m.add_term(key, c);
    return m;
}

MixedExt wedge_unit(int slot, const MixedExt& psi) {
    MixedExt out(psi.ambient_dim());
    for (const auto& [key, c] : psi.terms()) {
        ExtVector::Key merged;
        int sign;
        if (!merge_keys({slot}, key, merged, sign)) continue;
        out.add_term(merged, sign > 0 ? c : -c);
    }
    return out;
}

MixedExt contract_unit(int slot, const MixedExt& psi) {
    MixedExt out(psi.ambient_dim());
    for (const auto& [key, c] : psi.terms()) {
        int sign = 1;
        for (std::size_t j = 0; j < key.size(); ++j) {
            if (key[j] == slot) {
                ExtVector::Key rest;
                for (std::size_t i = 0; i < key.size(); ++i)
                    if (i != j) rest.push_back(key[i]);
                out.add_term(rest, sign > 0 ? c : -c);
                break;
            }
            sign = -sign;
        }
    }
    return out;
}

std::size_t spinor_annihilator_dim(const MixedExt& psi) {
    const std::size_t n = psi.ambient_dim();
    std::vector<MixedExt> images;
    images.reserve(2 * n);
    for (std::size_t u = 0; u < n; ++u) images.push_back(wedge_unit(static_cast<int>(u), psi));
    for (std::size_t u = 0; u < n; ++u) images.push_back(contract_unit(static_cast<int>(u), psi));
    std::map<ExtVector::Key, std::size_t> row_of;
    for (const auto& img : images)
        for (const auto& [key, c] : img.terms()) row_of.try_emplace(key, row_of.size());
    QMatrix m(row_of.size(), 2 * n);
    for (std::size_t u = 0; u < 2 * n; ++u)
        for (const auto& [key, c] : images[u].terms()) m.at(row_of[key], u) = c;
    return 2 * n - m.rank();
}

} // namespace orbitatlas
