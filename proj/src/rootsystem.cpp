#include "orbitatlas/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace orbitatlas {

std::string DynkinType::name() const {
    static const char* letters = "ABCDEFG";
    return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

DynkinType dynkin_from(char family_letter, int rank) {
    Family fam;
    switch (family_letter) {
        case 'A': case 'a': fam = Family::A; break;
        case 'B': case 'b': fam = Family::B; break;
        case 'C': case 'c': fam = Family::C; break;
        case 'D': case 'd': fam = Family::D; break;
        case 'E': case 'e': fam = Family::E; break;
        case 'F': case 'f': fam = Family::F; break;
        case 'G': case 'g': fam = Family::G; break;
        default: throw std::invalid_argument("unknown Dynkin family letter");
    }
    return DynkinType{fam, rank};
}

namespace {

constexpr int kClassicalRankCap = 16;

void validate(const DynkinType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            if (n < 1 || n > kClassicalRankCap) throw std::invalid_argument("A rank must be 1..16");
            break;
        case Family::B:
            if (n < 2 || n > kClassicalRankCap) throw std::invalid_argument("B rank must be 2..16");
            break;
        case Family::C:
            if (n < 2 || n > kClassicalRankCap) throw std::invalid_argument("C rank must be 2..16");
            break;
        case Family::D:
            if (n < 3 || n > kClassicalRankCap) throw std::invalid_argument("D rank must be 3..16");
            break;
        case Family::E:
            if (n < 6 || n > 8) throw std::invalid_argument("E rank must be 6, 7 or 8");
            break;
        case Family::F:
            if (n != 4) throw std::invalid_argument("F rank must be 4");
            break;
        case Family::G:
            if (n != 2) throw std::invalid_argument("G rank must be 2");
            break;
    }
}

// Cartan matrix C[i][j] = <a_i | a_j> and squared lengths, Bourbaki numbering.
void build_cartan(const DynkinType& t, std::vector<std::vector<long>>& cartan,
                  std::vector<long>& len) {
    const int n = t.rank;
    cartan.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) cartan[i][i] = 2;
    auto chain = [&](int i, int j) { cartan[i][j] = cartan[j][i] = -1; };

    len.assign(n, 2);
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            cartan[n - 2][n - 1] = -2; // a_N is the short root
            for (int i = 0; i + 1 < n; ++i) len[i] = 4;
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
            cartan[n - 1][n - 2] = -2; // a_N is the long root
            len[n - 1] = 4;
            break;
        case Family::D:
            for (int i = 0; i + 1 < n - 1; ++i) chain(i, i + 1);
            cartan[n - 1][n - 3] = cartan[n - 3][n - 1] = -1;
            break;
        case Family::E:
            // chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4
            chain(0, 2);
            for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
            cartan[1][3] = cartan[3][1] = -1;
            cartan[1][2] = cartan[2][1] = 0;
            break;
        case Family::F:
            chain(0, 1);
            chain(1, 2);
            chain(2, 3);
            cartan[1][2] = -2; // a_1, a_2 long
            len[0] = len[1] = 4;
            break;
        case Family::G:
            cartan[0][1] = -1;
            cartan[1][0] = -3;
            len[1] = 6; // a_2 long
            break;
    }
}

} // namespace

RootSystem::RootSystem(DynkinType type) : type_(type) {
    validate(type);
    build_cartan(type_, cartan_, length_sq_);
    const int n = rank();
    max_length_sq_ = *std::max_element(length_sq_.begin(), length_sq_.end());

    // Reflection closure of the simple roots under the simple reflections:
    // s_i(b) = b - <b|a_i> a_i with <b|a_i> = sum_j b_j C[j][i].
    std::set<Root> seen;
    std::vector<Root> queue;
    for (int i = 0; i < n; ++i) {
        Root a(n, 0);
        a[i] = 1;
        seen.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        Root b = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += b[j] * cartan_[j][i];
            Root r = b;
            r[i] -= pairing;
            if (seen.insert(r).second) queue.push_back(r);
        }
    }

    roots_.assign(seen.begin(), seen.end());
    std::sort(roots_.begin(), roots_.end(), [this](const Root& x, const Root& y) {
        long hx = height(x), hy = height(y);
        if (hx != hy) return hx < hy;
        return x < y;
    });

    for (const Root& r : roots_) {
        bool pos = true, neg = true;
        for (long c : r) {
            if (c > 0) neg = false;
            if (c < 0) pos = false;
        }
        if (!pos && !neg) throw std::logic_error("mixed-sign root in closure");
        if (pos) positive_.push_back(r);
    }

    longest_ = positive_.back(); // maximal height
    for (const Root& r : roots_)
        for (int k = 0; k < n; ++k)
            if (r[k] > longest_[k]) throw std::logic_error("longest root fails dominance");
}

bool RootSystem::is_root(const Root& r) const {
    return std::binary_search(roots_.begin(), roots_.end(), r,
                              [this](const Root& x, const Root& y) {
                                  long hx = height(x), hy = height(y);
                                  if (hx != hy) return hx < hy;
                                  return x < y;
                              });
}

bool RootSystem::is_positive(const Root& r) const {
    for (long c : r)
        if (c > 0) return true;
        else if (c < 0) return false;
    return false;
}

bool RootSystem::is_long(const Root& r) const { return norm_sq(r) == max_length_sq_; }

long RootSystem::inner(const Root& b, const Root& c) const {
    // (a_i|a_j) = C[i][j] * len_j / 2
    long acc = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (b[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (c[j] == 0) continue;
            acc += b[i] * c[j] * cartan_[i][j] * length_sq_[j] / 2;
        }
    }
    return acc;
}

long RootSystem::height(const Root& r) const {
    long h = 0;
    for (long c : r) h += c;
    return h;
}

long RootSystem::coefficient(const Root& r, int node) const {
    if (node < 1 || node > rank()) throw std::invalid_argument("node index out of range");
    return r[node - 1];
}

long cartan_number(const RootSystem& sys, const Root& beta, const Root& alpha) {
    if (!sys.is_root(beta) || !sys.is_root(alpha))
        throw std::invalid_argument("cartan_number requires roots");
    long num = 2 * sys.inner(beta, alpha);
    long den = sys.norm_sq(alpha);
    if (num % den != 0) throw std::logic_error("non-integral Cartan number");
    return num / den;
}

bool is_cominuscule(const RootSystem& sys, int node) {
    return sys.coefficient(sys.longest_root(), node) == 1;
}

ParabolicRoots parabolic_roots(const RootSystem& sys, int node) {
    ParabolicRoots out;
    for (const Root& r : sys.positive_roots())
        if (sys.coefficient(r, node) > 0) out.radical.push_back(r);
    for (const Root& r : sys.roots())
        if (sys.coefficient(r, node) == 0) out.levi.push_back(r);
    return out;
}

long nilpotency_class(const RootSystem& sys, int node) {
    return sys.coefficient(sys.longest_root(), node);
}

} // namespace orbitatlas
