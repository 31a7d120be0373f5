#include "orbitatlas/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitatlas {

RootSpaceVector to_root_space(const Root& r) {
    RootSpaceVector v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = Rational(r[i]);
    return v;
}

namespace {

Rational inner_q(const RootSystem& sys, const RootSpaceVector& v, const Root& b) {
    Rational acc(0);
    const int n = sys.rank();
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            acc += v[i] * Rational(b[j] * sys.cartan(i, j) * sys.simple_length_sq(j) / 2);
        }
    }
    return acc;
}

} // namespace

RootSpaceVector reflect(const RootSystem& sys, const Root& beta, const RootSpaceVector& v) {
    if (!sys.is_root(beta)) throw std::invalid_argument("reflection axis must be a root");
    if (v.size() != static_cast<std::size_t>(sys.rank()))
        throw std::invalid_argument("vector length mismatch");
    Rational factor = 2 * inner_q(sys, v, beta) / Rational(sys.norm_sq(beta));
    RootSpaceVector out = v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= factor * Rational(beta[i]);
    return out;
}

RootSpaceVector apply_word(const RootSystem& sys, const WeylWord& w, const RootSpaceVector& v) {
    RootSpaceVector out = v;
    for (auto it = w.reflections.rbegin(); it != w.reflections.rend(); ++it)
        out = reflect(sys, *it, out);
    return out;
}

namespace {

std::vector<Root> long_radical_roots(const RootSystem& sys, int node) {
    std::vector<Root> out;
    for (const Root& r : parabolic_roots(sys, node).radical)
        if (sys.is_long(r)) out.push_back(r);
    return out;
}

bool higher(const RootSystem& sys, const Root& x, const Root& y) {
    long hx = sys.height(x), hy = sys.height(y);
    if (hx != hy) return hx > hy;
    return x > y;
}

} // namespace

OrthogonalCascade max_orthogonal_cascade(const RootSystem& sys, int node) {
    if (node < 1 || node > sys.rank()) throw std::invalid_argument("node index out of range");
    OrthogonalCascade cascade{sys.type(), node, {}};
    std::vector<Root> slice = long_radical_roots(sys, node);
    while (!slice.empty()) {
        const Root* best = &slice.front();
        for (const Root& r : slice)
            if (higher(sys, r, *best)) best = &r;
        Root chosen = *best;
        std::vector<Root> next;
        for (const Root& r : slice)
            if (sys.inner(r, chosen) == 0) next.push_back(r);
        cascade.roots.push_back(std::move(chosen));
        slice = std::move(next);
    }
    return cascade;
}

namespace {

void search_max(const std::vector<std::vector<bool>>& orth, std::vector<std::size_t>& candidates,
                std::size_t chosen, std::size_t& best) {
    if (chosen + candidates.size() <= best) return;
    if (candidates.empty()) {
        best = std::max(best, chosen);
        return;
    }
    std::size_t v = candidates.back();
    candidates.pop_back();
    // branch: take v
    std::vector<std::size_t> filtered;
    for (std::size_t u : candidates)
        if (orth[v][u]) filtered.push_back(u);
    search_max(orth, filtered, chosen + 1, best);
    // branch: skip v
    search_max(orth, candidates, chosen, best);
    candidates.push_back(v);
}

} // namespace

std::size_t exhaustive_max_orthogonal(const RootSystem& sys, int node) {
    std::vector<Root> longs = long_radical_roots(sys, node);
    const std::size_t n = longs.size();
    std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            orth[i][j] = (i != j) && sys.inner(longs[i], longs[j]) == 0;
    std::vector<std::size_t> candidates(n);
    for (std::size_t i = 0; i < n; ++i) candidates[i] = i;
    std::size_t best = 0;
    search_max(orth, candidates, 0, best);
    return best;
}

std::vector<WeylWord> secant_weyl_words(const OrthogonalCascade& cascade) {
    if (cascade.roots.empty()) throw std::invalid_argument("empty cascade");
    std::vector<WeylWord> words;
    words.reserve(cascade.roots.size());
    WeylWord w;
    for (const Root& b : cascade.roots) {
        w.reflections.push_back(b);
        words.push_back(w);
    }
    return words;
}

} // namespace orbitatlas
