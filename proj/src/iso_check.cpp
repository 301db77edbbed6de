#include "krc/iso_check.hpp"

#include "krc/kr_crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>

namespace krc {

namespace {

int string_length(const std::vector<int>& next, int v) {
    int k = 0;
    const int cap = static_cast<int>(next.size());
    for (int u = next[v]; u >= 0 && k <= cap; u = next[u]) ++k;
    return k;
}

// Extend map from the anchors along edges of the given colours; empty witness on success.
std::string propagate(const CrystalGraph& g1, const CrystalGraph& g2, const std::vector<int>& colors,
                      std::vector<int>& map, std::deque<int> queue) {
    std::vector<int> inv(g2.size(), -1);
    for (int v = 0; v < g1.size(); ++v)
        if (map[v] >= 0) inv[map[v]] = v;
    auto link = [&](int a, int b) -> bool {
        if (map[a] < 0 && inv[b] < 0) {
            map[a] = b;
            inv[b] = a;
            return true;
        }
        return false;
    };
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const int w = map[v];
        for (int c : colors)
            for (int dir = 0; dir < 2; ++dir) {
                const int a = dir ? g1.e[c][v] : g1.f[c][v];
                const int b = dir ? g2.e[c][w] : g2.f[c][w];
                if ((a < 0) != (b < 0)) return "edge of colour " + std::to_string(c) + " missing at " + std::to_string(v);
                if (a < 0) continue;
                if (link(a, b)) queue.push_back(a);
                else if (map[a] != b) return "inconsistent images at " + std::to_string(a);
            }
    }
    return {};
}

}  // namespace

CrystalGraph relabel(const CrystalGraph& g, const std::vector<int>& perm) {
    CrystalGraph out;
    out.type_name = g.type_name;
    out.rank = g.rank;
    out.r = g.r;
    out.s = g.s;
    out.words.resize(g.size());
    out.f.assign(g.f.size(), std::vector<int>(g.size(), -1));
    for (int v = 0; v < g.size(); ++v) {
        out.words[perm[v]] = g.words[v];
        for (size_t c = 0; c < g.f.size(); ++c)
            if (g.f[c][v] >= 0) out.f[c][perm[v]] = perm[g.f[c][v]];
    }
    out.rebuild_index();
    out.rebuild_inverse();
    return out;
}

std::vector<int> shuffled_ids(int size, unsigned seed) {
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

IsoResult restricted_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2, const std::vector<int>& colors) {
    IsoResult res;
    if (g1.size() != g2.size()) {
        res.witness = "vertex counts differ";
        return res;
    }
    auto anchors = [&](const CrystalGraph& g) {
        std::map<std::vector<int>, int> out;
        for (int v : highest_weight_elements(g, colors)) {
            std::vector<int> key;
            for (int c : colors) key.push_back(string_length(g.f[c], v));
            if (!out.emplace(key, v).second) throw AmbiguousMatching("decomposition is not multiplicity free");
        }
        return out;
    };
    const auto a1 = anchors(g1), a2 = anchors(g2);
    std::vector<int> map(g1.size(), -1);
    std::deque<int> queue;
    for (const auto& [key, v] : a1) {
        auto it = a2.find(key);
        if (it == a2.end()) {
            res.witness = "no matching component for highest weight vertex " + std::to_string(v);
            return res;
        }
        map[v] = it->second;
        queue.push_back(v);
    }
    if (a1.size() != a2.size()) {
        res.witness = "component counts differ";
        return res;
    }
    res.witness = propagate(g1, g2, colors, map, queue);
    if (!res.witness.empty()) return res;
    if (std::count(map.begin(), map.end(), -1)) {
        res.witness = "map is not total";
        return res;
    }
    res.map = std::move(map);
    return res;
}

std::string check_preserves(const CrystalGraph& g1, const CrystalGraph& g2, const std::vector<int>& map,
                            const std::vector<int>& colors) {
    for (int c : colors)
        for (int v = 0; v < g1.size(); ++v) {
            const int a = g1.f[c][v], b = g2.f[c][map[v]];
            if ((a < 0) != (b < 0) || (a >= 0 && map[a] != b))
                return "colour " + std::to_string(c) + " arrow differs at " + std::to_string(v);
        }
    return {};
}

int count_automorphisms(const CrystalGraph& g, int limit) {
    if (g.size() == 0) return 1;
    std::vector<int> all(g.f.size());
    std::iota(all.begin(), all.end(), 0);
    auto signature = [&](int v) {
        std::vector<int> sig;
        for (int c : all) {
            sig.push_back(string_length(g.e[c], v));
            sig.push_back(string_length(g.f[c], v));
        }
        return sig;
    };
    std::map<std::vector<int>, std::vector<int>> classes;
    for (int v = 0; v < g.size(); ++v) classes[signature(v)].push_back(v);
    const std::vector<int>* rare = nullptr;
    for (const auto& [sig, vs] : classes)
        if (!rare || vs.size() < rare->size()) rare = &vs;
    const int anchor = rare->front();
    int found = 0;
    for (int image : *rare) {
        std::vector<int> map(g.size(), -1);
        map[anchor] = image;
        if (!propagate(g, g, all, map, {anchor}).empty()) continue;
        if (std::count(map.begin(), map.end(), -1)) continue;
        if (++found >= limit) break;
    }
    return found;
}

RigidityReport verify_prop61(const AffineType& t, const CrystalGraph& g, unsigned seed) {
    RigidityReport rep;
    const CheckReport ax = check_axioms(t, g);
    rep.axioms = ax.pass;
    if (!ax.pass) rep.witness = ax.failures.front();
    const CrystalGraph copy = relabel(g, shuffled_ids(g.size(), seed));
    std::vector<int> c0{0}, c1;
    for (int i = 1; i <= t.n; ++i) c1.push_back(i);
    for (int i = 2; i <= t.n; ++i) c0.push_back(i);
    try {
        const IsoResult psi0 = restricted_isomorphism(g, copy, c1);
        const IsoResult psi1 = restricted_isomorphism(g, copy, c0);
        rep.psi0 = psi0.map.has_value();
        rep.psi1 = psi1.map.has_value();
        rep.agree = rep.psi0 && rep.psi1 && *psi0.map == *psi1.map;
        if (rep.witness.empty()) rep.witness = !psi0.witness.empty() ? psi0.witness : psi1.witness;
        if (rep.witness.empty() && !rep.agree) {
            for (int v = 0; v < g.size(); ++v)
                if ((*psi0.map)[v] != (*psi1.map)[v]) {
                    rep.witness = "Psi0 and Psi1 differ at " + std::to_string(v);
                    break;
                }
        }
    } catch (const AmbiguousMatching& e) {
        if (rep.witness.empty()) rep.witness = e.what();
    }
    rep.automorphisms = count_automorphisms(g);
    if (rep.witness.empty() && rep.automorphisms != 1) rep.witness = "non-trivial automorphism";
    return rep;
}

}  // namespace krc
