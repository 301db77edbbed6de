#include "krc/tableaux.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace krc {

std::vector<Letter> ClassicalType::alphabet() const {
    std::vector<Letter> out;
    for (int k = 1; k <= n; ++k) out.push_back(k);
    if (kind == ClassicalKind::B) out.push_back(0);
    for (int k = n; k >= 1; --k) out.push_back(-k);
    return out;
}

std::string letter_str(Letter l) { return std::to_string(l); }

Letter parse_letter(const std::string& s) {
    size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad letter '" + s + "'");
    return v;
}

int letter_rank(const ClassicalType& ct, Letter l) {
    if (l > 0) return l;
    if (l == 0) return ct.n + 1;
    return 2 * ct.n + 2 + l;
}

std::string word_str(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += letter_str(w[i]);
    }
    return out;
}

bool word_less(const ClassicalType& ct, const Word& a, const Word& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [&](std::int8_t x, std::int8_t y) {
        return letter_rank(ct, x) < letter_rank(ct, y);
    });
}

namespace {

void check_color(const ClassicalType& ct, int i) {
    if (i < 1 || i > ct.n) throw std::invalid_argument("color out of range: " + std::to_string(i));
}

}  // namespace

std::optional<Letter> letter_f(const ClassicalType& ct, int i, Letter l) {
    check_color(ct, i);
    const int n = ct.n;
    if (i < n) {
        if (l == i) return i + 1;
        if (l == -(i + 1)) return -i;
        return std::nullopt;
    }
    switch (ct.kind) {
        case ClassicalKind::D:
            if (l == n - 1) return -n;
            if (l == n) return -(n - 1);
            return std::nullopt;
        case ClassicalKind::B:
            if (l == n) return 0;
            if (l == 0) return -n;
            return std::nullopt;
        case ClassicalKind::C:
            if (l == n) return -n;
            return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Letter> letter_e(const ClassicalType& ct, int i, Letter l) {
    for (Letter x : ct.alphabet()) {
        auto y = letter_f(ct, i, x);
        if (y && *y == l) return x;
    }
    return std::nullopt;
}

int letter_eps(const ClassicalType& ct, int i, Letter l) {
    int k = 0;
    for (auto x = letter_e(ct, i, l); x; x = letter_e(ct, i, *x)) ++k;
    return k;
}

int letter_phi(const ClassicalType& ct, int i, Letter l) {
    int k = 0;
    for (auto x = letter_f(ct, i, l); x; x = letter_f(ct, i, *x)) ++k;
    return k;
}

std::vector<VectorArrow> vector_arrows(const AffineType& t) {
    const ClassicalType ct = ClassicalType::of(t);
    std::vector<VectorArrow> out;
    for (int i = 1; i <= t.n; ++i)
        for (Letter l : ct.alphabet())
            if (auto m = letter_f(ct, i, l)) out.push_back({l, i, *m});
    if (t.has_crystal_model()) {
        out.push_back({-1, 0, 2});
        out.push_back({-2, 0, 1});
    }
    return out;
}

namespace {

struct Scan {
    int eps = 0;
    int phi = 0;
    int e_pos = -1;  // factor acted on by e
    int f_pos = -1;  // factor acted on by f
};

// Anti-Kashiwara rule = Kashiwara signature rule on the reversed word.
Scan scan(const ClassicalType& ct, int i, const Word& w) {
    Scan sc;
    std::vector<int> plus;  // positions of unmatched +, in scan order
    for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p) {
        const int ep = letter_eps(ct, i, w[p]);
        const int ph = letter_phi(ct, i, w[p]);
        for (int k = 0; k < ep; ++k) {
            if (!plus.empty()) {
                plus.pop_back();
            } else {
                ++sc.eps;
                sc.e_pos = p;
            }
        }
        for (int k = 0; k < ph; ++k) plus.push_back(p);
    }
    sc.phi = static_cast<int>(plus.size());
    if (!plus.empty()) sc.f_pos = plus.front();
    return sc;
}

}  // namespace

int word_eps(const ClassicalType& ct, int i, const Word& w) {
    check_color(ct, i);
    return scan(ct, i, w).eps;
}

int word_phi(const ClassicalType& ct, int i, const Word& w) {
    check_color(ct, i);
    return scan(ct, i, w).phi;
}

std::optional<Word> apply_e(const ClassicalType& ct, int i, const Word& w) {
    check_color(ct, i);
    const Scan sc = scan(ct, i, w);
    if (sc.e_pos < 0) return std::nullopt;
    Word out = w;
    out[sc.e_pos] = static_cast<std::int8_t>(*letter_e(ct, i, w[sc.e_pos]));
    return out;
}

std::optional<Word> apply_f(const ClassicalType& ct, int i, const Word& w) {
    check_color(ct, i);
    const Scan sc = scan(ct, i, w);
    if (sc.f_pos < 0) return std::nullopt;
    Word out = w;
    out[sc.f_pos] = static_cast<std::int8_t>(*letter_f(ct, i, w[sc.f_pos]));
    return out;
}

Weight word_weight(const ClassicalType& ct, const Word& w) {
    Weight wt(ct.n);
    for (std::int8_t l : w) {
        if (l > 0) wt.twice(l - 1) += 2;
        if (l < 0) wt.twice(-l - 1) -= 2;
    }
    return wt;
}

Word highest_weight_word(const Partition& omega) {
    Word w;
    for (int h : omega.columns())
        for (int k = h; k >= 1; --k) w.push_back(static_cast<std::int8_t>(k));
    return w;
}

int CrystalGraph::find(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

void CrystalGraph::rebuild_index() {
    index_.clear();
    for (int v = 0; v < size(); ++v) index_.emplace(words[v], v);
}

void CrystalGraph::rebuild_inverse() {
    e.assign(f.size(), std::vector<int>(words.size(), -1));
    for (size_t c = 0; c < f.size(); ++c)
        for (int v = 0; v < size(); ++v)
            if (f[c][v] >= 0) {
                if (e[c][f[c][v]] >= 0) throw std::logic_error("color class is not a partial matching");
                e[c][f[c][v]] = v;
            }
}

std::vector<CrystalGraph::Edge> CrystalGraph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < size(); ++v)
        for (size_t c = 0; c < f.size(); ++c)
            if (f[c][v] >= 0) out.push_back({v, static_cast<int>(c), f[c][v]});
    return out;
}

CrystalGraph generate_component(const ClassicalType& ct, const Word& seed, const std::vector<int>& colors,
                                int max_vertices) {
    CrystalGraph g;
    g.rank = ct.n;
    g.f.assign(ct.n + 1, {});
    std::map<Word, int> seen{{seed, 0}};
    g.words.push_back(seed);
    std::deque<int> queue{0};
    std::vector<std::vector<std::pair<int, Word>>> fout;  // deferred f edges
    auto visit = [&](const Word& w) {
        auto [it, inserted] = seen.try_emplace(w, g.size());
        if (inserted) {
            if (g.size() >= max_vertices) throw ResourceLimit("component exceeds vertex cap");
            g.words.push_back(w);
            queue.push_back(it->second);
        }
        return it->second;
    };
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::tuple<int, int, int>> edges;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const Word w = g.words[v];
        for (int c : sorted) {
            if (auto x = apply_f(ct, c, w)) edges.emplace_back(v, c, visit(*x));
            if (auto x = apply_e(ct, c, w)) edges.emplace_back(visit(*x), c, v);
        }
    }
    for (auto& fc : g.f) fc.assign(g.size(), -1);
    for (auto [a, c, b] : edges) g.f[c][a] = b;
    g.rebuild_index();
    g.rebuild_inverse();
    return g;
}

std::vector<int> highest_weight_elements(const CrystalGraph& g, const std::vector<int>& colors) {
    std::vector<int> out;
    for (int v = 0; v < g.size(); ++v) {
        bool hw = true;
        for (int c : colors)
            if (g.e[c][v] >= 0) hw = false;
        if (hw) out.push_back(v);
    }
    return out;
}

}  // namespace krc
