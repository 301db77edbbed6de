#include "krc/kr_crystal.hpp"

#include "krc/branching.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace krc {

std::string model_domain_error(const AffineType& t, int r, int s) {
    if (!t.has_crystal_model()) return "no crystal model for type " + t.name();
    if (r < 1 || r > t.max_model_r())
        return "r = " + std::to_string(r) + " is outside 1.." + std::to_string(t.max_model_r()) + " for " + t.name();
    if (t.is_spin(r)) return "spin node r = " + std::to_string(r);
    if (s < 1) return "s must be positive";
    return {};
}

KRCrystal KRCrystal::build(const AffineType& t, int r, int s, int max_vertices) {
    if (auto err = model_domain_error(t, r, s); !err.empty()) throw std::invalid_argument(err);
    KRCrystal k;
    k.type_ = t;
    k.ct_ = ClassicalType::of(t);
    k.r_ = r;
    k.s_ = s;
    k.shapes_ = decompose_diagrammatic_shapes(t, r, s);

    const int n = t.n;
    std::vector<int> colors;
    for (int i = 1; i <= n; ++i) colors.push_back(i);
    CrystalGraph& g = k.graph_;
    g.type_name = t.name();
    g.rank = n;
    g.r = r;
    g.s = s;
    g.f.assign(n + 1, {});
    for (size_t c = 0; c < k.shapes_.size(); ++c) {
        const int budget = max_vertices - g.size();
        if (budget <= 0) throw ResourceLimit("crystal exceeds vertex cap");
        CrystalGraph part = generate_component(k.ct_, highest_weight_word(k.shapes_[c]), colors, budget);
        const int off = g.size();
        for (auto& w : part.words) g.words.push_back(w);
        for (int i = 0; i <= n; ++i)
            for (int x : part.f[i]) g.f[i].push_back(x < 0 ? -1 : x + off);
        k.comp_.insert(k.comp_.end(), part.size(), static_cast<int>(c));
        k.tables_.push_back(std::make_shared<PhiTable>(k.ct_, k.shapes_[c]));
    }
    g.f[0].assign(g.size(), -1);
    g.rebuild_index();
    g.rebuild_inverse();

    std::map<Partition, int> shape_index;
    for (size_t c = 0; c < k.shapes_.size(); ++c) shape_index[k.shapes_[c]] = static_cast<int>(c);
    std::vector<int> lower;
    for (int i = 2; i <= n; ++i) lower.push_back(i);

    k.sigma_.assign(g.size(), -1);
    std::map<int, int> hw_sigma;
    for (int v = 0; v < g.size(); ++v) {
        std::vector<int> ops;
        const int top = k.raise(v, lower, &ops);
        auto it = hw_sigma.find(top);
        if (it == hw_sigma.end()) {
            const PMDiagram* P = k.tables_[k.comp_[top]]->lookup(g.words[top]);
            if (!P) throw std::logic_error("highest weight element outside the image of Phi");
            const PMDiagram Q = s_map(r, s, *P);
            if (!shape_index.count(Q.outer()))
                throw std::logic_error("sign involution leaves the decomposition: " + Q.outer().str());
            const int u = g.find(krc::phi(k.ct_, Q));
            if (u < 0) throw std::logic_error("Phi image not found in the crystal");
            it = hw_sigma.emplace(top, u).first;
        }
        int u = it->second;
        for (auto op = ops.rbegin(); op != ops.rend(); ++op) {
            u = g.f[*op][u];
            if (u < 0) throw std::logic_error("reversed raising string annihilates under sigma");
        }
        k.sigma_[v] = u;
    }
    for (int v = 0; v < g.size(); ++v) {
        const int x = g.f[1][k.sigma_[v]];
        g.f[0][v] = x < 0 ? -1 : k.sigma_[x];
    }
    g.rebuild_inverse();
    return k;
}

int KRCrystal::raise(int v, const std::vector<int>& colors, std::vector<int>* ops) const {
    for (;;) {
        bool moved = false;
        for (int c : colors) {
            const int u = graph_.e[c][v];
            if (u >= 0) {
                if (ops) ops->push_back(c);
                v = u;
                moved = true;
                break;
            }
        }
        if (!moved) return v;
    }
}

std::optional<int> KRCrystal::e(int i, int v) const {
    const int u = graph_.e[i][v];
    return u < 0 ? std::nullopt : std::optional<int>(u);
}

std::optional<int> KRCrystal::f(int i, int v) const {
    const int u = graph_.f[i][v];
    return u < 0 ? std::nullopt : std::optional<int>(u);
}

int KRCrystal::eps(int i, int v) const {
    int k = 0;
    for (int u = graph_.e[i][v]; u >= 0; u = graph_.e[i][u]) ++k;
    return k;
}

int KRCrystal::phi(int i, int v) const {
    int k = 0;
    for (int u = graph_.f[i][v]; u >= 0; u = graph_.f[i][u]) ++k;
    return k;
}

std::vector<int> KRCrystal::affine_weight(int v) const {
    std::vector<int> m(type_.n + 1);
    for (int i = 0; i <= type_.n; ++i) m[i] = phi(i, v) - eps(i, v);
    return m;
}

int KRCrystal::level(int v) const {
    const std::vector<int> a = dual_kac_labels(type_);
    const std::vector<int> m = affine_weight(v);
    int lv = 0;
    for (int i = 0; i <= type_.n; ++i) lv += a[i] * m[i];
    return lv;
}

PMDiagram KRCrystal::diagram(int v) const {
    std::vector<int> lower;
    for (int i = 2; i <= type_.n; ++i) lower.push_back(i);
    const int top = raise(v, lower);
    const PMDiagram* P = tables_[comp_[top]]->lookup(graph_.words[top]);
    if (!P) throw std::logic_error("highest weight element outside the image of Phi");
    return *P;
}

std::vector<std::vector<int>> KRCrystal::decompose(const std::vector<int>& colors) const {
    std::vector<std::vector<int>> out;
    for (int v : highest_weight_elements(graph_, colors)) {
        std::vector<int> labels;
        for (int c : colors) labels.push_back(phi(c, v));
        out.push_back(std::move(labels));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string KRCrystal::to_json() const {
    nlohmann::ordered_json j;
    j["type"] = type_.name();
    j["rank"] = type_.n;
    j["r"] = r_;
    j["s"] = s_;
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < size(); ++v) {
        nlohmann::ordered_json x;
        x["id"] = v;
        auto& w = x["word"] = nlohmann::ordered_json::array();
        for (auto l : graph_.words[v]) w.push_back(letter_str(l));
        auto& wt = x["weight"] = nlohmann::ordered_json::array();
        const Weight ww = weight(v);
        for (int i = 0; i < ww.size(); ++i) wt.push_back(rational_str(ww.coord(i)));
        verts.push_back(std::move(x));
    }
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& ed : graph_.edges()) edges.push_back({{"src", ed.src}, {"color", ed.color}, {"dst", ed.dst}});
    return j.dump(1) + "\n";
}

namespace {

std::string json_to_dot(const nlohmann::json& j) {
    std::ostringstream os;
    os << "digraph \"" << j.at("type").get<std::string>() << " B^{" << j.at("r").get<int>() << ","
       << j.at("s").get<int>() << "}\" {\n";
    for (const auto& v : j.at("vertices")) {
        std::string label;
        for (const auto& l : v.at("word")) {
            if (!label.empty()) label += " ";
            label += l.get<std::string>();
        }
        os << "  " << v.at("id").get<int>() << " [label=\"" << label << "\"];\n";
    }
    for (const auto& e : j.at("edges"))
        os << "  " << e.at("src").get<int>() << " -> " << e.at("dst").get<int>() << " [label=\""
           << e.at("color").get<int>() << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace

std::string graph_to_dot(const std::string& json_text) {
    try {
        return json_to_dot(nlohmann::json::parse(json_text));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

std::string KRCrystal::to_dot() const { return graph_to_dot(to_json()); }

}  // namespace krc

namespace krc {

void CheckReport::fail(std::string what) {
    pass = false;
    if (failures.size() < 8) failures.push_back(std::move(what));
}

namespace {

int walk(const std::vector<int>& next, int v) {
    int k = 0;
    for (int u = next[v]; u >= 0; u = next[u]) ++k;
    return k;
}

int apply_or(const CrystalGraph& g, const std::vector<int>& colors_right_first, int v) {
    for (int c : colors_right_first) {
        if (v < 0) return -1;
        v = g.e[c][v];
    }
    return v;
}

}  // namespace

CheckReport check_axioms(const AffineType& t, const CrystalGraph& g) {
    CheckReport rep;
    const int n = t.n;
    const ClassicalType ct = ClassicalType::of(t);
    const std::vector<int> a = dual_kac_labels(t);
    const int V = g.size();
    std::vector<std::vector<int>> eps(n + 1, std::vector<int>(V)), phi(n + 1, std::vector<int>(V));
    for (int i = 0; i <= n; ++i)
        for (int v = 0; v < V; ++v) {
            eps[i][v] = walk(g.e[i], v);
            phi[i][v] = walk(g.f[i], v);
        }
    for (int v = 0; v < V; ++v) {
        const Weight wt = word_weight(ct, g.words[v]);
        int lv = 0;
        for (int i = 0; i <= n; ++i) {
            ++rep.checked;
            if (g.f[i][v] >= 0 && g.e[i][g.f[i][v]] != v) rep.fail("f/e not inverse at " + std::to_string(v));
            if (g.e[i][v] >= 0 && g.f[i][g.e[i][v]] != v) rep.fail("e/f not inverse at " + std::to_string(v));
            if (phi[i][v] - eps[i][v] != pairing(t, i, wt))
                rep.fail("phi-eps != <h_" + std::to_string(i) + ",wt> at " + std::to_string(v));
            lv += a[i] * (phi[i][v] - eps[i][v]);
        }
        if (lv != 0) rep.fail("nonzero level at " + std::to_string(v));
    }
    // connectedness over all colors
    std::vector<char> seen(V, 0);
    std::vector<int> stack{0};
    int reached = V ? 1 : 0;
    if (V) seen[0] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int i = 0; i <= n; ++i)
            for (int u : {g.f[i][v], g.e[i][v]})
                if (u >= 0 && !seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
    }
    if (reached != V) rep.fail("graph is not connected over all colors");
    // local rank-2 conditions
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            const int aij = cartan_integer(t, i, j), aji = cartan_integer(t, j, i);
            for (int v = 0; v < V; ++v) {
                const int x = g.e[i][v];
                if (x < 0) continue;
                ++rep.checked;
                const int d = eps[j][x] - eps[j][v];
                if (aij == 0) {
                    if (d != 0 || phi[j][x] != phi[j][v]) rep.fail("orthogonal colors interact at " + std::to_string(v));
                    const int y = g.e[j][v];
                    if (y >= 0 && g.e[j][x] != g.e[i][y]) rep.fail("orthogonal colors do not commute at " + std::to_string(v));
                } else if (aij == -1 && aji == -1) {
                    if (d != 0 && d != 1) rep.fail("Delta eps out of range at " + std::to_string(v));
                    const int y = g.e[j][v];
                    if (y < 0) continue;
                    const int d2 = eps[i][y] - eps[i][v];
                    if (d == 0 && d2 == 0 && g.e[j][x] != g.e[i][y])
                        rep.fail("e_i e_j != e_j e_i at " + std::to_string(v));
                    if (d == 1 && d2 == 1) {
                        const int l = apply_or(g, {i, j, j, i}, v), r = apply_or(g, {j, i, i, j}, v);
                        if (l < 0 || l != r) rep.fail("e_i e_j^2 e_i != e_j e_i^2 e_j at " + std::to_string(v));
                    }
                }
            }
        }
    return rep;
}

CheckReport check_sigma(const KRCrystal& k) {
    CheckReport rep;
    const CrystalGraph& g = k.graph();
    const int n = k.rank();
    for (int v = 0; v < k.size(); ++v) {
        ++rep.checked;
        if (k.sigma(k.sigma(v)) != v) rep.fail("sigma^2 != id at " + std::to_string(v));
        if (!(k.diagram(k.sigma(v)).inner() == k.diagram(v).inner()))
            rep.fail("sigma changes the inner shape at " + std::to_string(v));
        for (int i = 2; i <= n; ++i) {
            const int fv = g.f[i][v], ev = g.e[i][v];
            const int fs = g.f[i][k.sigma(v)], es = g.e[i][k.sigma(v)];
            if ((fv < 0 ? -1 : k.sigma(fv)) != fs || (ev < 0 ? -1 : k.sigma(ev)) != es)
                rep.fail("sigma does not commute with color " + std::to_string(i) + " at " + std::to_string(v));
        }
    }
    std::vector<int> c1, c0{0};
    for (int i = 1; i <= n; ++i) c1.push_back(i);
    for (int i = 2; i <= n; ++i) c0.push_back(i);
    ++rep.checked;
    if (k.decompose(c1) != k.decompose(c0)) rep.fail("decomposition over {0,2..n} is not the twist of {1..n}");
    return rep;
}

CheckReport check_containment(const KRCrystal& k) {
    CheckReport rep;
    const CrystalGraph& g = k.graph();
    const int n = k.rank();
    std::vector<int> c3;
    for (int i = 3; i <= n; ++i) c3.push_back(i);
    auto strictly_inside = [](const Partition& a, const Partition& b) { return b.contains(a) && !(a == b); };
    for (int v : highest_weight_elements(g, c3)) {
        const PMDiagram P = k.diagram(v);
        if (P.inner().height() > n - 2) continue;  // outside the pairs described by Upsilon
        const PMDiagram bare(P.inner(), P.inner(), P.inner());
        Word w;
        try {
            w = upsilon(k.classical(), {P, bare});
        } catch (const std::logic_error&) {
            continue;
        }
        if (w != g.words[v] || k.eps(0, v) == 0 || k.eps(1, v) == 0) continue;
        ++rep.checked;
        const Partition in = P.inner();
        const int e0 = g.e[0][v], e1 = g.e[1][v], e01 = g.e[0][e1];
        if (e01 < 0) {
            rep.fail("e_0 e_1 annihilates at " + std::to_string(v));
            continue;
        }
        for (int u : {e0, e1, e01})
            if (!strictly_inside(in, k.inner_shape(u)))
                rep.fail("inner shape does not grow at " + std::to_string(v) + " -> " + std::to_string(u));
    }
    return rep;
}

}  // namespace krc
