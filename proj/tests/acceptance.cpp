#include "krc/branching.hpp"
#include "krc/fermionic.hpp"
#include "krc/iso_check.hpp"
#include "krc/kr_crystal.hpp"
#include "krc/norms.hpp"
#include "krc/pm_diagram.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace krc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct GridPoint {
    AffineType t;
    int r, s;
};

std::vector<GridPoint> model_grid() {
    std::vector<GridPoint> out;
    for (const char* name : {"D4~1", "B3~1", "A5~2"}) {
        const AffineType t = AffineType::parse(name);
        for (int r = 1; r <= std::min(3, t.max_model_r()); ++r)
            for (int s = 1; s <= 3; ++s)
                if (!t.is_spin(r)) out.push_back({t, r, s});
    }
    return out;
}

std::string label(const GridPoint& p) {
    return p.t.name() + " r=" + std::to_string(p.r) + " s=" + std::to_string(p.s);
}

// Built crystals of the grid up to 5000 vertices.
const std::vector<std::pair<GridPoint, KRCrystal>>& grid_crystals() {
    static const auto all = [] {
        std::vector<std::pair<GridPoint, KRCrystal>> v;
        for (const GridPoint& p : model_grid()) {
            try {
                v.emplace_back(p, KRCrystal::build(p.t, p.r, p.s, 5000));
            } catch (const ResourceLimit&) {
            }
        }
        return v;
    }();
    return all;
}

std::vector<Partition> box(int h, int w) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int hi) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == h) return;
        for (int v = 1; v <= hi; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, w);
    return out;
}

CrystalGraph table_graph(const AffineType& t) {
    CrystalGraph g;
    g.type_name = t.name();
    g.rank = t.n;
    const auto arrows = vector_arrows(t);
    std::map<Letter, int> id;
    for (const VectorArrow& a : arrows)
        for (Letter l : {a.src, a.dst})
            if (id.emplace(l, static_cast<int>(id.size())).second) g.words.push_back(Word{l});
    g.f.assign(t.n + 1, std::vector<int>(g.words.size(), -1));
    for (const VectorArrow& a : arrows) g.f[a.color][id[a.src]] = id[a.dst];
    g.rebuild_index();
    g.rebuild_inverse();
    return g;
}

Outcome table2() {
    Outcome o;
    for (const char* name : {"D4~1", "D5~1", "B3~1", "B4~1", "A3~2", "A5~2"}) {
        const AffineType t = AffineType::parse(name);
        const KRCrystal k = KRCrystal::build(t, 1, 1);
        const int expect = t.family == Family::B1 ? 2 * t.n + 1 : 2 * t.n;
        if (k.size() != expect) o.fail(std::string(name) + ": " + std::to_string(k.size()) + " vertices");
        const CrystalGraph ref = table_graph(t);
        std::vector<int> classical;
        for (int i = 1; i <= t.n; ++i) classical.push_back(i);
        const IsoResult iso = restricted_isomorphism(k.graph(), ref, classical);
        if (!iso.map) {
            o.fail(std::string(name) + ": " + iso.witness);
            continue;
        }
        const std::string w = check_preserves(k.graph(), ref, *iso.map, {0});
        if (!w.empty()) o.fail(std::string(name) + ": " + w);
        if (k.graph().edges().size() != ref.edges().size()) o.fail(std::string(name) + ": edge counts differ");
    }
    return o;
}

Outcome triple_agreement() {
    Outcome o;
    for (const GridPoint& p : model_grid()) {
        std::vector<Weight> a = decompose_diagrammatic(p.t, p.r, p.s), b = decompose_by_c(p.t, p.r, p.s), c;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (const FermionicRow& row : fermionic_table(p.t, p.r, p.s)) {
            if (row.N == 1) c.push_back(row.lambda);
            else if (row.N != 0) o.fail(label(p) + ": N > 1 at " + row.lambda.str());
            if (row.N != row.M) o.fail(label(p) + ": N != M at " + row.lambda.str());
        }
        std::sort(c.begin(), c.end());
        if (a != b || b != c) o.fail(label(p) + ": decompositions disagree");
    }
    return o;
}

Outcome fermionic_all() {
    Outcome o;
    for (const char* name : {"D4~1", "B3~1", "A5~2", "C3~1", "A4~2", "D4~2"}) {
        const AffineType t = AffineType::parse(name);
        for (int r = 1; r <= t.n; ++r)
            for (int s = 1; s <= 3; ++s) {
                const GridPoint p{t, r, s};
                std::vector<Weight> br = decompose_by_c(t, r, s);
                std::sort(br.begin(), br.end());
                for (const FermionicRow& row : fermionic_table(t, r, s)) {
                    const bool in = std::binary_search(br.begin(), br.end(), row.lambda);
                    if (row.N != (in ? 1 : 0) || row.M != row.N) o.fail(label(p) + " at " + row.lambda.str());
                }
            }
    }
    return o;
}

Outcome axioms() {
    Outcome o;
    for (const auto& [p, k] : grid_crystals()) {
        const CheckReport rep = check_axioms(p.t, k.graph());
        if (!rep.pass) o.fail(label(p) + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
        for (int v = 0; v < k.size(); ++v)
            if (k.level(v) != 0) {
                o.fail(label(p) + ": nonzero level");
                break;
            }
    }
    o.detail += std::to_string(grid_crystals().size()) + " crystals";
    return o;
}

Outcome sigma_suite() {
    Outcome o;
    long applicable = 0;
    for (const auto& [p, k] : grid_crystals()) {
        const CheckReport a = check_sigma(k), b = check_containment(k);
        applicable += b.checked;
        if (!a.pass) o.fail(label(p) + ": " + (a.failures.empty() ? "" : a.failures.front()));
        if (!b.pass) o.fail(label(p) + ": " + (b.failures.empty() ? "" : b.failures.front()));
    }
    if (o.pass) o.detail = std::to_string(applicable) + " containment vertices";
    return o;
}

Outcome rigidity() {
    Outcome o;
    for (const auto& [p, k] : grid_crystals()) {
        const RigidityReport rep = verify_prop61(p.t, k.graph());
        if (!rep.pass()) o.fail(label(p) + ": " + rep.witness);
    }
    return o;
}

Outcome norms() {
    Outcome o;
    const NormReport rep = norm_sweep(4, 4);
    if (rep.violations() != 0) {
        for (const NormEntry& e : rep.entries)
            if (!e.pass) {
                o.fail(e.family + " " + e.check + ": " + e.detail);
                break;
            }
    }
    if (o.pass) o.detail = std::to_string(rep.entries.size()) + " entries";
    return o;
}

int max_height(const ClassicalType& ct) {
    switch (ct.kind) {
        case ClassicalKind::D: return ct.n - 2;
        case ClassicalKind::B: return ct.n - 1;
        case ClassicalKind::C: return ct.n;
    }
    return 0;
}

Outcome pm_machinery() {
    Outcome o;
    long checked = 0, uncovered = 0;
    const ClassicalType types[] = {{ClassicalKind::D, 4}, {ClassicalKind::B, 3}, {ClassicalKind::B, 4},
                                   {ClassicalKind::C, 2}, {ClassicalKind::C, 3}, {ClassicalKind::C, 4}};
    for (const ClassicalType& ct : types)
        for (const Partition& outer : box(std::min(3, max_height(ct)), 3)) {
            if (outer.height() == 0) continue;
            const PMCheckReport rep = check_pm_machinery(ct, outer);
            checked += rep.e1_checked;
            uncovered += rep.uncovered;
            if (!rep.bijection || rep.e1_failures)
                o.fail(outer.str() + ": " + (rep.witnesses.empty() ? "" : rep.witnesses.front()));
        }
    for (int r = 1; r <= 3; ++r)
        for (int s = 1; s <= 3; ++s)
            for (const Partition& outer : box(r, s))
                for (const PMDiagram& d : enumerate_diagrams(outer, 3)) {
                    if (!satisfies_parity_rules(r, s, d)) continue;
                    if (s_map(r, s, s_map(r, s, d)) != d) o.fail("S not involutive at " + d.str());
                }
    if (o.pass) o.detail = std::to_string(checked) + " vertices, " + std::to_string(uncovered) + " outside Upsilon";
    return o;
}

Outcome determinism() {
    Outcome o;
    const AffineType t = AffineType::parse("D4~1");
    if (KRCrystal::build(t, 2, 2).to_json() != KRCrystal::build(t, 2, 2).to_json()) o.fail("JSON differs");
    return o;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"B^{1,1} chains", table2},
        {"decomposition triple agreement", triple_agreement},
        {"fermionic formula, six families", fermionic_all},
        {"crystal axioms", axioms},
        {"sigma suite", sigma_suite},
        {"rigidity", rigidity},
        {"norm criterion sweep", norms},
        {"Phi / S machinery", pm_machinery},
        {"determinism", determinism},
    };
    int failed = 0, idx = 0;
    for (const auto& [name, run] : criteria) {
        ++idx;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %d %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", idx, name, sec, o.detail.empty() ? "" : ": ",
                    o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
