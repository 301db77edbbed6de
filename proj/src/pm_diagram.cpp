#include "krc/pm_diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace krc {

namespace {

struct Column {
    int lam, mu, Lam;
};

std::vector<Column> columns_of(const PMDiagram& p, int width) {
    std::vector<Column> cols(width);
    for (int j = 0; j < width; ++j) cols[j] = {p.lambda.column(j), p.mu.column(j), p.Lambda.column(j)};
    return cols;
}

PMDiagram from_column_list(std::vector<Column> cols) {
    std::stable_sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
        return std::tie(a.lam, a.Lam, a.mu) > std::tie(b.lam, b.Lam, b.mu);
    });
    std::vector<int> l, m, L;
    for (const Column& c : cols) {
        l.push_back(c.lam);
        m.push_back(c.mu);
        L.push_back(c.Lam);
    }
    return PMDiagram(Partition::from_columns(l), Partition::from_columns(m), Partition::from_columns(L));
}

void enumerate_strips(const Partition& big, bool pad, std::vector<Partition>& out) {
    // all small with big/small a horizontal strip: big_{i+1} <= small_i <= big_i
    std::vector<int> rows(big.height() + (pad ? 0 : 0), 0);
    const int h = big.height();
    std::vector<int> cur(h, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == h) {
            out.push_back(Partition(cur));
            return;
        }
        for (int v = big.row(i + 1); v <= big.row(i); ++v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

}  // namespace

PMDiagram::PMDiagram(Partition l, Partition m, Partition L)
    : lambda(std::move(l)), mu(std::move(m)), Lambda(std::move(L)) {
    if (!is_horizontal_strip(Lambda, mu) || !is_horizontal_strip(mu, lambda))
        throw std::invalid_argument("not a +- diagram: " + lambda.str() + " " + mu.str() + " " + Lambda.str());
}

std::string PMDiagram::str() const {
    std::string out;
    for (int i = Lambda.height() - 1; i >= 0; --i) {
        for (int j = 0; j < Lambda.row(i); ++j) {
            if (j < lambda.row(i)) out += '.';
            else if (j < mu.row(i)) out += '+';
            else out += '-';
        }
        out += '\n';
    }
    return out;
}

bool is_horizontal_strip(const Partition& big, const Partition& small) {
    if (!big.contains(small)) return false;
    for (int i = 0; i < big.height(); ++i)
        if (small.row(i) < big.row(i + 1)) return false;
    return true;
}

std::vector<PMDiagram> enumerate_diagrams(const Partition& outer, int max_inner_height) {
    std::vector<PMDiagram> out;
    std::vector<Partition> mus;
    enumerate_strips(outer, false, mus);
    for (const Partition& mu : mus) {
        std::vector<Partition> lams;
        enumerate_strips(mu, false, lams);
        for (const Partition& lam : lams)
            if (lam.height() <= max_inner_height) out.emplace_back(lam, mu, outer);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> phi_string(ClassicalKind kind, int n, const PMDiagram& p) {
    std::vector<int> a;
    const int w = p.width();
    for (int j = w - 1; j >= 0; --j) {
        if (p.has_plus(j)) continue;
        const int h = p.lambda.column(j);
        for (int k = 1; k <= h; ++k) a.push_back(k);
    }
    for (int j = 0; j < w; ++j) {
        if (!p.has_minus(j)) continue;
        const int h = p.Lambda.column(j);
        switch (kind) {
            case ClassicalKind::D:
                for (int k = 1; k <= n; ++k) a.push_back(k);
                for (int k = n - 2; k >= h; --k) a.push_back(k);
                break;
            case ClassicalKind::B:
                for (int k = 1; k <= n; ++k) a.push_back(k);
                for (int k = n; k >= h; --k) a.push_back(k);
                break;
            case ClassicalKind::C:
                for (int k = 1; k <= n; ++k) a.push_back(k);
                for (int k = n - 1; k >= h; --k) a.push_back(k);
                break;
        }
    }
    return a;
}

Word apply_string(const ClassicalType& ct, const std::vector<int>& a, int shift, Word w) {
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        auto x = apply_f(ct, *it + shift, w);
        if (!x) throw std::logic_error("operator string annihilates at f_" + std::to_string(*it + shift));
        w = std::move(*x);
    }
    return w;
}

Word phi(const ClassicalType& ct, const PMDiagram& p) {
    return apply_string(ct, phi_string(ct.kind, ct.n, p), 0, highest_weight_word(p.Lambda));
}

PhiTable::PhiTable(const ClassicalType& ct, const Partition& outer)
    : outer_(outer), diagrams_(enumerate_diagrams(outer, ct.n - 1)) {
    for (size_t k = 0; k < diagrams_.size(); ++k) {
        auto [it, fresh] = index_.emplace(phi(ct, diagrams_[k]), static_cast<int>(k));
        if (!fresh) throw std::logic_error("Phi is not injective on outer shape " + outer.str());
    }
}

const PMDiagram* PhiTable::lookup(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? nullptr : &diagrams_[it->second];
}

PMDiagram phi_inverse(const ClassicalType& ct, const Partition& outer, const Word& w) {
    PhiTable t(ct, outer);
    const PMDiagram* p = t.lookup(w);
    if (!p) throw std::invalid_argument("word is not in the image of Phi: " + word_str(w));
    return *p;
}

bool satisfies_parity_rules(int r, int s, const PMDiagram& p) {
    if (p.width() > s) return false;
    for (int j = 0; j < s; ++j) {
        const int i = p.lambda.column(j);
        if (i >= r) {
            if (p.has_plus(j) || p.has_minus(j)) return false;
            continue;
        }
        const bool plus = p.has_plus(j), minus = p.has_minus(j);
        if ((r - 1 - i) % 2 == 0) {
            if (plus == minus) return false;
        } else if (plus != minus) {
            return false;
        }
    }
    return true;
}

PMDiagram s_map(int r, int s, const PMDiagram& p) {
    if (!satisfies_parity_rules(r, s, p))
        throw std::invalid_argument("diagram violates the parity rules:\n" + p.str());
    std::vector<Column> cols = columns_of(p, s);
    std::vector<Column> out;
    for (int i = 0; i <= r; ++i) {
        int c = 0, plus = 0, pairs = 0;
        for (const Column& col : cols) {
            if (col.lam != i) continue;
            ++c;
            if (col.mu > col.lam) {
                ++plus;
                if (col.Lam > col.mu) ++pairs;
            }
        }
        if (i >= r) {
            for (int k = 0; k < c; ++k) out.push_back({i, i, i});
        } else if ((r - 1 - i) % 2 == 0) {
            const int minus = c - plus;
            for (int k = 0; k < minus; ++k) out.push_back({i, i + 1, i + 1});
            for (int k = 0; k < plus; ++k) out.push_back({i, i, i + 1});
        } else {
            for (int k = 0; k < c - pairs; ++k) out.push_back({i, i + 1, i + 2});
            for (int k = 0; k < pairs; ++k) out.push_back({i, i, i});
        }
    }
    return from_column_list(out);
}

Word upsilon(const ClassicalType& ct, const PMPair& pair) {
    if (!(pair.p.outer() == pair.P.inner())) throw std::invalid_argument("outer(p) must equal inner(P)");
    const Word base = phi(ct, pair.P);
    return apply_string(ct, phi_string(ct.kind, ct.n - 1, pair.p), 1, base);
}

Pairing pair_signs(const PMPair& pair) {
    Pairing out;
    const int w = std::max(pair.P.width(), pair.p.width());
    for (int j = 0; j < w; ++j) {
        if (pair.P.has_plus(j)) out.signs.push_back({true, j, true});
        if (pair.P.has_minus(j)) out.signs.push_back({true, j, false});
    }
    for (int j = 0; j < w; ++j) {
        if (pair.p.has_plus(j)) out.signs.push_back({false, j, true});
        if (pair.p.has_minus(j)) out.signs.push_back({false, j, false});
    }
    const int m = static_cast<int>(out.signs.size());
    out.paired.assign(m, false);
    auto pick = [&](int k, bool in_big, bool plus, bool leftmost, bool weakly_left) {
        int best = -1;
        for (int t = 0; t < m; ++t) {
            const SignRef& x = out.signs[t];
            if (out.paired[t] || t == k || x.in_big != in_big || x.plus != plus) continue;
            if (weakly_left && x.col > out.signs[k].col) continue;
            if (best < 0 || (leftmost ? x.col < out.signs[best].col : x.col > out.signs[best].col)) best = t;
        }
        if (best >= 0) {
            out.paired[k] = out.paired[best] = true;
            out.pairs.emplace_back(best, k);
        }
    };
    auto run = [&](bool plus, bool in_big, bool partner_plus, bool leftmost, bool weakly_left) {
        for (int k = 0; k < m; ++k) {
            const SignRef& x = out.signs[k];
            if (x.in_big || x.plus != plus || out.paired[k]) continue;
            pick(k, in_big, partner_plus, leftmost, weakly_left);
        }
    };
    run(true, true, true, true, true);
    run(false, true, false, false, true);
    run(true, false, false, true, false);
    return out;
}

PMPair move_sign(const PMPair& pair, const SignRef& sign) {
    const int s = std::max(pair.P.width(), pair.p.width());
    if (sign.in_big && !sign.plus) {
        if (!pair.P.has_minus(sign.col)) throw std::invalid_argument("no - of P in that column");
        std::vector<Column> big = columns_of(pair.P, s);
        Column& c = big[sign.col];
        c = c.mu > c.lam ? Column{c.lam + 1, c.mu + 1, c.Lam} : Column{c.lam + 1, c.lam + 1, c.lam + 1};
        const PMDiagram P2 = from_column_list(big);
        return {P2, PMDiagram(pair.p.lambda, pair.p.mu, P2.lambda)};
    }
    if (!sign.in_big && sign.plus) {
        if (!pair.p.has_plus(sign.col)) throw std::invalid_argument("no + of p in that column");
        std::vector<Column> small = columns_of(pair.p, s);
        Column& c = small[sign.col];
        c = {c.lam, c.lam, c.Lam - 1};
        const PMDiagram p2 = from_column_list(small);
        return {PMDiagram(p2.Lambda, pair.P.mu, pair.P.Lambda), p2};
    }
    throw std::invalid_argument("only a - of P or a + of p can move");
}

std::optional<PMPair> e1_on_pair(const PMPair& pair) {
    const Pairing pr = pair_signs(pair);
    const int m = static_cast<int>(pr.signs.size());
    int plus_p = -1, minus_P = -1;
    for (int k = 0; k < m; ++k) {
        if (pr.paired[k]) continue;
        const SignRef& x = pr.signs[k];
        if (!x.in_big && x.plus && (plus_p < 0 || x.col > pr.signs[plus_p].col)) plus_p = k;
        if (x.in_big && !x.plus && (minus_P < 0 || x.col < pr.signs[minus_P].col)) minus_P = k;
    }
    if (plus_p >= 0) return move_sign(pair, pr.signs[plus_p]);
    if (minus_P >= 0) return move_sign(pair, pr.signs[minus_P]);
    return std::nullopt;
}

PMCheckReport check_pm_machinery(const ClassicalType& ct, const Partition& outer) {
    PMCheckReport rep;
    const int n = ct.n;
    std::vector<int> all, lower, lower2;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    for (int i = 2; i <= n; ++i) lower.push_back(i);
    for (int i = 3; i <= n; ++i) lower2.push_back(i);
    const CrystalGraph g = generate_component(ct, highest_weight_word(outer), all);
    auto note = [&](std::string w) {
        if (rep.witnesses.size() < 8) rep.witnesses.push_back(std::move(w));
    };

    const PhiTable table(ct, outer);
    rep.diagrams = static_cast<int>(table.diagrams().size());
    if (highest_weight_elements(g, lower).size() != table.diagrams().size()) {
        rep.bijection = false;
        note("count mismatch for " + outer.str());
    }
    for (const PMDiagram& P : table.diagrams()) {
        const Word w = phi(ct, P);
        const int v = g.find(w);
        bool ok = v >= 0;
        for (int c : lower) ok = ok && g.e[c][v] < 0;
        if (ok) {
            const Weight wt = word_weight(ct, w);
            for (int i = 1; i < n; ++i) ok = ok && wt.twice(i) == 2 * P.lambda.row(i - 1);
        }
        if (!ok) {
            rep.bijection = false;
            note("Phi misses at\n" + P.str());
        }
    }
    if (!rep.bijection) return rep;

    std::map<Word, PMPair> ups;
    for (const PMDiagram& P : table.diagrams())
        for (const PMDiagram& p : enumerate_diagrams(P.lambda, n - 2)) ups.emplace(upsilon(ct, {P, p}), PMPair{P, p});
    for (int v : highest_weight_elements(g, lower2)) {
        auto it = ups.find(g.words[v]);
        if (it == ups.end()) {
            ++rep.uncovered;
            continue;
        }
        ++rep.e1_checked;
        const std::optional<PMPair> pred = e1_on_pair(it->second);
        const int u = g.e[1][v];
        bool ok;
        if (u < 0) {
            ok = !pred;
        } else {
            auto jt = ups.find(g.words[u]);
            ok = pred && jt != ups.end() && jt->second == *pred;
        }
        if (!ok) {
            ++rep.e1_failures;
            note("e1 disagrees at P =\n" + it->second.P.str() + "p =\n" + it->second.p.str());
        }
    }
    return rep;
}

}  // namespace krc
