#include "krc/branching.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace krc {

namespace {

bool spin_rule(const AffineType& t, int r) { return t.is_spin(r); }

bool b_top(const AffineType& t, int r) { return t.family == Family::B1 && r == t.n; }

void check_rs(const AffineType& t, int r, int s) {
    if (r < 1 || r > t.n) throw std::invalid_argument("r out of range");
    if (s < 1) throw std::invalid_argument("s must be positive");
}

Weight pw(const AffineType& t, int i) {
    return i == 0 ? Weight(t.n) : fundamental_weight(t, i);
}

}  // namespace

CShape c_shape(const AffineType& t, int r, int s) {
    check_rs(t, r, s);
    if (spin_rule(t, r)) return {0, 0};
    if (b_top(t, r)) return {t.n / 2, s / 2};
    switch (t.family) {
        case Family::C1: return {r, s / 2};
        case Family::A2even:
        case Family::D2: return {r, s};
        default: return {r / 2, s};
    }
}

bool valid_c(const AffineType& t, int r, int s, const CVector& c) {
    const CShape sh = c_shape(t, r, s);
    if (static_cast<int>(c.size()) != sh.length) return false;
    int prev = sh.bound;
    for (int x : c) {
        if (x < 0 || x > prev) return false;
        prev = x;
    }
    return true;
}

std::vector<CVector> enumerate_c(const AffineType& t, int r, int s) {
    const CShape sh = c_shape(t, r, s);
    std::vector<CVector> out;
    CVector cur;
    std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(cur.size()) == sh.length) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= hi; ++v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    rec(sh.bound);
    return out;
}

Weight lambda_of_c(const AffineType& t, int r, int s, const CVector& c) {
    if (!valid_c(t, r, s, c)) throw std::invalid_argument("malformed c vector");
    if (spin_rule(t, r)) return fundamental_weight(t, r).scaled(s);
    // w(j) = c_j with c_0 doubled where the family sets c_0 = s/2
    const int L = static_cast<int>(c.size());
    auto at = [&](int j) { return j == 0 ? 0 : (j <= L ? c[j - 1] : 0); };
    Weight w(t.n);
    if (b_top(t, r)) {
        w += pw(t, t.n).scaled(s - 2 * at(1));
        for (int j = 1; j <= L; ++j) w += pw(t, t.n - 2 * j).scaled(at(j) - at(j + 1));
        return w;
    }
    switch (t.family) {
        case Family::C1:
            w += pw(t, r).scaled(s - 2 * at(1));
            for (int j = 1; j <= L; ++j) w += pw(t, r - j).scaled(2 * (at(j) - at(j + 1)));
            return w;
        case Family::A2even:
        case Family::D2:
            w += pw(t, r).scaled(s - at(1));
            for (int j = 1; j <= L; ++j) w += pw(t, r - j).scaled(at(j) - at(j + 1));
            return w;
        default:
            w += pw(t, r).scaled(s - at(1));
            for (int j = 1; j <= L; ++j) w += pw(t, r - 2 * j).scaled(at(j) - at(j + 1));
            return w;
    }
}

namespace {

std::vector<Partition> removals(const Partition& p, NuShape nu) {
    std::vector<Partition> out;
    const std::vector<int> cols = p.columns();
    switch (nu) {
        case NuShape::VerticalDomino:
            for (size_t j = 0; j < cols.size(); ++j) {
                if (cols[j] < 2) continue;
                std::vector<int> c = cols;
                c[j] -= 2;
                if (j + 1 < c.size() && c[j + 1] > c[j]) continue;
                out.push_back(Partition::from_columns(c));
            }
            break;
        case NuShape::HorizontalDomino:
            for (int i = 0; i < p.height(); ++i) {
                if (p.rows[i] < 2) continue;
                std::vector<int> rws = p.rows;
                rws[i] -= 2;
                if (i + 1 < p.height() && rws[i + 1] > rws[i]) continue;
                out.emplace_back(rws);
            }
            break;
        case NuShape::Box:
            for (int i = 0; i < p.height(); ++i) {
                if (i + 1 < p.height() && p.rows[i + 1] == p.rows[i]) continue;
                std::vector<int> rws = p.rows;
                rws[i] -= 1;
                out.emplace_back(rws);
            }
            break;
    }
    return out;
}

}  // namespace

std::vector<Partition> decompose_diagrammatic_shapes(const AffineType& t, int r, int s) {
    check_rs(t, r, s);
    int height = r, width = s;
    if (b_top(t, r)) {
        if (s % 2 != 0) throw std::invalid_argument("half-width rectangle needs even s");
        width = s / 2;
    } else if (spin_rule(t, r)) {
        throw std::invalid_argument("node " + std::to_string(r) + " of " + t.name() + " is irreducible");
    }
    std::set<Partition> seen;
    std::vector<Partition> stack{Partition(std::vector<int>(height, width))};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Partition p = stack.back();
        stack.pop_back();
        for (Partition& q : removals(p, t.nu()))
            if (seen.insert(q).second) stack.push_back(std::move(q));
    }
    std::vector<Partition> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.rows > b.rows;
    });
    return out;
}

std::vector<Weight> decompose_diagrammatic(const AffineType& t, int r, int s) {
    std::vector<Weight> out;
    for (const Partition& p : decompose_diagrammatic_shapes(t, r, s)) out.push_back(partition_to_weight(p, t.n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> decompose_by_c(const AffineType& t, int r, int s) {
    std::vector<Weight> out;
    for (const CVector& c : enumerate_c(t, r, s)) out.push_back(lambda_of_c(t, r, s, c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> dual_indexing_set(const AffineType& t, int r, int s) {
    check_rs(t, r, s);
    std::vector<Weight> out;
    std::function<void(int, int, Weight)> rec = [&](int k, int lo, Weight acc) {
        if (k == s) {
            out.push_back(acc);
            return;
        }
        for (int m = lo; m <= r / 2; ++m) rec(k + 1, m, acc + pw(t, r - 2 * m));
    };
    rec(0, 0, Weight(t.n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace krc
