// Independent reference computations used only by the tests.
#pragma once

#include "krc/cartan.hpp"
#include "krc/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using krc::AffineType;
using krc::ClassicalKind;
using krc::Rational;
using krc::Weight;

// positive roots in doubled epsilon coordinates
inline std::vector<Weight> positive_roots(ClassicalKind k, int n) {
    std::vector<Weight> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Weight a(n), b(n);
            a.twice(i) = 2;
            a.twice(j) = -2;
            b.twice(i) = 2;
            b.twice(j) = 2;
            out.push_back(a);
            out.push_back(b);
        }
    for (int i = 0; i < n; ++i) {
        Weight c(n);
        if (k == ClassicalKind::B) c.twice(i) = 2;
        if (k == ClassicalKind::C) c.twice(i) = 4;
        if (k != ClassicalKind::D) out.push_back(c);
    }
    return out;
}

inline Weight rho(ClassicalKind k, int n) {
    Weight r(n);
    for (int i = 0; i < n; ++i) {
        if (k == ClassicalKind::D) r.twice(i) = 2 * (n - 1 - i);
        if (k == ClassicalKind::B) r.twice(i) = 2 * (n - i) - 1;
        if (k == ClassicalKind::C) r.twice(i) = 2 * (n - i);
    }
    return r;
}

inline long long dot2(const Weight& a, const Weight& b) {
    long long s = 0;
    for (int i = 0; i < a.size(); ++i) s += static_cast<long long>(a.twice(i)) * b.twice(i);
    return s;
}

// Weyl dimension formula
inline long long weyl_dimension(ClassicalKind k, const Weight& lambda) {
    const int n = lambda.size();
    const Weight r = rho(k, n);
    const Weight lr = lambda + r;
    Rational d = 1;
    for (const Weight& a : positive_roots(k, n)) d *= Rational(dot2(lr, a), dot2(r, a));
    return d.numerator();
}

// dominant representative under the Weyl group
inline Weight dominant_rep(ClassicalKind k, Weight w) {
    const int n = w.size();
    std::vector<int> v = w.twice_coords();
    int negs = 0;
    for (int& x : v)
        if (x < 0) {
            x = -x;
            ++negs;
        }
    std::sort(v.rbegin(), v.rend());
    if (k == ClassicalKind::D && negs % 2 == 1) v[n - 1] = -v[n - 1];
    return Weight::from_twice(v);
}

// Freudenthal multiplicities of all weights of V(lambda), as a map weight -> multiplicity.
inline std::map<Weight, long long> freudenthal_character(const AffineType& t, const Weight& lambda) {
    const ClassicalKind k = t.classical();
    const int n = t.n;
    const std::vector<Weight> pos = positive_roots(k, n);
    const Weight r = rho(k, n);
    const long long top = dot2(lambda + r, lambda + r);
    const long long bound = dot2(lambda, lambda);
    std::map<Weight, long long> out{{lambda, 1}};
    std::vector<Weight> layer{lambda};
    while (!layer.empty()) {
        std::set<Weight> next_set;
        for (const Weight& w : layer)
            for (int i = 1; i <= n; ++i) {
                Weight u = w - krc::simple_root(t, i);
                if (dot2(u, u) <= bound && !out.count(u)) next_set.insert(u);
            }
        std::vector<Weight> next;
        // dominant weights first; the rest copy their dominant representative
        for (const Weight& u : next_set) {
            if (dominant_rep(k, u) != u) continue;
            long long num = 0;
            for (const Weight& a : pos)
                for (int kk = 1;; ++kk) {
                    const Weight v = u + a.scaled(kk);
                    if (dot2(v, v) > bound) break;
                    auto it = out.find(dominant_rep(k, v));
                    if (it != out.end()) num += it->second * dot2(v, a);
                }
            const long long den = top - dot2(u + r, u + r);
            if (den > 0 && num > 0) out[u] = 2 * num / den;
        }
        for (const Weight& u : next_set) {
            auto it = out.find(dominant_rep(k, u));
            if (it == out.end()) continue;
            out[u] = it->second;
            next.push_back(u);
        }
        layer = next;
    }
    return out;
}

// Gaussian binomial by the q-Pascal recurrence, exponent step k_half.
inline krc::LaurentPoly pascal_binomial(int l, int m, int k_half) {
    using krc::LaurentPoly;
    if (m < 0 || m > l) return LaurentPoly();
    if (m == 0 || m == l) return LaurentPoly(1);
    return pascal_binomial(l - 1, m, k_half).shifted(-k_half * m) +
           pascal_binomial(l - 1, m - 1, k_half).shifted(k_half * (l - m));
}

}  // namespace oracle
