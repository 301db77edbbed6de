#include "krc/fermionic.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace krc {

namespace {

void check_r(const AffineType& t, int r, int s) {
    if (r < 1 || r > t.n) throw std::invalid_argument("r out of range");
    if (s < 1) throw std::invalid_argument("s must be positive");
}

// For A_{2n}^(2) the configuration lattice uses alpha_n / 2 = eps_n in place of alpha_n.
Weight config_root(const AffineType& t, int a) {
    if (t.family == Family::A2even && a == t.n) {
        Weight w(t.n);
        w.twice(t.n - 1) = 2;
        return w;
    }
    return simple_root(t, a);
}

Rational config_inner(const AffineType& t, int a, int b) {
    if (t.family == Family::A2even) return inner(config_root(t, a), config_root(t, b));
    return inner_kappa(t, a, b);
}

std::vector<Rational> config_coordinates(const AffineType& t, const Weight& w) {
    std::vector<Weight> basis;
    for (int a = 1; a <= t.n; ++a) basis.push_back(config_root(t, a));
    std::vector<Rational> k = basis_coordinates(basis, w);
    k.insert(k.begin(), Rational(0));
    return k;
}

// Integer coefficients K_a of s*varpi_r - lambda, or empty if not in Q_+.
std::vector<int> root_budget(const AffineType& t, int r, int s, const Weight& lambda) {
    const Weight diff = fundamental_weight(t, r).scaled(s) - lambda;
    const std::vector<Rational> k = config_coordinates(t, diff);
    std::vector<int> out(t.n + 1, 0);
    for (int a = 1; a <= t.n; ++a) {
        if (k[a].denominator() != 1 || k[a].numerator() < 0) return {};
        out[a] = static_cast<int>(k[a].numerator());
    }
    return out;
}

// All multiplicity vectors (m_1..m_K) with sum_j j*m_j = K.
void integer_partitions(int remaining, int max_part, std::vector<int>& mult,
                        std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(mult);
        return;
    }
    for (int j = std::min(remaining, max_part); j >= 1; --j) {
        ++mult[j];
        integer_partitions(remaining - j, j, mult, out);
        --mult[j];
    }
}

BigInt signed_binomial(int p, int m) {
    BigInt num = 1, den = 1;
    for (int k = 1; k <= m; ++k) {
        num *= p + k;
        den *= k;
    }
    return num / den;
}

BigInt fermionic_sum(const AffineType& t, int r, int s, const Weight& lambda, bool unsigned_variant) {
    BigInt total = 0;
    for (const Configuration& m : enumerate_configs(t, r, s, lambda)) {
        BigInt term = 1;
        for (const auto& [key, mult] : m) {
            const int p = vacancy(t, r, s, m, key.first, key.second);
            if (unsigned_variant && p < 0) {
                term = 0;
                break;
            }
            term *= signed_binomial(p, mult);
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

}  // namespace

std::vector<Configuration> enumerate_configs(const AffineType& t, int r, int s, const Weight& lambda) {
    check_r(t, r, s);
    const std::vector<int> K = root_budget(t, r, s, lambda);
    if (K.empty()) return {};
    std::vector<std::vector<std::vector<int>>> per_node(t.n + 1);
    for (int a = 1; a <= t.n; ++a) {
        std::vector<int> mult(K[a] + 1, 0);
        integer_partitions(K[a], K[a], mult, per_node[a]);
    }
    std::vector<Configuration> out;
    Configuration cur;
    std::function<void(int)> rec = [&](int a) {
        if (a > t.n) {
            out.push_back(cur);
            return;
        }
        for (const auto& mult : per_node[a]) {
            for (int j = 1; j < static_cast<int>(mult.size()); ++j)
                if (mult[j]) cur[{a, j}] = mult[j];
            rec(a + 1);
            for (int j = 1; j < static_cast<int>(mult.size()); ++j) cur.erase({a, j});
        }
    };
    rec(1);
    return out;
}

int vacancy(const AffineType& t, int r, int s, const Configuration& m, int a, int j) {
    const TTable tt = t_table(t);
    Rational sum = 0;
    for (const auto& [key, mult] : m) {
        const auto [b, k] = key;
        sum += config_inner(t, a, b) * std::min(tt.t[b] * j, tt.t[a] * k) * mult;
    }
    const Rational p = Rational(a == r ? std::min(j, s) : 0) - sum / tt.t_dual[a];
    if (p.denominator() != 1) throw std::domain_error("non-integral vacancy number");
    return static_cast<int>(p.numerator());
}

BigInt multiplicity_N(const AffineType& t, int r, int s, const Weight& lambda) {
    return fermionic_sum(t, r, s, lambda, false);
}

BigInt multiplicity_M(const AffineType& t, int r, int s, const Weight& lambda) {
    return fermionic_sum(t, r, s, lambda, true);
}

std::vector<Weight> candidate_weights(const AffineType& t, int r, int s) {
    check_r(t, r, s);
    const Weight top = fundamental_weight(t, r).scaled(s);
    const std::vector<Rational> K = config_coordinates(t, top);
    std::vector<int> bound(t.n + 1, 0);
    for (int a = 1; a <= t.n; ++a) bound[a] = static_cast<int>(K[a].numerator() / K[a].denominator());
    std::vector<Weight> out;
    Weight cur = top;
    std::function<void(int)> rec = [&](int a) {
        if (a > t.n) {
            for (int i = 0; i + 1 < t.n; ++i)
                if (cur.twice(i) < cur.twice(i + 1)) return;
            const int last = cur.twice(t.n - 1);
            if (t.classical() == ClassicalKind::D) {
                if (cur.twice(t.n - 2) < std::abs(last)) return;
            } else if (last < 0) {
                return;
            }
            out.push_back(cur);
            return;
        }
        const Weight alpha = config_root(t, a);
        for (int k = 0; k <= bound[a]; ++k) {
            rec(a + 1);
            cur -= alpha;
        }
        cur += alpha.scaled(bound[a] + 1);
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FermionicRow> fermionic_table(const AffineType& t, int r, int s) {
    std::vector<FermionicRow> rows;
    for (const Weight& w : candidate_weights(t, r, s))
        rows.push_back({w, multiplicity_N(t, r, s, w), multiplicity_M(t, r, s, w)});
    return rows;
}

}  // namespace krc
