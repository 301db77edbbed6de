#include "krc/norms.hpp"

#include <json.hpp>

#include <stdexcept>

namespace krc {

namespace {

constexpr int kQ = 2;  // q in half units

LaurentPoly qpow(int half) { return LaurentPoly::monomial(half); }

// Binomial that vanishes outside 0 <= m <= l.
LaurentPoly binom(int l, int m, int k_half) {
    if (l < 0 || m < 0 || m > l) return LaurentPoly();
    return q_binomial(l, m, k_half);
}

LaurentPoly qint(int m, int k_half) { return q_integer_signed(m, k_half); }

int delta(int a, int b) { return a == b ? 1 : 0; }

// base of the subscript-0 q-integers, in half units
int q0_half(NormCase nc) { return nc == NormCase::C ? 4 : 1; }

void check_input(const NormInput& in, bool need_j) {
    if (!valid_c(in.t, in.r, in.s, in.c)) throw std::invalid_argument("invalid c for " + in.t.name());
    if (need_j && (!in.j || *in.j < 1 || *in.j > in.t.n)) throw std::invalid_argument("node j must lie in 1..n");
    if (norm_case(in.t, in.r) == NormCase::Spin) throw std::invalid_argument("no closed form at a spin node");
}

// c_m with the family's boundary values; for the C case the value is doubled.
struct CSeq {
    const CVector& c;
    int c0;
    int at(int m) const {
        if (m == 0) return c0;
        return m <= static_cast<int>(c.size()) ? c[m - 1] : 0;
    }
};

}  // namespace

NormCase norm_case(const AffineType& t, int r) {
    if (t.is_spin(r)) return NormCase::Spin;
    switch (t.family) {
        case Family::D1:
        case Family::A2odd: return NormCase::DBA;
        case Family::B1: return r == t.n ? NormCase::BTop : NormCase::DBA;
        case Family::C1: return NormCase::C;
        case Family::A2even:
        case Family::D2: return NormCase::AD;
    }
    throw std::logic_error("unknown family");
}

LaurentPoly norm_u(const NormInput& in) {
    check_input(in, false);
    const NormCase nc = norm_case(in.t, in.r);
    const int s = in.s;
    LaurentPoly out(1);
    for (int cm : in.c) {
        switch (nc) {
            case NormCase::DBA: out *= qpow(kQ * cm * (2 * s - cm)) * binom(2 * s, cm, kQ); break;
            case NormCase::C: out *= qpow(4 * cm * (s - cm)) * binom(s, cm, 4); break;
            case NormCase::AD: out *= qpow(cm * (2 * s - cm)) * binom(2 * s, cm, 1); break;
            case NormCase::BTop: out *= qpow(kQ * cm * (s - cm)) * binom(s, cm, kQ); break;
            case NormCase::Spin: break;
        }
    }
    return out;
}

LaurentPoly norm_u_recursive(const NormInput& in) {
    check_input(in, false);
    const NormCase nc = norm_case(in.t, in.r);
    if (nc != NormCase::C && nc != NormCase::AD) return norm_u(in);
    const int q0 = q0_half(nc);
    LaurentPoly u(1);
    for (int cm : in.c) {
        // ||u_m||^2 = q_0^{c_m(S - c_m)} [S, c_m]_0 ||u_{m-1}||^2
        const int S = nc == NormCase::C ? in.s : 2 * in.s;
        u = qpow(q0 * cm * (S - cm)) * binom(S, cm, q0) * u;
    }
    return u;
}

std::optional<int> stated_pairing(const NormInput& in) {
    const int r = in.r, j = *in.j;
    const NormCase nc = norm_case(in.t, r);
    switch (nc) {
        case NormCase::DBA: {
            if (r - j < 0 || (r - j) % 2) return std::nullopt;
            const int p = (r - j) / 2 + 1;
            CSeq c{in.c, in.s};
            return c.at(p - 1) - c.at(p);
        }
        case NormCase::C: {
            if (j > r) return std::nullopt;
            CSeq c{in.c, 0};
            auto twice = [&](int m) { return m == 0 ? in.s : 2 * c.at(m); };
            return twice(r - j) - twice(r + 1 - j);
        }
        case NormCase::AD: {
            if (j > r) return std::nullopt;
            CSeq c{in.c, in.s};
            return c.at(r - j) - c.at(r + 1 - j);
        }
        default: return std::nullopt;
    }
}

int beta(const NormInput& in) {
    const auto p = stated_pairing(in);
    if (!p) throw std::invalid_argument("beta_j is only defined for 1 <= j <= r");
    return -*p;
}

LaurentPoly norm_eu(const NormInput& in) {
    check_input(in, true);
    const NormCase nc = norm_case(in.t, in.r);
    const int r = in.r, s = in.s, j = *in.j;
    switch (nc) {
        case NormCase::DBA: {
            if (r - j < 0 || (r - j) % 2) return LaurentPoly();
            const int p = (r - j) / 2 + 1;
            const CSeq c{in.c, s};
            LaurentPoly out = qpow(kQ * (2 * s - c.at(p - 1) - 1)) * qint(2 * s - c.at(p - 1), kQ);
            for (int m = 1; m <= static_cast<int>(in.c.size()); ++m) {
                const int d = delta(m, p), cm = c.at(m);
                out *= qpow(kQ * (cm - d) * (2 * s - cm)) * binom(2 * s - d, cm - d, kQ);
            }
            return out;
        }
        case NormCase::C: {
            if (j > r) return LaurentPoly();
            const CSeq c{in.c, 0};
            const int two_c = r - j == 0 ? s : 2 * c.at(r - j);
            LaurentPoly out = qpow(kQ * (2 * s - two_c - 1)) * qint(2 * s - two_c, kQ);
            for (int m = 1; m <= r; ++m) {
                const int d = delta(m, r - j + 1), cm = c.at(m);
                out *= qpow(4 * (cm - d) * (s - cm)) * binom(s - d, cm - d, 4);
            }
            return out;
        }
        case NormCase::AD: {
            if (j > r) return LaurentPoly();
            return norm_eu_assembled(in);
        }
        case NormCase::BTop: {
            const int n = in.t.n;
            if (n - j < 0 || (n - j) % 2) return LaurentPoly();
            const int p = (n - j) / 2 + 1;
            const CSeq c{in.c, 0};
            LaurentPoly out(1);
            for (int m = 1; m <= static_cast<int>(in.c.size()); ++m) {
                const int d = delta(m, p), cm = c.at(m);
                out *= qpow(kQ * (cm - d) * (s - cm)) * binom(s - d, cm - d, kQ);
            }
            if (p == 1) {
                out *= qpow(s - 1) * qint(s, 1);
            } else {
                const int cp = c.at(p - 1);
                out *= qpow(kQ * (s - cp - 1)) * qint(s - cp, kQ);
            }
            return out;
        }
        case NormCase::Spin: break;
    }
    throw std::logic_error("unreachable");
}

LaurentPoly norm_fu(const NormInput& in) {
    check_input(in, true);
    const NormCase nc = norm_case(in.t, in.r);
    const int r = in.r, s = in.s, j = *in.j;
    if (j > r) throw std::invalid_argument("f_j u(c) is only evaluated for 1 <= j <= r");
    if (nc == NormCase::C) {
        const CSeq c{in.c, 0};
        LaurentPoly out(1);
        for (int m = 1; m <= r; ++m) {
            const int cm = c.at(m);
            if (m != r - j + 1) out *= qpow(4 * cm * (s - cm)) * binom(s, cm, 4);
            else out *= qpow(4 * cm * (s - 1 - cm)) * binom(s - 1, cm, 4);
        }
        const int two_c = r - j == 0 ? s : 2 * c.at(r - j);
        return out * qpow(kQ * (two_c - 1)) * qint(two_c, kQ);
    }
    if (nc == NormCase::AD) {
        const CSeq c{in.c, s};
        LaurentPoly t1(1), t2(1);
        for (int m = 1; m <= r; ++m) {
            const int d1 = delta(m, r - j + 1), d2 = delta(m, r - j), cm = c.at(m);
            t1 *= qpow(cm * (2 * s - 2 * d1 - cm)) * binom(2 * s - 2 * d1, cm, 1);
            t2 *= qpow((cm + d1 - d2) * (2 * s - d1 + d2 - cm)) * binom(2 * s - 2 * d1, cm - d1 - d2, 1);
        }
        const int crj = c.at(r - j);
        t1 *= qpow(kQ * (crj - 1)) * qint(crj, kQ);
        const LaurentPoly sq = qint(2 * s - crj + 1, 1);
        t2 *= sq * sq;
        return t1 + t2;
    }
    throw std::invalid_argument("no f_j u(c) formula for this family");
}

LaurentPoly norm_eu_assembled(const NormInput& in) {
    const int b = beta(in);
    return qpow(kQ * 2 * b) * norm_fu(in) + qpow(kQ * (b - 1)) * qint(b, kQ) * norm_u_recursive(in);
}

int NormReport::violations() const {
    int v = 0;
    for (const auto& e : entries) v += e.pass ? 0 : 1;
    return v;
}

std::string NormReport::to_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json x;
        x["family"] = e.family;
        x["r"] = e.r;
        x["s"] = e.s;
        x["c"] = e.c;
        x["j"] = e.j;
        x["check"] = e.check;
        x["pass"] = e.pass;
        if (!e.detail.empty()) x["detail"] = e.detail;
        out.push_back(std::move(x));
    }
    return out.dump(1) + "\n";
}

NormReport check_criterion(const AffineType& t, int r, int s) {
    NormReport rep;
    if (norm_case(t, r) == NormCase::Spin) return rep;
    const QExponents qe = q_exponents(t);
    for (const CVector& c : enumerate_c(t, r, s)) {
        NormInput in{t, r, s, c, std::nullopt};
        const LaurentPoly u = norm_u(in);
        rep.entries.push_back({t.name(), r, s, c, 0, "norm_u in 1+q_sA", in_one_plus_qsA(u, qe.qs_half), u.str()});
        const Weight lam = lambda_of_c(t, r, s, c);
        for (int j = 1; j <= t.n; ++j) {
            in.j = j;
            const int pair = pairing(t, j, lam);
            if (const auto stated = stated_pairing(in))
                rep.entries.push_back({t.name(), r, s, c, j, "stated pairing", *stated == pair,
                                       std::to_string(*stated) + " vs " + std::to_string(pair)});
            const LaurentPoly eu = norm_eu(in);
            const int a = qe.qs_half - 2 * qe.qi_half[j] * (1 + pair);
            rep.entries.push_back({t.name(), r, s, c, j, "norm_eu in q_s q_j^{-2(1+<h_j,lambda>)}A",
                                   in_shifted_lattice(eu, a), eu.str() + " ; bound q^(" + std::to_string(a) + "/2)"});
        }
    }
    return rep;
}

NormReport recursion_check(const AffineType& t, int r, int s) {
    NormReport rep;
    const NormCase nc = norm_case(t, r);
    if (nc == NormCase::Spin) return rep;
    for (const CVector& c : enumerate_c(t, r, s)) {
        NormInput in{t, r, s, c, std::nullopt};
        if (nc == NormCase::C || nc == NormCase::AD) {
            rep.entries.push_back({t.name(), r, s, c, 0, "closed norm_u = telescoped recursion",
                                   norm_u(in) == norm_u_recursive(in), ""});
            for (int j = 1; j <= r; ++j) {
                in.j = j;
                const LaurentPoly a = norm_eu(in), b = norm_eu_assembled(in);
                rep.entries.push_back({t.name(), r, s, c, j, "closed norm_eu = assembled", a == b,
                                       a == b ? "" : a.str() + " vs " + b.str()});
                if (beta(in) == 0) {
                    const bool vanish = (qpow(-2) * qint(0, kQ)).is_zero();
                    rep.entries.push_back({t.name(), r, s, c, j, "[beta_j] term vanishes", vanish, ""});
                }
            }
        }
        if (nc == NormCase::DBA || nc == NormCase::BTop) {
            // ingredients: q^{m-1}[m] and q^{k(m-k)}[m,k] lie in 1+qA
            bool ok = true;
            for (int m = 1; m <= 2 * s; ++m) {
                ok = ok && in_one_plus_qsA(qpow(kQ * (m - 1)) * qint(m, kQ), kQ);
                for (int k = 0; k <= m; ++k) ok = ok && in_one_plus_qsA(qpow(kQ * k * (m - k)) * binom(m, k, kQ), kQ);
            }
            rep.entries.push_back({t.name(), r, s, c, 0, "q^{m-1}[m], q^{k(m-k)}[m,k] in 1+qA", ok, ""});
        }
    }
    return rep;
}

NormReport norm_sweep(int n_max, int s_max) {
    NormReport all;
    const Family fams[] = {Family::D1, Family::B1, Family::A2odd, Family::C1, Family::A2even, Family::D2};
    for (Family f : fams)
        for (int n = 1; n <= n_max; ++n) {
            std::optional<AffineType> t;
            try {
                t.emplace(f, n);
            } catch (const std::invalid_argument&) {
                continue;
            }
            for (int r = 1; r <= n; ++r) {
                if (norm_case(*t, r) == NormCase::Spin) continue;
                for (int s = 1; s <= s_max; ++s) {
                    for (auto& e : check_criterion(*t, r, s).entries) all.entries.push_back(std::move(e));
                    for (auto& e : recursion_check(*t, r, s).entries) all.entries.push_back(std::move(e));
                }
            }
        }
    return all;
}

}  // namespace krc
