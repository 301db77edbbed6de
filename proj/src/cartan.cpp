#include "krc/cartan.hpp"

#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace krc {

AffineType::AffineType(Family f, int rank) : family(f), n(rank) {
    int lo = 2;
    if (f == Family::D1) lo = 4;
    if (f == Family::B1) lo = 3;
    if (rank < lo) throw std::invalid_argument("rank too small for affine type");
}

AffineType AffineType::parse(const std::string& s) {
    static const std::regex re(R"(^([ABCD])(\d+)~([12])$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("unrecognized affine type '" + s + "'");
    const char letter = m[1].str()[0];
    const int k = std::stoi(m[2].str());
    const int twist = std::stoi(m[3].str());
    if (twist == 1) {
        if (letter == 'D') return {Family::D1, k};
        if (letter == 'B') return {Family::B1, k};
        if (letter == 'C') return {Family::C1, k};
    } else {
        if (letter == 'A' && k % 2 == 1) return {Family::A2odd, (k + 1) / 2};
        if (letter == 'A' && k % 2 == 0) return {Family::A2even, k / 2};
        if (letter == 'D') return {Family::D2, k - 1};
    }
    throw std::invalid_argument("unsupported affine type '" + s + "'");
}

std::string AffineType::name() const {
    switch (family) {
        case Family::D1: return "D" + std::to_string(n) + "~1";
        case Family::B1: return "B" + std::to_string(n) + "~1";
        case Family::C1: return "C" + std::to_string(n) + "~1";
        case Family::A2odd: return "A" + std::to_string(2 * n - 1) + "~2";
        case Family::A2even: return "A" + std::to_string(2 * n) + "~2";
        case Family::D2: return "D" + std::to_string(n + 1) + "~2";
    }
    return "?";
}

ClassicalKind AffineType::classical() const {
    switch (family) {
        case Family::D1: return ClassicalKind::D;
        case Family::B1:
        case Family::D2: return ClassicalKind::B;
        default: return ClassicalKind::C;
    }
}

NuShape AffineType::nu() const {
    switch (family) {
        case Family::C1: return NuShape::HorizontalDomino;
        case Family::A2even:
        case Family::D2: return NuShape::Box;
        default: return NuShape::VerticalDomino;
    }
}

bool AffineType::is_spin(int r) const {
    switch (family) {
        case Family::D1: return r >= n - 1;
        case Family::C1:
        case Family::D2: return r == n;
        default: return false;
    }
}

bool AffineType::untwisted() const {
    return family == Family::D1 || family == Family::B1 || family == Family::C1;
}

bool AffineType::has_crystal_model() const {
    return family == Family::D1 || family == Family::B1 || family == Family::A2odd;
}

int AffineType::max_model_r() const {
    switch (family) {
        case Family::D1: return n - 2;
        case Family::B1: return n - 1;
        case Family::A2odd: return n;
        default: return 0;
    }
}

Weight Weight::from_ints(const std::vector<int>& v) {
    Weight w(static_cast<int>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) w.twice_[i] = 2 * v[i];
    return w;
}

bool Weight::integral() const {
    for (int x : twice_)
        if (x % 2 != 0) return false;
    return true;
}

bool Weight::is_zero() const {
    for (int x : twice_)
        if (x != 0) return false;
    return true;
}

std::string rational_str(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string Weight::str() const {
    std::string out = "(";
    for (int i = 0; i < size(); ++i) {
        if (i) out += ",";
        out += rational_str(coord(i));
    }
    return out + ")";
}

Weight& Weight::operator+=(const Weight& o) {
    if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (int i = 0; i < size(); ++i) twice_[i] += o.twice_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (int i = 0; i < size(); ++i) twice_[i] -= o.twice_[i];
    return *this;
}

Weight Weight::scaled(int k) const {
    Weight w = *this;
    for (int& x : w.twice_) x *= k;
    return w;
}

Partition::Partition(std::vector<int> r) : rows(std::move(r)) {
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0) throw std::invalid_argument("negative partition part");
        if (i && rows[i] > rows[i - 1]) throw std::invalid_argument("partition rows must weakly decrease");
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
}

Partition Partition::from_columns(std::vector<int> cols) {
    for (size_t j = 1; j < cols.size(); ++j)
        if (cols[j] > cols[j - 1]) throw std::invalid_argument("column heights must weakly decrease");
    std::vector<int> r(cols.empty() ? 0 : std::max(cols[0], 0), 0);
    for (int h : cols)
        for (int i = 0; i < h; ++i) ++r[i];
    return Partition(std::move(r));
}

std::vector<int> Partition::columns() const {
    std::vector<int> c(width(), 0);
    for (int rlen : rows)
        for (int j = 0; j < rlen; ++j) ++c[j];
    return c;
}

int Partition::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

int Partition::column(int j) const {
    int h = 0;
    while (h < height() && rows[h] > j) ++h;
    return h;
}

bool Partition::contains(const Partition& o) const {
    if (o.height() > height()) return false;
    for (int i = 0; i < o.height(); ++i)
        if (o.rows[i] > rows[i]) return false;
    return true;
}

int Partition::columns_of_height(int i) const {
    return row(i - 1) - row(i);
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(rows[i]);
    }
    return out + ")";
}

Weight fundamental_weight(const AffineType& t, int i) {
    if (i < 1 || i > t.n) throw std::invalid_argument("fundamental weight index out of range");
    Weight w(t.n);
    const ClassicalKind k = t.classical();
    const bool half = (k == ClassicalKind::D && i >= t.n - 1) || (k == ClassicalKind::B && i == t.n);
    if (!half) {
        for (int j = 0; j < i; ++j) w.twice(j) = 2;
        return w;
    }
    for (int j = 0; j < t.n; ++j) w.twice(j) = 1;
    if (k == ClassicalKind::D && i == t.n - 1) w.twice(t.n - 1) = -1;
    return w;
}

Weight simple_root(const AffineType& t, int i) {
    if (i < 0 || i > t.n) throw std::invalid_argument("simple root index out of range");
    Weight w(t.n);
    if (i == 0) {
        switch (t.nu()) {
            case NuShape::VerticalDomino:
                w.twice(0) = -2;
                w.twice(1) = -2;
                break;
            case NuShape::HorizontalDomino: w.twice(0) = -4; break;
            case NuShape::Box: w.twice(0) = -2; break;
        }
        return w;
    }
    if (i < t.n) {
        w.twice(i - 1) = 2;
        w.twice(i) = -2;
        return w;
    }
    switch (t.classical()) {
        case ClassicalKind::D:
            w.twice(t.n - 2) = 2;
            w.twice(t.n - 1) = 2;
            break;
        case ClassicalKind::B: w.twice(t.n - 1) = 2; break;
        case ClassicalKind::C: w.twice(t.n - 1) = 4; break;
    }
    return w;
}

Rational inner(const Weight& a, const Weight& b) {
    if (a.size() != b.size()) throw std::invalid_argument("weight rank mismatch");
    long long s = 0;
    for (int i = 0; i < a.size(); ++i) s += static_cast<long long>(a.twice(i)) * b.twice(i);
    return Rational(s, 4);
}

int pairing(const AffineType& t, int j, const Weight& w) {
    const Weight a = simple_root(t, j);
    const Rational v = 2 * inner(a, w) / inner(a, a);
    if (v.denominator() != 1) throw std::domain_error("non-integral pairing: malformed weight " + w.str());
    return static_cast<int>(v.numerator());
}

int cartan_integer(const AffineType& t, int i, int j) { return pairing(t, i, simple_root(t, j)); }

QExponents q_exponents(const AffineType& t) {
    QExponents q;
    q.qs_half = 2;
    for (int i = 0; i <= t.n; ++i) {
        const Weight a = simple_root(t, i);
        const Rational nn = inner(a, a);
        if (nn.denominator() != 1) throw std::logic_error("unexpected root length");
        q.qi_half.push_back(static_cast<int>(nn.numerator()));
        if (nn.numerator() % 2 != 0) q.qs_half = 1;
    }
    return q;
}

Rational kappa(const AffineType& t) {
    if (t.family == Family::C1) return Rational(1, 2);
    if (t.family == Family::D2) return Rational(2);
    return Rational(1);
}

Rational inner_kappa(const AffineType& t, int a, int b) {
    return kappa(t) * inner(simple_root(t, a), simple_root(t, b));
}

TTable t_table(const AffineType& t) {
    TTable tt;
    tt.t.assign(t.n + 1, 1);
    tt.t_dual.assign(t.n + 1, 1);
    const bool dual_untwisted = t.family == Family::A2odd || t.family == Family::D2;
    for (int i = 1; i <= t.n; ++i) {
        const Rational len = inner_kappa(t, i, i);
        if (t.untwisted()) {
            const Rational v = Rational(2) / len;
            if (v.denominator() != 1) throw std::logic_error("non-integral t_i");
            tt.t[i] = static_cast<int>(v.numerator());
        }
        if (dual_untwisted) {
            const Rational v = len / 2;
            if (v.denominator() != 1) throw std::logic_error("non-integral dual t_i");
            tt.t_dual[i] = static_cast<int>(v.numerator());
        }
    }
    tt.t[0] = tt.t_dual[0] = 0;
    return tt;
}

std::vector<Rational> basis_coordinates(const std::vector<Weight>& basis, const Weight& w) {
    const int n = w.size();
    if (static_cast<int>(basis.size()) != n) throw std::invalid_argument("basis size mismatch");
    // columns: basis vectors, augmented with w
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) m[r][i] = Rational(basis[i].twice(r), 2);
    for (int r = 0; r < n; ++r) m[r][n] = w.coord(r);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m[piv][c].numerator() == 0) ++piv;
        if (piv == n) throw std::logic_error("singular basis");
        std::swap(m[piv], m[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].numerator() == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> out(n);
    for (int c = 0; c < n; ++c) out[c] = m[c][n] / m[c][c];
    return out;
}

std::vector<Rational> root_coordinates(const AffineType& t, const Weight& w) {
    std::vector<Weight> basis;
    for (int i = 1; i <= t.n; ++i) basis.push_back(simple_root(t, i));
    std::vector<Rational> out = basis_coordinates(basis, w);
    out.insert(out.begin(), Rational(0));
    return out;
}

std::vector<int> kac_labels(const AffineType& t) {
    const std::vector<Rational> theta = root_coordinates(t, simple_root(t, 0).scaled(-1));
    long long den = 1;
    for (int i = 1; i <= t.n; ++i) den = std::lcm(den, theta[i].denominator());
    std::vector<int> a(t.n + 1);
    a[0] = static_cast<int>(den);
    for (int i = 1; i <= t.n; ++i) a[i] = static_cast<int>((theta[i] * den).numerator());
    return a;
}

std::vector<int> dual_kac_labels(const AffineType& t) {
    const std::vector<int> a = kac_labels(t);
    std::vector<int> out(t.n + 1);
    for (int i = 0; i <= t.n; ++i) {
        const Rational v = a[i] * inner_kappa(t, i, i) / 2;
        if (v.denominator() != 1) throw std::logic_error("non-integral dual label");
        out[i] = static_cast<int>(v.numerator());
    }
    return out;
}

Weight partition_to_weight(const Partition& p, int n) {
    if (p.height() > n) throw std::invalid_argument("partition taller than rank");
    Weight w(n);
    for (int i = 0; i < p.height(); ++i) w.twice(i) = 2 * p.rows[i];
    return w;
}

Partition weight_to_partition(const Weight& w) {
    if (!w.integral()) throw std::invalid_argument("spin weight has no partition form: " + w.str());
    std::vector<int> rows;
    for (int i = 0; i < w.size(); ++i) {
        const int v = w.twice(i) / 2;
        if (v < 0 || (i && v > rows.back())) throw std::invalid_argument("weight is not a dominant partition weight: " + w.str());
        rows.push_back(v);
    }
    return Partition(rows);
}

}  // namespace krc
