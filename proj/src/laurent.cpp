#include "krc/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace krc {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int half_exp, BigInt coeff) {
    LaurentPoly p;
    p.add_term(half_exp, coeff);
    return p;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponent");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no exponent");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int half_exp) const {
    auto it = terms_.find(half_exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    *this = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::shifted(int half_exp) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + half_exp, c);
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly out(1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = d.max_exponent();
    const int dlow = d.min_exponent();
    const BigInt& dc = d.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        int e = rem.max_exponent();
        if (e - rem.min_exponent() < dlead - dlow)
            throw std::domain_error("inexact polynomial division");
        const BigInt& rc = rem.terms_.rbegin()->second;
        if (rc % dc != 0) throw std::domain_error("inexact polynomial division");
        BigInt qc = rc / dc;
        int qe = e - dlead;
        quot.add_term(qe, qc);
        rem -= d.shifted(qe) * LaurentPoly::monomial(0, qc);
    }
    return quot;
}

namespace {

std::string exponent_text(int e) {
    if (e % 2 == 0) {
        int k = e / 2;
        if (k == 1) return "q";
        if (k > 0) return "q^" + std::to_string(k);
        return "q^(" + std::to_string(k) + ")";
    }
    return "q^(" + std::to_string(e) + "/2)";
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        BigInt c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << exponent_text(e);
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() const {
        throw std::invalid_argument("cannot parse Laurent polynomial: '" + s + "'");
    }
    long long integer() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail();
        long long v = std::stoll(s.substr(start, i - start));
        return neg ? -v : v;
    }
    BigInt digits() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail();
        return BigInt(s.substr(start, i - start));
    }
    // exponent after '^', returned in half-units
    int exponent() {
        bool paren = eat('(');
        long long num = integer();
        long long den = 1;
        if (eat('/')) den = integer();
        if (paren && !eat(')')) fail();
        if (den == 1) return static_cast<int>(2 * num);
        if (den == 2) return static_cast<int>(num);
        fail();
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Parser p{text};
    LaurentPoly out;
    p.skip();
    if (p.i == text.size()) p.fail();
    bool first = true;
    while (true) {
        p.skip();
        if (p.i >= text.size()) break;
        int sign = 1;
        if (p.eat('-'))
            sign = -1;
        else if (!p.eat('+') && !first)
            p.fail();
        first = false;
        p.skip();
        BigInt c = 1;
        bool have_coeff = false;
        if (p.i < text.size() && std::isdigit(static_cast<unsigned char>(text[p.i]))) {
            c = p.digits();
            have_coeff = true;
            p.eat('*');
        }
        int e = 0;
        if (p.eat('q')) {
            e = 2;
            if (p.eat('^')) e = p.exponent();
        } else if (!have_coeff) {
            p.fail();
        }
        out.add_term(e, sign * c);
    }
    return out;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    out *= b;
    return out;
}

LaurentPoly q_integer(int m, int k_half) {
    if (k_half <= 0) throw std::invalid_argument("q_integer: exponent step must be positive");
    if (m < 0) throw std::invalid_argument("q_integer: m must be nonnegative");
    LaurentPoly out;
    for (int t = 0; t < m; ++t) out += LaurentPoly::monomial(k_half * (m - 1 - 2 * t));
    return out;
}

LaurentPoly q_integer_signed(int m, int k_half) {
    return m >= 0 ? q_integer(m, k_half) : -q_integer(-m, k_half);
}

LaurentPoly q_factorial(int m, int k_half) {
    LaurentPoly out(1);
    for (int t = 1; t <= m; ++t) out *= q_integer(t, k_half);
    return out;
}

LaurentPoly q_binomial(int l, int m, int k_half) {
    if (k_half <= 0) throw std::invalid_argument("q_binomial: exponent step must be positive");
    if (m < 0 || l < 0 || m > l) throw std::invalid_argument("q_binomial: need 0 <= m <= l");
    LaurentPoly num(1), den(1);
    for (int t = 0; t < m; ++t) {
        num *= q_integer(l - t, k_half);
        den *= q_integer(t + 1, k_half);
    }
    return num.exact_div(den);
}

bool in_shifted_lattice(const LaurentPoly& p, int a_half) {
    return p.is_zero() || p.min_exponent() >= a_half;
}

bool in_one_plus_qsA(const LaurentPoly& p, int qs_half) {
    return in_shifted_lattice(p - LaurentPoly(1), qs_half);
}

}  // namespace krc
