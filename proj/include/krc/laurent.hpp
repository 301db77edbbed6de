#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace krc {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in q^{1/2}. Exponent e stands for q^{e/2}.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: constants convert implicitly
    static LaurentPoly monomial(int half_exp, BigInt coeff = 1);

    const std::map<int, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exponent() const;
    int max_exponent() const;
    BigInt coeff(int half_exp) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly shifted(int half_exp) const;
    LaurentPoly pow(unsigned k) const;

    // Exact quotient; throws std::domain_error on a nonzero remainder.
    LaurentPoly exact_div(const LaurentPoly& d) const;

    std::string str() const;
    static LaurentPoly parse(const std::string& text);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(int e, const BigInt& c);
    std::map<int, BigInt> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

// [m] with q_i = q^{k/2}: sum_{t=0}^{m-1} q_i^{m-1-2t}. Zero when m = 0.
LaurentPoly q_integer(int m, int k_half);
// Extends q_integer to negative m by [-m] = -[m].
LaurentPoly q_integer_signed(int m, int k_half);
LaurentPoly q_factorial(int m, int k_half);
LaurentPoly q_binomial(int l, int m, int k_half);

bool in_shifted_lattice(const LaurentPoly& p, int a_half);
// 1 + q_s A with q_s = q^{qs_half/2}
bool in_one_plus_qsA(const LaurentPoly& p, int qs_half = 1);

}  // namespace krc
