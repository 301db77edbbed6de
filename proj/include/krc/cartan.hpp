#pragma once

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace krc {

using Rational = boost::rational<long long>;

enum class Family { D1, B1, A2odd, C1, A2even, D2 };
enum class ClassicalKind { B, C, D };
enum class NuShape { VerticalDomino, HorizontalDomino, Box };

struct AffineType {
    Family family;
    int n;

    AffineType(Family f, int rank);
    // Accepts "D4~1", "B3~1", "A5~2", "C3~1", "A4~2", "D5~2".
    static AffineType parse(const std::string& s);
    std::string name() const;

    ClassicalKind classical() const;
    NuShape nu() const;
    bool is_spin(int r) const;
    bool untwisted() const;
    // D1, B1, A2odd: the families with a tableau model.
    bool has_crystal_model() const;
    // largest r the crystal model covers
    int max_model_r() const;

    friend bool operator==(const AffineType&, const AffineType&) = default;
};

// Weight in epsilon coordinates, stored doubled so spin weights stay integral.
class Weight {
public:
    Weight() = default;
    explicit Weight(int n) : twice_(n, 0) {}
    static Weight from_twice(std::vector<int> twice) {
        Weight w;
        w.twice_ = std::move(twice);
        return w;
    }
    static Weight from_ints(const std::vector<int>& v);

    int size() const { return static_cast<int>(twice_.size()); }
    int twice(int i) const { return twice_[i]; }
    int& twice(int i) { return twice_[i]; }
    const std::vector<int>& twice_coords() const { return twice_; }
    Rational coord(int i) const { return Rational(twice_[i], 2); }
    bool integral() const;
    bool is_zero() const;
    std::string str() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight scaled(int k) const;

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<int> twice_;
};

struct Partition {
    std::vector<int> rows;  // weakly decreasing, no trailing zeros

    Partition() = default;
    explicit Partition(std::vector<int> r);
    static Partition from_columns(std::vector<int> cols);

    std::vector<int> columns() const;
    int height() const { return static_cast<int>(rows.size()); }
    int width() const { return rows.empty() ? 0 : rows[0]; }
    int size() const;
    int row(int i) const { return i < height() ? rows[i] : 0; }
    int column(int j) const;  // height of column j (0-based)
    bool contains(const Partition& o) const;
    std::string str() const;
    // c_i: number of columns of height i
    int columns_of_height(int i) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

Weight fundamental_weight(const AffineType& t, int i);
// i >= 1: classical simple root; i = 0: classical projection of alpha_0.
Weight simple_root(const AffineType& t, int i);
// renormalized form (eps_i, eps_j) = delta_ij
Rational inner(const Weight& a, const Weight& b);
// <h_j, w> for j in I (j = 0 uses the classical projection of alpha_0)
int pairing(const AffineType& t, int j, const Weight& w);
int cartan_integer(const AffineType& t, int i, int j);

struct QExponents {
    std::vector<int> qi_half;  // q_i = q^{qi_half[i]/2}, i in I
    int qs_half;
};
QExponents q_exponents(const AffineType& t);

struct TTable {
    std::vector<int> t;        // index 1..n
    std::vector<int> t_dual;   // index 1..n
};
TTable t_table(const AffineType& t);

// kappa with (eps_i, eps_j) = kappa * delta_ij in the fermionic normalization
Rational kappa(const AffineType& t);
Rational inner_kappa(const AffineType& t, int a, int b);

std::vector<int> kac_labels(const AffineType& t);
std::vector<int> dual_kac_labels(const AffineType& t);

Weight partition_to_weight(const Partition& p, int n);
Partition weight_to_partition(const Weight& w);
// coefficients k_i with w = sum_{i=1}^n k_i alpha_i (index 0 unused)
std::vector<Rational> root_coordinates(const AffineType& t, const Weight& w);
std::vector<Rational> basis_coordinates(const std::vector<Weight>& basis, const Weight& w);

std::string rational_str(const Rational& r);

}  // namespace krc
