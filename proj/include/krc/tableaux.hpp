#pragma once

#include "krc/cartan.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace krc {

// Letters: k for 1..n, -k for the barred letter, 0 for the B_n letter 0.
using Letter = int;
using Word = std::vector<std::int8_t>;

struct ClassicalType {
    ClassicalKind kind;
    int n;

    static ClassicalType of(const AffineType& t) { return {t.classical(), t.n}; }
    int alphabet_size() const { return kind == ClassicalKind::B ? 2 * n + 1 : 2 * n; }
    std::vector<Letter> alphabet() const;  // in the order 1 < ... < n < 0 < nbar < ... < 1bar
    friend bool operator==(const ClassicalType&, const ClassicalType&) = default;
};

std::string letter_str(Letter l);
Letter parse_letter(const std::string& s);
int letter_rank(const ClassicalType& ct, Letter l);
std::string word_str(const Word& w);
bool word_less(const ClassicalType& ct, const Word& a, const Word& b);

std::optional<Letter> letter_f(const ClassicalType& ct, int i, Letter l);
std::optional<Letter> letter_e(const ClassicalType& ct, int i, Letter l);
int letter_eps(const ClassicalType& ct, int i, Letter l);
int letter_phi(const ClassicalType& ct, int i, Letter l);

struct VectorArrow {
    Letter src;
    int color;
    Letter dst;
};
// Arrows of B^{1,1}; 0-arrows are included for the families with the tableau model.
std::vector<VectorArrow> vector_arrows(const AffineType& t);

int word_eps(const ClassicalType& ct, int i, const Word& w);
int word_phi(const ClassicalType& ct, int i, const Word& w);
std::optional<Word> apply_e(const ClassicalType& ct, int i, const Word& w);
std::optional<Word> apply_f(const ClassicalType& ct, int i, const Word& w);
Weight word_weight(const ClassicalType& ct, const Word& w);

// Highest weight element of B(omega): columns tallest first, each read l (x) ... (x) 1.
Word highest_weight_word(const Partition& omega);

// Colored digraph over words; f[c][v] is the f_c target of v, or -1.
struct CrystalGraph {
    std::string type_name;
    int rank = 0;
    int r = 0;
    int s = 0;
    std::vector<Word> words;
    std::vector<std::vector<int>> f;  // indexed by color 0..rank
    std::vector<std::vector<int>> e;

    int size() const { return static_cast<int>(words.size()); }
    int find(const Word& w) const;
    void rebuild_index();
    void rebuild_inverse();

    struct Edge {
        int src, color, dst;
    };
    std::vector<Edge> edges() const;

private:
    std::map<Word, int> index_;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// BFS closure of seed under e_i, f_i for the given colors (colors in 1..n).
CrystalGraph generate_component(const ClassicalType& ct, const Word& seed, const std::vector<int>& colors,
                                int max_vertices = 200000);
std::vector<int> highest_weight_elements(const CrystalGraph& g, const std::vector<int>& colors);

}  // namespace krc
