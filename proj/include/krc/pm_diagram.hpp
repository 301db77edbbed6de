#pragma once

#include "krc/cartan.hpp"
#include "krc/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace krc {

// lambda (inner) <= mu <= Lambda (outer); mu/lambda carries +, Lambda/mu carries -.
struct PMDiagram {
    Partition lambda, mu, Lambda;

    PMDiagram() = default;
    PMDiagram(Partition l, Partition m, Partition L);

    const Partition& inner() const { return lambda; }
    const Partition& outer() const { return Lambda; }
    bool has_plus(int col) const { return mu.column(col) > lambda.column(col); }
    bool has_minus(int col) const { return Lambda.column(col) > mu.column(col); }
    int width() const { return Lambda.width(); }
    std::string str() const;

    friend bool operator==(const PMDiagram&, const PMDiagram&) = default;
    friend auto operator<=>(const PMDiagram&, const PMDiagram&) = default;
};

bool is_horizontal_strip(const Partition& big, const Partition& small);
// All diagrams with the given outer shape and inner height at most max_inner_height.
std::vector<PMDiagram> enumerate_diagrams(const Partition& outer, int max_inner_height);

// Operator string of Phi in the labels of the rank-n type; Phi(P) = f_{a_1} ... f_{a_l} u.
std::vector<int> phi_string(ClassicalKind kind, int n, const PMDiagram& p);
// Apply f_{a_1} ... f_{a_l} (rightmost first) with every color shifted by `shift`.
Word apply_string(const ClassicalType& ct, const std::vector<int>& a, int shift, Word w);
Word phi(const ClassicalType& ct, const PMDiagram& p);

// Phi^{-1} restricted to one outer shape, as a lookup table.
class PhiTable {
public:
    PhiTable(const ClassicalType& ct, const Partition& outer);
    const PMDiagram* lookup(const Word& w) const;
    const std::vector<PMDiagram>& diagrams() const { return diagrams_; }
    const Partition& outer() const { return outer_; }

private:
    Partition outer_;
    std::vector<PMDiagram> diagrams_;
    std::map<Word, int> index_;
};
PMDiagram phi_inverse(const ClassicalType& ct, const Partition& outer, const Word& w);

// The sign involution; throws std::invalid_argument on diagrams breaking the parity rules.
PMDiagram s_map(int r, int s, const PMDiagram& p);
bool satisfies_parity_rules(int r, int s, const PMDiagram& p);

struct PMPair {
    PMDiagram P;  // level n
    PMDiagram p;  // level n-1, outer(p) = inner(P)
    friend bool operator==(const PMPair&, const PMPair&) = default;
};

// Upsilon: the X_{n-2} highest weight word of the pair inside B(outer(P)).
Word upsilon(const ClassicalType& ct, const PMPair& pair);

struct SignRef {
    bool in_big;  // true: sign of P, false: sign of p
    int col;
    bool plus;
    friend bool operator==(const SignRef&, const SignRef&) = default;
};
struct Pairing {
    std::vector<SignRef> signs;            // every sign of P and p
    std::vector<std::pair<int, int>> pairs;  // indices into signs
    std::vector<bool> paired;
};
Pairing pair_signs(const PMPair& pair);
// Move a - of P into p, or a + of p into P, re-sorting the columns.
PMPair move_sign(const PMPair& pair, const SignRef& sign);
std::optional<PMPair> e1_on_pair(const PMPair& pair);

struct PMCheckReport {
    int diagrams = 0;
    bool bijection = true;      // Phi onto the X_{n-1} highest weight elements, weights = inner shapes
    long e1_checked = 0;     // X_{n-2} highest weight vertices reached by Upsilon
    long e1_failures = 0;    // e1_on_pair disagreeing with e_1 in the graph
    long uncovered = 0;         // X_{n-2} highest weight vertices outside the image of Upsilon
    std::vector<std::string> witnesses;
};
// Exhaustive comparison of Phi, Upsilon and e1_on_pair against the crystal B(outer).
PMCheckReport check_pm_machinery(const ClassicalType& ct, const Partition& outer);

}  // namespace krc
