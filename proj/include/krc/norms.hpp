#pragma once

#include "krc/branching.hpp"
#include "krc/cartan.hpp"
#include "krc/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace krc {

struct NormInput {
    AffineType t;
    int r;
    int s;
    CVector c;
    std::optional<int> j;
};

// Which closed form applies to (t, r).
enum class NormCase { DBA, C, AD, BTop, Spin };
NormCase norm_case(const AffineType& t, int r);

LaurentPoly norm_u(const NormInput& in);
LaurentPoly norm_eu(const NormInput& in);

// <h_j, lambda(c)> as stated alongside each closed form; nullopt where nothing is stated.
std::optional<int> stated_pairing(const NormInput& in);
// beta_j = -<h_j, lambda(c)> for the C and AD cases
int beta(const NormInput& in);

// Telescoped recursions and assemblies of the closed forms.
LaurentPoly norm_u_recursive(const NormInput& in);
LaurentPoly norm_fu(const NormInput& in);
LaurentPoly norm_eu_assembled(const NormInput& in);

struct NormEntry {
    std::string family;
    int r, s;
    CVector c;
    int j;  // 0 when the check does not involve a node
    std::string check;
    bool pass;
    std::string detail;
};

struct NormReport {
    std::vector<NormEntry> entries;
    int violations() const;
    std::string to_json() const;
};

NormReport check_criterion(const AffineType& t, int r, int s);
NormReport recursion_check(const AffineType& t, int r, int s);
// Both reports over all families, n in [n_min, n_max], valid r and s <= s_max.
NormReport norm_sweep(int n_max, int s_max);

}  // namespace krc
