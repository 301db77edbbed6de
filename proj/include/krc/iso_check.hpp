#pragma once

#include "krc/cartan.hpp"
#include "krc/tableaux.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace krc {

struct AmbiguousMatching : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// perm[v] is the new id of v.
CrystalGraph relabel(const CrystalGraph& g, const std::vector<int>& perm);
std::vector<int> shuffled_ids(int size, unsigned seed);

struct IsoResult {
    std::optional<std::vector<int>> map;  // g1 id -> g2 id
    std::string witness;
};

// Colour-respecting bijection anchored at highest weight vertices with equal labels (phi_c, c in colors).
IsoResult restricted_isomorphism(const CrystalGraph& g1, const CrystalGraph& g2, const std::vector<int>& colors);

// Empty when map carries every c-arrow of g1 onto one of g2, else a witness.
std::string check_preserves(const CrystalGraph& g1, const CrystalGraph& g2, const std::vector<int>& map,
                            const std::vector<int>& colors);

// Number of full-colour automorphisms of a connected graph, stopping once `limit` are found.
int count_automorphisms(const CrystalGraph& g, int limit = 2);

struct RigidityReport {
    bool axioms = false;
    bool psi0 = false;
    bool psi1 = false;
    bool agree = false;
    int automorphisms = 0;
    std::string witness;
    bool pass() const { return axioms && psi0 && psi1 && agree && automorphisms == 1; }
};
RigidityReport verify_prop61(const AffineType& t, const CrystalGraph& g, unsigned seed = 1);

}  // namespace krc
