#pragma once

#include "krc/cartan.hpp"
#include "krc/laurent.hpp"

#include <map>
#include <utility>
#include <vector>

namespace krc {

// m_j^{(a)} keyed by (a, j); only nonzero entries are stored.
using Configuration = std::map<std::pair<int, int>, int>;

std::vector<Configuration> enumerate_configs(const AffineType& t, int r, int s, const Weight& lambda);
int vacancy(const AffineType& t, int r, int s, const Configuration& m, int a, int j);

BigInt multiplicity_N(const AffineType& t, int r, int s, const Weight& lambda);
BigInt multiplicity_M(const AffineType& t, int r, int s, const Weight& lambda);

// Dominant weights lambda with s*varpi_r - lambda a nonnegative integer root combination.
std::vector<Weight> candidate_weights(const AffineType& t, int r, int s);

struct FermionicRow {
    Weight lambda;
    BigInt N;
    BigInt M;
};
// Rows for every candidate weight, sorted lexicographically in epsilon coordinates.
std::vector<FermionicRow> fermionic_table(const AffineType& t, int r, int s);

}  // namespace krc
