#pragma once

#include "krc/cartan.hpp"

#include <vector>

namespace krc {

using CVector = std::vector<int>;

// Length and upper bound of a valid c for (t, r, s).
struct CShape {
    int length;
    int bound;
};
CShape c_shape(const AffineType& t, int r, int s);
bool valid_c(const AffineType& t, int r, int s, const CVector& c);
std::vector<CVector> enumerate_c(const AffineType& t, int r, int s);

Weight lambda_of_c(const AffineType& t, int r, int s, const CVector& c);

// Partitions reached from the rectangle by nu-removals.
std::vector<Partition> decompose_diagrammatic_shapes(const AffineType& t, int r, int s);
std::vector<Weight> decompose_diagrammatic(const AffineType& t, int r, int s);
std::vector<Weight> decompose_by_c(const AffineType& t, int r, int s);

// {varpi_{r-2m_1} + ... + varpi_{r-2m_s} : 0 <= m_1 <= ... <= m_s <= [r/2]}
std::vector<Weight> dual_indexing_set(const AffineType& t, int r, int s);

}  // namespace krc
