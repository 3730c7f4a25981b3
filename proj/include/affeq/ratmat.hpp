#pragma once

#include <optional>
#include <vector>

#include "affeq/rational.hpp"

namespace affeq {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& a);

int rank(RatMat a);

/// Basis of the right null space {x : a x = 0}, one vector per column of
/// the result list. Canonical (RREF-derived, free variables set to 1).
std::vector<RatVec> kernel_basis(const RatMat& a);

/// Basis of the column space: the pivot columns of a, in order.
std::vector<RatVec> image_basis(const RatMat& a);

/// One solution of a x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(RatMat a, RatVec b);

/// True when v lies in the span of the given (row) vectors.
bool in_span(const std::vector<RatVec>& span, const RatVec& v);

RatVec mat_vec(const RatMat& a, const RatVec& x);

}  // namespace affeq
