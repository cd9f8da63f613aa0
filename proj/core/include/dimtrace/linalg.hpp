#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dimtrace/numeric.hpp"

namespace dimtrace::linalg {

using RatMatrix = std::vector<RatVec>;

Rational dot(const RatVec& a, const RatVec& b);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t cols);

std::size_t rank(RatMatrix m, std::size_t cols);

/// Basis of {x : m x = 0}, one basis vector per free column.
RatMatrix nullspace(RatMatrix m, std::size_t cols);

/// Some solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& rhs, std::size_t cols);

RatMatrix transpose(const RatMatrix& m, std::size_t cols);

/// Scales v by a positive rational so that it is a primitive integer vector.
RatVec primitive_direction(const RatVec& v);

}  // namespace dimtrace::linalg
