#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace gbs {

using Rational = boost::multiprecision::cpp_rational;

// Feasibility of {x >= 0 : A x = b} by exact Phase-I simplex with Bland's
// rule (smallest-index pivots), which cannot cycle. Returns a feasible x or
// nullopt. Exact rationals throughout; no tolerances.
std::optional<std::vector<Rational>> solve_equality_feasibility(
    std::vector<std::vector<Rational>> A, std::vector<Rational> b);

// Rational y with rows^T y componentwise >= 0 and total coordinate sum 1,
// if one exists. This is the "span meets the nonnegative orthant
// nontrivially" test: any solution scales to one with sum 1.
std::optional<std::vector<Rational>> nonneg_combination(
    const std::vector<std::vector<Rational>>& rows);

}  // namespace gbs
