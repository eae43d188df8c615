#pragma once

// Brute-force references. Each routine takes the most direct route it can
// (enumerate, sort, double loop, concrete perturbation) and shares no code
// with the main library beyond Rational itself. Used by the tests and by the
// `oracle` CLI subcommand.

#include <cstdint>
#include <vector>

#include "ech/ellipsoid.hpp"
#include "ech/rational.hpp"

namespace ech::oracle {

// floor(k * (value + tilt/n)) with a concrete positive n.
Integer floor_multiple_concrete(const PerturbedRational& r, std::int64_t k, const Integer& n);

// Enumerate every m*a + n*b <= bound, doubling bound until there are at
// least k of them, sort, truncate.
std::vector<Rational> capacities_sort_all(const Rational& a, const Rational& b, std::int64_t k);

// Double loop over (m,n) with a*m + b*n < limit.
Integer count_double_loop(const Rational& a, const Rational& b, const Rational& limit);

// 2 * (lattice points - 1) for the triangle under the line through (m1,m2),
// with the slope replaced by a concrete rational a/b + tilt*delta, delta
// small enough that no off-line point changes side.
Integer grading_double_loop(const Ellipsoid& e, const EllipsoidGenerator& g);

// max over 2..max_k of (a,1)_k/(1,1)_k from sorted-all sequences; returns the
// bound and the first k attaining it.
std::pair<Rational, std::int64_t> f_lower_bound_sort_all(const Rational& a, std::int64_t max_k);

}  // namespace ech::oracle
