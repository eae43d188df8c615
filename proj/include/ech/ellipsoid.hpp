#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ech/orbits.hpp"
#include "ech/rational.hpp"

namespace ech {

// E(a,b) with the ratio a/b perturbed to a/b + tilt*eps. The boundary has two
// embedded Reeb orbits: gamma1 (action a, rotation a/b) and gamma2 (action b,
// rotation b/a), both elliptic.
class Ellipsoid {
public:
    // Throws PreconditionViolation unless a, b > 0 and tilt is +1 or -1.
    Ellipsoid(Rational a, Rational b, Tilt tilt);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    Tilt tilt() const { return tilt_; }

    PerturbedRational slope() const { return {a_ / b_, tilt_}; }
    PerturbedRational co_slope() const { return reciprocal(slope()); }

    ReebOrbit gamma1() const { return ReebOrbit::elliptic("gamma1", slope(), a_); }
    ReebOrbit gamma2() const { return ReebOrbit::elliptic("gamma2", co_slope(), b_); }

    // Same ellipsoid with the axes exchanged: E(b, a) with the opposite tilt.
    Ellipsoid swapped() const { return Ellipsoid(b_, a_, flip(tilt_)); }

private:
    Rational a_;
    Rational b_;
    Tilt tilt_;
};

// gamma1^m1 gamma2^m2. Always admissible since both orbits are elliptic.
struct EllipsoidGenerator {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    friend bool operator==(const EllipsoidGenerator&, const EllipsoidGenerator&) = default;
};

OrbitSet to_orbit_set(const Ellipsoid& e, const EllipsoidGenerator& g);

// a*m1 + b*m2.
Rational action(const Ellipsoid& e, const EllipsoidGenerator& g);

struct GradingBreakdown {
    Integer c1;     // m1 + m2
    Integer q;      // 2*m1*m2
    Integer cz;     // sum of 2*floor(k*a/b)+1 over k<=m1, and of 2*floor(k*b/a)+1 over k<=m2
    Integer total;  // c1 + q + cz
};

// Lattice points (x,y) >= 0 on or below the line through the corner with
// slope -a/b. The slope tilt decides points lying exactly on the line:
// (x,y) is inside iff a*x + b*y < a*m1 + b*m2, or equality holds and
// tilt*x <= tilt*m1.
struct LatticeTriangle {
    EllipsoidGenerator corner;
    PerturbedRational slope;

    bool contains(std::int64_t x, std::int64_t y) const;
    // Closed-form count per row y.
    Integer count_points() const;
};

// ECH index c1 + Q + CZ, with the empty set at grading 0.
GradingBreakdown grading(const Ellipsoid& e, const EllipsoidGenerator& g);

// 2 * (lattice points in the triangle cut out by the corner (m1,m2) - 1).
Integer grading_by_lattice(const Ellipsoid& e, const EllipsoidGenerator& g);

struct GeneratorRecord {
    EllipsoidGenerator generator;
    Integer grading;
    Rational action;
    friend bool operator==(const GeneratorRecord&, const GeneratorRecord&) = default;
};

// First k generators in order of (action, tilt*m1). The grading of each
// record comes from the closed formula, not from its position.
std::vector<GeneratorRecord> sorted_generators(const Ellipsoid& e, std::int64_t k);

struct HomologyTable {
    std::int64_t max_grading = 0;
    std::map<Integer, std::vector<GeneratorRecord>> by_grading;

    std::int64_t count(const Integer& grading) const;
};

// Generators of every grading <= 2*n, enumerated independently of the sweep
// order. Throws HomologyMismatch unless each even grading 0..2n carries
// exactly one generator and no odd grading occurs.
HomologyTable homology_table(const Ellipsoid& e, std::int64_t n);

// |{(m,n) in N^2 : a*m + b*n < limit}|, N including 0.
Integer filtered_count(const Rational& a, const Rational& b, const Rational& limit);

}  // namespace ech
