#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

// (a,b)_1, ..., (a,b)_K: the sorted multiset {m*a + n*b : m, n >= 0}.
struct CapacitySequence {
    Rational a;
    Rational b;
    std::vector<Rational> values;

    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
    // 1-based, matching (a,b)_k.
    const Rational& at(std::int64_t k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

// Throws PreconditionViolation unless a, b > 0 and k >= 1.
CapacitySequence capacity_sequence(const Rational& a, const Rational& b, std::int64_t k);

struct Obstructed {
    std::int64_t k;
    Rational lhs;  // (a,b)_k
    Rational rhs;  // (c,d)_k, strictly smaller
};

// Only says that no k <= max_k obstructs; larger k may still obstruct.
struct NoObstructionUpTo {
    std::int64_t max_k;
};

using ObstructionVerdict = std::variant<Obstructed, NoObstructionUpTo>;

inline bool is_obstructed(const ObstructionVerdict& v) { return std::holds_alternative<Obstructed>(v); }

// Least k <= max_k with (a,b)_k > (c,d)_k, i.e. a witness that E(a,b) does not
// embed into E(c,d).
ObstructionVerdict check_embedding(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                   std::int64_t max_k);

// count(c,d,limit) <= count(a,b,limit), with count = filtered_count.
bool counts_dominate(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                     const Rational& limit);

// Smallest L in (0, bound] with count(c,d,L) > count(a,b,L), if any. Both
// counts are step functions that only change just after a value m*a+n*b or
// m*c+n*d, so only those values need testing.
std::optional<Rational> first_count_violation(const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& d, const Rational& bound);

// a*b <= c*d: the volume condition forced by the counts as L grows.
bool volume_consistent(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

struct FBound {
    Rational bound;
    std::int64_t witness_k;
};

// max over 2 <= k <= max_k of (a,1)_k / (1,1)_k with the smallest attaining k.
// Lower bound for the ellipsoid-into-ball embedding function f(a).
FBound f_lower_bound(const Rational& a, std::int64_t max_k);

struct StaircasePoint {
    Rational a;
    FBound bound;
};

// f_lower_bound at `samples` evenly spaced points of [a_min, a_max].
std::vector<StaircasePoint> staircase_data(const Rational& a_min, const Rational& a_max, std::int64_t samples,
                                           std::int64_t max_k);

}  // namespace ech
