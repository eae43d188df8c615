#include "ech/capacities.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ech/ellipsoid.hpp"
#include "row_merge.hpp"

namespace ech {

namespace {

void require_positive(std::initializer_list<const Rational*> values, const char* what) {
    for (const auto* v : values)
        if (v->sign() <= 0) throw PreconditionViolation(std::string(what) + " needs positive arguments");
}

}  // namespace

CapacitySequence capacity_sequence(const Rational& a, const Rational& b, std::int64_t k) {
    require_positive({&a, &b}, "capacity_sequence");
    if (k < 1) throw PreconditionViolation("capacity_sequence needs k >= 1");
    const Integer d = detail::common_denominator({a, b});
    const auto cells = detail::k_smallest_cells(detail::scaled(a, d), detail::scaled(b, d),
                                                static_cast<std::size_t>(k), detail::ByRow{});
    CapacitySequence out{a, b, {}};
    out.values.reserve(cells.size());
    for (const auto& c : cells) out.values.emplace_back(c.value, d);
    return out;
}

ObstructionVerdict check_embedding(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                   std::int64_t max_k) {
    require_positive({&a, &b, &c, &d}, "check_embedding");
    if (max_k < 1) throw PreconditionViolation("check_embedding needs k >= 1");
    // one denominator for all four so both streams compare as integers
    const Integer den = detail::common_denominator({a, b, c, d});
    detail::RowMerge source(detail::scaled(a, den), detail::scaled(b, den), detail::ByRow{});
    detail::RowMerge target(detail::scaled(c, den), detail::scaled(d, den), detail::ByRow{});
    for (std::int64_t k = 1; k <= max_k; ++k) {
        const auto lhs = source.next();
        const auto rhs = target.next();
        if (lhs.value > rhs.value) return Obstructed{k, Rational(lhs.value, den), Rational(rhs.value, den)};
    }
    return NoObstructionUpTo{max_k};
}

bool counts_dominate(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                     const Rational& limit) {
    require_positive({&a, &b, &c, &d}, "counts_dominate");
    return filtered_count(c, d, limit) <= filtered_count(a, b, limit);
}

std::optional<Rational> first_count_violation(const Rational& a, const Rational& b, const Rational& c,
                                              const Rational& d, const Rational& bound) {
    require_positive({&a, &b, &c, &d}, "first_count_violation");
    if (bound.sign() <= 0) return std::nullopt;

    // counts are constant on (v, v'] between consecutive breakpoints, so the
    // right endpoints and the bound itself cover every L in (0, bound]
    std::set<Rational> candidates{bound};
    auto add_values = [&](const Rational& x, const Rational& y) {
        for (Rational row = 0; row <= bound; row += y)
            for (Rational v = row; v <= bound; v += x)
                if (v.sign() > 0) candidates.insert(v);
    };
    add_values(a, b);
    add_values(c, d);

    for (const auto& limit : candidates)
        if (!counts_dominate(a, b, c, d, limit)) return limit;
    return std::nullopt;
}

bool volume_consistent(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    require_positive({&a, &b, &c, &d}, "volume_consistent");
    return a * b <= c * d;
}

FBound f_lower_bound(const Rational& a, std::int64_t max_k) {
    if (a < Rational(1)) throw PreconditionViolation("f_lower_bound needs a >= 1");
    if (max_k < 2) throw PreconditionViolation("f_lower_bound needs k >= 2");
    const auto stretched = capacity_sequence(a, Rational(1), max_k);
    const auto ball = capacity_sequence(Rational(1), Rational(1), max_k);
    FBound best{stretched.at(2) / ball.at(2), 2};
    for (std::int64_t k = 3; k <= max_k; ++k) {
        Rational ratio = stretched.at(k) / ball.at(k);
        if (ratio > best.bound) best = {std::move(ratio), k};
    }
    return best;
}

std::vector<StaircasePoint> staircase_data(const Rational& a_min, const Rational& a_max, std::int64_t samples,
                                           std::int64_t max_k) {
    if (a_min < Rational(1) || !(a_min < a_max))
        throw PreconditionViolation("staircase_data needs 1 <= from < to");
    if (samples < 2) throw PreconditionViolation("staircase_data needs samples >= 2");
    if (max_k < 2) throw PreconditionViolation("staircase_data needs k >= 2");
    const Rational step = (a_max - a_min) / Rational(static_cast<long>(samples - 1));
    std::vector<StaircasePoint> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t i = 0; i < samples; ++i) {
        Rational a = a_min + step * Rational(static_cast<long>(i));
        auto bound = f_lower_bound(a, max_k);
        out.push_back({std::move(a), std::move(bound)});
    }
    return out;
}

}  // namespace ech
