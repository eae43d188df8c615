#include "ech/ellipsoid.hpp"

#include <string>
#include <utility>

#include "row_merge.hpp"

namespace ech {

Ellipsoid::Ellipsoid(Rational a, Rational b, Tilt tilt) : a_(std::move(a)), b_(std::move(b)), tilt_(tilt) {
    if (a_.sign() <= 0 || b_.sign() <= 0)
        throw PreconditionViolation("ellipsoid axes must be positive, got a=" + a_.str() + " b=" + b_.str());
    if (tilt_ == Tilt::None) throw PreconditionViolation("ellipsoid tilt must be + or -");
}

OrbitSet to_orbit_set(const Ellipsoid& e, const EllipsoidGenerator& g) {
    OrbitSet s;
    if (g.m1 > 0) s.add(e.gamma1(), g.m1);
    if (g.m2 > 0) s.add(e.gamma2(), g.m2);
    return s;
}

Rational action(const Ellipsoid& e, const EllipsoidGenerator& g) {
    return e.a() * Rational(static_cast<long>(g.m1)) + e.b() * Rational(static_cast<long>(g.m2));
}

namespace {

void check_generator(const EllipsoidGenerator& g) {
    if (g.m1 < 0 || g.m2 < 0)
        throw PreconditionViolation("generator multiplicities must be nonnegative");
}

// Prefix sums of floor_multiple(r, k) for k = 1, 2, ..., extended on demand.
class FloorPrefix {
public:
    explicit FloorPrefix(PerturbedRational r) : r_(std::move(r)) {}

    const Integer& upto(std::int64_t m) {
        while (static_cast<std::int64_t>(sums_.size()) <= m) {
            const auto k = static_cast<std::int64_t>(sums_.size());
            sums_.push_back(sums_.back() + floor_multiple(r_, k));
        }
        return sums_[static_cast<std::size_t>(m)];
    }

private:
    PerturbedRational r_;
    std::vector<Integer> sums_{Integer(0)};
};

GradingBreakdown breakdown(const EllipsoidGenerator& g, FloorPrefix& along1, FloorPrefix& along2) {
    const Integer m1(static_cast<long>(g.m1));
    const Integer m2(static_cast<long>(g.m2));
    GradingBreakdown out;
    out.c1 = m1 + m2;
    out.q = 2 * m1 * m2;
    // sum_{k<=m} (2*floor(k*theta) + 1) = 2*sum floor + m
    out.cz = 2 * along1.upto(g.m1) + m1 + 2 * along2.upto(g.m2) + m2;
    out.total = out.c1 + out.q + out.cz;
    return out;
}

}  // namespace

GradingBreakdown grading(const Ellipsoid& e, const EllipsoidGenerator& g) {
    check_generator(g);
    FloorPrefix along1(e.slope());
    FloorPrefix along2(e.co_slope());
    return breakdown(g, along1, along2);
}

bool LatticeTriangle::contains(std::int64_t x, std::int64_t y) const {
    if (x < 0 || y < 0) return false;
    const Rational lhs = slope.value * Rational(static_cast<long>(x)) + Rational(static_cast<long>(y));
    const Rational rhs =
        slope.value * Rational(static_cast<long>(corner.m1)) + Rational(static_cast<long>(corner.m2));
    if (lhs != rhs) return lhs < rhs;
    return to_int(slope.tilt) * x <= to_int(slope.tilt) * corner.m1;
}

Integer LatticeTriangle::count_points() const {
    const Rational level =
        slope.value * Rational(static_cast<long>(corner.m1)) + Rational(static_cast<long>(corner.m2));
    const Integer rows = level.floor();
    Integer total = 0;
    for (Integer y = 0; y <= rows; ++y) {
        const Rational room = level - Rational(y);
        const Rational reach = room / slope.value;
        Integer cols = reach.floor() + 1;
        if (reach.is_integer()) {
            // last column lies on the line; the tilt decides it
            const Integer x = reach.numerator();
            if (to_int(slope.tilt) * x > to_int(slope.tilt) * corner.m1) cols -= 1;
        }
        total += cols;
    }
    return total;
}

Integer grading_by_lattice(const Ellipsoid& e, const EllipsoidGenerator& g) {
    check_generator(g);
    const LatticeTriangle t{g, e.slope()};
    return 2 * (t.count_points() - 1);
}

std::vector<GeneratorRecord> sorted_generators(const Ellipsoid& e, std::int64_t k) {
    if (k < 1) throw PreconditionViolation("sorted_generators needs k >= 1");
    const Integer d = detail::common_denominator({e.a(), e.b()});
    const int tilt = to_int(e.tilt());
    const auto cells = detail::k_smallest_cells(
        detail::scaled(e.a(), d), detail::scaled(e.b(), d), static_cast<std::size_t>(k),
        [tilt](const detail::Cell& x, const detail::Cell& y) { return tilt * x.m < tilt * y.m; });

    FloorPrefix along1(e.slope());
    FloorPrefix along2(e.co_slope());
    std::vector<GeneratorRecord> out;
    out.reserve(cells.size());
    for (const auto& c : cells) {
        const EllipsoidGenerator g{c.m, c.n};
        out.push_back({g, breakdown(g, along1, along2).total, Rational(c.value, d)});
    }
    return out;
}

std::int64_t HomologyTable::count(const Integer& grading) const {
    const auto it = by_grading.find(grading);
    return it == by_grading.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

HomologyTable homology_table(const Ellipsoid& e, std::int64_t n) {
    if (n < 0) throw PreconditionViolation("homology_table needs n >= 0");
    HomologyTable table;
    table.max_grading = 2 * n;
    const Integer cap = 2 * Integer(static_cast<long>(n));

    // grading >= 2*(m1 + m2 + m1*m2), so grading <= 2n forces (1+m1)(1+m2) <= n+1
    FloorPrefix along1(e.slope());
    FloorPrefix along2(e.co_slope());
    for (std::int64_t m1 = 0; m1 <= n; ++m1) {
        const std::int64_t m2_max = (n + 1) / (1 + m1) - 1;
        for (std::int64_t m2 = 0; m2 <= m2_max; ++m2) {
            const EllipsoidGenerator g{m1, m2};
            Integer total = breakdown(g, along1, along2).total;
            if (total > cap) continue;
            table.by_grading[total].push_back({g, total, action(e, g)});
        }
    }

    for (const auto& [grade, gens] : table.by_grading) {
        if (grade % 2 != 0)
            throw HomologyMismatch("generator in odd grading " + to_string(grade));
    }
    for (std::int64_t grade = 0; grade <= 2 * n; grade += 2) {
        const auto c = table.count(Integer(static_cast<long>(grade)));
        if (c != 1)
            throw HomologyMismatch("grading " + std::to_string(grade) + " has " + std::to_string(c) +
                                   " generators, expected 1");
    }
    return table;
}

Integer filtered_count(const Rational& a, const Rational& b, const Rational& limit) {
    if (a.sign() <= 0 || b.sign() <= 0) throw PreconditionViolation("filtered_count needs a, b > 0");
    if (limit.sign() <= 0) return 0;
    const Integer d = detail::common_denominator({a, b, limit});
    Integer step_m = detail::scaled(a, d);
    Integer step_n = detail::scaled(b, d);
    const Integer lim = detail::scaled(limit, d);
    // walk rows along the larger step so there are fewer of them
    if (step_n < step_m) std::swap(step_m, step_n);
    Integer total = 0;
    Integer room;
    for (Integer base = 0; base < lim; base += step_n) {
        // m with step_m * m < lim - base: ceil((lim - base) / step_m) values
        room = lim - base;
        Integer cols;
        mpz_cdiv_q(cols.get_mpz_t(), room.get_mpz_t(), step_m.get_mpz_t());
        total += cols;
    }
    return total;
}

}  // namespace ech
