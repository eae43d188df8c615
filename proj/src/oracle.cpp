#include "ech/oracle.hpp"

#include <algorithm>

namespace ech::oracle {

Integer floor_multiple_concrete(const PerturbedRational& r, std::int64_t k, const Integer& n) {
    const Rational shifted = r.value + Rational(Integer(to_int(r.tilt)), n);
    return (shifted * Rational(static_cast<long>(k))).floor();
}

std::vector<Rational> capacities_sort_all(const Rational& a, const Rational& b, std::int64_t k) {
    Rational bound = std::max(a, b);
    for (;;) {
        std::vector<Rational> all;
        for (Rational row = 0; row <= bound; row += b)
            for (Rational v = row; v <= bound; v += a) all.push_back(v);
        if (static_cast<std::int64_t>(all.size()) >= k) {
            std::sort(all.begin(), all.end());
            all.resize(static_cast<std::size_t>(k));
            return all;
        }
        bound = bound * Rational(2);
    }
}

Integer count_double_loop(const Rational& a, const Rational& b, const Rational& limit) {
    Integer count = 0;
    for (Rational row = 0; row < limit; row += b)
        for (Rational v = row; v < limit; v += a) ++count;
    return count;
}

Integer grading_double_loop(const Ellipsoid& e, const EllipsoidGenerator& g) {
    const Rational& a = e.a();
    const Rational& b = e.b();
    const Rational m1(static_cast<long>(g.m1));
    const Rational m2(static_cast<long>(g.m2));
    const Rational level = a * m1 + b * m2;
    const Integer xs = (level / a).floor() + 1;
    const Integer ys = (level / b).floor() + 1;

    // Distinct values of a*x + b*y differ by at least 1/den; the perturbation
    // moves a*x by at most delta*b*(xs + m1), which stays below that gap.
    const Integer den = a.denominator() * b.denominator();
    const Integer spread = b.numerator() * (xs + g.m1 + 1);
    const Rational delta(Integer(1), 4 * den * spread);
    const Rational a_tilted = a + Rational(to_int(e.tilt())) * delta * b;
    const Rational tilted_level = a_tilted * m1 + b * m2;

    Integer count = 0;
    for (Integer x = 0; x <= xs; ++x)
        for (Integer y = 0; y <= ys; ++y)
            if (a_tilted * Rational(x) + b * Rational(y) <= tilted_level) ++count;
    return 2 * (count - 1);
}

std::pair<Rational, std::int64_t> f_lower_bound_sort_all(const Rational& a, std::int64_t max_k) {
    const auto stretched = capacities_sort_all(a, Rational(1), max_k);
    const auto ball = capacities_sort_all(Rational(1), Rational(1), max_k);
    std::pair<Rational, std::int64_t> best{Rational(0), 0};
    for (std::int64_t k = 2; k <= max_k; ++k) {
        const auto i = static_cast<std::size_t>(k - 1);
        const Rational ratio = stretched[i] / ball[i];
        if (best.second == 0 || ratio > best.first) best = {ratio, k};
    }
    return best;
}

}  // namespace ech::oracle
