#include "ech/orbits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ech {

ReebOrbit ReebOrbit::elliptic(std::string label, PerturbedRational rotation, Rational action) {
    if (rotation.tilt == Tilt::None)
        throw PreconditionViolation("elliptic orbit '" + label + "' needs a nonzero tilt");
    if (action.sign() <= 0)
        throw PreconditionViolation("orbit '" + label + "' needs a positive action");
    return ReebOrbit(std::move(label), Elliptic{std::move(rotation)}, std::move(action));
}

ReebOrbit ReebOrbit::hyperbolic(std::string label, EigenvalueSign sign, Rational action) {
    if (action.sign() <= 0)
        throw PreconditionViolation("orbit '" + label + "' needs a positive action");
    return ReebOrbit(std::move(label), Hyperbolic{sign}, std::move(action));
}

OrbitSet& OrbitSet::add(ReebOrbit orbit, std::int64_t multiplicity) {
    if (multiplicity < 1)
        throw PreconditionViolation("multiplicity of '" + orbit.label() + "' must be >= 1");
    const bool clash = std::any_of(entries_.begin(), entries_.end(), [&](const OrbitSetEntry& e) {
        return e.orbit.label() == orbit.label();
    });
    if (clash) throw PreconditionViolation("orbit '" + orbit.label() + "' already in the set");
    entries_.push_back({std::move(orbit), multiplicity});
    return *this;
}

OrbitSet disjoint_union(const OrbitSet& x, const OrbitSet& y) {
    OrbitSet out = x;
    for (const auto& e : y.entries()) out.add(e.orbit, e.multiplicity);
    return out;
}

Partition::Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

std::int64_t Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), std::int64_t{0}); }

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out + ")";
}

Integer conley_zehnder(const ReebOrbit& orbit, std::int64_t k) {
    const auto* e = std::get_if<Elliptic>(&orbit.kind());
    if (!e) throw NotElliptic("Conley-Zehnder formula needs an elliptic orbit, got '" + orbit.label() + "'");
    return 2 * floor_multiple(e->rotation, k) + 1;
}

bool is_admissible(const OrbitSet& s) {
    return std::all_of(s.entries().begin(), s.entries().end(), [](const OrbitSetEntry& e) {
        return !e.orbit.is_hyperbolic() || e.multiplicity == 1;
    });
}

Rational total_action(const OrbitSet& s) {
    Rational sum;
    for (const auto& e : s.entries()) sum += Rational(static_cast<long>(e.multiplicity)) * e.orbit.action();
    return sum;
}

Partition hyperbolic_partition(EigenvalueSign sign, std::int64_t m) {
    if (m < 1) throw PreconditionViolation("partition multiplicity must be >= 1");
    if (sign == EigenvalueSign::Positive) return Partition(std::vector<std::int64_t>(m, 1));
    std::vector<std::int64_t> parts(m / 2, 2);
    if (m % 2) parts.push_back(1);
    return Partition(std::move(parts));
}

Partition elliptic_partition_small(PartitionDirection direction, std::int64_t m,
                                   const PerturbedRational& rotation) {
    if (m < 1) throw PreconditionViolation("partition multiplicity must be >= 1");
    if (m == 1) return Partition({1});
    if (m != 2)
        throw Unspecified("elliptic partition for multiplicity " + std::to_string(m) +
                          " is not determined by the implemented rules");
    const PerturbedRational lo{Rational(0), Tilt::None};
    const PerturbedRational hi{Rational(1) / Rational(2), Tilt::None};
    if (!(lo < rotation && rotation < hi))
        throw Unspecified("elliptic partition for m=2 needs rotation in (0,1/2), got " + rotation.str());
    return direction == PartitionDirection::Outgoing ? Partition({1, 1}) : Partition({2});
}

}  // namespace ech
