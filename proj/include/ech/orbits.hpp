#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

enum class EigenvalueSign : int { Negative = -1, Positive = 1 };

// Linearized return map has eigenvalues on the unit circle; the flow rotates
// by 2*pi*rotation in the chosen trivialization. The full rotation is kept,
// not its residue mod 1.
struct Elliptic {
    PerturbedRational rotation;
    friend bool operator==(const Elliptic&, const Elliptic&) = default;
};

struct Hyperbolic {
    EigenvalueSign eigenvalue_sign = EigenvalueSign::Positive;
    friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

class ReebOrbit {
public:
    // Throws PreconditionViolation if the rotation has tilt 0 (degenerate)
    // or the action is not positive.
    static ReebOrbit elliptic(std::string label, PerturbedRational rotation, Rational action);
    static ReebOrbit hyperbolic(std::string label, EigenvalueSign sign, Rational action);

    const std::string& label() const { return label_; }
    const Rational& action() const { return action_; }
    bool is_elliptic() const { return std::holds_alternative<Elliptic>(kind_); }
    bool is_hyperbolic() const { return std::holds_alternative<Hyperbolic>(kind_); }
    const std::variant<Elliptic, Hyperbolic>& kind() const { return kind_; }

    friend bool operator==(const ReebOrbit&, const ReebOrbit&) = default;

private:
    ReebOrbit(std::string label, std::variant<Elliptic, Hyperbolic> kind, Rational action)
        : label_(std::move(label)), kind_(std::move(kind)), action_(std::move(action)) {}

    std::string label_;
    std::variant<Elliptic, Hyperbolic> kind_;
    Rational action_;
};

struct OrbitSetEntry {
    ReebOrbit orbit;
    std::int64_t multiplicity;
    friend bool operator==(const OrbitSetEntry&, const OrbitSetEntry&) = default;
};

// Finite set of pairs (orbit, multiplicity) with distinct orbit labels and
// positive multiplicities. Entries keep insertion order.
class OrbitSet {
public:
    OrbitSet() = default;

    // Throws PreconditionViolation on a repeated label or multiplicity < 1.
    OrbitSet& add(ReebOrbit orbit, std::int64_t multiplicity);

    const std::vector<OrbitSetEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    friend bool operator==(const OrbitSet&, const OrbitSet&) = default;

private:
    std::vector<OrbitSetEntry> entries_;
};

// Disjoint union; throws PreconditionViolation if a label occurs in both.
OrbitSet disjoint_union(const OrbitSet& x, const OrbitSet& y);

// Unordered list of positive parts; stored in nonincreasing order so that
// equal partitions compare equal.
struct Partition {
    std::vector<std::int64_t> parts;

    Partition() = default;
    explicit Partition(std::vector<std::int64_t> p);

    std::int64_t sum() const;
    std::string str() const;  // "(2,2,1)"
    friend bool operator==(const Partition&, const Partition&) = default;
};

enum class PartitionDirection { Incoming, Outgoing };

// CZ of the k-th iterate: 2*floor(k*theta) + 1. Throws NotElliptic for a
// hyperbolic orbit and PreconditionViolation for k < 1.
Integer conley_zehnder(const ReebOrbit& orbit, std::int64_t k);

// Admissible iff every hyperbolic orbit appears with multiplicity 1.
bool is_admissible(const OrbitSet& s);

// Sum of multiplicity * action; 0 for the empty set.
Rational total_action(const OrbitSet& s);

// Incoming and outgoing partitions of a hyperbolic orbit coincide:
// positive eigenvalues give (1,...,1), negative give (2,...,2) or (2,...,2,1).
Partition hyperbolic_partition(EigenvalueSign sign, std::int64_t m);

// Only m = 1 and the m = 2 case with rotation in (0, 1/2) are determined here;
// everything else throws Unspecified.
Partition elliptic_partition_small(PartitionDirection direction, std::int64_t m,
                                   const PerturbedRational& rotation);

}  // namespace ech
