#pragma once

// Internal helpers shared by the generator sweep and the capacity sequences.

#include <cstdint>
#include <initializer_list>
#include <queue>
#include <utility>
#include <vector>

#include "ech/rational.hpp"

namespace ech::detail {

inline Integer common_denominator(std::initializer_list<Rational> values) {
    Integer d = 1;
    for (const auto& v : values) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.denominator().get_mpz_t());
    return d;
}

// value * d, where d is a multiple of value's denominator.
inline Integer scaled(const Rational& value, const Integer& d) {
    return value.numerator() * (d / value.denominator());
}

struct Cell {
    Integer value;  // A*m + B*n
    std::int64_t m;
    std::int64_t n;
};

// Streams the values A*m + B*n over m, n >= 0 (A, B > 0) in nondecreasing
// order, with repetition. Row n is {A*m + B*n : m >= 0}; a row enters the heap
// when the head of the previous row is popped, so the heap holds one cell per
// started row. Equal values come out in tie_less order.
template <class TieLess>
class RowMerge {
public:
    RowMerge(Integer A, Integer B, TieLess tie_less)
        : A_(std::move(A)), B_(std::move(B)), heap_(After{tie_less}) {
        heap_.push({Integer(0), 0, 0});
    }

    const Cell& peek() const { return heap_.top(); }

    Cell next() {
        Cell top = heap_.top();
        heap_.pop();
        if (top.m == 0) heap_.push({top.value + B_, 0, top.n + 1});
        heap_.push({top.value + A_, top.m + 1, top.n});
        return top;
    }

private:
    struct After {
        TieLess tie_less;
        bool operator()(const Cell& x, const Cell& y) const {
            const int c = cmp(x.value, y.value);
            if (c != 0) return c > 0;
            return tie_less(y, x);
        }
    };

    Integer A_;
    Integer B_;
    std::priority_queue<Cell, std::vector<Cell>, After> heap_;
};

template <class TieLess>
std::vector<Cell> k_smallest_cells(const Integer& A, const Integer& B, std::size_t k, TieLess tie_less) {
    RowMerge<TieLess> merge(A, B, tie_less);
    std::vector<Cell> out;
    out.reserve(k);
    while (out.size() < k) out.push_back(merge.next());
    return out;
}

// Ties by row index n.
struct ByRow {
    bool operator()(const Cell& x, const Cell& y) const { return x.n < y.n; }
};

}  // namespace ech::detail
