#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lg/graph.hpp"

namespace lg {

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    /// Space-free digit string for n <= 9 ("415263"), comma-separated beyond.
    static Permutation parse(std::string_view text);
    std::string to_string() const;

    int size() const { return static_cast<int>(values_.size()); }
    int value_at(int pos) const { return values_.at(pos); }  // 0-based position, 1-based value
    const std::vector<int>& one_line() const { return values_; }

    /// Values read right to left: pos i takes the old value at n-1-i.
    Permutation reversed() const;
    /// Each value x replaced by n+1-x; flips every inversion in place.
    Permutation value_complement() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return values_ < o.values_; }

private:
    std::vector<int> values_;
};

/// Inversion graph: vertices are positions, edge iff the pair is inverted.
Graph perm_graph(const Permutation& p);

/// Some subsequence of p is order-isomorphic to q (exhaustive subset scan).
bool contains_pattern(const Permutation& p, const Permutation& q);

bool avoids_all(const Permutation& p, std::span<const Permutation> patterns);

}  // namespace lg
