#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nichegraph/bitset.hpp"

namespace niche {

enum class Side { Left, Right };

/// Orientation of a complete bipartite graph. Both sides are nonempty,
/// disjoint, and kept in ascending id order; every cross pair carries
/// exactly one arc.
class BipartiteTournament {
public:
    // arcs as (tail, head) pairs; must orient every cross pair exactly once
    BipartiteTournament(std::vector<std::string> left, std::vector<std::string> right,
                        const std::vector<std::pair<std::string, std::string>>& arcs);

    // orientation given directly: bit j of to_right[i] means left[i] -> right[j]
    // (indices refer to the sorted side orders)
    static BipartiteTournament from_masks(std::vector<std::string> left,
                                          std::vector<std::string> right,
                                          std::vector<Bitset> to_right);

    std::size_t left_size() const { return left_.size(); }
    std::size_t right_size() const { return right_.size(); }
    const std::vector<std::string>& left() const { return left_; }
    const std::vector<std::string>& right() const { return right_; }

    Side side_of(const std::string& name) const;
    bool contains(const std::string& name) const;

    // arc direction for the cross pair (left index, right index)
    bool left_to_right(std::size_t li, std::size_t rj) const { return to_right_[li].test(rj); }
    bool has_arc(const std::string& tail, const std::string& head) const;

    std::vector<std::string> out_neighbors(const std::string& name) const;
    std::vector<std::string> in_neighbors(const std::string& name) const;

    // neighborhoods as index masks over the opposite side
    Bitset out_mask(Side side, std::size_t i) const;
    Bitset in_mask(Side side, std::size_t i) const;

    friend bool operator==(const BipartiteTournament&, const BipartiteTournament&) = default;

private:
    BipartiteTournament() = default;
    void validate_names() const;

    std::vector<std::string> left_, right_;
    std::vector<Bitset> to_right_;  // one mask per left vertex
};

}  // namespace niche
