#include "nichegraph/tournament.hpp"

#include <algorithm>

#include "nichegraph/errors.hpp"
#include "nichegraph/graph.hpp"

namespace niche {

namespace {

std::size_t index_in(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) return names.size();
    return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

void BipartiteTournament::validate_names() const {
    if (left_.empty() || right_.empty())
        throw ValidationError("both sides of a bipartite tournament must be nonempty");
    for (const auto& side : {left_, right_}) {
        for (const auto& n : side)
            if (!valid_vertex_id(n)) throw ValidationError("invalid vertex id: '" + n + "'");
        if (std::adjacent_find(side.begin(), side.end()) != side.end())
            throw ValidationError("duplicate vertex: " +
                                  *std::adjacent_find(side.begin(), side.end()));
    }
    for (const auto& n : left_)
        if (index_in(right_, n) != right_.size())
            throw ValidationError("vertex on both sides: " + n);
}

BipartiteTournament::BipartiteTournament(
    std::vector<std::string> left, std::vector<std::string> right,
    const std::vector<std::pair<std::string, std::string>>& arcs)
    : left_(std::move(left)), right_(std::move(right)) {
    std::sort(left_.begin(), left_.end());
    std::sort(right_.begin(), right_.end());
    validate_names();
    to_right_.assign(left_.size(), Bitset(right_.size()));
    std::vector<Bitset> oriented(left_.size(), Bitset(right_.size()));
    for (const auto& [tail, head] : arcs) {
        std::size_t tl = index_in(left_, tail), hl = index_in(left_, head);
        std::size_t tr = index_in(right_, tail), hr = index_in(right_, head);
        bool tail_left = tl < left_.size(), head_left = hl < left_.size();
        bool tail_right = tr < right_.size(), head_right = hr < right_.size();
        if (!tail_left && !tail_right) throw ValidationError("unknown vertex: " + tail);
        if (!head_left && !head_right) throw ValidationError("unknown vertex: " + head);
        if (tail_left == head_left)
            throw ValidationError("arc within a side: " + tail + " " + head);
        std::size_t li = tail_left ? tl : hl;
        std::size_t rj = tail_left ? hr : tr;
        if (oriented[li].test(rj))
            throw ValidationError("duplicate arc between " + left_[li] + " and " + right_[rj]);
        oriented[li].set(rj);
        if (tail_left) to_right_[li].set(rj);
    }
    for (std::size_t li = 0; li < left_.size(); ++li)
        for (std::size_t rj = 0; rj < right_.size(); ++rj)
            if (!oriented[li].test(rj))
                throw ValidationError("missing arc between " + left_[li] + " and " +
                                      right_[rj]);
}

BipartiteTournament BipartiteTournament::from_masks(std::vector<std::string> left,
                                                    std::vector<std::string> right,
                                                    std::vector<Bitset> to_right) {
    BipartiteTournament t;
    t.left_ = std::move(left);
    t.right_ = std::move(right);
    if (!std::is_sorted(t.left_.begin(), t.left_.end()) ||
        !std::is_sorted(t.right_.begin(), t.right_.end()))
        throw ValidationError("sides must be given in ascending order");
    t.validate_names();
    if (to_right.size() != t.left_.size())
        throw ValidationError("orientation mask count must match the left side");
    for (const auto& m : to_right)
        if (m.size() != t.right_.size())
            throw ValidationError("orientation mask width must match the right side");
    t.to_right_ = std::move(to_right);
    return t;
}

Side BipartiteTournament::side_of(const std::string& name) const {
    if (index_in(left_, name) < left_.size()) return Side::Left;
    if (index_in(right_, name) < right_.size()) return Side::Right;
    throw InvalidVertexError("unknown vertex: " + name);
}

bool BipartiteTournament::contains(const std::string& name) const {
    return index_in(left_, name) < left_.size() || index_in(right_, name) < right_.size();
}

bool BipartiteTournament::has_arc(const std::string& tail, const std::string& head) const {
    Side ts = side_of(tail), hs = side_of(head);
    if (ts == hs) return false;
    if (ts == Side::Left) return left_to_right(index_in(left_, tail), index_in(right_, head));
    return !left_to_right(index_in(left_, head), index_in(right_, tail));
}

Bitset BipartiteTournament::out_mask(Side side, std::size_t i) const {
    if (side == Side::Left) return to_right_[i];
    Bitset m(left_.size());
    for (std::size_t li = 0; li < left_.size(); ++li)
        if (!to_right_[li].test(i)) m.set(li);
    return m;
}

Bitset BipartiteTournament::in_mask(Side side, std::size_t i) const {
    if (side == Side::Left) return to_right_[i].complemented();
    Bitset m(left_.size());
    for (std::size_t li = 0; li < left_.size(); ++li)
        if (to_right_[li].test(i)) m.set(li);
    return m;
}

std::vector<std::string> BipartiteTournament::out_neighbors(const std::string& name) const {
    Side s = side_of(name);
    std::size_t i = s == Side::Left ? index_in(left_, name) : index_in(right_, name);
    Bitset m = out_mask(s, i);
    const auto& opp = s == Side::Left ? right_ : left_;
    std::vector<std::string> out;
    for (std::size_t j = m.next(0); j < m.size(); j = m.next(j + 1)) out.push_back(opp[j]);
    return out;
}

std::vector<std::string> BipartiteTournament::in_neighbors(const std::string& name) const {
    Side s = side_of(name);
    std::size_t i = s == Side::Left ? index_in(left_, name) : index_in(right_, name);
    Bitset m = in_mask(s, i);
    const auto& opp = s == Side::Left ? right_ : left_;
    std::vector<std::string> out;
    for (std::size_t j = m.next(0); j < m.size(); j = m.next(j + 1)) out.push_back(opp[j]);
    return out;
}

}  // namespace niche
