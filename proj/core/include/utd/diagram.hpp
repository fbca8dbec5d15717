#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "utd/color.hpp"
#include "utd/errors.hpp"

namespace utd {

/// One end of an edge: a vertex id together with a slot index. Trivalent
/// vertices own slots 0,1,2 whose index order encodes the cyclic ordering
/// (rotating a triple leaves the diagram unchanged; reversing it does not).
/// Univalent vertices own the single slot 0.
struct RawEnd {
    int vertex = 0;
    int slot = 0;
};

/// Mutable diagram description with free-form vertex ids, as produced by the
/// text parser or by generators. Turned into a value by `canonicalize`.
struct RawDiagram {
    std::vector<std::pair<int, std::string>> legs;  // (vertex id, color)
    std::vector<int> trivalent;                     // vertex ids
    std::vector<std::pair<RawEnd, RawEnd>> edges;

    int add_leg(int id, const std::string& color) {
        legs.emplace_back(id, color);
        return id;
    }
    int add_trivalent(int id) {
        trivalent.push_back(id);
        return id;
    }
    void add_edge(int v1, int s1, int v2, int s2) {
        edges.push_back({RawEnd{v1, s1}, RawEnd{v2, s2}});
    }
};

/// A connected uni-trivalent diagram in canonical form. Immutable; two
/// diagrams are isomorphic (by a color-preserving map that respects each
/// cyclic ordering up to rotation) exactly when their keys are equal.
///
/// Canonical slot model: trivalent vertex v owns slots 3v..3v+2, leg j owns
/// slot 3*tri_count + j; `mate` is the fixed-point-free involution pairing
/// slots into edges. Loops and parallel edges are allowed.
class ConnectedDiagram {
public:
    /// Validates `raw` (connectivity, valences, slot coverage) and computes
    /// the canonical form. Throws InvalidDiagram on malformed input.
    static ConnectedDiagram canonicalize(const RawDiagram& raw);

    int tri_count() const { return tri_count_; }
    int leg_count() const { return static_cast<int>(leg_colors_.size()); }
    int slot_count() const { return 3 * tri_count_ + leg_count(); }
    int mate(int slot) const { return pairing_[slot]; }
    int leg_slot(int leg) const { return 3 * tri_count_ + leg; }

    /// Colors of the legs in canonical order.
    const std::vector<std::string>& leg_colors() const { return leg_colors_; }

    /// Half the vertex count; the grading used for truncation.
    int degree() const { return (tri_count_ + leg_count()) / 2; }

    bool is_strut() const { return tri_count_ == 0; }
    bool is_same_color_strut() const {
        return is_strut() && leg_colors_[0] == leg_colors_[1];
    }
    std::map<std::string, int> legs_by_color() const;

    /// Canonical key: equal keys iff isomorphic.
    const std::string& key() const { return key_; }

    /// The diagram as a raw description in canonical labels.
    RawDiagram to_raw() const;

    bool operator==(const ConnectedDiagram& o) const { return key_ == o.key_; }
    bool operator!=(const ConnectedDiagram& o) const { return key_ != o.key_; }
    bool operator<(const ConnectedDiagram& o) const { return key_ < o.key_; }

private:
    ConnectedDiagram() = default;

    int tri_count_ = 0;
    std::vector<std::string> leg_colors_;
    std::vector<int> pairing_;
    std::string key_;
};

using DiagramPtr = std::shared_ptr<const ConnectedDiagram>;

inline DiagramPtr make_diagram(const RawDiagram& raw) {
    return std::make_shared<const ConnectedDiagram>(ConnectedDiagram::canonicalize(raw));
}

/// Strut with legs colored c1, c2.
DiagramPtr make_strut(const std::string& c1, const std::string& c2);

}  // namespace utd
