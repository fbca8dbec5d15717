#include "utd/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace utd {

namespace {

// Working copy with dense vertex indices: trivalent vertices 0..T-1, legs
// T..T+U-1. Slot layout matches ConnectedDiagram.
struct Dense {
    int tri = 0;
    std::vector<std::string> colors;  // per leg
    std::vector<int> pairing;         // slot -> slot

    int slots() const { return 3 * tri + static_cast<int>(colors.size()); }
    int vertices() const { return tri + static_cast<int>(colors.size()); }
    bool is_tri_slot(int s) const { return s < 3 * tri; }
    int owner(int s) const { return is_tri_slot(s) ? s / 3 : tri + (s - 3 * tri); }
    int slot_of_leg(int leg) const { return 3 * tri + leg; }
};

Dense densify(const RawDiagram& raw) {
    if (raw.legs.empty() && raw.trivalent.empty())
        throw InvalidDiagram("empty diagram");

    Dense d;
    d.tri = static_cast<int>(raw.trivalent.size());
    std::map<int, int> index;  // raw id -> dense vertex
    for (std::size_t i = 0; i < raw.trivalent.size(); ++i) {
        if (!index.emplace(raw.trivalent[i], static_cast<int>(i)).second)
            throw InvalidDiagram("duplicate vertex id " + std::to_string(raw.trivalent[i]));
    }
    for (std::size_t i = 0; i < raw.legs.size(); ++i) {
        const auto& [id, color] = raw.legs[i];
        if (color.empty()) throw InvalidDiagram("empty leg color");
        if (!index.emplace(id, d.tri + static_cast<int>(i)).second)
            throw InvalidDiagram("duplicate vertex id " + std::to_string(id));
        d.colors.push_back(color);
    }

    auto to_slot = [&](const RawEnd& e) {
        auto it = index.find(e.vertex);
        if (it == index.end())
            throw InvalidDiagram("edge references unknown vertex " + std::to_string(e.vertex));
        int v = it->second;
        if (v < d.tri) {
            if (e.slot < 0 || e.slot > 2)
                throw InvalidDiagram("trivalent slot out of range at vertex " +
                                     std::to_string(e.vertex));
            return 3 * v + e.slot;
        }
        if (e.slot != 0)
            throw InvalidDiagram("univalent vertex " + std::to_string(e.vertex) +
                                 " has only slot 0");
        return 3 * d.tri + (v - d.tri);
    };

    d.pairing.assign(d.slots(), -1);
    for (const auto& [a, b] : raw.edges) {
        int sa = to_slot(a), sb = to_slot(b);
        if (sa == sb) throw InvalidDiagram("edge pairs a slot with itself");
        if (d.pairing[sa] != -1 || d.pairing[sb] != -1)
            throw InvalidDiagram("slot used by more than one edge");
        d.pairing[sa] = sb;
        d.pairing[sb] = sa;
    }
    for (int s = 0; s < d.slots(); ++s) {
        if (d.pairing[s] == -1) {
            int v = d.owner(s);
            throw InvalidDiagram("dangling slot at " +
                                 (v < d.tri ? "trivalent vertex" : "leg") +
                                 " #" + std::to_string(v < d.tri ? v : v - d.tri));
        }
    }

    // Connectivity over vertices through edges.
    std::vector<int> seen(d.vertices(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        int first = v < d.tri ? 3 * v : d.slot_of_leg(v - d.tri);
        int count = v < d.tri ? 3 : 1;
        for (int s = first; s < first + count; ++s) {
            int w = d.owner(d.pairing[s]);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != d.vertices()) throw InvalidDiagram("diagram is not connected");
    return d;
}

// One rooted traversal. Produces a token string that fully encodes the
// diagram relative to the root dart, plus the discovery bookkeeping needed
// to rebuild the canonical labeling.
struct Traversal {
    std::string code;
    std::vector<int> order;  // vertices in discovery order
    std::vector<int> entry;  // per vertex, the slot it was entered through
};

Traversal traverse(const Dense& d, int root) {
    Traversal t;
    const int V = d.vertices();
    std::vector<int> id(V, -1);
    t.entry.assign(V, -1);
    t.order.reserve(V);

    auto discover = [&](int slot) {
        int w = d.owner(slot);
        id[w] = static_cast<int>(t.order.size());
        t.entry[w] = slot;
        t.order.push_back(w);
    };

    int rv = d.owner(root);
    discover(root);
    t.code = rv < d.tri ? "T" : "U" + d.colors[rv - d.tri];

    auto local = [&](int slot) {
        int w = d.owner(slot);
        if (w >= d.tri) return 0;
        return ((slot - 3 * w) - (t.entry[w] - 3 * w) + 3) % 3;
    };

    for (std::size_t i = 0; i < t.order.size(); ++i) {
        int v = t.order[i];
        int e = t.entry[v];
        std::vector<int> out;
        if (v < d.tri) {
            int base = 3 * v, rel = e - base;
            if (i == 0) out = {e, base + (rel + 1) % 3, base + (rel + 2) % 3};
            else out = {base + (rel + 1) % 3, base + (rel + 2) % 3};
        } else if (i == 0) {
            out = {e};
        }
        for (int s : out) {
            int m = d.pairing[s];
            int w = d.owner(m);
            t.code += '|';
            if (id[w] == -1) {
                discover(m);
                t.code += w < d.tri ? "T" : "U" + d.colors[w - d.tri];
            } else {
                t.code += 'B';
                t.code += std::to_string(id[w]);
                t.code += '.';
                t.code += std::to_string(local(m));
            }
        }
    }
    return t;
}

}  // namespace

ConnectedDiagram ConnectedDiagram::canonicalize(const RawDiagram& raw) {
    Dense d = densify(raw);

    Traversal best;
    for (int root = 0; root < d.slots(); ++root) {
        Traversal t = traverse(d, root);
        if (best.code.empty() || t.code < best.code) best = std::move(t);
    }

    // Renumber: trivalent vertices and legs separately, both in discovery
    // order; each trivalent vertex is rotated so its entry slot becomes its
    // local slot 0.
    std::vector<int> new_tri(d.vertices(), -1), new_leg(d.vertices(), -1);
    int nt = 0, nl = 0;
    for (int v : best.order) {
        if (v < d.tri) new_tri[v] = nt++;
        else new_leg[v] = nl++;
    }
    assert(nt == d.tri);

    auto new_slot = [&](int slot) {
        int w = d.owner(slot);
        if (w < d.tri) {
            int rel = (slot - 3 * w - (best.entry[w] - 3 * w) + 3) % 3;
            return 3 * new_tri[w] + rel;
        }
        return 3 * d.tri + new_leg[w];
    };

    ConnectedDiagram out;
    out.tri_count_ = d.tri;
    out.leg_colors_.resize(d.colors.size());
    for (int v : best.order)
        if (v >= d.tri) out.leg_colors_[new_leg[v]] = d.colors[v - d.tri];
    out.pairing_.assign(d.slots(), -1);
    for (int s = 0; s < d.slots(); ++s) out.pairing_[new_slot(s)] = new_slot(d.pairing[s]);
    out.key_ = std::move(best.code);
    return out;
}

std::map<std::string, int> ConnectedDiagram::legs_by_color() const {
    std::map<std::string, int> counts;
    for (const auto& c : leg_colors_) ++counts[c];
    return counts;
}

RawDiagram ConnectedDiagram::to_raw() const {
    RawDiagram raw;
    for (int v = 0; v < tri_count_; ++v) raw.add_trivalent(v);
    for (int j = 0; j < leg_count(); ++j) raw.add_leg(tri_count_ + j, leg_colors_[j]);
    for (int s = 0; s < slot_count(); ++s) {
        int m = pairing_[s];
        if (m < s) continue;
        auto end = [&](int slot) {
            if (slot < 3 * tri_count_) return RawEnd{slot / 3, slot % 3};
            return RawEnd{tri_count_ + (slot - 3 * tri_count_), 0};
        };
        raw.edges.push_back({end(s), end(m)});
    }
    return raw;
}

DiagramPtr make_strut(const std::string& c1, const std::string& c2) {
    RawDiagram raw;
    raw.add_leg(0, c1);
    raw.add_leg(1, c2);
    raw.add_edge(0, 0, 1, 0);
    return make_diagram(raw);
}

}  // namespace utd
