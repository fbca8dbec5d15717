#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "utd/errors.hpp"

namespace utd {

/// Leg colors are short identifier tokens ordered lexicographically.
/// Internally the gluing engine also uses tagged pseudo-colors ("<y", ">y")
/// for in-flight legs; those never pass through this check.
inline bool is_valid_color_token(const std::string& token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

using Color = std::string;

/// Finite ordered set of leg colors. Stored sorted; may be empty (the color
/// set of trivalent graphs).
class ColorSet {
public:
    ColorSet() = default;

    explicit ColorSet(std::vector<Color> colors) : colors_(std::move(colors)) {
        for (const auto& c : colors_) {
            if (!is_valid_color_token(c))
                throw InvalidDiagram("invalid color token: '" + c + "'");
        }
        std::sort(colors_.begin(), colors_.end());
        if (std::adjacent_find(colors_.begin(), colors_.end()) != colors_.end())
            throw InvalidDiagram("duplicate color in color set");
    }

    const std::vector<Color>& colors() const { return colors_; }
    bool empty() const { return colors_.empty(); }
    std::size_t size() const { return colors_.size(); }

    bool contains(const Color& c) const {
        return std::binary_search(colors_.begin(), colors_.end(), c);
    }

    /// True when every color of `other` is contained in this set.
    bool contains_all(const ColorSet& other) const {
        for (const auto& c : other.colors())
            if (!contains(c)) return false;
        return true;
    }

    /// Set difference, preserving order.
    ColorSet minus(const ColorSet& other) const {
        std::vector<Color> rest;
        for (const auto& c : colors_)
            if (!other.contains(c)) rest.push_back(c);
        return ColorSet(std::move(rest));
    }

    bool operator==(const ColorSet& o) const { return colors_ == o.colors_; }
    bool operator!=(const ColorSet& o) const { return !(*this == o); }

private:
    std::vector<Color> colors_;
};

}  // namespace utd
