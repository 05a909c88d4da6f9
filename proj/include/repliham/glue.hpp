#ifndef REPLIHAM_GLUE_HPP
#define REPLIHAM_GLUE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "repliham/errors.hpp"

namespace repliham {

// Interned glue label. Ids are local to one StrengthFunction.
using GlueId = uint16_t;
inline constexpr GlueId kNoGlue = 0xffff;

// str : labels -> Z, plus a set of labels treated as unbreakable bonds.
// Infinite labels carry no numeric strength; the cut machinery fuses
// tiles joined by them instead of summing some large stand-in value.
class StrengthFunction {
public:
    GlueId add(std::string_view label, int strength, bool infinite = false) {
        if (auto it = index_.find(std::string(label)); it != index_.end()) {
            if (strengths_[it->second] != strength || infinite_[it->second] != infinite)
                throw ConfigError("glue '" + std::string(label) + "' redefined with a different strength");
            return it->second;
        }
        GlueId id = static_cast<GlueId>(names_.size());
        names_.emplace_back(label);
        strengths_.push_back(strength);
        infinite_.push_back(infinite);
        index_.emplace(names_.back(), id);
        return id;
    }

    std::optional<GlueId> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    GlueId require(std::string_view label) const {
        auto id = find(label);
        if (!id) throw ConfigError("unknown glue label '" + std::string(label) + "'");
        return *id;
    }

    int strength(GlueId id) const { return strengths_.at(id); }
    bool is_infinite(GlueId id) const { return infinite_.at(id); }
    const std::string& name(GlueId id) const { return names_.at(id); }
    size_t size() const { return names_.size(); }

    // Diagonal glue function: only equal labels interact; a missing glue or a
    // label mismatch contributes zero. Infinite pairs are reported by the
    // caller-facing helpers below, never as a number.
    bool faces_bond(std::optional<GlueId> a, std::optional<GlueId> b) const {
        return a && b && *a == *b;
    }
    bool bond_is_infinite(std::optional<GlueId> a, std::optional<GlueId> b) const {
        return faces_bond(a, b) && is_infinite(*a);
    }
    int bond_strength(std::optional<GlueId> a, std::optional<GlueId> b) const {
        if (!faces_bond(a, b)) return 0;
        if (is_infinite(*a))
            throw ConfigError("bond_strength on infinite glue '" + name(*a) + "'");
        return strength(*a);
    }

private:
    std::vector<std::string> names_;
    std::vector<int> strengths_;
    std::vector<char> infinite_;
    std::unordered_map<std::string, GlueId> index_;
};

}  // namespace repliham

#endif
