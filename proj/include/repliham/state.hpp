#ifndef REPLIHAM_STATE_HPP
#define REPLIHAM_STATE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "repliham/assembly.hpp"

namespace repliham {

using SpeciesId = uint32_t;

// Multiplicity in N ∪ {∞}. Infinity absorbs increments and decrements.
struct Count {
    static constexpr uint64_t kInf = ~0ull;
    uint64_t v = 0;

    static Count infinite() { return {kInf}; }
    static Count of(uint64_t n) { return {n}; }
    bool is_infinite() const { return v == kInf; }
    Count plus(uint64_t n) const { return is_infinite() ? *this : Count{v + n}; }
    Count minus(uint64_t n) const {
        if (is_infinite()) return *this;
        if (v < n) throw InternalError("multiset count underflow");
        return Count{v - n};
    }
    friend bool operator==(Count a, Count b) = default;
};

// Interned assemblies; ids are assigned in discovery order, which keeps every
// downstream ordering deterministic.
class SpeciesTable {
public:
    SpeciesId intern(const Assembly& a) {
        auto it = ids_.find(a);
        if (it != ids_.end()) return it->second;
        SpeciesId id = static_cast<SpeciesId>(by_id_.size());
        auto [node, inserted] = ids_.emplace(a, id);
        by_id_.push_back(&node->first);
        return id;
    }

    const Assembly& get(SpeciesId id) const { return *by_id_.at(id); }
    size_t size() const { return by_id_.size(); }

private:
    std::unordered_map<Assembly, SpeciesId, AssemblyHash> ids_;
    std::vector<const Assembly*> by_id_;
};

// A state: assemblies with multiplicities; absent means zero.
class SystemState {
public:
    const std::map<SpeciesId, Count>& counts() const { return counts_; }

    Count count(SpeciesId s) const {
        auto it = counts_.find(s);
        return it == counts_.end() ? Count{0} : it->second;
    }

    void set(SpeciesId s, Count c) {
        if (c.v == 0)
            counts_.erase(s);
        else
            counts_[s] = c;
    }

    void add(SpeciesId s, Count c) {
        if (c.v == 0) return;
        auto it = counts_.find(s);
        if (it == counts_.end())
            counts_[s] = c;
        else if (c.is_infinite())
            it->second = Count::infinite();
        else
            it->second = it->second.plus(c.v);
    }

    void remove_one(SpeciesId s) {
        auto it = counts_.find(s);
        if (it == counts_.end()) throw InternalError("removing from an absent species");
        it->second = it->second.minus(1);
        if (it->second.v == 0) counts_.erase(it);
    }

    bool empty() const { return counts_.empty(); }
    friend bool operator==(const SystemState& a, const SystemState& b) = default;

private:
    std::map<SpeciesId, Count> counts_;
};

}  // namespace repliham

#endif
