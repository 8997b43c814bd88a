#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homlie/errors.hpp"

namespace homlie {

/// Index of a named parameter within its registry.
struct ParamId {
    int index = -1;

    friend bool operator==(ParamId a, ParamId b) { return a.index == b.index; }
    friend bool operator!=(ParamId a, ParamId b) { return a.index != b.index; }
    friend bool operator<(ParamId a, ParamId b) { return a.index < b.index; }
};

/// Append-only table of parameter names. Registration order is significant:
/// it fixes the monomial order and the solver's column order.
class ParamRegistry {
  public:
    /// Returns the existing id for `name` or registers it.
    ParamId intern(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return ParamId{it->second};
        int idx = static_cast<int>(names_.size());
        names_.push_back(name);
        index_.emplace(name, idx);
        return ParamId{idx};
    }

    std::optional<ParamId> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return ParamId{it->second};
    }

    const std::string& name(ParamId id) const {
        if (id.index < 0 || id.index >= static_cast<int>(names_.size()))
            throw InputError("parameter id out of range");
        return names_[static_cast<std::size_t>(id.index)];
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using Registry = std::shared_ptr<ParamRegistry>;
using RegistryView = std::shared_ptr<const ParamRegistry>;

inline void require_same_registry(const RegistryView& a, const RegistryView& b) {
    if (a.get() != b.get()) throw InputError("parameter registry mismatch");
}

}  // namespace homlie
