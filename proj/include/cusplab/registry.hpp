#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cusplab/errors.hpp"

namespace cusplab {

// Ordered list of variable names; the order fixes the term order and the
// exponent-vector layout of every polynomial built over it.
class VariableRegistry {
public:
    explicit VariableRegistry(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw error("duplicate variable name: " + names_[i]);
    }

    int arity() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        throw unknown_variable_error("unknown variable '" + n + "'");
    }
    bool has(const std::string& n) const {
        for (const auto& x : names_)
            if (x == n) return true;
        return false;
    }

    bool operator==(const VariableRegistry& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

inline RegistryPtr make_registry(std::vector<std::string> names) {
    return std::make_shared<VariableRegistry>(std::move(names));
}

} // namespace cusplab
