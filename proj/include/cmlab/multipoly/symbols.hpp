#pragma once

// Process-wide table of variable names. Ids fix the monomial order: a variable
// with a smaller id is more significant in lex comparisons and prints first.
// The common parameter and invariant names are registered up front so that
// printing does not depend on the order in which a program first uses them.

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cmlab {

constexpr int kMaxVars = 64;

class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable t;
        return t;
    }

    int id(const std::string& name) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        return add_locked(name);
    }

    std::optional<int> find(const std::string& name) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = ids_.find(name);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    std::string name(int id) const {
        std::lock_guard<std::mutex> lk(mu_);
        if (id < 0 || id >= static_cast<int>(names_.size())) throw std::out_of_range("unknown symbol id");
        return names_[id];
    }

private:
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> ids_;

    SymbolTable() {
        std::vector<std::string> pre = {"T", "A", "B"};
        for (int i = 1; i <= 8; ++i) pre.push_back("C" + std::to_string(i));
        for (int i = 0; i <= 8; ++i) pre.push_back("K" + std::to_string(i));
        for (const char* s : {"Ks0", "Ks1", "Kt0", "Kt1", "a", "b", "sigma", "pi", "Sigma", "Pi", "X", "Y", "x", "y",
                              "t", "u", "e"})
            pre.push_back(s);
        for (const auto& s : pre) add_locked(s);
    }

    int add_locked(const std::string& name) {
        if (static_cast<int>(names_.size()) >= kMaxVars)
            throw std::length_error("too many distinct polynomial variables (limit " + std::to_string(kMaxVars) + ")");
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }
};

inline int symbol(const std::string& name) { return SymbolTable::instance().id(name); }
inline std::string symbol_name(int id) { return SymbolTable::instance().name(id); }

}  // namespace cmlab
