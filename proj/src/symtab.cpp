#include "distgeom/symtab.hpp"

#include <algorithm>

namespace distgeom {

SymbolTable::SymbolTable(std::vector<std::string> names, std::size_t s_index, std::size_t t_index)
    : names_(std::move(names)), s_index_(s_index), t_index_(t_index) {
    if (names_.size() > kMaxSymbols)
        throw std::invalid_argument("symbol table exceeds capacity");
    if (s_index_ >= names_.size() || t_index_ >= names_.size() || s_index_ == t_index_)
        throw std::invalid_argument("bad curve variable indices");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate symbol: " + names_[i]);

    by_priority_.push_back(s_index_);
    by_priority_.push_back(t_index_);
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (i != s_index_ && i != t_index_) by_priority_.push_back(i);
    priority_.resize(names_.size());
    for (std::size_t rank = 0; rank < by_priority_.size(); ++rank)
        priority_[by_priority_[rank]] = rank;
}

std::shared_ptr<const SymbolTable> SymbolTable::make(const std::string& s_name,
                                                     const std::string& t_name,
                                                     const std::vector<std::string>& params) {
    std::vector<std::string> names{s_name, t_name};
    names.insert(names.end(), params.begin(), params.end());
    return std::make_shared<const SymbolTable>(std::move(names), 0, 1);
}

std::optional<std::size_t> SymbolTable::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t SymbolTable::index_of(const std::string& name) const {
    auto idx = find(name);
    if (!idx) throw std::invalid_argument("unknown symbol: " + name);
    return *idx;
}

}  // namespace distgeom
