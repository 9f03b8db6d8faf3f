#ifndef DISTGEOM_SYMTAB_HPP
#define DISTGEOM_SYMTAB_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace distgeom {

// Ordered list of symbol names with a designated pair of curve variables.
// The monomial order ranks the curve variables first (s, then t), then the
// remaining symbols in table order.
class SymbolTable {
public:
    static constexpr std::size_t kMaxSymbols = 16;

    SymbolTable(std::vector<std::string> names, std::size_t s_index, std::size_t t_index);

    // Convenience: curve variables first, then parameters.
    static std::shared_ptr<const SymbolTable> make(const std::string& s_name,
                                                   const std::string& t_name,
                                                   const std::vector<std::string>& params);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::size_t s_index() const { return s_index_; }
    std::size_t t_index() const { return t_index_; }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;

    // Rank of variable i in the monomial order (0 = highest).
    std::size_t priority(std::size_t i) const { return priority_[i]; }
    // Variable with the given rank.
    std::size_t var_at_priority(std::size_t rank) const { return by_priority_[rank]; }

    bool operator==(const SymbolTable& other) const {
        return names_ == other.names_ && s_index_ == other.s_index_ && t_index_ == other.t_index_;
    }

private:
    std::vector<std::string> names_;
    std::size_t s_index_;
    std::size_t t_index_;
    std::vector<std::size_t> priority_;
    std::vector<std::size_t> by_priority_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace distgeom

#endif
