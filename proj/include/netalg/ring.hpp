#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "netalg/errors.hpp"

namespace netalg {

// Role of a variable inside an analysis ring.
enum class VarTag {
    SaturationT, // the t of 1 - t*D
    UnknownX,    // a free transfer-function entry
    ClosedLoopG, // a fresh closed-loop entry g_ij
    Auxiliary,   // anything else (constraint saturation vars, ...)
};

// An ordered list of named variables. Polynomials hold a shared pointer to
// their ring; values from different ring instances never mix.
class VariableRing {
  public:
    static std::shared_ptr<const VariableRing> create(std::vector<std::string> names,
                                                      std::vector<VarTag> tags = {});

    std::size_t arity() const { return names_.size(); }
    const std::string &name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string> &names() const { return names_; }
    VarTag tag(std::size_t i) const { return tags_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

  private:
    VariableRing(std::vector<std::string> names, std::vector<VarTag> tags);

    std::vector<std::string> names_;
    std::vector<VarTag> tags_;
    std::unordered_map<std::string, std::size_t> index_;
};

using RingPtr = std::shared_ptr<const VariableRing>;

} // namespace netalg
