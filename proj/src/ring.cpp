#include "netalg/ring.hpp"

namespace netalg {

std::shared_ptr<const VariableRing> VariableRing::create(std::vector<std::string> names,
                                                         std::vector<VarTag> tags) {
    if (tags.empty()) tags.assign(names.size(), VarTag::Auxiliary);
    if (tags.size() != names.size())
        throw MalformedInputError("VariableRing: tags/names length mismatch");
    std::size_t t_count = 0;
    for (const auto &tag : tags)
        if (tag == VarTag::SaturationT) ++t_count;
    if (t_count > 1) throw MalformedInputError("VariableRing: more than one saturation-t variable");
    return std::shared_ptr<const VariableRing>(new VariableRing(std::move(names), std::move(tags)));
}

VariableRing::VariableRing(std::vector<std::string> names, std::vector<VarTag> tags)
    : names_(std::move(names)), tags_(std::move(tags)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw MalformedInputError("VariableRing: empty variable name");
        auto [it, inserted] = index_.emplace(names_[i], i);
        if (!inserted) throw MalformedInputError("VariableRing: duplicate variable name " + names_[i]);
    }
}

std::optional<std::size_t> VariableRing::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace netalg
