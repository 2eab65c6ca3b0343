#pragma once

#include "ehf/bispider.hpp"
#include "ehf/gen.hpp"
#include "ehf/tisehf.hpp"

namespace ehf::test {

// The instance state of the solver branch whose guessed structures match
// the planted ones: planted W externalized under the planted white map,
// planted X anchored under the planted red map.
inline tisehf::Instance planted_branch_instance(const gen::PlantedInstance& pi) {
    auto pre = tisehf::make_instance(pi.graph, pi.parts);
    auto i1 = tisehf::clean_white(pre, pi.white_structure, pi.planted_w);
    if (!i1) throw std::logic_error("planted white cleaning pruned");
    auto i2 = tisehf::clean_red(*i1, pi.red_structure, pi.planted_x);
    if (!i2) throw std::logic_error("planted red cleaning pruned");
    return *i2;
}

// Eligible members per part, for brute-force comparisons.
inline CliquePartition eligible_parts(const tisehf::Instance& inst) {
    CliquePartition parts;
    for (int i = 1; i <= inst.label_count(); ++i) parts.push_back(inst.eligible(i));
    return parts;
}

} // namespace ehf::test
