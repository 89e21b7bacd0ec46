#pragma once

// The clips operator  [A] o [B] = { [A ∩ g B g^-1] : g in SO(3) }.

#include "symclass/subgroup.hpp"

namespace symclass {

enum class ClipsTable {
  // Every class realized by some conjugator, as confirmed by the rotation
  // oracle. This is the default everywhere.
  Geometric,
  // The published closed-form table, kept for comparison. It omits a few
  // realizable intersections; see published_table_gaps().
  Published,
};

ClassSet clips_pair(const SubgroupClass& a, const SubgroupClass& b,
                    ClipsTable table = ClipsTable::Geometric);

// Union of clips_pair over all pairs drawn from the two sets.
ClassSet clips_sets(const ClassSet& lhs, const ClassSet& rhs,
                    ClipsTable table = ClipsTable::Geometric);

// Classes present in the geometric result but absent from the published one.
ClassSet published_table_gaps(const SubgroupClass& a, const SubgroupClass& b);

ClipsTable parse_clips_table(std::string_view name);
std::string_view to_string(ClipsTable table);

} // namespace symclass
