#pragma once

#include "hext/structure.hpp"

namespace hext {

/// True iff every tuple of every source relation maps coordinatewise into
/// the corresponding target relation. Throws ValidationError when the
/// structures disagree on signature, the map is not total on the source
/// domain, or some image lies outside the target domain.
bool is_homomorphism(const TotalMap& map, const RelationalStructure& source,
                     const RelationalStructure& target);

/// True iff the total map agrees with every binding of the partial
/// assignment.
bool is_extension(const TotalMap& map, const PartialAssignment& partial);

/// Appends, for each domain element a, the unary relation {(a)}.
RelationalStructure add_constant_relations(const RelationalStructure& target);

}  // namespace hext
