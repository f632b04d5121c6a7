#pragma once

#include <string>
#include <vector>

#include "tannakit/comod.hpp"

namespace tannakit {

/// Representation matrices of every ±1-valued character, trivial first, then
/// in lexicographic order of the value vectors. Over F2 only the trivial
/// character survives.
std::vector<std::vector<Scalar>> pm1_characters(const GroupPtr& g, const FieldSpec& field);

ComodPtr character_comodule(const GroupPtr& g, const std::vector<Scalar>& values);

/// Rational two-dimensional standard representation of S3 or D4
/// (r acts by a rotation-like matrix, s by a reflection), or the
/// four-dimensional quaternion representation of Q8. Throws for other groups.
ComodPtr standard_rep(const GroupPtr& g, const FieldSpec& field);

bool has_standard_rep(const GroupPtr& g);

struct BatteryItem {
    std::string name;
    ComodPtr comodule;
};

/// Fixed, documented comodule battery for a group: the unit object, every
/// ±1 character, the standard representation when the group has one, and the
/// regular comodule. Order and membership only depend on (group, field).
std::vector<BatteryItem> group_battery(const GroupPtr& g, const FieldSpec& field);

/// Version tag recorded in verification report headers.
std::string battery_version();

}  // namespace tannakit
