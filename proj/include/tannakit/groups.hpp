#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tannakit/exactlin.hpp"

namespace tannakit {

/// Finite group given by its multiplication table. table[i][j] is the index
/// of g_i * g_j. Instances only exist after all four group axioms have been
/// checked; construct through validate_group or catalog.
struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<std::size_t>> table;
    std::size_t identity = 0;
    std::string name;

    std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
    std::size_t inv(std::size_t i) const;
    bool is_abelian() const;
    std::size_t label_index(const std::string& label) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct GroupAxiomError : std::runtime_error {
    std::string axiom;
    std::vector<std::size_t> witness;
    GroupAxiomError(std::string axiom, std::vector<std::size_t> witness, const std::string& what)
        : std::runtime_error(what), axiom(std::move(axiom)), witness(std::move(witness)) {}
};

/// Checks closure, associativity, identity and inverses; throws
/// GroupAxiomError naming the first failing axiom with witnessing indices.
/// Orders above the cap (default 64, env TANNAKIT_MAX_GROUP_ORDER) are
/// rejected because associativity is checked by the full triple loop.
GroupPtr validate_group(const std::vector<std::vector<std::size_t>>& table,
                        const std::vector<std::string>& labels, std::size_t identity,
                        const std::string& name = "");

/// Subgroup as a sorted set of parent indices.
struct Subgroup {
    GroupPtr parent;
    std::vector<std::size_t> members;

    std::size_t order() const { return members.size(); }
    bool contains(std::size_t g) const;
    /// Position of parent index g within members.
    std::size_t position(std::size_t g) const;
    /// The subgroup as a standalone group; element order follows members.
    GroupPtr as_group() const;
};

/// Builds a subgroup from parent indices, checking closure/identity/inverses.
Subgroup make_subgroup(const GroupPtr& g, std::vector<std::size_t> members);

/// Subgroup generated by the given elements.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<std::size_t>& generators);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

struct QuotientGroup {
    GroupPtr group;                           // the quotient G/H
    std::vector<std::vector<std::size_t>> cosets;  // partition of parent indices
    std::vector<std::size_t> projection;      // parent index -> quotient index
};

/// Coset group of a normal subgroup. Cosets are ordered by their smallest
/// member; the identity coset comes first by construction.
QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& h);

/// Named small groups: C1..C8, S3, D4, Q8. Element order is fixed: identity
/// first, then powers of the generators in presentation order (see groups.cpp).
GroupPtr catalog(const std::string& name);

std::vector<std::string> catalog_names();

/// All subgroups, found by closing every subset of generators (order <= 8 in
/// practice; intended for catalog-scale groups).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

Subgroup center(const GroupPtr& g);

}  // namespace tannakit
