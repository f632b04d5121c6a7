#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tannakit/exactlin.hpp"
#include "tannakit/groups.hpp"

namespace tannakit {

/// Finite-dimensional Hopf algebra as structure-constant matrices. Maps act
/// on column vectors; tensor squares use the row-major pairing of exactlin,
/// so mult is dim x dim^2, comult is dim^2 x dim and so on.
struct HopfAlgebra {
    std::size_t dim = 0;
    FieldSpec field;
    Matrix mult;      // O ⊗ O -> O
    Matrix unit;      // k -> O
    Matrix comult;    // O -> O ⊗ O
    Matrix counit;    // O -> k
    Matrix antipode;  // O -> O
    std::vector<std::string> basis_labels;

    bool is_commutative() const;
    /// Left multiplication by the i-th basis element as a dim x dim matrix.
    Matrix left_mult(std::size_t i) const;
    /// Counit value on the i-th basis element.
    Scalar counit_on(std::size_t i) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Structural equality of the tensors (same field, dim and maps).
bool same_hopf(const HopfAlgebra& a, const HopfAlgebra& b);

/// Group algebra k[G]: basis indexed by group elements, grouplike coproduct.
HopfPtr group_algebra(const GroupPtr& g, const FieldSpec& field);

/// Function algebra O(G) = k[G]^*: basis of indicator functions x^g with
/// pointwise product, unit Σ_g x^g, Δ(x^g) = Σ_h x^h ⊗ x^{h^{-1}g},
/// ε(x^g) = δ_{g,e} and antipode x^g -> x^{g^{-1}}.
HopfPtr function_algebra(const GroupPtr& g, const FieldSpec& field);

/// Dual Hopf algebra: all structure tensors transposed.
HopfPtr dual_hopf(const HopfPtr& h);

struct AxiomCheck {
    std::string family;
    bool pass = false;
    std::string witness;  // empty when the check passes
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
};

/// Verifies the seven Hopf axiom families exactly: associativity, unit laws,
/// coassociativity, counit laws, coproduct multiplicativity, counit
/// multiplicativity, antipode law.
AxiomReport check_axioms(const HopfAlgebra& h);

struct IntegralElement {
    Matrix vector;  // dim x 1 column
    HopfPtr algebra;
};

/// Solves a·x = ε(a)·x over all basis elements a. Throws if the solution
/// space is not one-dimensional; the result is echelon-normalized (leading
/// coordinate one).
IntegralElement find_integral(const HopfPtr& h);

/// The Hopf-algebra picture of a normal subgroup: O(G) -> O(L) is the
/// coordinate projection q*, and O(A) for A = G/L embeds by f* sending a
/// coset indicator to the sum of its members' indicators.
struct HopfSurjection {
    HopfPtr oG;
    HopfPtr oL;
    Matrix q_star;  // dim O(L) x dim O(G)
    Matrix f_star;  // dim O(G) x dim O(A)
};

HopfSurjection hopf_surjection_from_quotient(const GroupPtr& g, const Subgroup& l,
                                             const FieldSpec& field);

}  // namespace tannakit
