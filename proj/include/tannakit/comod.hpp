#pragma once

#include <memory>
#include <vector>

#include "tannakit/hopf.hpp"

namespace tannakit {

/// Right comodule (V, ρ: V -> V ⊗ O). The coaction matrix has dim·dim(O)
/// rows with the row-major pairing (v-index, o-index).
struct Comodule {
    std::size_t dim = 0;
    HopfPtr algebra;
    Matrix coaction;
};

using ComodPtr = std::shared_ptr<const Comodule>;

/// Builds a comodule and verifies the coassociativity square and counit
/// triangle exactly; throws on failure.
ComodPtr make_comodule(HopfPtr algebra, Matrix coaction);

/// True iff both comodule axioms hold.
bool comodule_axioms_hold(const Comodule& c);

/// ρ(v) = v ⊗ 1 on an n-dimensional space.
ComodPtr trivial_comodule(const HopfPtr& o, std::size_t n);

/// O coacting on itself by the coproduct.
ComodPtr regular_comodule(const HopfPtr& o);

/// Comodule over function_algebra(g) from representation matrices, one per
/// group element: ρ(v) = Σ_g M_g v ⊗ x^g. Checks M_e = id and
/// M_g M_h = M_{gh}, reporting a witnessing pair on failure.
ComodPtr rep_from_matrices(const GroupPtr& g, const std::vector<Matrix>& images,
                           const FieldSpec& field);

/// Slices the coaction back into one matrix per basis element of O.
std::vector<Matrix> matrices_from_comodule(const Comodule& c);

/// Colinear map between comodules over the same algebra.
struct ComoduleMap {
    ComodPtr source;
    ComodPtr target;
    Matrix matrix;
};

/// Verifies colinearity exactly; throws on failure.
ComoduleMap make_comodule_map(ComodPtr source, ComodPtr target, Matrix matrix);

bool is_colinear(const Comodule& source, const Comodule& target, const Matrix& matrix);

/// Basis of Hom(x, y): columns are row-major flattenings of the colinear
/// maps, echelon-normalized for reproducibility.
Matrix hom_space(const Comodule& x, const Comodule& y);

/// The same basis as ComoduleMaps.
std::vector<ComoduleMap> hom_basis(const ComodPtr& x, const ComodPtr& y);

/// Reads one flattened hom_space column back as a dim(y) x dim(x) matrix.
Matrix unflatten_map(const Matrix& column, std::size_t target_dim, std::size_t source_dim);
Matrix flatten_map(const Matrix& m);

/// Diagonal coaction on x ⊗ y; requires a commutative algebra.
ComodPtr tensor_comodule(const ComodPtr& x, const ComodPtr& y);

/// Dual comodule: coefficient matrix transposed on the module indices with
/// the antipode applied to the algebra index.
ComodPtr dual_comodule(const ComodPtr& x);

/// Direct sum with block coaction.
ComodPtr direct_sum_comodule(const ComodPtr& x, const ComodPtr& y);

/// Coaction pushed along a map of Hopf algebras phi: O -> O' (applied to the
/// algebra leg); used for restriction along q* and inflation along f*.
ComodPtr corestrict(const Comodule& c, const HopfPtr& target_algebra, const Matrix& phi);

struct SubComodule {
    ComoduleMap inclusion;
    ComodPtr object;
};

struct QuotientComodule {
    ComoduleMap projection;
    ComodPtr object;
};

/// Subcomodule spanned by the given columns (must be coaction-stable).
SubComodule sub_comodule(const ComodPtr& x, const Matrix& span);

/// Quotient by a coaction-stable column span.
QuotientComodule quotient_comodule(const ComodPtr& x, const Matrix& span);

struct Invariants {
    Matrix sub;        // columns span {v : ρ(v) = v ⊗ 1}
    ComodPtr as_comodule;  // trivial comodule of the same rank
};

Invariants invariants(const Comodule& x);

/// The largest subobject of x on which the normal subgroup l acts trivially,
/// with its inherited action (which is checked to factor through G/l).
SubComodule largest_s_subobject(const ComodPtr& x, const GroupPtr& g, const Subgroup& l);

/// Dimension of the largest quotient of x with trivial l-action, computed
/// independently of largest_s_subobject via the span of (M_l - id) columns.
std::size_t largest_s_quotient_dim(const Comodule& x, const GroupPtr& g, const Subgroup& l);

/// Searches the hom space for an invertible element: basis elements first,
/// then pair sums, then a fixed pseudorandom sweep of small combinations.
/// Deterministic; returns nullopt when no isomorphism is found.
std::optional<ComoduleMap> find_isomorphism(const ComodPtr& x, const ComodPtr& y);

}  // namespace tannakit
