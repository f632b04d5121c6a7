#pragma once

#include "tannakit/battery.hpp"
#include "tannakit/comod.hpp"

namespace tannakit {

/// Everything attached to a normal subgroup l of g over a fixed field:
/// the three function algebras, the projection q* and the embedding f*.
struct QuotientDatum {
    GroupPtr g;
    Subgroup l;
    QuotientGroup quotient;
    HopfPtr oG;
    HopfPtr oL;
    HopfPtr oA;
    Matrix q_star;  // O(G) -> O(L)
    Matrix f_star;  // O(A) -> O(G)

    const FieldSpec& field() const { return oG->field; }
};

QuotientDatum make_quotient_datum(const GroupPtr& g, const Subgroup& l, const FieldSpec& field);

/// Restriction along q*: same space, coaction pushed into O(L).
ComodPtr restrict_comodule(const QuotientDatum& d, const ComodPtr& v);

/// Inflation along f*: an O(A)-comodule viewed over O(G).
ComodPtr inflate_comodule(const QuotientDatum& d, const ComodPtr& u);

/// The induced comodule: equalizer of ρ_U ⊗ id and (id ⊗ q* ⊗ id)(id ⊗ Δ)
/// inside U ⊗ O(G), carrying the coaction id ⊗ Δ.
struct CotensorResult {
    ComodPtr induced;   // over O(G)
    Matrix embedding;   // induced -> U ⊗ O(G)
};

CotensorResult cotensor(const QuotientDatum& d, const ComodPtr& u);

/// Functorial action on maps: a colinear u -> u' induces a map of the
/// induced comodules.
ComoduleMap cotensor_map(const QuotientDatum& d, const CotensorResult& cu,
                         const CotensorResult& cu2, const ComoduleMap& phi);

/// The counit restrict(cotensor(u)) -> u, v ⊗ h -> v ε(h).
ComoduleMap counit_eps(const QuotientDatum& d, const ComodPtr& u, const CotensorResult& cu);

struct AdjunctionReport {
    std::size_t dim_hom_g = 0;  // Hom_G(v, cotensor(u))
    std::size_t dim_hom_l = 0;  // Hom_L(restrict(v), u)
    bool bijective = false;
    bool pass() const { return dim_hom_g == dim_hom_l && bijective; }
};

/// Checks that composing with the counit carries a basis of
/// Hom_G(v, cotensor(u)) onto a basis of Hom_L(restrict(v), u).
AdjunctionReport adjunction_check(const QuotientDatum& d, const ComodPtr& v, const ComodPtr& u);

/// The generating-case isomorphism O(G) ⊗_{O(A)} O(G) ≅ O(L) ⊗ O(G),
/// g ⊗ h -> Σ q*(g_(1)) ⊗ g_(2) h, with explicit inverse
/// l ⊗ h -> Σ l_(1) ⊗ ι(l_(2)) h computed on the balanced-tensor quotient.
struct TakeuchiPair {
    Matrix phi;  // quotient -> O(L) ⊗ O(G)
    Matrix psi;  // O(L) ⊗ O(G) -> quotient
    std::size_t quotient_dim = 0;
    bool identities_hold = false;  // phi psi = id and psi phi = id
};

TakeuchiPair takeuchi_phi(const QuotientDatum& d);

/// Instance of the same isomorphism with a general induced comodule:
/// (cotensor(u)) ⊗_{O(A)} O(G) -> u ⊗ O(G). Returns true iff bijective.
bool takeuchi_instance_holds(const QuotientDatum& d, const ComodPtr& u);

/// Explicit colinear isomorphism cotensor(restrict(v)) -> v ⊗ O(A)
/// (diagonal action on the target, O(A) carried by f*).
ComoduleMap ind_res_iso(const QuotientDatum& d, const ComodPtr& v);

/// O(A) with the G-coaction inherited from the inclusion f*.
ComodPtr oa_as_comodule(const QuotientDatum& d);

/// Short exact sequence of comodules over one algebra.
struct ShortExactSequence {
    std::string name;
    ComoduleMap inclusion;   // u' -> u
    ComoduleMap projection;  // u -> u''
};

/// Deterministic list of short exact sequences drawn from a battery of
/// L-comodules (invariant subobjects, images of hom bases, split sums).
std::vector<ShortExactSequence> battery_short_exact_sequences(const std::vector<BatteryItem>& items);

/// L-side battery for a datum: restrictions of the G-battery plus the
/// regular O(L)-comodule and the ±1 characters of L.
std::vector<BatteryItem> l_battery(const QuotientDatum& d);

}  // namespace tannakit
