#pragma once

#include "tannakit/induction.hpp"

namespace tannakit {

/// Raised when a construction needs the separable case (characteristic of
/// the field must not divide the relevant algebra dimension).
struct EtaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Working data for the quotient category attached to a datum: O(A) as a
/// G-comodule together with its algebra structure maps, all verified to be
/// equivariant.
struct QuotientContext {
    QuotientDatum datum;
    ComodPtr oa;        // O(A) with the G-coaction through f*
    Matrix mult_oa;     // O(A) ⊗ O(A) -> O(A)
    Matrix unit_oa;     // k -> O(A)
    Matrix counit_oa;   // O(A) -> k
    bool etale = false;

    const FieldSpec& field() const { return datum.field(); }
    std::size_t na() const { return datum.oA->dim; }
};

/// Builds the context; with require_etale the characteristic must not divide
/// |G/L| (EtaleError otherwise).
QuotientContext make_quotient_context(const QuotientDatum& d, bool require_etale = true);

/// Object of the quotient category: a triple (X, Y, f: X -> Y ⊗ O(A)) with
/// f equivariant for the diagonal coaction on the target.
struct QuotientObject {
    ComodPtr x;
    ComodPtr y;
    Matrix f;  // (y.dim * na) x x.dim
};

QuotientObject make_quotient_object(const QuotientContext& ctx, ComodPtr x, ComodPtr y, Matrix f);

bool same_object(const QuotientObject& a, const QuotientObject& b);

/// The O(A)-linear extension f̂ = (id ⊗ m)(f ⊗ id): X ⊗ O(A) -> Y ⊗ O(A).
Matrix f_hat(const QuotientContext& ctx, const QuotientObject& obj);

/// Same extension applied to a plain map g: X -> Y ⊗ O(A).
Matrix extend_o_linear(const QuotientContext& ctx, const Matrix& g, std::size_t source_dim);

/// G-comodule with an O(A)-action; the objects of the module category that
/// realizes the quotient.
struct OModuleObject {
    ComodPtr carrier;
    Matrix action;  // M ⊗ O(A) -> M, of shape carrier.dim x (carrier.dim * na)
};

/// Validates unit and associativity laws of the action plus its equivariance.
OModuleObject make_omodule(const QuotientContext& ctx, ComodPtr carrier, Matrix action);

/// im f̂ with its comodule structure, O(A)-action and ambient basis.
struct ImageModule {
    OModuleObject module;
    Matrix basis;      // columns embed the image into Y ⊗ O(A)
    ComodPtr ambient;  // Y ⊗ O(A) as a comodule
};

ImageModule image_of(const QuotientContext& ctx, const QuotientObject& obj);

/// Morphism between two triples: stored on the echelon bases of the images,
/// O(A)-linear and equivariant.
struct QuotientMap {
    QuotientObject source;
    QuotientObject target;
    Matrix matrix;
};

QuotientMap make_quotient_map(const QuotientContext& ctx, const QuotientObject& a,
                              const QuotientObject& b, Matrix m);

QuotientMap identity_map(const QuotientContext& ctx, const QuotientObject& a);

/// Basis of Hom(a, b): simultaneous kernel of the equivariance and
/// O(A)-linearity constraints on maps im f̂_a -> im f̂_b.
Matrix hom_space_P(const QuotientContext& ctx, const QuotientObject& a, const QuotientObject& b);

std::vector<QuotientMap> hom_basis_P(const QuotientContext& ctx, const QuotientObject& a,
                                     const QuotientObject& b);

QuotientMap compose_P(const QuotientContext& ctx, const QuotientMap& g, const QuotientMap& f);

/// The functor into the quotient: X -> (X, X, id ⊗ u).
QuotientObject quotient_functor_q(const QuotientContext& ctx, const ComodPtr& x);

/// Its action on morphisms.
QuotientMap quotient_functor_q_map(const QuotientContext& ctx, const ComoduleMap& t);

/// Morphism of q'-objects determined by a plain equivariant map
/// g: X -> Y ⊗ O(A) (its O(A)-linear extension on the free images).
QuotientMap map_from_bar(const QuotientContext& ctx, const QuotientObject& a,
                         const QuotientObject& b, const Matrix& g);

/// Inverse direction: restrict a morphism of q'-objects along id ⊗ u.
Matrix bar_from_map(const QuotientContext& ctx, const QuotientMap& m);

QuotientObject direct_sum_P(const QuotientContext& ctx, const QuotientObject& a,
                            const QuotientObject& b);

QuotientObject tensor_P(const QuotientContext& ctx, const QuotientObject& a,
                        const QuotientObject& b);

QuotientMap tensor_P_map(const QuotientContext& ctx, const QuotientMap& f, const QuotientMap& g);

/// The unit object (I, I, u).
QuotientObject unit_object(const QuotientContext& ctx);

/// Image of a triple in the representation category of L: the L-comodule
/// im f_0 for f_0 = (id ⊗ ε) f, plus the surjection from im f̂ given by
/// evaluating the O(A) leg at the counit.
struct RepLImage {
    ComodPtr object;   // over O(L)
    Matrix basis;      // im f_0 inside restrict(Y)
    Matrix onto;       // im f̂ -> im f_0 (apply id ⊗ ε on image bases)
};

RepLImage equivalence_to_repL(const QuotientContext& ctx, const QuotientObject& obj);

/// Action of the equivalence on morphisms.
ComoduleMap equivalence_to_repL_map(const QuotientContext& ctx, const QuotientMap& m);

/// Element of the invariant subspace of X∨ ⊗ Y encoding the triple, plus the
/// round-trip reconstruction of f (which must equal the original).
struct DeligneVector {
    Matrix vector;        // (x.dim * y.dim) x 1
    Matrix subspace;      // basis of the largest trivial-over-L subobject of X∨ ⊗ Y
    bool in_subspace = false;
    bool round_trip_ok = false;
};

DeligneVector deligne_triple(const QuotientContext& ctx, const QuotientObject& obj);

/// im f̂ as an O(A)-module in Rep(G); for q'(X) this is X ⊗ O(A) with the
/// multiplication action.
OModuleObject right_adjoint_p(const QuotientContext& ctx, const QuotientObject& obj);

struct NamedCheck {
    std::string id;
    bool pass = false;
    std::string detail;
};

/// Condition (i): the largest trivial subobject of the image of q'(X) in
/// Rep(L) coincides with the largest invariant subobject of X. Condition
/// (ii): every battery L-comodule embeds into and is a quotient of a
/// restriction. Run per battery item.
std::vector<NamedCheck> verify_quotient_axioms(const QuotientContext& ctx);

}  // namespace tannakit
