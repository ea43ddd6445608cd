#pragma once

#include "affolab/group.hpp"
#include "affolab/jets.hpp"

#include <optional>

namespace affolab {

/// Linear module for a finitely presented group: one invertible matrix per
/// generator, extended to words multiplicatively.
class LinearAction {
public:
    LinearAction() = default;
    LinearAction(std::vector<std::string> names, std::vector<Matrix> mats, int dim_hint = 0);

    int dim() const { return dim_; }
    int generator_count() const { return static_cast<int>(mats_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const Matrix& matrix(int i) const { return mats_.at(static_cast<size_t>(i)); }

    Matrix evaluate(const Word& w) const;
    bool satisfies(const Presentation& p) const;

private:
    std::vector<std::string> names_;
    std::vector<Matrix> mats_;
    int dim_ = 0;
};

LinearAction trivial_action(const std::vector<std::string>& names, int dim);
LinearAction linear_parts_action(const Representation& rep);
/// Transverse convention of the duality law: g -> transpose(inverse(L(g))).
LinearAction contragredient_action(const Representation& rep);

/// 1-cochain: a module value per generator, extended by
/// c(uv) = c(u) + rho(u) c(v) and c(g^-1) = -rho(g^-1) c(g).
struct Cocycle {
    std::vector<Vector> values;
};

Vector cocycle_stack(const Cocycle& c, int module_dim);
Cocycle cocycle_unstack(const Vector& stacked, int gen_count, int module_dim);

Vector cocycle_evaluate(const LinearAction& rho, const Cocycle& c, const Word& w);
bool is_cocycle(const Presentation& p, const LinearAction& rho, const Cocycle& c);

/// Basis of Z^1: exact kernel of the linear system obtained by expanding all
/// relators. Throws when the action violates a relator.
std::vector<Cocycle> cocycle_space(const Presentation& p, const LinearAction& rho);

/// Basis of B^1 = image of m -> (rho(g_i) m - m)_i.
std::vector<Cocycle> coboundary_space(const LinearAction& rho);

struct CohomologyReport {
    int dim_z1 = 0, dim_b1 = 0, dim_h1 = 0;
    std::vector<Cocycle> z_basis;
    std::vector<Cocycle> b_basis;
    /// Indices into z_basis whose classes form a basis of H^1 (a complement
    /// of B^1 inside Z^1).
    std::vector<int> h_complement;
    int gen_count = 0, module_dim = 0;
};

CohomologyReport h1(const Presentation& p, const LinearAction& rho);

/// Class coordinates of a cocycle with respect to the report's H^1 basis;
/// nullopt when the input is not in Z^1.
std::optional<Vector> h1_class_coordinates(const CohomologyReport& rep, const Cocycle& c);

struct RadianceResult {
    Cocycle cocycle;         // g -> translation part of rep(g)
    bool is_radiant = false; // the cocycle is a coboundary (holonomy fixes a point)
    Vector h1_coords;        // class coordinates in H^1 of the linear-part module
    CohomologyReport report;
};

/// Radiance obstruction of an affine representation. Requires rep to satisfy
/// the relators.
RadianceResult radiance_obstruction(const Presentation& p, const Representation& rep);

/// Jet-module action induced by a transverse linear action: f -> f o T(g)^{-1}.
LinearAction jet_action(const LinearAction& transverse, const JetModule& jm);

/// Projection of a jet cocycle to its degree-1 coefficients.
Cocycle d0_star(const JetModule& jm, const Cocycle& c);
/// Validating variant: checks c is a cocycle for the jet action first.
Cocycle d0_star(const Presentation& p, const LinearAction& jet_rho, const JetModule& jm,
                const Cocycle& c);

struct GermFiber {
    bool empty = true;
    int dimension = 0;        // of the fiber, as an affine subspace of jet H^1
    Vector representative;    // H^1 class coordinates of one solution
    int dim_h1_jet = 0;
    int dim_h1_deg1 = 0;
    std::string note;
};

/// Jet-level germ classification: solves d0*(x) = [radiance class] in the
/// degree-1 cohomology, over x in jet H^1. The transverse action is the
/// contragredient of rep's linear parts, so the degree-1 block of the jet
/// module coincides with the radiance module.
GermFiber classify_germs(const Presentation& p, const Representation& rep, int degree);

/// Variant with explicitly supplied transverse data; rejects pairs violating
/// the duality law transpose(L(g)) * T(g) = I.
GermFiber classify_germs(const Presentation& p, const Representation& rep,
                         const LinearAction& transverse, int degree);

/// Same solve against an explicitly chosen target class, given in H^1
/// coordinates of the degree-1 module. A coordinate vector that does not fit
/// that space (e.g. nonzero coordinates against a zero-dimensional H^1) is
/// unrealizable and yields an empty fiber.
GermFiber germ_fiber_for_class(const Presentation& p, const Representation& rep, int degree,
                               const Vector& target_class);

/// Tower-step cocycle data: an upper presentation fibered over a lower one,
/// a lower classifying cocycle c1, a single-variable fiber jet f2 per upper
/// generator and a scalar cocycle d2 for the trivial action.
struct TowerData {
    Presentation upper;
    std::vector<Word> projection;  // per upper generator, a word in the lower generators
    int fiber_generator = -1;
    Presentation lower;
    LinearAction lower_action;
    Cocycle c1;
    std::vector<Vector> f2;  // fiber jet coefficients, degrees 1..k
    std::vector<Scalar> d2;
};

struct TowerCheckResult {
    bool ok = false;
    std::string reason;
};

/// Verifies that c2 = c1 o proj + f2 can satisfy the cocycle law, i.e. that
/// f2(gh) = f2(g) + f2(h) o d2(g) holds across every relator, where
/// "o d2(g)" precomposes the fiber variable with translation by d2(g)
/// (constant terms are dropped: jets vanish at 0).
TowerCheckResult tower_check(const TowerData& data);

}  // namespace affolab
