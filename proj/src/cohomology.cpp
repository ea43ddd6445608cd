#include "affolab/cohomology.hpp"

namespace affolab {

LinearAction::LinearAction(std::vector<std::string> names, std::vector<Matrix> mats, int dim_hint)
    : names_(std::move(names)), mats_(std::move(mats)) {
    if (names_.size() != mats_.size())
        throw std::invalid_argument("linear action: one matrix per generator required");
    dim_ = mats_.empty() ? dim_hint : mats_[0].rows();
    for (const auto& m : mats_) {
        if (!m.is_square() || m.rows() != dim_)
            throw std::invalid_argument("linear action: mixed or non-square matrices");
        if (determinant(m).is_zero())
            throw std::invalid_argument("linear action: singular generator matrix");
    }
}

Matrix LinearAction::evaluate(const Word& w) const {
    Matrix acc = Matrix::identity(dim_);
    for (const auto& l : w) {
        if (l.gen < 0 || l.gen >= generator_count())
            throw std::invalid_argument("word references an unknown generator index");
        const Matrix& g = mats_[static_cast<size_t>(l.gen)];
        acc = acc * (l.exp > 0 ? g : inverse(g));
    }
    return acc;
}

bool LinearAction::satisfies(const Presentation& p) const {
    Matrix id = Matrix::identity(dim_);
    for (const auto& r : p.relators)
        if (evaluate(r) != id) return false;
    return true;
}

LinearAction trivial_action(const std::vector<std::string>& names, int dim) {
    std::vector<Matrix> mats(names.size(), Matrix::identity(dim));
    return LinearAction(names, std::move(mats), dim);
}

LinearAction linear_parts_action(const Representation& rep) {
    std::vector<Matrix> mats;
    mats.reserve(static_cast<size_t>(rep.generator_count()));
    for (int g = 0; g < rep.generator_count(); ++g) mats.push_back(rep.image(g).linear());
    return LinearAction(rep.names(), std::move(mats), rep.dim());
}

LinearAction contragredient_action(const Representation& rep) {
    std::vector<Matrix> mats;
    mats.reserve(static_cast<size_t>(rep.generator_count()));
    for (int g = 0; g < rep.generator_count(); ++g)
        mats.push_back(inverse(rep.image(g).linear()).transpose());
    return LinearAction(rep.names(), std::move(mats), rep.dim());
}

Vector cocycle_stack(const Cocycle& c, int module_dim) {
    Vector v(static_cast<int>(c.values.size()) * module_dim);
    int at = 0;
    for (const auto& val : c.values)
        for (int i = 0; i < module_dim; ++i) v[at++] = val[i];
    return v;
}

Cocycle cocycle_unstack(const Vector& stacked, int gen_count, int module_dim) {
    if (stacked.size() != gen_count * module_dim)
        throw std::invalid_argument("stacked cocycle size mismatch");
    Cocycle c;
    for (int g = 0; g < gen_count; ++g) {
        Vector v(module_dim);
        for (int i = 0; i < module_dim; ++i) v[i] = stacked[g * module_dim + i];
        c.values.push_back(std::move(v));
    }
    return c;
}

Vector cocycle_evaluate(const LinearAction& rho, const Cocycle& c, const Word& w) {
    Vector val(rho.dim());
    Matrix prefix = Matrix::identity(rho.dim());
    for (const auto& l : w) {
        const Vector& cg = c.values.at(static_cast<size_t>(l.gen));
        if (l.exp > 0) {
            val += prefix.apply(cg);
            prefix = prefix * rho.matrix(l.gen);
        } else {
            Matrix inv = inverse(rho.matrix(l.gen));
            val -= (prefix * inv).apply(cg);
            prefix = prefix * inv;
        }
    }
    return val;
}

bool is_cocycle(const Presentation& p, const LinearAction& rho, const Cocycle& c) {
    if (c.values.size() != p.generators.size()) return false;
    for (const auto& v : c.values)
        if (v.size() != rho.dim()) return false;
    for (const auto& r : p.relators)
        if (!cocycle_evaluate(rho, c, r).is_zero()) return false;
    return true;
}

namespace {

/// Per-generator coefficient matrices of the linear constraint c(relator) = 0.
std::vector<Matrix> relator_coefficients(const LinearAction& rho, int gen_count, const Word& w) {
    int m = rho.dim();
    std::vector<Matrix> coeff(static_cast<size_t>(gen_count), Matrix::zero(m, m));
    Matrix prefix = Matrix::identity(m);
    for (const auto& l : w) {
        if (l.exp > 0) {
            coeff[static_cast<size_t>(l.gen)] += prefix;
            prefix = prefix * rho.matrix(l.gen);
        } else {
            Matrix inv = inverse(rho.matrix(l.gen));
            coeff[static_cast<size_t>(l.gen)] -= prefix * inv;
            prefix = prefix * inv;
        }
    }
    return coeff;
}

}  // namespace

std::vector<Cocycle> cocycle_space(const Presentation& p, const LinearAction& rho) {
    if (p.generators != rho.names())
        throw std::invalid_argument("cocycle space: action generators do not match the presentation");
    if (!rho.satisfies(p))
        throw std::invalid_argument("cocycle space: the action violates a relator");
    int r = static_cast<int>(p.generators.size());
    int m = rho.dim();
    Matrix system(static_cast<int>(p.relators.size()) * m, r * m);
    for (size_t rel = 0; rel < p.relators.size(); ++rel) {
        auto coeff = relator_coefficients(rho, r, p.relators[rel]);
        for (int g = 0; g < r; ++g)
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    system.at(static_cast<int>(rel) * m + i, g * m + j) =
                        coeff[static_cast<size_t>(g)].at(i, j);
    }
    std::vector<Cocycle> basis;
    for (const auto& k : kernel_basis(system)) basis.push_back(cocycle_unstack(k, r, m));
    return basis;
}

std::vector<Cocycle> coboundary_space(const LinearAction& rho) {
    int r = rho.generator_count();
    int m = rho.dim();
    if (r == 0) return {};
    std::vector<Vector> candidates;
    for (int j = 0; j < m; ++j) {
        Vector stacked(r * m);
        for (int g = 0; g < r; ++g) {
            Vector col = rho.matrix(g).col(j);
            col[j] -= Scalar(1);
            for (int i = 0; i < m; ++i) stacked[g * m + i] = col[i];
        }
        candidates.push_back(std::move(stacked));
    }
    std::vector<Cocycle> basis;
    for (int i : independent_subset(candidates))
        basis.push_back(cocycle_unstack(candidates[static_cast<size_t>(i)], r, m));
    return basis;
}

CohomologyReport h1(const Presentation& p, const LinearAction& rho) {
    CohomologyReport rep;
    rep.gen_count = static_cast<int>(p.generators.size());
    rep.module_dim = rho.dim();
    rep.z_basis = cocycle_space(p, rho);
    rep.b_basis = coboundary_space(rho);
    rep.dim_z1 = static_cast<int>(rep.z_basis.size());
    rep.dim_b1 = static_cast<int>(rep.b_basis.size());
    rep.dim_h1 = rep.dim_z1 - rep.dim_b1;

    // Extend the coboundary basis to a basis of Z^1; the extra pivot columns
    // pick out representatives of an H^1 basis.
    std::vector<Vector> cols;
    for (const auto& b : rep.b_basis) cols.push_back(cocycle_stack(b, rep.module_dim));
    for (const auto& z : rep.z_basis) cols.push_back(cocycle_stack(z, rep.module_dim));
    for (int piv : independent_subset(cols))
        if (piv >= rep.dim_b1) rep.h_complement.push_back(piv - rep.dim_b1);
    if (static_cast<int>(rep.h_complement.size()) != rep.dim_h1)
        throw std::logic_error("coboundaries escaped the cocycle space");
    return rep;
}

std::optional<Vector> h1_class_coordinates(const CohomologyReport& rep, const Cocycle& c) {
    std::vector<Vector> cols;
    for (const auto& b : rep.b_basis) cols.push_back(cocycle_stack(b, rep.module_dim));
    for (int i : rep.h_complement)
        cols.push_back(cocycle_stack(rep.z_basis[static_cast<size_t>(i)], rep.module_dim));
    Vector target = cocycle_stack(c, rep.module_dim);
    std::optional<Vector> sol;
    if (cols.empty()) {
        if (!target.is_zero()) return std::nullopt;
        sol = Vector(0);
    } else {
        sol = solve(from_columns(cols), target);
        if (!sol) return std::nullopt;
    }
    Vector coords(rep.dim_h1);
    for (int i = 0; i < rep.dim_h1; ++i) coords[i] = (*sol)[rep.dim_b1 + i];
    return coords;
}

RadianceResult radiance_obstruction(const Presentation& p, const Representation& rep) {
    if (p.generators != rep.names())
        throw std::invalid_argument("radiance: representation generators do not match");
    if (!check_relations(p, rep))
        throw std::invalid_argument("radiance: representation violates a relator");
    RadianceResult res;
    for (int g = 0; g < rep.generator_count(); ++g)
        res.cocycle.values.push_back(rep.image(g).translation());
    res.report = h1(p, linear_parts_action(rep));
    auto coords = h1_class_coordinates(res.report, res.cocycle);
    if (!coords) throw std::logic_error("radiance cocycle fell outside Z^1");
    res.h1_coords = *coords;
    bool zero_class = true;
    for (int i = 0; i < res.h1_coords.size(); ++i)
        if (!res.h1_coords[i].is_zero()) zero_class = false;
    res.is_radiant = zero_class;
    return res;
}

LinearAction jet_action(const LinearAction& transverse, const JetModule& jm) {
    if (transverse.dim() != jm.vars())
        throw std::invalid_argument("jet action: variable count mismatch");
    std::vector<Matrix> mats;
    mats.reserve(static_cast<size_t>(transverse.generator_count()));
    for (int g = 0; g < transverse.generator_count(); ++g)
        mats.push_back(jm.action_matrix(transverse.matrix(g)));
    return LinearAction(transverse.names(), std::move(mats), jm.dim());
}

Cocycle d0_star(const JetModule& jm, const Cocycle& c) {
    Cocycle out;
    for (const auto& v : c.values) {
        if (v.size() != jm.dim()) throw std::invalid_argument("d0*: jet cocycle size mismatch");
        Vector lin(jm.vars());
        for (int i = 0; i < jm.vars(); ++i) lin[i] = v[i];
        out.values.push_back(std::move(lin));
    }
    return out;
}

Cocycle d0_star(const Presentation& p, const LinearAction& jet_rho, const JetModule& jm,
                const Cocycle& c) {
    if (!is_cocycle(p, jet_rho, c)) throw std::invalid_argument("d0*: input is not a jet cocycle");
    return d0_star(jm, c);
}

namespace {

struct FiberSolve {
    bool solvable = false;
    Cocycle solution;  // a jet cocycle hitting the target class
    int fiber_dim = 0;
};

/// Solves d0*(x) = target modulo degree-1 coboundaries, x ranging over jet
/// cocycles. Unknowns: coefficients over the jet Z^1 basis plus the
/// coboundary parameter m.
FiberSolve solve_fiber(const Presentation& p, const CohomologyReport& jet_rep,
                       const CohomologyReport& deg1_rep, const LinearAction& deg1_rho,
                       const JetModule& jm, const Cocycle& target) {
    FiberSolve out;
    int r = jet_rep.gen_count;
    int n = deg1_rho.dim();
    int zdim = jet_rep.dim_z1;

    std::vector<Vector> cols;
    for (const auto& z : jet_rep.z_basis)
        cols.push_back(cocycle_stack(d0_star(jm, z), n));
    for (int j = 0; j < n; ++j) {
        Vector stacked(r * n);
        for (int g = 0; g < r; ++g) {
            Vector col = deg1_rho.matrix(g).col(j);
            col[j] -= Scalar(1);
            for (int i = 0; i < n; ++i) stacked[g * n + i] = -col[i];
        }
        cols.push_back(std::move(stacked));
    }
    Vector rhs = cocycle_stack(target, n);

    std::optional<Vector> sol;
    if (cols.empty()) {
        if (!rhs.is_zero()) return out;
        sol = Vector(0);
    } else {
        sol = solve(from_columns(cols), rhs);
        if (!sol) return out;
    }

    out.solvable = true;
    Vector stacked(r * jm.dim());
    for (int s = 0; s < zdim; ++s) {
        if ((*sol)[s].is_zero()) continue;
        stacked += (*sol)[s] * cocycle_stack(jet_rep.z_basis[static_cast<size_t>(s)], jm.dim());
    }
    out.solution = cocycle_unstack(stacked, r, jm.dim());

    // Fiber dimension: classes z in jet H^1 with d0*(z) a degree-1 coboundary,
    // i.e. dim ker[P.Z | -B] minus the jet coboundary dimension. The beta part
    // is determined by the alpha part because the B columns are independent.
    std::vector<Vector> hom_cols;
    for (const auto& z : jet_rep.z_basis) hom_cols.push_back(cocycle_stack(d0_star(jm, z), n));
    for (const auto& b : deg1_rep.b_basis) {
        Vector v = cocycle_stack(b, n);
        hom_cols.push_back(-v);
    }
    int kernel_dim = hom_cols.empty()
                         ? 0
                         : static_cast<int>(hom_cols.size()) - rank(from_columns(hom_cols));
    out.fiber_dim = kernel_dim - jet_rep.dim_b1;
    return out;
}

GermFiber run_classification(const Presentation& p, const Representation& rep, int degree,
                             const Cocycle& target, const CohomologyReport& deg1_rep,
                             const LinearAction& deg1_rho) {
    JetModule jm(rep.dim() > 0 ? rep.dim() : 1, degree);
    LinearAction transverse = contragredient_action(rep);
    LinearAction jet_rho = rep.generator_count() > 0
                               ? jet_action(transverse, jm)
                               : LinearAction({}, {}, jm.dim());
    CohomologyReport jet_rep = h1(p, jet_rho);

    GermFiber fiber;
    fiber.dim_h1_jet = jet_rep.dim_h1;
    fiber.dim_h1_deg1 = deg1_rep.dim_h1;
    FiberSolve solved = solve_fiber(p, jet_rep, deg1_rep, deg1_rho, jm, target);
    if (!solved.solvable) {
        fiber.empty = true;
        fiber.note = "no jet cocycle projects onto the target class";
        return fiber;
    }
    fiber.empty = false;
    fiber.dimension = solved.fiber_dim;
    auto coords = h1_class_coordinates(jet_rep, solved.solution);
    if (!coords) throw std::logic_error("fiber solution fell outside jet Z^1");
    fiber.representative = *coords;
    return fiber;
}

}  // namespace

GermFiber classify_germs(const Presentation& p, const Representation& rep, int degree) {
    RadianceResult rad = radiance_obstruction(p, rep);
    LinearAction deg1_rho = linear_parts_action(rep);
    return run_classification(p, rep, degree, rad.cocycle, rad.report, deg1_rho);
}

GermFiber classify_germs(const Presentation& p, const Representation& rep,
                         const LinearAction& transverse, int degree) {
    if (transverse.generator_count() != rep.generator_count() || transverse.dim() != rep.dim())
        throw std::invalid_argument("inconsistent duality data: shape mismatch");
    Matrix id = Matrix::identity(rep.dim());
    for (int g = 0; g < rep.generator_count(); ++g)
        if (rep.image(g).linear().transpose() * transverse.matrix(g) != id)
            throw std::invalid_argument(
                "inconsistent duality data: transverse action is not the contragredient");
    return classify_germs(p, rep, degree);
}

GermFiber germ_fiber_for_class(const Presentation& p, const Representation& rep, int degree,
                               const Vector& target_class) {
    LinearAction deg1_rho = linear_parts_action(rep);
    CohomologyReport deg1_rep = h1(p, deg1_rho);
    if (target_class.size() != deg1_rep.dim_h1) {
        GermFiber fiber;
        fiber.empty = true;
        fiber.dim_h1_deg1 = deg1_rep.dim_h1;
        fiber.note = "target class coordinates do not fit H^1 of the degree-1 module (dim " +
                     std::to_string(deg1_rep.dim_h1) + ")";
        return fiber;
    }
    Cocycle target;
    Vector stacked(deg1_rep.gen_count * deg1_rep.module_dim);
    for (int i = 0; i < target_class.size(); ++i) {
        if (target_class[i].is_zero()) continue;
        stacked += target_class[i] *
                   cocycle_stack(deg1_rep.z_basis[static_cast<size_t>(deg1_rep.h_complement[i])],
                                 deg1_rep.module_dim);
    }
    target = cocycle_unstack(stacked, deg1_rep.gen_count, deg1_rep.module_dim);
    return run_classification(p, rep, degree, target, deg1_rep, deg1_rho);
}

namespace {

/// Coefficients of f(x + s) minus its constant term, f given by coefficients
/// of x^1..x^k.
Vector translate_fiber_jet(const Vector& coeffs, const Scalar& s) {
    int k = coeffs.size();
    Vector out(k);
    // binomials up to k
    std::vector<std::vector<Rational>> choose(static_cast<size_t>(k + 1));
    for (int i = 0; i <= k; ++i) {
        choose[static_cast<size_t>(i)].assign(static_cast<size_t>(i + 1), Rational(1));
        for (int j = 1; j < i; ++j)
            choose[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                choose[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                choose[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    for (int i = 1; i <= k; ++i) {
        if (coeffs[i - 1].is_zero()) continue;
        Scalar spow(1);
        for (int j = i; j >= 1; --j) {
            out[j - 1] += coeffs[i - 1] * Scalar(choose[static_cast<size_t>(i)][static_cast<size_t>(j)]) * spow;
            spow *= s;
        }
    }
    return out;
}

}  // namespace

TowerCheckResult tower_check(const TowerData& data) {
    int r = static_cast<int>(data.upper.generators.size());
    if (static_cast<int>(data.projection.size()) != r)
        return {false, "one projected word per upper generator is required"};
    if (static_cast<int>(data.f2.size()) != r) return {false, "one fiber jet per upper generator"};
    if (static_cast<int>(data.d2.size()) != r) return {false, "one d2 value per upper generator"};
    if (data.fiber_generator < 0 || data.fiber_generator >= r)
        return {false, "fiber generator index out of range"};
    if (!data.projection[static_cast<size_t>(data.fiber_generator)].empty())
        return {false, "the fiber generator must project to the empty word"};
    int k = data.f2.empty() ? 0 : data.f2[0].size();
    if (k < 1) return {false, "fiber jets need at least degree 1"};
    for (const auto& j : data.f2)
        if (j.size() != k) return {false, "fiber jets must share one degree bound"};
    for (const auto& w : data.projection)
        for (const auto& l : w)
            if (l.gen < 0 || l.gen >= static_cast<int>(data.lower.generators.size()))
                return {false, "projection references an unknown lower generator"};

    if (!is_cocycle(data.lower, data.lower_action, data.c1))
        return {false, "c1 is not a cocycle for the lower action"};

    for (const auto& rel : data.upper.relators) {
        Vector jet(k);
        Scalar shift(0);
        for (const auto& l : rel) {
            const Vector& f = data.f2[static_cast<size_t>(l.gen)];
            const Scalar& d = data.d2[static_cast<size_t>(l.gen)];
            if (l.exp > 0) {
                jet += translate_fiber_jet(f, shift);
                shift += d;
            } else {
                shift -= d;
                jet -= translate_fiber_jet(f, shift);
            }
        }
        if (!shift.is_zero())
            return {false, "d2 fails additivity on relator " + format_word(data.upper, rel)};
        if (!jet.is_zero())
            return {false, "f2 violates the tower cocycle law on relator " + format_word(data.upper, rel)};
    }
    return {true, ""};
}

}  // namespace affolab
