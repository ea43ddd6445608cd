#include "affolab/checks.hpp"

#include "affolab/cohomology.hpp"
#include "affolab/lsa.hpp"

#include <sstream>

namespace affolab {

using nlohmann::json;

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

CheckStatus Report::overall() const {
    CheckStatus agg = CheckStatus::pass;
    for (const auto& r : results) {
        if (r.status == CheckStatus::fail) return CheckStatus::fail;
        if (r.status == CheckStatus::inconclusive) agg = CheckStatus::inconclusive;
    }
    return agg;
}

int Report::exit_code() const {
    switch (overall()) {
        case CheckStatus::pass: return 0;
        case CheckStatus::fail: return 1;
        case CheckStatus::inconclusive: return 3;
    }
    return 1;
}

json Report::to_json() const {
    json checks = json::array();
    for (const auto& r : results)
        checks.push_back(json{{"name", r.name}, {"status", to_string(r.status)}, {"details", r.details}});
    return json{{"subject", subject}, {"status", to_string(overall())}, {"checks", checks}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << subject << ":\n";
    for (const auto& r : results) {
        os << "  [" << to_string(r.status) << "] " << r.name;
        if (!r.details.is_null() && !r.details.empty()) os << "  " << r.details.dump();
        os << "\n";
    }
    os << "overall: " << to_string(overall()) << "\n";
    return os.str();
}

namespace {

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v[i].to_string());
    return out;
}

std::vector<LSAElement> generator_logs(const Manifest& m, std::string* failed_gen) {
    Representation rep = m.representation();
    std::vector<LSAElement> logs;
    for (int g = 0; g < rep.generator_count(); ++g) {
        try {
            logs.push_back(log_unipotent(rep.image(g)));
        } catch (const std::domain_error&) {
            if (failed_gen) *failed_gen = rep.names()[static_cast<size_t>(g)];
            return {};
        }
    }
    return logs;
}

CheckResult check_verify(const Manifest& m) {
    CheckResult res{"verify", CheckStatus::pass, json::object()};
    Presentation pres = m.presentation();
    Representation rep = m.representation();

    bool relators_ok = check_relations(pres, rep);
    res.details["relators"] = relators_ok ? "hold" : "violated";
    if (!relators_ok) {
        for (const auto& r : pres.relators)
            if (!rep.evaluate(r).is_identity()) {
                res.details["witness"] = {{"relator", format_word(pres, r)},
                                          {"evaluates_to", rep.evaluate(r).to_string()}};
                break;
            }
        res.status = CheckStatus::fail;
        return res;
    }

    if (m.symplectic_form) {
        BilinearForm omega(*m.symplectic_form);
        for (int g = 0; g < rep.generator_count(); ++g) {
            if (pullback_form(rep.image(g), omega) != omega) {
                res.status = CheckStatus::fail;
                res.details["symplectic"] = "violated";
                res.details["witness"] = {
                    {"generator", rep.names()[static_cast<size_t>(g)]},
                    {"pullback", matrix_json(pullback_form(rep.image(g), omega).matrix())}};
                return res;
            }
        }
        res.details["symplectic"] = "preserved by every generator";
    }

    if (!m.foliation_span.empty()) {
        if (m.symplectic_form) {
            auto status = lagrangian_status(m.foliation_span, BilinearForm(*m.symplectic_form));
            if (status != LagrangianStatus::lagrangian) {
                res.status = CheckStatus::fail;
                res.details["lagrangian"] =
                    status == LagrangianStatus::wrong_rank ? "wrong rank" : "not isotropic";
                json span = json::array();
                for (const auto& v : m.foliation_span) span.push_back(vector_json(v));
                res.details["witness"] = {{"span", span}};
                return res;
            }
            res.details["lagrangian"] = "span is lagrangian";
        }
        // Compact-leaf surrogate: the span must be invariant under every
        // linear part (the artifact carries holonomy data, not manifolds).
        for (int g = 0; g < rep.generator_count(); ++g)
            for (const auto& v : m.foliation_span) {
                Vector image = rep.image(g).linear().apply(v);
                if (!span_coefficients(m.foliation_span, image)) {
                    res.status = CheckStatus::fail;
                    res.details["span_invariance"] = "violated";
                    res.details["witness"] = {{"generator", rep.names()[static_cast<size_t>(g)]},
                                              {"vector", vector_json(v)},
                                              {"image", vector_json(image)}};
                    return res;
                }
            }
        res.details["span_invariance"] = "span is holonomy-invariant";
    }
    return res;
}

CheckResult check_growth(const Manifest& m, const CheckOptions& opts) {
    CheckResult res{"growth", CheckStatus::pass, json::object()};
    Ball ball = enumerate_ball(m.representation(), opts.radius, opts.cap);
    json sizes = json::array();
    for (auto s : ball.table().sizes) sizes.push_back(s);
    res.details["ball_sizes"] = sizes;
    if (ball.truncated()) {
        res.status = CheckStatus::inconclusive;
        res.details["note"] = "element cap reached; table is partial";
        return res;
    }
    if (ball.table().sizes.size() >= 6) {
        GrowthEstimate est = growth_estimate(ball.table());
        switch (est.kind) {
            case GrowthEstimate::Kind::polynomial:
                res.details["estimate"] = {{"kind", "polynomial"}, {"degree", est.degree}};
                break;
            case GrowthEstimate::Kind::exponential:
                res.details["estimate"] = {{"kind", "exponential"}, {"rate", est.rate}};
                break;
            case GrowthEstimate::Kind::inconclusive:
                res.details["estimate"] = {{"kind", "inconclusive"}};
                break;
        }
        res.details["estimate"]["note"] = est.note;
    } else {
        res.details["estimate"] = {{"kind", "inconclusive"}, {"note", "radius too small to label"}};
    }
    return res;
}

CheckResult check_unimodular(const Manifest& m) {
    CheckResult res{"unimodular", CheckStatus::pass, json::object()};
    Representation rep = m.representation();
    for (int g = 0; g < rep.generator_count(); ++g) {
        Scalar det = determinant(rep.image(g).linear());
        if (det != Scalar(1) && det != Scalar(-1)) {
            res.status = CheckStatus::fail;
            res.details["witness"] = {{"generator", rep.names()[static_cast<size_t>(g)]},
                                      {"determinant", det.to_string()}};
            return res;
        }
    }
    res.details["linear_holonomy"] = "inside SL up to sign";
    return res;
}

CheckResult check_translation(const Manifest& m, const CheckOptions& opts) {
    CheckResult res{"translation", CheckStatus::pass, json::object()};
    TranslationSearch search = find_translation(m.representation(), opts.max_len, opts.cap);
    switch (search.status) {
        case TranslationSearch::Status::found:
            res.details["result"] = "found";
            res.details["word"] = format_word(m.presentation(), *search.word);
            res.details["translation"] = vector_json(search.element->translation());
            break;
        case TranslationSearch::Status::none:
            res.details["result"] = "none";
            res.details["note"] =
                "no translation among words of length <= " + std::to_string(opts.max_len);
            break;
        case TranslationSearch::Status::inconclusive:
            res.status = CheckStatus::inconclusive;
            res.details["result"] = "inconclusive";
            res.details["note"] = "element cap reached before exhausting the ball";
            break;
    }
    return res;
}

CheckResult check_rationality(const Manifest& m) {
    CheckResult res{"rationality", CheckStatus::pass, json::object()};
    if (m.generators.empty()) {
        res.details["note"] = "no generators, nothing to close";
        return res;
    }
    std::string bad;
    auto logs = generator_logs(m, &bad);
    if (logs.empty() && !m.generators.empty()) {
        res.status = CheckStatus::fail;
        res.details["witness"] = {{"generator", bad}, {"reason", "not unipotent, no exact log"}};
        return res;
    }
    ClosureResult closure = span_closure(logs);
    if (!closure.closed) {
        res.status = CheckStatus::fail;
        res.details["result"] = "not closed";
        res.details["witness"] = {{"product_of", {closure.witness_i, closure.witness_j}},
                                  {"matrix", matrix_json(closure.witness->C)},
                                  {"vector", vector_json(closure.witness->c)}};
        return res;
    }
    res.details["result"] = "closed";
    res.details["span_dimension"] = closure.basis->size();
    res.details["commutative"] = closure.basis->commutative();
    return res;
}

CheckResult check_reduce(const Manifest& m) {
    CheckResult res{"reduce", CheckStatus::pass, json::object()};
    if (m.generators.empty()) {
        res.details["note"] = "no generators, nothing to reduce";
        return res;
    }
    std::string bad;
    auto logs = generator_logs(m, &bad);
    if (logs.empty() && !m.generators.empty()) {
        res.status = CheckStatus::fail;
        res.details["witness"] = {{"generator", bad}, {"reason", "not unipotent, no exact log"}};
        return res;
    }
    try {
        auto chain = reduction_chain(logs);
        json dims = json::array();
        for (const auto& stage : chain) dims.push_back(stage.size());
        res.details["chain_dimensions"] = dims;
    } catch (const std::runtime_error& e) {
        res.status = CheckStatus::fail;
        res.details["witness"] = e.what();
    }
    return res;
}

CheckResult check_cohomology(const Manifest& m, const CheckOptions& opts) {
    CheckResult res{"cohomology", CheckStatus::pass, json::object()};
    Presentation pres = m.presentation();
    Representation rep = m.representation();
    CohomologyReport lin = h1(pres, linear_parts_action(rep));
    res.details["linear_module"] = {{"dim_Z1", lin.dim_z1}, {"dim_B1", lin.dim_b1}, {"dim_H1", lin.dim_h1}};
    JetModule jm(m.dimension, opts.jet_degree);
    CohomologyReport jet = h1(pres, jet_action(contragredient_action(rep), jm));
    res.details["jet_module"] = {{"degree", opts.jet_degree},
                                 {"dim", jm.dim()},
                                 {"dim_Z1", jet.dim_z1},
                                 {"dim_B1", jet.dim_b1},
                                 {"dim_H1", jet.dim_h1}};
    return res;
}

CheckResult check_radiance(const Manifest& m) {
    CheckResult res{"radiance", CheckStatus::pass, json::object()};
    RadianceResult rad = radiance_obstruction(m.presentation(), m.representation());
    res.details["is_radiant"] = rad.is_radiant;
    res.details["class_coordinates"] = vector_json(rad.h1_coords);
    res.details["dim_H1"] = rad.report.dim_h1;
    return res;
}

CheckResult check_classify(const Manifest& m, const CheckOptions& opts) {
    CheckResult res{"classify", CheckStatus::pass, json::object()};
    GermFiber fiber = classify_germs(m.presentation(), m.representation(), opts.jet_degree);
    res.details["jet_degree"] = opts.jet_degree;
    res.details["dim_H1_jet"] = fiber.dim_h1_jet;
    res.details["dim_H1_degree1"] = fiber.dim_h1_deg1;
    if (fiber.empty) {
        res.details["fiber"] = "empty";
        res.details["note"] = fiber.note;
    } else {
        res.details["fiber"] = {{"dimension", fiber.dimension},
                                {"representative", vector_json(fiber.representative)}};
    }
    return res;
}

CheckResult check_tower(const Manifest& m) {
    CheckResult res{"tower", CheckStatus::pass, json::object()};
    if (!m.tower) {
        res.status = CheckStatus::fail;
        res.details["witness"] = "manifest has no tower data";
        return res;
    }
    Presentation upper = m.presentation();
    Representation rep2 = m.representation();
    const Manifest& base = *m.tower->base;
    Presentation lower = base.presentation();
    Representation rep1 = base.representation();

    if (!check_relations(lower, rep1)) {
        res.status = CheckStatus::fail;
        res.details["witness"] = "base representation violates its relators";
        return res;
    }

    std::vector<Word> proj;
    for (const auto& tokens : m.tower->projection_tokens) proj.push_back(parse_word(lower, tokens));
    int fiber_gen = upper.generator_index(m.tower->fiber_generator);
    if (fiber_gen < 0 || !proj[static_cast<size_t>(fiber_gen)].empty()) {
        res.status = CheckStatus::fail;
        res.details["witness"] = "fiber generator must project to the empty word";
        return res;
    }

    // The projection has to send upper relators to relations downstairs.
    for (const auto& rel : upper.relators) {
        Word image;
        for (const auto& l : rel) {
            const Word& w = proj[static_cast<size_t>(l.gen)];
            Word part = l.exp > 0 ? w : word_inverse(w);
            image = word_concat(image, part);
        }
        if (!rep1.evaluate(image).is_identity()) {
            res.status = CheckStatus::fail;
            res.details["witness"] = {{"relator", format_word(upper, rel)},
                                      {"projected", format_word(lower, image)}};
            return res;
        }
    }

    int fiber_coord = m.tower_fiber_coordinate();
    bool commutes = square_commutes(rep2, rep1, proj, fiber_coord);
    res.details["fiber_coordinate"] = fiber_coord;
    res.details["square_commutes"] = commutes;
    if (!commutes) {
        res.status = CheckStatus::fail;
        res.details["witness"] = "striking the fiber coordinate does not reproduce the base images";
    }
    return res;
}

CheckResult check_duality(const Manifest& m) {
    CheckResult res{"duality", CheckStatus::pass, json::object()};
    if (m.dimension % 2 != 0) {
        res.status = CheckStatus::fail;
        res.details["witness"] = "duality check needs an even-dimensional block manifest";
        return res;
    }
    int n = m.dimension / 2;
    std::vector<std::string> names;
    std::vector<AffineMap> leaf, transverse;
    std::vector<int> first(static_cast<size_t>(n)), second(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        first[static_cast<size_t>(i)] = i;
        second[static_cast<size_t>(i)] = n + i;
    }
    for (const auto& g : m.generators) {
        if (!g.linear.select(first, second).is_zero() || !g.linear.select(second, first).is_zero()) {
            res.status = CheckStatus::fail;
            res.details["witness"] = {{"generator", g.name}, {"reason", "off-diagonal block not zero"}};
            return res;
        }
        Vector t2(n);
        for (int i = 0; i < n; ++i) t2[i] = g.translation[n + i];
        if (!t2.is_zero()) {
            res.status = CheckStatus::fail;
            res.details["witness"] = {{"generator", g.name},
                                      {"reason", "transverse block carries a translation"}};
            return res;
        }
        Vector t1(n);
        for (int i = 0; i < n; ++i) t1[i] = g.translation[i];
        names.push_back(g.name);
        leaf.emplace_back(g.linear.select(first, first), t1);
        transverse.emplace_back(g.linear.select(second, second), Vector(n));
    }
    bool ok = duality_check(Representation(names, leaf, n), Representation(names, transverse, n));
    res.details["law"] = "transpose(L(g)) * T(g) == identity for every generator";
    if (!ok) {
        res.status = CheckStatus::fail;
        res.details["witness"] = "a generator violates the duality law";
    }
    return res;
}

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = {
        "verify",   "growth",     "unimodular", "translation", "rationality", "reduce",
        "cohomology", "radiance", "classify",   "tower",       "duality"};
    return names;
}

Report run_check(const Manifest& m, const std::string& check, const CheckOptions& opts) {
    Report report;
    report.subject = m.name.empty() ? "<manifest>" : m.name;
    if (check == "verify")
        report.results.push_back(check_verify(m));
    else if (check == "growth")
        report.results.push_back(check_growth(m, opts));
    else if (check == "unimodular")
        report.results.push_back(check_unimodular(m));
    else if (check == "translation")
        report.results.push_back(check_translation(m, opts));
    else if (check == "rationality")
        report.results.push_back(check_rationality(m));
    else if (check == "reduce")
        report.results.push_back(check_reduce(m));
    else if (check == "cohomology")
        report.results.push_back(check_cohomology(m, opts));
    else if (check == "radiance")
        report.results.push_back(check_radiance(m));
    else if (check == "classify")
        report.results.push_back(check_classify(m, opts));
    else if (check == "tower")
        report.results.push_back(check_tower(m));
    else if (check == "duality")
        report.results.push_back(check_duality(m));
    else
        throw ManifestError(ManifestError::Kind::invalid, "unknown check '" + check + "'");
    return report;
}

}  // namespace affolab
