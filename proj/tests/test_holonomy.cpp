#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affolab/holonomy.hpp"
#include "affolab/manifest.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <set>
#include <tuple>

using namespace affolab;
using namespace affolab::testing;

namespace {

GroupData example(const std::string& name) {
    Manifest m = catalog_example(name);
    return {m.presentation(), m.representation()};
}

/// Independent oracle for lattice balls: count integer vectors of l1 norm <= n.
long long l1_ball_size(int k, int n) {
    // Direct enumeration, no group machinery.
    std::vector<std::vector<int>> frontier{std::vector<int>(static_cast<size_t>(k), 0)};
    std::set<std::vector<int>> seen(frontier.begin(), frontier.end());
    for (int r = 0; r < n; ++r) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier)
            for (int i = 0; i < k; ++i)
                for (int s : {1, -1}) {
                    auto w = v;
                    w[static_cast<size_t>(i)] += s;
                    if (seen.insert(w).second) next.push_back(w);
                }
        frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
}

}  // namespace

TEST_CASE("evaluate_word: empty word, iterated translations, derived commutator") {
    auto nil = example("nilpotent_T4");
    CHECK(nil.representation.evaluate({}).is_identity());

    auto flat = example("flat_T2");
    Word g1n;
    for (int i = 0; i < 5; ++i) g1n.push_back({0, 1});
    AffineMap f = flat.representation.evaluate(g1n);
    CHECK(f.is_translation());
    CHECK(f.translation() == Vector{Scalar(5), Scalar(0)});

    // [g2, g4, g2^-1, g4^-1] in the nilpotent example is the translation (-1,0,0,-1).
    Word comm = {{1, 1}, {3, 1}, {1, -1}, {3, -1}};
    AffineMap c = nil.representation.evaluate(comm);
    CHECK(c.is_translation());
    CHECK(c.translation() == Vector{Scalar(-1), Scalar(0), Scalar(0), Scalar(-1)});

    CHECK_THROWS_AS(flat.representation.evaluate({{7, 1}}), std::invalid_argument);
}

TEST_CASE("check_relations on the catalog and a broken relator") {
    for (const auto& name : {"flat_T2", "flat_T4", "nilpotent_T4", "half_compact_T4",
                             "hgroup_torus", "nilpotent_T2"}) {
        auto g = example(name);
        CAPTURE(name);
        CHECK(check_relations(g.presentation, g.representation));
    }
    // g1 g2 is not a relation of the flat torus.
    auto flat = example("flat_T2");
    Presentation broken = flat.presentation;
    broken.relators.push_back({{0, 1}, {1, 1}});
    CHECK_FALSE(check_relations(broken, flat.representation));
}

TEST_CASE("word inverse evaluates to the inverse map") {
    Rng rng(53);
    auto nil = example("nilpotent_T4");
    for (int trial = 0; trial < 30; ++trial) {
        Word w = rng.word(4, 10);
        CHECK(nil.representation.evaluate(word_concat(w, word_inverse(w))).is_identity());
    }
}

TEST_CASE("enumerate_ball: Z^2 ball sizes match 2n^2+2n+1 and the BFS oracle") {
    auto flat = example("flat_T2");
    Ball ball = enumerate_ball(flat.representation, 12);
    REQUIRE(ball.table().sizes.size() == 13);
    for (int n = 0; n <= 12; ++n) {
        CHECK(ball.table().sizes[static_cast<size_t>(n)] == 2LL * n * n + 2 * n + 1);
        CHECK(ball.table().sizes[static_cast<size_t>(n)] == l1_ball_size(2, n));
    }
    CHECK(ball.table().sizes[5] == 61);
}

TEST_CASE("enumerate_ball: no generators, free group, monotonicity") {
    Representation trivial({}, {}, 3);
    Ball b0 = enumerate_ball(trivial, 6);
    for (auto s : b0.table().sizes) CHECK(s == 1);

    auto free2 = example("free_2");
    Ball fb = enumerate_ball(free2.representation, 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(fb.table().sizes[static_cast<size_t>(n)] == 2 * static_cast<long long>(std::pow(3, n)) - 1);
    CHECK(fb.table().sizes[3] == 53);

    // Monotone and submultiplicative on catalog groups.
    for (const auto& name : {"flat_T2", "nilpotent_T4", "free_2", "hgroup_torus"}) {
        auto g = example(name);
        Ball ball = enumerate_ball(g.representation, 6);
        const auto& s = ball.table().sizes;
        for (size_t i = 1; i < s.size(); ++i) CHECK(s[i] >= s[i - 1]);
        for (size_t m = 0; m < s.size(); ++m)
            for (size_t n = 0; m + n < s.size(); ++n)
                CHECK(s[m + n] <= s[m] * s[n]);
    }
}

TEST_CASE("enumerate_ball: cap truncation reports a partial table") {
    auto free2 = example("free_2");
    Ball ball = enumerate_ball(free2.representation, 8, 100);
    CHECK(ball.truncated());
    CHECK(ball.table().sizes.size() < 9);
    CHECK(static_cast<long long>(ball.elements().size()) <= 100);
}

TEST_CASE("growth_estimate: polynomial lattices of degree 1, 2, 3 and flat_T4") {
    for (auto [name, radius, degree] : std::vector<std::tuple<const char*, int, int>>{
             {"flat_T1", 16, 1}, {"flat_T2", 16, 2}, {"flat_T3", 12, 3}}) {
        auto g = example(name);
        GrowthEstimate est = growth_estimate(enumerate_ball(g.representation, radius).table());
        CAPTURE(name);
        CHECK(est.kind == GrowthEstimate::Kind::polynomial);
        CHECK(est.degree == degree);
    }
}

TEST_CASE("growth_estimate: exponential, constant, truncated, and short tables") {
    auto free2 = example("free_2");
    GrowthEstimate est = growth_estimate(enumerate_ball(free2.representation, 8).table());
    CHECK(est.kind == GrowthEstimate::Kind::exponential);
    CHECK(est.rate == doctest::Approx(3.0).epsilon(0.05));

    GrowthTable constant{{1, 1, 1, 1, 1, 1, 1}, false};
    GrowthEstimate flat = growth_estimate(constant);
    CHECK(flat.kind == GrowthEstimate::Kind::polynomial);
    CHECK(flat.degree == 0);

    GrowthTable truncated{{1, 5, 17, 53, 161, 485, 1457}, true};
    CHECK(growth_estimate(truncated).kind == GrowthEstimate::Kind::inconclusive);

    GrowthTable tiny{{1, 3, 5}, false};
    CHECK_THROWS_AS(growth_estimate(tiny), std::invalid_argument);
}

TEST_CASE("is_unimodular: h2, a stretching map, and symplectic implies unimodular") {
    auto nil = example("nilpotent_T4");
    CHECK(determinant(nil.representation.image(1).linear()) == Scalar(1));
    CHECK(is_unimodular(nil.representation));

    Matrix stretch(2, 2);
    stretch.at(0, 0) = Scalar(2);
    stretch.at(1, 1) = Scalar(1);
    Representation bad({"g"}, {AffineMap(stretch, Vector(2))});
    CHECK_FALSE(is_unimodular(bad));

    // Every catalog example with a symplectic form passes the pullback check,
    // hence must be unimodular.
    for (const auto& name : catalog_names()) {
        Manifest m = catalog_example(name);
        if (!m.symplectic_form) continue;
        CAPTURE(name);
        Representation rep = m.representation();
        BilinearForm omega(*m.symplectic_form);
        bool preserved = true;
        for (int g = 0; g < rep.generator_count(); ++g)
            preserved = preserved && pullback_form(rep.image(g), omega) == omega;
        CHECK(preserved);
        CHECK(is_unimodular(rep));
    }
}

TEST_CASE("find_translation: lattices, the nilpotent example, and the irrational torus") {
    auto flat = example("flat_T2");
    TranslationSearch s1 = find_translation(flat.representation, 3);
    REQUIRE(s1.status == TranslationSearch::Status::found);
    CHECK(s1.element->is_translation());
    CHECK_FALSE(s1.element->translation().is_zero());
    CHECK(flat.representation.evaluate(*s1.word) == *s1.element);

    auto nil = example("nilpotent_T4");
    TranslationSearch s2 = find_translation(nil.representation, 2);
    REQUIRE(s2.status == TranslationSearch::Status::found);
    CHECK(s2.element->is_translation());
    CHECK_FALSE(s2.element->translation().is_zero());
    CHECK(nil.representation.evaluate(*s2.word) == *s2.element);

    // Words in f_{sqrt2,0}, f_{1,1} evaluate to f_{a sqrt2 + b, b}; a translation
    // needs a sqrt2 + b = 0, impossible over Q(sqrt2) away from the identity.
    auto hgroup = example("hgroup_torus");
    TranslationSearch s3 = find_translation(hgroup.representation, 12);
    CHECK(s3.status == TranslationSearch::Status::none);

    TranslationSearch s4 = find_translation(example("free_2").representation, 9, 50);
    CHECK(s4.status == TranslationSearch::Status::inconclusive);
}

TEST_CASE("duality_check: contragredient pairs pass, mismatches fail or throw") {
    Matrix shear = Matrix::identity(2);
    shear.at(0, 1) = Scalar(1);
    Matrix contra(2, 2);  // transpose of the inverse of the shear
    contra.at(0, 0) = Scalar(1);
    contra.at(1, 0) = Scalar(-1);
    contra.at(1, 1) = Scalar(1);

    Representation leaf({"g"}, {AffineMap(shear, Vector(2))});
    Representation good({"g"}, {AffineMap(contra, Vector(2))});
    Representation same({"g"}, {AffineMap(shear, Vector(2))});
    Representation idrep({"g"}, {AffineMap::identity(2)});

    CHECK(duality_check(idrep, idrep));
    CHECK(duality_check(leaf, good));
    CHECK_FALSE(duality_check(leaf, same));

    Representation nonlinear({"g"}, {AffineMap(contra, Vector{Scalar(1), Scalar(0)})});
    CHECK_THROWS_AS(duality_check(leaf, nonlinear), std::invalid_argument);
}

TEST_CASE("square_commutes: the nilpotent tower and a perturbed block") {
    Manifest upper = catalog_example("nilpotent_T4");
    REQUIRE(upper.tower.has_value());
    Manifest base = *upper.tower->base;
    Representation rep2 = upper.representation();
    Representation rep1 = base.representation();
    Presentation lower = base.presentation();

    std::vector<Word> proj;
    for (const auto& tokens : upper.tower->projection_tokens)
        proj.push_back(parse_word(lower, tokens));

    CHECK(upper.tower_fiber_coordinate() == 0);
    CHECK(square_commutes(rep2, rep1, proj, 0));

    // The fiber generator projects to the empty word and strikes to the identity.
    CHECK(rep1.evaluate(proj[0]).is_identity());

    // Perturb one entry outside the block structure: x3 row picks up the fiber.
    Matrix broken_lin = rep2.image(1).linear();
    broken_lin.at(2, 0) = Scalar(1);
    std::vector<AffineMap> images;
    for (int g = 0; g < rep2.generator_count(); ++g) images.push_back(rep2.image(g));
    images[1] = AffineMap(broken_lin, rep2.image(1).translation());
    Representation perturbed(rep2.names(), images);
    CHECK_FALSE(square_commutes(perturbed, rep1, proj, 0));

    CHECK_THROWS_AS(square_commutes(rep2, rep2, proj, 0), std::invalid_argument);
}
