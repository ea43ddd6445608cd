#include "affolab/holonomy.hpp"

#include <algorithm>
#include <cmath>

namespace affolab {

std::optional<Word> Ball::word_for(const AffineMap& f) const {
    auto it = index_.find(f.key());
    if (it == index_.end()) return std::nullopt;
    Word w;
    for (int at = it->second; at != 0; at = provenance_[static_cast<size_t>(at)].first)
        w.push_back(provenance_[static_cast<size_t>(at)].second);
    std::reverse(w.begin(), w.end());
    return w;
}

Ball enumerate_ball(const Representation& rep, int radius, long long cap) {
    if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
    Ball ball;

    std::vector<std::pair<Letter, AffineMap>> steps;
    for (int g = 0; g < rep.generator_count(); ++g) {
        steps.emplace_back(Letter{g, 1}, rep.image(g));
        steps.emplace_back(Letter{g, -1}, inverse(rep.image(g)));
    }

    AffineMap id = AffineMap::identity(rep.dim());
    ball.elements_.push_back(id);
    ball.provenance_.emplace_back(-1, Letter{-1, 0});
    ball.index_.emplace(id.key(), 0);
    ball.table_.sizes.push_back(1);

    size_t frontier_begin = 0;
    for (int r = 1; r <= radius; ++r) {
        size_t frontier_end = ball.elements_.size();
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const auto& [letter, g] : steps) {
                AffineMap next = compose(ball.elements_[i], g);
                std::string k = next.key();
                if (ball.index_.count(k)) continue;
                if (static_cast<long long>(ball.elements_.size()) >= cap) {
                    ball.table_.truncated = true;
                    return ball;
                }
                ball.index_.emplace(std::move(k), static_cast<int>(ball.elements_.size()));
                ball.elements_.push_back(std::move(next));
                ball.provenance_.emplace_back(static_cast<int>(i), letter);
            }
        }
        frontier_begin = frontier_end;
        ball.table_.sizes.push_back(static_cast<long long>(ball.elements_.size()));
    }
    return ball;
}

namespace {

struct LineFit {
    double slope;
    double sse;
};

LineFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = 0, my = 0;
    size_t n = xs.size();
    for (size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = sxx == 0 ? 0.0 : sxy / sxx;
    double sse = 0;
    for (size_t i = 0; i < n; ++i) {
        double r = ys[i] - (my + slope * (xs[i] - mx));
        sse += r * r;
    }
    return {slope, sse};
}

}  // namespace

GrowthEstimate growth_estimate(const GrowthTable& t) {
    if (t.sizes.size() < 6)
        throw std::invalid_argument("growth_estimate needs a table with at least 6 entries");
    GrowthEstimate est{GrowthEstimate::Kind::inconclusive, 0, 0.0, ""};
    if (t.truncated) {
        est.note = "enumeration truncated by the element cap";
        return est;
    }

    int maxn = t.max_radius();
    // Successive-ratio screen over the last 5 radii.
    bool ratios_high = true;
    for (int n = maxn - 5; n < maxn; ++n) {
        double ratio = static_cast<double>(t.sizes[static_cast<size_t>(n + 1)]) /
                       static_cast<double>(t.sizes[static_cast<size_t>(n)]);
        if (ratio < 1.1) {
            ratios_high = false;
            break;
        }
    }

    // Fit log|B| against log n (polynomial model) and against n (exponential
    // model) on the upper half of the table. A polynomial table at small
    // radius still shows ratios well above 1.1, so the ratio screen alone
    // misclassifies; the better-fitting model decides.
    std::vector<double> lx, ln_of_n, ys;
    for (int n = std::max(1, maxn / 2); n <= maxn; ++n) {
        lx.push_back(static_cast<double>(n));
        ln_of_n.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(static_cast<double>(t.sizes[static_cast<size_t>(n)])));
    }
    LineFit poly = least_squares(ln_of_n, ys);
    LineFit expo = least_squares(lx, ys);

    if (ratios_high && expo.sse <= poly.sse) {
        est.kind = GrowthEstimate::Kind::exponential;
        est.rate = std::exp(expo.slope);
        est.note = "log-linear model fits best; heuristic label, not a proof";
        return est;
    }
    est.kind = GrowthEstimate::Kind::polynomial;
    est.degree = static_cast<int>(std::lround(poly.slope));
    if (est.degree < 0) est.degree = 0;
    est.note = "log-log least squares on the upper half of the table; heuristic label";
    return est;
}

bool is_unimodular(const Representation& rep) {
    for (int g = 0; g < rep.generator_count(); ++g) {
        Scalar det = determinant(rep.image(g).linear());
        if (det != Scalar(1) && det != Scalar(-1)) return false;
    }
    return true;
}

TranslationSearch find_translation(const Representation& rep, int max_len, long long cap) {
    if (max_len < 1) throw std::invalid_argument("find_translation needs max_len >= 1");
    Ball ball = enumerate_ball(rep, max_len, cap);
    for (const auto& f : ball.elements()) {
        if (f.is_translation() && !f.translation().is_zero())
            return {TranslationSearch::Status::found, ball.word_for(f), f};
    }
    if (ball.truncated()) return {TranslationSearch::Status::inconclusive, std::nullopt, std::nullopt};
    return {TranslationSearch::Status::none, std::nullopt, std::nullopt};
}

bool duality_check(const Representation& affine_rep, const Representation& transverse_rep) {
    if (affine_rep.generator_count() != transverse_rep.generator_count() ||
        affine_rep.names() != transverse_rep.names())
        throw std::invalid_argument("duality check: generator sets differ");
    if (affine_rep.dim() != transverse_rep.dim())
        throw std::invalid_argument("duality check: dimension mismatch");
    for (int g = 0; g < transverse_rep.generator_count(); ++g)
        if (!transverse_rep.image(g).translation().is_zero())
            throw std::invalid_argument("duality check: transverse representation must be linear");
    Matrix id = Matrix::identity(affine_rep.dim());
    for (int g = 0; g < affine_rep.generator_count(); ++g) {
        if (affine_rep.image(g).linear().transpose() * transverse_rep.image(g).linear() != id)
            return false;
    }
    return true;
}

namespace {

/// Strikes one coordinate of an affine map, provided the linear part maps the
/// struck axis into itself (column condition); nullopt otherwise.
std::optional<AffineMap> strike_coordinate(const AffineMap& f, int coord) {
    int n = f.dim();
    for (int i = 0; i < n; ++i)
        if (i != coord && !f.linear().at(i, coord).is_zero()) return std::nullopt;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (i != coord) keep.push_back(i);
    Matrix lin = f.linear().select(keep, keep);
    Vector t(n - 1);
    for (size_t i = 0; i < keep.size(); ++i) t[static_cast<int>(i)] = f.translation()[keep[i]];
    if (determinant(lin).is_zero()) return std::nullopt;
    return AffineMap(lin, t);
}

}  // namespace

bool square_commutes(const Representation& rep2, const Representation& rep1,
                     const std::vector<Word>& proj, int fiber_coordinate) {
    if (rep2.dim() != rep1.dim() + 1)
        throw std::invalid_argument("square_commutes: upper dimension must be lower + 1");
    if (static_cast<int>(proj.size()) != rep2.generator_count())
        throw std::invalid_argument("square_commutes: one projected word per upper generator");
    if (fiber_coordinate < 0 || fiber_coordinate >= rep2.dim())
        throw std::invalid_argument("square_commutes: fiber coordinate out of range");
    for (int g = 0; g < rep2.generator_count(); ++g) {
        auto reduced = strike_coordinate(rep2.image(g), fiber_coordinate);
        if (!reduced) return false;  // image breaks the block structure
        if (*reduced != rep1.evaluate(proj[static_cast<size_t>(g)])) return false;
    }
    return true;
}

}  // namespace affolab
