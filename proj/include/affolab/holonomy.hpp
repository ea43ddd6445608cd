#pragma once

#include "affolab/group.hpp"

#include <optional>
#include <unordered_map>

namespace affolab {

/// Ball sizes |B(0)|..|B(N)| of the word metric; truncated marks a run that
/// hit the element cap before finishing radius N (sizes then cover the
/// completed radii only).
struct GrowthTable {
    std::vector<long long> sizes;
    bool truncated = false;

    int max_radius() const { return static_cast<int>(sizes.size()) - 1; }
};

constexpr long long kDefaultBallCap = 200000;

/// Word-metric ball of a finitely generated affine group, with a membership
/// index keyed on the exact canonical encoding of the elements.
class Ball {
public:
    const std::vector<AffineMap>& elements() const { return elements_; }
    const GrowthTable& table() const { return table_; }
    bool truncated() const { return table_.truncated; }
    bool contains(const AffineMap& f) const { return index_.count(f.key()) > 0; }

    /// Word of minimal length evaluating to f, when f is in the ball.
    std::optional<Word> word_for(const AffineMap& f) const;

private:
    friend Ball enumerate_ball(const Representation&, int, long long);
    std::vector<AffineMap> elements_;
    std::vector<std::pair<int, Letter>> provenance_;  // BFS parent + letter, (-1) at identity
    std::unordered_map<std::string, int> index_;
    GrowthTable table_;
};

/// Breadth-first enumeration of all products of generators and inverses of
/// word length at most radius, deduplicated by exact equality.
Ball enumerate_ball(const Representation& rep, int radius, long long cap = kDefaultBallCap);

struct GrowthEstimate {
    enum class Kind { polynomial, exponential, inconclusive } kind;
    int degree = 0;          // polynomial only
    double rate = 0.0;       // exponential only: fitted |B(n+1)|/|B(n)|
    std::string note;
};

/// Finite-radius heuristic label; never a proof. Requires >= 6 table entries.
GrowthEstimate growth_estimate(const GrowthTable& t);

/// All generator linear parts have determinant +-1 (generators suffice:
/// determinants multiply).
bool is_unimodular(const Representation& rep);

struct TranslationSearch {
    enum class Status { found, none, inconclusive } status;
    std::optional<Word> word;       // found only
    std::optional<AffineMap> element;
};

/// Exhaustive search up to max_len for a word evaluating to a nontrivial
/// translation (identity linear part, nonzero translation vector).
/// Hitting the cap yields inconclusive, distinct from a definite none.
TranslationSearch find_translation(const Representation& rep, int max_len,
                                   long long cap = kDefaultBallCap);

/// Degree-1 content of the leaf/transversal duality law: for every generator,
/// L_affine(g)^T * T(g) = I. The transverse representation must be linear
/// (zero translations); anything else is rejected.
bool duality_check(const Representation& affine_rep, const Representation& transverse_rep);

/// Block-triangular consistency of a tower step: striking the fiber
/// coordinate of every rep2 image must reproduce rep1's image of the
/// projected word. proj is indexed by rep2's generators; the fiber generator
/// projects to the empty word.
bool square_commutes(const Representation& rep2, const Representation& rep1,
                     const std::vector<Word>& proj, int fiber_coordinate);

}  // namespace affolab
