#include "affolab/lsa.hpp"

#include <string>

namespace affolab {

Vector lsa_flatten(const LSAElement& x) {
    int n = x.dim();
    Vector flat(2 * (n * n + n));
    int at = 0;
    auto put = [&](const Scalar& s) {
        flat[at++] = Scalar(s.rational_part());
        flat[at++] = Scalar(s.surd_part());
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) put(x.C.at(i, j));
    for (int i = 0; i < n; ++i) put(x.c[i]);
    return flat;
}

const Vector& AlgebraBasis::structure_constants(int i, int j) const {
    return sc_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j));
}

std::optional<Vector> AlgebraBasis::coordinates(const LSAElement& x) const {
    std::vector<Vector> flats;
    flats.reserve(basis_.size());
    for (const auto& b : basis_) flats.push_back(lsa_flatten(b));
    auto coeffs = span_coefficients(flats, lsa_flatten(x));
    if (!coeffs) return std::nullopt;
    // Flattening is Q-linear only; reject irrational coefficients.
    for (int i = 0; i < coeffs->size(); ++i)
        if (!(*coeffs)[i].is_rational()) return std::nullopt;
    return coeffs;
}

LSAElement AlgebraBasis::combine(const Vector& coords) const {
    if (coords.size() != size()) throw std::invalid_argument("coordinate size mismatch");
    LSAElement acc = LSAElement::zero(ambient_dim_);
    for (int i = 0; i < size(); ++i) acc = lsa_add(acc, lsa_scale(coords[i], basis_[static_cast<size_t>(i)]));
    return acc;
}

Matrix AlgebraBasis::left_multiplication(const Vector& coords) const {
    int m = size();
    Matrix L(m, m);
    for (int i = 0; i < m; ++i) {
        if (coords[i].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
            const Vector& prod = sc_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            for (int k = 0; k < m; ++k) L.at(k, j) += coords[i] * prod[k];
        }
    }
    return L;
}

ClosureResult span_closure(const std::vector<LSAElement>& gens) {
    if (gens.empty()) throw std::invalid_argument("span_closure requires at least one generator");
    int n = gens[0].dim();
    for (const auto& g : gens)
        if (g.dim() != n) throw std::invalid_argument("span_closure: mixed dimensions");

    std::vector<Vector> flats;
    flats.reserve(gens.size());
    for (const auto& g : gens) flats.push_back(lsa_flatten(g));
    std::vector<int> keep = independent_subset(flats);

    AlgebraBasis basis;
    basis.ambient_dim_ = n;
    for (int i : keep) basis.basis_.push_back(gens[static_cast<size_t>(i)]);

    int m = basis.size();
    basis.sc_.assign(static_cast<size_t>(m), std::vector<Vector>(static_cast<size_t>(m)));
    ClosureResult res;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            LSAElement prod = lsa_product(basis.basis_[static_cast<size_t>(i)],
                                          basis.basis_[static_cast<size_t>(j)]);
            auto coords = basis.coordinates(prod);
            if (!coords) {
                res.closed = false;
                res.witness = prod;
                res.witness_i = i;
                res.witness_j = j;
                return res;
            }
            basis.sc_[static_cast<size_t>(i)][static_cast<size_t>(j)] = *coords;
        }
    }
    for (int i = 0; i < m && basis.commutative_; ++i)
        for (int j = 0; j < m; ++j)
            if (basis.sc_[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                basis.sc_[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
                basis.commutative_ = false;
                break;
            }
    res.closed = true;
    res.basis = std::move(basis);
    return res;
}

namespace {

/// Kernel of the unitalized trace form: x is in the nilradical iff
/// tr(L_x L_y) = 0 for every basis y and tr(L_x) = 0.
std::vector<Vector> radical_basis(const AlgebraBasis& basis) {
    int m = basis.size();
    std::vector<Matrix> left;
    left.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) left.push_back(basis.left_multiplication(Vector::unit(m, i)));
    auto trace = [](const Matrix& a) {
        Scalar t;
        for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
        return t;
    };
    Matrix gram(m + 1, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i)
            gram.at(j, i) = trace(left[static_cast<size_t>(i)] * left[static_cast<size_t>(j)]);
    for (int i = 0; i < m; ++i) gram.at(m, i) = trace(left[static_cast<size_t>(i)]);
    return kernel_basis(gram);
}

/// Repeated squaring of a radical element down to a square-zero one.
std::optional<LSAElement> square_chain(const AlgebraBasis& basis, LSAElement x) {
    for (int guard = 0; guard <= basis.size() + 1; ++guard) {
        if (x.is_zero()) return std::nullopt;
        LSAElement sq = lsa_product(x, x);
        if (sq.is_zero()) return x;
        x = sq;
    }
    throw std::logic_error("radical element failed to be nilpotent; trace-form kernel is wrong");
}

}  // namespace

std::optional<LSAElement> find_square_zero(const AlgebraBasis& basis) {
    for (const auto& coords : radical_basis(basis)) {
        auto x = square_chain(basis, basis.combine(coords));
        if (x) return x;
    }
    return std::nullopt;
}

bool spans_ideal(const AlgebraBasis& basis, const LSAElement& x) {
    std::vector<Vector> line{lsa_flatten(x)};
    for (const auto& b : basis.elements()) {
        for (const LSAElement& prod : {lsa_product(x, b), lsa_product(b, x)}) {
            auto coeff = span_coefficients(line, lsa_flatten(prod));
            if (!coeff) return false;
            if (coeff->size() == 1 && !(*coeff)[0].is_rational()) return false;
        }
    }
    return true;
}

std::optional<LSAElement> find_square_zero_ideal(const AlgebraBasis& basis) {
    for (const auto& coords : radical_basis(basis)) {
        auto x = square_chain(basis, basis.combine(coords));
        if (x && spans_ideal(basis, *x)) return x;
    }
    return std::nullopt;
}

AlgebraBasis quotient_algebra(const AlgebraBasis& basis, const LSAElement& x) {
    auto xi = basis.coordinates(x);
    if (!xi) throw std::invalid_argument("quotient: element is outside the span");
    if (xi->is_zero()) throw std::invalid_argument("quotient: element is zero");
    if (!lsa_product(x, x).is_zero())
        throw std::domain_error("quotient: element does not square to zero");
    if (!spans_ideal(basis, x)) throw std::domain_error("quotient: Qx is not an ideal");

    int m = basis.size();
    int p = 0;
    while ((*xi)[p].is_zero()) ++p;
    Scalar pivot_inv = (*xi)[p].inverse();

    std::vector<int> keep;
    for (int i = 0; i < m; ++i)
        if (i != p) keep.push_back(i);
    int q = m - 1;

    // Induced structure constants: the coset of e_p is -(1/xi_p) sum_{k != p} xi_k e_k.
    std::vector<std::vector<Vector>> qsc(static_cast<size_t>(q), std::vector<Vector>(static_cast<size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            const Vector& full = basis.structure_constants(keep[static_cast<size_t>(a)],
                                                           keep[static_cast<size_t>(b)]);
            Vector red(q);
            for (int k = 0; k < q; ++k)
                red[k] = full[keep[static_cast<size_t>(k)]] -
                         full[p] * pivot_inv * (*xi)[keep[static_cast<size_t>(k)]];
            qsc[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(red);
        }

    // Concrete realization in aff(R^q): coset y -> (L_y, coords(y)). The left
    // regular representation is an algebra map, so products are preserved.
    AlgebraBasis quot;
    quot.ambient_dim_ = q;
    quot.sc_ = qsc;
    for (int a = 0; a < q; ++a) {
        Matrix L(q, q);
        for (int b = 0; b < q; ++b)
            for (int k = 0; k < q; ++k)
                L.at(k, b) = qsc[static_cast<size_t>(a)][static_cast<size_t>(b)][k];
        quot.basis_.emplace_back(L, Vector::unit(q, a));
    }
    quot.commutative_ = true;
    for (int a = 0; a < q && quot.commutative_; ++a)
        for (int b = 0; b < q; ++b)
            if (qsc[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
                qsc[static_cast<size_t>(b)][static_cast<size_t>(a)]) {
                quot.commutative_ = false;
                break;
            }

    // Closure re-check on the realized elements.
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            LSAElement prod = lsa_product(quot.element(a), quot.element(b));
            if (prod != quot.combine(quot.structure_constants(a, b)))
                throw std::logic_error("quotient realization failed closure re-verification");
        }
    return quot;
}

std::vector<AlgebraBasis> reduction_chain(const std::vector<LSAElement>& gens) {
    ClosureResult closure = span_closure(gens);
    if (!closure.closed)
        throw std::runtime_error(
            "reduction chain: the Q-span is not product-closed (rationality fails); witness " +
            closure.witness->to_string());
    std::vector<AlgebraBasis> chain{*closure.basis};
    while (chain.back().size() > 2) {
        auto x = find_square_zero_ideal(chain.back());
        if (!x)
            throw std::runtime_error(
                "reduction chain stuck: no square-zero ideal generator at dimension " +
                std::to_string(chain.back().size()));
        chain.push_back(quotient_algebra(chain.back(), *x));
    }
    return chain;
}

}  // namespace affolab
