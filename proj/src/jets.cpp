#include "affolab/jets.hpp"

namespace affolab {

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    Polynomial r = p;
    for (const auto& [mono, coeff] : q) {
        auto it = r.find(mono);
        if (it == r.end())
            r.emplace(mono, coeff);
        else {
            it->second += coeff;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [mp, cp] : p)
        for (const auto& [mq, cq] : q) {
            std::vector<int> mono(mp.size());
            for (size_t i = 0; i < mp.size(); ++i) mono[i] = mp[i] + mq[i];
            Scalar c = cp * cq;
            auto it = r.find(mono);
            if (it == r.end())
                r.emplace(std::move(mono), c);
            else {
                it->second += c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

Polynomial poly_substitute(const Polynomial& p, const Matrix& m) {
    int n = m.rows();
    std::vector<Polynomial> images(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Polynomial pi;
        for (int j = 0; j < n; ++j) {
            if (m.at(i, j).is_zero()) continue;
            std::vector<int> mono(static_cast<size_t>(n), 0);
            mono[static_cast<size_t>(j)] = 1;
            pi.emplace(std::move(mono), m.at(i, j));
        }
        images[static_cast<size_t>(i)] = std::move(pi);
    }
    Polynomial result;
    for (const auto& [mono, coeff] : p) {
        Polynomial term;
        term.emplace(std::vector<int>(static_cast<size_t>(n), 0), coeff);
        for (size_t i = 0; i < mono.size(); ++i)
            for (int e = 0; e < mono[i]; ++e) term = poly_mul(term, images[i]);
        result = poly_add(result, term);
    }
    return result;
}

namespace {

void gen_monomials(int vars, int degree, int from, std::vector<int>& current,
                   std::vector<std::vector<int>>& out) {
    if (degree == 0) {
        out.push_back(current);
        return;
    }
    for (int v = from; v < vars; ++v) {
        ++current[static_cast<size_t>(v)];
        gen_monomials(vars, degree - 1, v, current, out);
        --current[static_cast<size_t>(v)];
    }
}

}  // namespace

JetModule::JetModule(int vars, int degree) : vars_(vars), degree_(degree) {
    if (vars < 1) throw std::invalid_argument("jet module needs at least one variable");
    if (degree < 1) throw std::invalid_argument("jet module degree must be >= 1");
    for (int d = 1; d <= degree; ++d) {
        std::vector<int> current(static_cast<size_t>(vars), 0);
        gen_monomials(vars, d, 0, current, monomials_);
    }
    for (size_t i = 0; i < monomials_.size(); ++i)
        index_.emplace(monomials_[i], static_cast<int>(i));
}

int JetModule::index_of(const std::vector<int>& mono) const {
    auto it = index_.find(mono);
    if (it == index_.end()) throw std::invalid_argument("monomial outside the jet module");
    return it->second;
}

Matrix JetModule::action_matrix(const Matrix& t) const {
    if (t.rows() != vars_ || t.cols() != vars_)
        throw std::invalid_argument("jet action: matrix dimension mismatch");
    Matrix tinv = inverse(t);
    Matrix act(dim(), dim());
    for (int col = 0; col < dim(); ++col) {
        Polynomial mono;
        mono.emplace(monomials_[static_cast<size_t>(col)], Scalar(1));
        Polynomial image = poly_substitute(mono, tinv);
        for (const auto& [m, coeff] : image) act.at(index_of(m), col) = coeff;
    }
    return act;
}

Vector JetModule::to_coefficients(const Polynomial& p) const {
    Vector v(dim());
    for (const auto& [m, coeff] : p) v[index_of(m)] = coeff;
    return v;
}

Polynomial JetModule::to_polynomial(const Vector& coeffs) const {
    if (coeffs.size() != dim()) throw std::invalid_argument("jet coefficient size mismatch");
    Polynomial p;
    for (int i = 0; i < dim(); ++i)
        if (!coeffs[i].is_zero()) p.emplace(monomials_[static_cast<size_t>(i)], coeffs[i]);
    return p;
}

}  // namespace affolab
