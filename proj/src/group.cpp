#include "affolab/group.hpp"

#include <algorithm>

namespace affolab {

Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->exp});
    return r;
}

Word word_concat(const Word& u, const Word& v) {
    Word r = u;
    r.insert(r.end(), v.begin(), v.end());
    return r;
}

int Presentation::generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    return it == generators.end() ? -1 : static_cast<int>(it - generators.begin());
}

void Presentation::validate() const {
    for (const auto& w : relators)
        for (const auto& l : w) {
            if (l.gen < 0 || l.gen >= static_cast<int>(generators.size()))
                throw std::invalid_argument("relator references an undeclared generator index");
            if (l.exp != 1 && l.exp != -1)
                throw std::invalid_argument("relator letter exponent must be +1 or -1");
        }
}

Word parse_word(const Presentation& p, const std::vector<std::string>& letters) {
    Word w;
    for (const auto& token : letters) {
        std::string name = token;
        long exp = 1;
        auto caret = token.find('^');
        if (caret != std::string::npos) {
            name = token.substr(0, caret);
            std::string e = token.substr(caret + 1);
            try {
                exp = std::stol(e);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed exponent in word letter: '" + token + "'");
            }
        }
        int gen = p.generator_index(name);
        if (gen < 0) throw std::invalid_argument("unknown generator in word: '" + name + "'");
        int sign = exp < 0 ? -1 : 1;
        for (long i = 0; i < std::abs(exp); ++i) w.push_back({gen, sign});
    }
    return w;
}

std::string format_word(const Presentation& p, const Word& w) {
    if (w.empty()) return "<empty>";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += p.generators.at(static_cast<size_t>(l.gen));
        if (l.exp < 0) s += "^-1";
    }
    return s;
}

Representation::Representation(std::vector<std::string> names, std::vector<AffineMap> images,
                               int dim_hint)
    : names_(std::move(names)), images_(std::move(images)) {
    if (names_.size() != images_.size())
        throw std::invalid_argument("representation: one image per generator name required");
    dim_ = images_.empty() ? dim_hint : images_[0].dim();
    for (const auto& f : images_)
        if (f.dim() != dim_) throw std::invalid_argument("representation: mixed dimensions");
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!by_name_.emplace(names_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("representation: duplicate generator name '" + names_[i] + "'");
    }
}

const AffineMap& Representation::image(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw std::invalid_argument("unknown generator '" + name + "'");
    return images_[static_cast<size_t>(it->second)];
}

AffineMap Representation::evaluate(const Word& w) const {
    AffineMap acc = AffineMap::identity(dim_);
    for (const auto& l : w) {
        if (l.gen < 0 || l.gen >= generator_count())
            throw std::invalid_argument("word references an unknown generator index");
        const AffineMap& g = images_[static_cast<size_t>(l.gen)];
        acc = compose(acc, l.exp > 0 ? g : inverse(g));
    }
    return acc;
}

bool check_relations(const Presentation& p, const Representation& rep) {
    for (const auto& r : p.relators)
        if (!rep.evaluate(r).is_identity()) return false;
    return true;
}

}  // namespace affolab
