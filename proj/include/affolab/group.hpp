#pragma once

#include "affolab/affine.hpp"

#include <map>
#include <string>

namespace affolab {

/// One letter of a word: generator index with exponent +1 or -1.
struct Letter {
    int gen;
    int exp;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.gen == b.gen && a.exp == b.exp;
    }
};

using Word = std::vector<Letter>;

Word word_inverse(const Word& w);
Word word_concat(const Word& u, const Word& v);

/// Abstract presentation: generator names plus relator words (expected to
/// evaluate to the identity under any representation of the group).
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int generator_index(const std::string& name) const;  // -1 when absent
    void validate() const;                               // letters reference declared generators
};

/// Parses "g2^-1" style letters against the presentation's generator list;
/// integer exponents expand into unit-exponent letters.
Word parse_word(const Presentation& p, const std::vector<std::string>& letters);
std::string format_word(const Presentation& p, const Word& w);

/// Affine representation aligned with a generator list.
class Representation {
public:
    /// dim_hint fixes the ambient dimension when there are no generators.
    Representation(std::vector<std::string> names, std::vector<AffineMap> images, int dim_hint = 0);

    int dim() const { return dim_; }
    int generator_count() const { return static_cast<int>(images_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const AffineMap& image(int i) const { return images_.at(static_cast<size_t>(i)); }
    const AffineMap& image(const std::string& name) const;

    AffineMap evaluate(const Word& w) const;

private:
    std::vector<std::string> names_;
    std::vector<AffineMap> images_;
    std::map<std::string, int> by_name_;
    int dim_;
};

/// True iff every relator evaluates to the identity map, exactly.
bool check_relations(const Presentation& p, const Representation& rep);

struct GroupData {
    Presentation presentation;
    Representation representation;
};

}  // namespace affolab
