#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hodgekit/linalg.hpp"

namespace hodge {

// Tensor-algebra representation of free Lie elements: word = generator
// indices, concatenation = associative product, no hidden signs.
using Word = std::vector<size_t>;
using TensorPoly = std::map<Word, Scalar>;

/* Free graded Lie algebra on generators with chain degrees, truncated at a
   bracket-length cap and a degree cap.  Basis: bracketed Lyndon words plus
   the square [b_w, b_w] for every Lyndon word of odd degree.  Expansions are
   triangular against the word order -- a Lyndon element leads with its own
   word (coefficient 1), a square with the doubled word (coefficient 2) --
   which is what makes express() a finite peeling. */
class FreeLie {
public:
    struct Element {
        Word word;       // Lyndon word
        bool square;     // [b_w, b_w], stored once, degree doubled
        int degree;
        size_t length;   // bracket length (doubled for squares)
    };

    FreeLie() = default;
    FreeLie(std::vector<int> gen_degrees, size_t max_length, int max_degree);

    size_t generators() const { return degrees_.size(); }
    int gen_degree(size_t g) const { return degrees_[g]; }
    size_t max_length() const { return max_length_; }
    int max_degree() const { return max_degree_; }

    const std::vector<Element>& basis() const { return basis_; }
    const TensorPoly& expansion(size_t idx) const { return expansions_[idx]; }
    std::optional<size_t> index_of(const Word& w, bool square) const;

    int degree_of(const Word& w) const;

    static TensorPoly generator(size_t g);
    // [x, y] = xy - (-1)^{|x||y|} yx, degreewise on words.
    TensorPoly bracket(const TensorPoly& x, const TensorPoly& y) const;

    /* Coefficients in the basis.  Words longer than the cap are dropped when
       truncate_overflow is set (the pro-nilpotent quotient); otherwise they
       are an error, as is anything outside the Lie span or the degree cap. */
    std::map<size_t, Scalar> express(const TensorPoly& p, bool truncate_overflow) const;

private:
    std::vector<int> degrees_;
    size_t max_length_ = 0;
    int max_degree_ = 0;
    std::vector<Element> basis_;
    std::vector<TensorPoly> expansions_;
    std::map<std::pair<Word, bool>, size_t> index_;
};

// All Lyndon words of length 1..max_length over an alphabet of k letters,
// in lexicographic order (Duval's generation).
std::vector<Word> lyndon_words(size_t letters, size_t max_length);

// Standard factorization w = uv, v the longest proper Lyndon suffix.
std::pair<Word, Word> lyndon_factorize(const Word& w);

}  // namespace hodge
