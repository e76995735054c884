#pragma once

// Braid words, Conway notation, continued fractions, and the Conway-form
// braid synthesis used to build two-bridge plat diagrams.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace twobridge {

// One braid generator occurrence; words are kept run-length expanded, so the
// exponent is always +1 or -1.
struct BraidLetter {
    int generator_index;  // in [1, strand_count - 1]
    int exponent_sign;    // +1 or -1
};

// A word in the braid group on `strand_count` strands (strand_count even so
// that the plat closure is defined).
struct BraidWord {
    int strand_count = 0;
    std::vector<BraidLetter> letters;
};

// Conway notation: nonempty list of nonzero integers of uniform sign.
using Conway = std::vector<long long>;

// Parses "b1,b2,...,bk" (optional surrounding brackets, ASCII) into a
// validated notation.  Throws EmptyInputError, ZeroEntryError,
// MixedSignError, or ParseError.
Conway parse_conway(const std::string& text);

// Renders a notation back to its canonical text form "b1,b2,...,bk".
std::string conway_to_string(const Conway& c);

// Evaluates b1 + 1/(b2 + 1/(... + 1/bk)) exactly.  The result is reduced;
// its numerator's absolute value is the knot determinant.  Inner
// denominators cannot vanish for uniform-sign entries (asserted).
mpq_class continued_fraction(const Conway& c);

// Rewrites the notation to odd length without changing its continued
// fraction or sign: for even k, the tail [b_k] becomes [b_k - s, s] with
// s = sign(b_k), except that |b_k| = 1 merges into [b_{k-1} + s].
Conway normalize_odd(const Conway& c);

// Builds the Conway-form plat braid in B_4 for an odd-length notation:
// sigma_2^{b1} . sigma_1^{-b2} . sigma_2^{b3} . ... . sigma_2^{bk}.
// Throws std::invalid_argument on even length.
BraidWord conway_to_braid(const Conway& c);

// The plat word for a notation: the Conway-form braid of the odd-length
// normalization, or the empty two-strand word (whose plat closure is the
// round unknot) for the empty notation.
BraidWord plat_word(const Conway& c);

// Signed count of braid letters.
long long exponent_sum(const BraidWord& word);

// The mirror word: each sigma_i^{e} becomes sigma_{2n-i}^{-e}, order kept.
// Its plat closure is the mirror image of the original plat closure.
BraidWord mirror(const BraidWord& word);

}  // namespace twobridge
