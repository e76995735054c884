#include "braid.hpp"

#include <cassert>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace twobridge {

namespace {

// Splits on commas and trims ASCII whitespace around each piece.
std::vector<std::string> split_entries(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    out.push_back(current);
    for (auto& piece : out) {
        size_t a = piece.find_first_not_of(" \t\r\n");
        size_t b = piece.find_last_not_of(" \t\r\n");
        piece = (a == std::string::npos) ? std::string() : piece.substr(a, b - a + 1);
    }
    return out;
}

}  // namespace

Conway parse_conway(const std::string& text) {
    std::string body = text;
    size_t a = body.find_first_not_of(" \t\r\n");
    size_t b = body.find_last_not_of(" \t\r\n");
    body = (a == std::string::npos) ? std::string() : body.substr(a, b - a + 1);
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);

    if (body.find_first_not_of(" \t\r\n") == std::string::npos)
        throw EmptyInputError("empty Conway notation");

    Conway entries;
    for (const std::string& piece : split_entries(body)) {
        if (piece.empty())
            throw ParseError("empty entry in Conway notation");
        long long value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size())
            throw ParseError("not an integer: '" + piece + "'");
        if (value == 0)
            throw ZeroEntryError("zero entry in Conway notation");
        entries.push_back(value);
    }

    bool has_pos = false, has_neg = false;
    for (long long v : entries) (v > 0 ? has_pos : has_neg) = true;
    if (has_pos && has_neg)
        throw MixedSignError("mixed signs in Conway notation");
    return entries;
}

std::string conway_to_string(const Conway& c) {
    std::ostringstream out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << c[i];
    }
    return out.str();
}

mpq_class continued_fraction(const Conway& c) {
    assert(!c.empty());
    mpq_class value(static_cast<long>(c.back()));
    for (size_t i = c.size() - 1; i-- > 0;) {
        // Uniform-sign tails never evaluate to zero, so the reciprocal is
        // always defined.
        assert(value != 0);
        value = mpq_class(static_cast<long>(c[i])) + 1 / value;
    }
    value.canonicalize();
    return value;
}

Conway normalize_odd(const Conway& c) {
    assert(!c.empty());
    if (c.size() % 2 == 1) return c;
    Conway out = c;
    long long tail = out.back();
    long long s = tail > 0 ? 1 : -1;
    if (tail == s) {
        // |b_k| = 1: splitting would create a zero entry, so merge the unit
        // into its neighbour instead.
        out.pop_back();
        out.back() += s;
    } else {
        out.back() = tail - s;
        out.push_back(s);
    }
    return out;
}

BraidWord conway_to_braid(const Conway& c) {
    if (c.size() % 2 == 0)
        throw std::invalid_argument("Conway-form braid requires an odd-length notation");
    BraidWord word;
    word.strand_count = 4;
    for (size_t i = 0; i < c.size(); ++i) {
        // Odd positions (b1, b3, ...) twist strands 2,3; even positions
        // contribute sigma_1 with negated exponent.
        bool twist_region = (i % 2 == 0);
        long long entry = twist_region ? c[i] : -c[i];
        int generator = twist_region ? 2 : 1;
        int sign = entry > 0 ? 1 : -1;
        for (long long n = 0; n < std::llabs(entry); ++n)
            word.letters.push_back({generator, sign});
    }
    return word;
}

BraidWord plat_word(const Conway& c) {
    if (c.empty()) return BraidWord{2, {}};
    return conway_to_braid(normalize_odd(c));
}

long long exponent_sum(const BraidWord& word) {
    long long total = 0;
    for (const BraidLetter& letter : word.letters) total += letter.exponent_sign;
    return total;
}

BraidWord mirror(const BraidWord& word) {
    BraidWord out;
    out.strand_count = word.strand_count;
    out.letters.reserve(word.letters.size());
    for (const BraidLetter& letter : word.letters)
        out.letters.push_back({word.strand_count - letter.generator_index, -letter.exponent_sign});
    return out;
}

}  // namespace twobridge
