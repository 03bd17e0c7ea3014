#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linkhom {

// Word over {0,1}; |v| (the weight) counts the 1s.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<uint8_t> bits);
    static BinaryWord parse(std::string_view s);  // throws on non-binary characters
    static BinaryWord zeros(size_t n) { return BinaryWord(std::vector<uint8_t>(n, 0)); }
    static BinaryWord ones(size_t n) { return BinaryWord(std::vector<uint8_t>(n, 1)); }

    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    unsigned weight() const;
    bool all_zero() const { return !bits_.empty() && weight() == 0; }
    uint8_t operator[](size_t i) const { return bits_[i]; }  // 0-based
    const std::vector<uint8_t>& bits() const { return bits_; }

    std::string str() const;
    friend BinaryWord operator+(const BinaryWord& l, const BinaryWord& r);
    auto operator<=>(const BinaryWord&) const = default;

private:
    std::vector<uint8_t> bits_;
};

// All 2^n words of the given length, in lexicographic order.
std::vector<BinaryWord> all_binary_words(size_t n);

using LevelWord = std::vector<unsigned>;
// Labels are positive integers; the two-letter evaluation alphabet reuses the
// same type with 0 standing for the small letter and 1 for the large one.
using LabelWord = std::vector<int>;

unsigned area(const LevelWord& gamma);

unsigned dinv(const LevelWord& gamma, const LabelWord& pi);
// The contributing (i, j) pairs, 1-based, ordered lexicographically.
std::vector<std::pair<unsigned, unsigned>> dinv_pairs(const LevelWord& gamma,
                                                      const LabelWord& pi);

// dinv over the two-letter alphabet {0,1} where 0 also counts as strictly less
// than itself, so a pair of 0s scores in the equal-level clause and in the
// level-plus-one clause alike; a pair of 1s never scores.
unsigned dinv_super(const LevelWord& gamma, const LabelWord& pi);

// Level word with bar flags. Valid words only bar entries that are positive,
// unique, and strict left-to-right maxima.
struct BarredWord {
    LevelWord levels;
    std::vector<uint8_t> bars;

    unsigned bar_count() const;
    unsigned area() const;
    std::string str() const;  // trailing apostrophe marks a bar: "01'2"
    auto operator<=>(const BarredWord&) const = default;
};

// Barred variant: the level-plus-one clause only counts pairs whose higher
// entry is unbarred.
unsigned dinv_barred(const BarredWord& gamma, const LabelWord& pi);

// dinv_i(gamma) = #{j < i : gamma_j = gamma_i}
//               + #{j > i : gamma_j = gamma_i + 1, position j unbarred}, i 1-based.
unsigned dinv_i(const BarredWord& gamma, unsigned i);
std::vector<unsigned> dinv_i_all(const BarredWord& gamma);

// Every value 0..max(gamma) occurs.
bool is_fubini(const LevelWord& gamma);

// Full membership test for the enumerated family of v: zero pattern, Fubini
// completeness and bar eligibility.
bool is_valid_barred_fubini(const BarredWord& gamma, const BinaryWord& v);

// The finite family attached to v, sorted lexicographically on (levels, bars).
// For the all-zero word the zero pattern degenerates to a single zero in
// position 1, matching the family of 10^{n-1}.
std::vector<BarredWord> enumerate_barred_fubini(const BinaryWord& v);

// u_i = 1 where v_i = 1; at the j-th zero of v, u_i = 2*w_j.
std::vector<uint8_t> build_u_word(const BinaryWord& v, const BinaryWord& w);

// u_i = 1 if gamma_i = 0, 2 if gamma_i = 1, 0 otherwise; w records the 2s (as
// 1s) and 0s of u in reading order.
std::pair<std::vector<uint8_t>, BinaryWord> gamma_to_uw(const LevelWord& gamma);

}  // namespace linkhom
