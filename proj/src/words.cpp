#include "linkhom/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linkhom {

BinaryWord::BinaryWord(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("BinaryWord: entries must be 0 or 1");
}

BinaryWord BinaryWord::parse(std::string_view s) {
    std::vector<uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument(std::string("not a binary word: '") + std::string(s) + "'");
        bits.push_back(c == '1' ? 1 : 0);
    }
    return BinaryWord(std::move(bits));
}

unsigned BinaryWord::weight() const {
    return static_cast<unsigned>(std::count(bits_.begin(), bits_.end(), uint8_t{1}));
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

BinaryWord operator+(const BinaryWord& l, const BinaryWord& r) {
    std::vector<uint8_t> bits = l.bits_;
    bits.insert(bits.end(), r.bits_.begin(), r.bits_.end());
    return BinaryWord(std::move(bits));
}

std::vector<BinaryWord> all_binary_words(size_t n) {
    std::vector<BinaryWord> out;
    out.reserve(size_t{1} << n);
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<uint8_t> bits(n);
        for (size_t i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1;
        out.emplace_back(std::move(bits));
    }
    return out;
}

unsigned area(const LevelWord& gamma) {
    unsigned sum = std::accumulate(gamma.begin(), gamma.end(), 0u);
    unsigned nonzero = static_cast<unsigned>(
        std::count_if(gamma.begin(), gamma.end(), [](unsigned g) { return g > 0; }));
    return sum - nonzero;
}

namespace {

void require_equal_length(size_t a, size_t b) {
    if (a != b) throw std::invalid_argument("level word and label word lengths differ");
}

}  // namespace

std::vector<std::pair<unsigned, unsigned>> dinv_pairs(const LevelWord& gamma,
                                                      const LabelWord& pi) {
    require_equal_length(gamma.size(), pi.size());
    std::vector<std::pair<unsigned, unsigned>> pairs;
    const size_t n = gamma.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool hit = (gamma[i] == gamma[j] && pi[i] > pi[j]) ||
                       (gamma[i] + 1 == gamma[j] && pi[i] < pi[j]);
            if (hit) pairs.emplace_back(static_cast<unsigned>(i + 1), static_cast<unsigned>(j + 1));
        }
    return pairs;
}

unsigned dinv(const LevelWord& gamma, const LabelWord& pi) {
    return static_cast<unsigned>(dinv_pairs(gamma, pi).size());
}

unsigned dinv_super(const LevelWord& gamma, const LabelWord& pi) {
    require_equal_length(gamma.size(), pi.size());
    const size_t n = gamma.size();
    unsigned count = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool both_small = pi[i] == 0 && pi[j] == 0;
            if (gamma[i] == gamma[j] && (pi[i] > pi[j] || both_small)) ++count;
            if (gamma[i] + 1 == gamma[j] && (pi[i] < pi[j] || both_small)) ++count;
        }
    return count;
}

unsigned BarredWord::bar_count() const {
    return static_cast<unsigned>(std::count(bars.begin(), bars.end(), uint8_t{1}));
}

unsigned BarredWord::area() const { return linkhom::area(levels); }

std::string BarredWord::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < levels.size(); ++i) {
        os << levels[i];
        if (i < bars.size() && bars[i]) os << '\'';
    }
    return os.str();
}

unsigned dinv_barred(const BarredWord& gamma, const LabelWord& pi) {
    require_equal_length(gamma.levels.size(), pi.size());
    const auto& g = gamma.levels;
    const size_t n = g.size();
    unsigned count = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (g[i] == g[j] && pi[i] > pi[j]) ++count;
            if (g[i] + 1 == g[j] && pi[i] < pi[j] && !gamma.bars[j]) ++count;
        }
    return count;
}

unsigned dinv_i(const BarredWord& gamma, unsigned i) {
    const auto& g = gamma.levels;
    if (i < 1 || i > g.size()) throw std::out_of_range("dinv_i: position out of range");
    const size_t idx = i - 1;
    unsigned count = 0;
    for (size_t j = 0; j < idx; ++j)
        if (g[j] == g[idx]) ++count;
    for (size_t j = idx + 1; j < g.size(); ++j)
        if (g[j] == g[idx] + 1 && !gamma.bars[j]) ++count;
    return count;
}

std::vector<unsigned> dinv_i_all(const BarredWord& gamma) {
    std::vector<unsigned> out(gamma.levels.size());
    for (unsigned i = 1; i <= gamma.levels.size(); ++i) out[i - 1] = dinv_i(gamma, i);
    return out;
}

bool is_fubini(const LevelWord& gamma) {
    if (gamma.empty()) return true;
    unsigned mx = *std::max_element(gamma.begin(), gamma.end());
    std::vector<bool> seen(mx + 1, false);
    for (unsigned g : gamma) seen[g] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

bool bar_eligible(const LevelWord& g, size_t j) {
    if (g[j] == 0) return false;
    for (size_t i = 0; i < g.size(); ++i)
        if (i != j && g[i] == g[j]) return false;  // value must be unique
    for (size_t i = 0; i < j; ++i)
        if (g[i] >= g[j]) return false;  // strict left-to-right maximum
    return true;
}

// Zero positions prescribed for words associated with v.
std::vector<bool> zero_pattern(const BinaryWord& v) {
    std::vector<bool> zero(v.size(), false);
    if (v.all_zero()) {
        zero[0] = true;
    } else {
        for (size_t i = 0; i < v.size(); ++i) zero[i] = v[i] == 1;
    }
    return zero;
}

}  // namespace

bool is_valid_barred_fubini(const BarredWord& gamma, const BinaryWord& v) {
    const auto& g = gamma.levels;
    if (g.size() != v.size() || gamma.bars.size() != g.size() || v.empty()) return false;
    std::vector<bool> zero = zero_pattern(v);
    for (size_t i = 0; i < g.size(); ++i)
        if (zero[i] != (g[i] == 0)) return false;
    if (!is_fubini(g)) return false;
    for (size_t j = 0; j < g.size(); ++j)
        if (gamma.bars[j] && !bar_eligible(g, j)) return false;
    return true;
}

std::vector<BarredWord> enumerate_barred_fubini(const BinaryWord& v) {
    if (v.empty()) throw std::invalid_argument("enumerate_barred_fubini: empty word");
    const size_t n = v.size();
    std::vector<bool> zero = zero_pattern(v);

    std::vector<size_t> free_pos;
    for (size_t i = 0; i < n; ++i)
        if (!zero[i]) free_pos.push_back(i);
    const size_t p = free_pos.size();

    std::vector<LevelWord> fubini;
    if (p == 0) {
        fubini.push_back(LevelWord(n, 0));
    } else {
        LevelWord g(n, 0);
        // counts[k] = occurrences of value k among the filled free positions
        std::vector<unsigned> counts(p + 1, 0);
        unsigned cur_max = 0;

        auto missing_below_max = [&]() {
            unsigned missing = 0;
            for (unsigned k = 1; k <= cur_max; ++k)
                if (counts[k] == 0) ++missing;
            return missing;
        };

        auto rec = [&](auto&& self, size_t idx) -> void {
            if (idx == p) {
                if (missing_below_max() == 0) fubini.push_back(g);
                return;
            }
            const size_t remaining = p - idx;
            for (unsigned val = 1; val <= p; ++val) {
                g[free_pos[idx]] = val;
                ++counts[val];
                unsigned saved_max = cur_max;
                cur_max = std::max(cur_max, val);
                if (missing_below_max() < remaining) self(self, idx + 1);
                cur_max = saved_max;
                --counts[val];
            }
        };
        rec(rec, 0);
    }

    std::vector<BarredWord> out;
    for (const LevelWord& g : fubini) {
        std::vector<size_t> eligible;
        for (size_t j = 0; j < n; ++j)
            if (bar_eligible(g, j)) eligible.push_back(j);
        for (size_t mask = 0; mask < (size_t{1} << eligible.size()); ++mask) {
            BarredWord w{g, std::vector<uint8_t>(n, 0)};
            for (size_t b = 0; b < eligible.size(); ++b)
                if (mask & (size_t{1} << b)) w.bars[eligible[b]] = 1;
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint8_t> build_u_word(const BinaryWord& v, const BinaryWord& w) {
    const size_t n = v.size();
    if (w.size() != n - v.weight())
        throw std::invalid_argument("build_u_word: w must have one entry per zero of v");
    std::vector<uint8_t> u(n, 0);
    size_t j = 0;
    for (size_t i = 0; i < n; ++i) {
        if (v[i] == 1) u[i] = 1;
        else u[i] = static_cast<uint8_t>(2 * w[j++]);
    }
    return u;
}

std::pair<std::vector<uint8_t>, BinaryWord> gamma_to_uw(const LevelWord& gamma) {
    std::vector<uint8_t> u(gamma.size(), 0);
    std::vector<uint8_t> w_bits;
    for (size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) u[i] = 1;
        else if (gamma[i] == 1) u[i] = 2;
        if (u[i] != 1) w_bits.push_back(u[i] == 2 ? 1 : 0);
    }
    return {std::move(u), BinaryWord(std::move(w_bits))};
}

}  // namespace linkhom
