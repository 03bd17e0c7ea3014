#include "linkhom/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace linkhom {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
        if (p == 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view s) {
    std::vector<unsigned> parts;
    std::string token;
    std::istringstream in{std::string(s)};
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        unsigned long value = std::stoul(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size() || value == 0 || value > 1000000)
            throw std::invalid_argument("Partition: bad part '" + token + "'");
        parts.push_back(static_cast<unsigned>(value));
    }
    return Partition(std::move(parts));
}

unsigned Partition::sum() const {
    unsigned s = 0;
    for (unsigned p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<unsigned> conj(parts_[0], 0);
    for (unsigned p : parts_)
        for (unsigned i = 0; i < p; ++i) ++conj[i];
    return Partition(std::move(conj));
}

bool Partition::covers(const Partition& nu) const {
    if (sum() != nu.sum() + 1) return false;
    for (size_t i = 0; i < std::max(num_parts(), nu.num_parts()); ++i)
        if (part(i) < nu.part(i)) return false;
    return true;
}

Int Partition::z() const {
    std::map<unsigned, unsigned> mult;
    for (unsigned p : parts_) ++mult[p];
    Int out = 1;
    for (const auto& [value, m] : mult) {
        for (unsigned i = 0; i < m; ++i) out *= value;
        for (unsigned i = 2; i <= m; ++i) out *= i;
    }
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_covering(const Partition& nu) {
    std::vector<Partition> out;
    // Grow any row that stays weakly decreasing, or append a new row of size 1.
    for (size_t i = 0; i <= nu.num_parts(); ++i) {
        unsigned grown = nu.part(i) + 1;
        if (i > 0 && grown > nu.part(i - 1)) continue;
        std::vector<unsigned> parts = nu.parts();
        if (i < parts.size()) parts[i] = grown;
        else parts.push_back(1);
        out.emplace_back(std::move(parts));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace linkhom
