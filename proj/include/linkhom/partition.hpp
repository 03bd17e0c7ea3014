#pragma once

#include "linkhom/qt_arith.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace linkhom {

// Integer partition: weakly decreasing positive parts. The empty partition is
// the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);  // sorts, rejects zero parts
    static Partition parse(std::string_view s);       // comma-separated, e.g. "4,3,1"

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned sum() const;
    size_t num_parts() const { return parts_.size(); }
    unsigned part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }  // 0-based
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    // True when *this is nu plus exactly one cell.
    bool covers(const Partition& nu) const;
    Int z() const;  // prod_i i^{m_i} m_i! over multiplicities m_i

    std::string str() const;  // "(4,3,1)", "()" for empty
    friend bool operator==(const Partition&, const Partition&) = default;
    // Orders (n) before (n-1,1) before ... before (1^n).
    bool operator<(const Partition& r) const { return parts_ > r.parts_; }

private:
    std::vector<unsigned> parts_;
};

// All partitions of n in the order of Partition::operator<.
std::vector<Partition> partitions_of(unsigned n);

// Partitions obtained from nu by adding a single cell, largest first.
std::vector<Partition> partitions_covering(const Partition& nu);

}  // namespace linkhom
