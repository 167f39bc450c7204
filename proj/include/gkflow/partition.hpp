#pragma once

#include <vector>

#include "gkflow/errors.hpp"

namespace gkflow {

// Integer partition: weakly decreasing positive parts. Trailing zeros in the
// input are dropped; negative or increasing input is rejected.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int sum() const;
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Transpose of the Young diagram. Involution; preserves the sum.
Partition conjugate(const Partition& p);

// Sum of the first min(k, #parts) parts; k may exceed the part count.
int prefix_sum(const Partition& p, int k);

// Prefix sums over the positive parts, one entry per part.
std::vector<int> prefix_table(const Partition& p);

std::string to_string(const Partition& p);

} // namespace gkflow
