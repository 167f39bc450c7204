#include "gkflow/partition.hpp"

#include <numeric>
#include <string>

namespace gkflow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw Error("partition part is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw Error("partition parts are not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition conjugate(const Partition& p) {
    const auto& parts = p.parts();
    if (parts.empty()) return Partition{};
    std::vector<int> out(parts.front(), 0);
    for (int part : parts)
        for (int i = 0; i < part; ++i) ++out[i];
    return Partition(std::move(out));
}

int prefix_sum(const Partition& p, int k) {
    int total = 0;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size() && static_cast<int>(i) < k; ++i)
        total += parts[i];
    return total;
}

std::vector<int> prefix_table(const Partition& p) {
    std::vector<int> out;
    int total = 0;
    for (int part : p.parts()) {
        total += part;
        out.push_back(total);
    }
    return out;
}

std::string to_string(const Partition& p) {
    std::string out = "(";
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    out += ")";
    return out;
}

} // namespace gkflow
