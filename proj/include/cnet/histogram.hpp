#ifndef CNET_HISTOGRAM_HPP
#define CNET_HISTOGRAM_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace cnet {

// Discrete distribution over non-negative integer values: value -> count.
class Histogram {
public:
    Histogram() = default;

    void add(std::uint64_t value, std::uint64_t count = 1) {
        if (count == 0) return;
        bins_[value] += count;
        total_ += count;
    }

    const std::map<std::uint64_t, std::uint64_t>& bins() const { return bins_; }
    std::uint64_t total() const { return total_; }
    bool empty() const { return bins_.empty(); }

    std::uint64_t count_of(std::uint64_t value) const {
        auto it = bins_.find(value);
        return it == bins_.end() ? 0 : it->second;
    }

    // Largest binned value; 0 on an empty histogram.
    std::uint64_t max_value() const { return bins_.empty() ? 0 : bins_.rbegin()->first; }

    // Largest bin count (the frequency of the modal value); 0 when empty.
    std::uint64_t max_count() const {
        std::uint64_t best = 0;
        for (const auto& [value, count] : bins_) {
            if (count > best) best = count;
        }
        return best;
    }

    // Probability view: (value, count / total), ascending by value.
    // Sums to 1 for a nonempty histogram.
    std::vector<std::pair<std::uint64_t, double>> normalized() const {
        std::vector<std::pair<std::uint64_t, double>> out;
        out.reserve(bins_.size());
        for (const auto& [value, count] : bins_) {
            out.emplace_back(value, static_cast<double>(count) / static_cast<double>(total_));
        }
        return out;
    }

    // Copy containing only the bins with lo <= value <= hi.
    Histogram restricted(std::uint64_t lo, std::uint64_t hi) const {
        Histogram out;
        for (const auto& [value, count] : bins_) {
            if (value >= lo && value <= hi) out.add(value, count);
        }
        return out;
    }

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> bins_;
    std::uint64_t total_ = 0;
};

}  // namespace cnet

#endif
