#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pdr {

using BlockSizes = std::vector<long long>;

// Multiplicity form of an integer partition: mult[j] = m_j = number of blocks
// of size j (only nonzero entries stored).  Invariants: sum j*m_j = n,
// sum m_j = k, 1 <= k <= n.
class PartitionCounts {
  public:
    PartitionCounts(std::map<long long, long long> multiplicities)
        : mult_(std::move(multiplicities)) {
        n_ = 0;
        k_ = 0;
        for (auto it = mult_.begin(); it != mult_.end();) {
            auto [j, mj] = *it;
            if (mj == 0) {
                it = mult_.erase(it);  // explicit zeros tolerated, dropped
                continue;
            }
            if (j < 1 || mj < 0) throw std::invalid_argument("PartitionCounts: j >= 1 and m_j >= 0 required");
            n_ += j * mj;
            k_ += mj;
            ++it;
        }
        if (n_ < 1 || k_ < 1) throw std::invalid_argument("PartitionCounts: empty partition");
    }

    static PartitionCounts from_block_sizes(const BlockSizes& sizes) {
        if (sizes.empty()) throw std::invalid_argument("from_block_sizes: empty size list");
        std::map<long long, long long> m;
        for (long long s : sizes) {
            if (s < 1) throw std::invalid_argument("from_block_sizes: sizes must be >= 1");
            ++m[s];
        }
        return PartitionCounts(std::move(m));
    }

    const std::map<long long, long long>& multiplicities() const { return mult_; }
    long long n() const { return n_; }
    long long k() const { return k_; }

    long long multiplicity(long long j) const {
        auto it = mult_.find(j);
        return it == mult_.end() ? 0 : it->second;
    }

    BlockSizes block_sizes() const {
        BlockSizes out;
        out.reserve(static_cast<std::size_t>(k_));
        for (auto [j, mj] : mult_)
            for (long long c = 0; c < mj; ++c) out.push_back(j);
        return out;
    }

    bool operator==(const PartitionCounts& o) const { return mult_ == o.mult_; }

  private:
    std::map<long long, long long> mult_;
    long long n_, k_;
};

inline constexpr long long kEnumerationCap = 25;

// All partitions of n in multiplicity form, optionally restricted to k
// blocks.  Deterministic order: ascending part lists in lexicographic order
// ([1,1,1], [1,2], [3] for n = 3).
inline std::vector<PartitionCounts> enumerate_partitions(long long n,
                                                         std::optional<long long> k = std::nullopt) {
    if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
    if (n > kEnumerationCap) throw std::invalid_argument("enumerate_partitions: n exceeds enumeration cap (25)");
    std::vector<PartitionCounts> out;
    std::vector<long long> parts;
    auto rec = [&](auto&& self, long long rem, long long minp) -> void {
        if (rem == 0) {
            if (!k || static_cast<long long>(parts.size()) == *k)
                out.push_back(PartitionCounts::from_block_sizes(parts));
            return;
        }
        if (k && static_cast<long long>(parts.size()) >= *k) return;
        for (long long p = minp; p <= rem; ++p) {
            parts.push_back(p);
            self(self, rem - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, 1);
    return out;
}

// log N_k(m), the number of sample orderings: n! / prod_j (j!)^{m_j} m_j!
inline double log_ordering_count(const PartitionCounts& pc) {
    double lg = std::lgamma(static_cast<double>(pc.n() + 1));
    for (auto [j, mj] : pc.multiplicities()) {
        lg -= static_cast<double>(mj) * std::lgamma(static_cast<double>(j + 1));
        lg -= std::lgamma(static_cast<double>(mj + 1));
    }
    return lg;
}

// Exact integer path for n <= 20 (20! fits __int128 with room), log-gamma
// beyond.
inline double ordering_count(const PartitionCounts& pc) {
    if (pc.n() <= 20) {
        auto fact = [](long long v) {
            __int128 f = 1;
            for (long long i = 2; i <= v; ++i) f *= i;
            return f;
        };
        __int128 num = fact(pc.n());
        for (auto [j, mj] : pc.multiplicities()) {
            __int128 jf = fact(j);
            for (long long c = 0; c < mj; ++c) num /= jf;
            num /= fact(mj);
        }
        return static_cast<double>(num);
    }
    return std::exp(log_ordering_count(pc));
}

}  // namespace pdr
