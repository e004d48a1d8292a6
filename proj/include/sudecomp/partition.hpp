#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sud {

// Partition of n: weakly decreasing positive parts. The empty partition is the
// unique partition of 0. Parts are capped at 64.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Lexicographic on the part vectors; a linear extension of dominance
    // within a fixed n (mu trianglelefteq la implies la >= mu here).
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }
    bool operator>(const Partition& o) const { return o.parts_ < parts_; }

    // Accepts "3,3,1", "2^31^2", "321", "1^10", "10". In compact form parts
    // are single digits; exponents may have several digits.
    static Partition parse(const std::string& s);
    // Compact shorthand ("2^31^2"); falls back to comma form if a part > 9.
    std::string str() const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

using Multipartition = std::vector<Partition>;

// Beta-set of declared length k >= length(la): strictly decreasing first-column
// hook lengths la_i + (k - i). Internal hook-stripping device.
std::vector<int> beta_set(const Partition& la, int k);
Partition partition_from_beta(std::vector<int> beta);

Partition conjugate(const Partition& la);

// mu trianglelefteq la (dominance; requires |mu| = |la|).
bool dominates(const Partition& mu, const Partition& la);

// Remove rim d-hooks until none remain (beta-set subtraction to fixpoint).
Partition d_core(const Partition& la, int d);

// If la is a concatenation of triangular partitions (d, d-1, ..., 1), the
// canonical multipartition sorted by decreasing component size; else nullopt.
std::optional<Multipartition> triangular_split(const Partition& la);

// For triangular components of sizes n_j: take (n_j) if odd else (n_j-1, 1),
// concatenate and sort. Throws if a component is not triangular.
Partition bar_multipartition(const Multipartition& mp);

// Hook lengths of all cells, unordered.
std::vector<int> hook_lengths(const Partition& la);

bool has_only_odd_parts(const Partition& la);

bool is_triangular(const Partition& la);

// All partitions of n, lexicographically decreasing (so (n) first, 1^n last).
std::vector<Partition> partitions_of(int n);

// Concatenate two partitions (merge parts, sort decreasing).
Partition concatenate(const Partition& a, const Partition& b);

// n! / prod(i^{m_i} m_i!) needs the centralizer order prod(i^{m_i} m_i!).
// Exposed here since it is pure partition data.
}  // namespace sud
