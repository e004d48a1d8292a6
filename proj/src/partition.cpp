#include "sudecomp/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sud {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (parts_[i] > 64) throw std::invalid_argument("partition parts above 64 are unsupported");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    if (s.empty() || s == "-") return Partition{};
    if (s.find(',') != std::string::npos) {
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw std::invalid_argument("bad partition string: " + s);
            parts.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else if (s.find('^') == std::string::npos && s.find('0') != std::string::npos) {
        // A digit string containing '0' must be a single multi-digit part ("10").
        parts.push_back(std::stoi(s));
    } else {
        // Compact form: single-digit parts, optional multi-digit exponents.
        size_t i = 0;
        while (i < s.size()) {
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("bad partition string: " + s);
            int part = s[i] - '0';
            ++i;
            int mult = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw std::invalid_argument("bad partition string: " + s);
                // Exponents are single digits except for a trailing run of 1s
                // ("1^10", "1^16").
                if (!(part == 1 && j == s.size())) j = i + 1;
                if (j == i) throw std::invalid_argument("bad partition string: " + s);
                mult = std::stoi(s.substr(i, j - i));
                i = j;
            }
            for (int k = 0; k < mult; ++k) parts.push_back(part);
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    // Compact form only when it reparses unambiguously: single-digit parts,
    // single-digit multiplicities except for a trailing run of 1s.
    bool big = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p > 9; });
    for (size_t i = 0; i < parts_.size() && !big; ++i) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (j - i > 9 && !(parts_[i] == 1 && j == parts_.size())) big = true;
        i = j - 1;
    }
    std::string out;
    if (big) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        // A lone part like 11 would reparse digit-by-digit; a trailing comma
        // keeps it in the comma form.
        if (parts_.size() == 1 && out.find('0') == std::string::npos) out += ",";
        return out;
    }
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<int> beta_set(const Partition& la, int k) {
    if (k < la.length()) throw std::invalid_argument("beta_set: k below partition length");
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = la.part(i) + (k - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int k = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < k; ++i) {
        int p = beta[i] - (k - 1 - i);
        if (p < 0) throw std::invalid_argument("beta set does not describe a partition");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& la) {
    std::vector<int> parts;
    for (int col = 1; col <= la.part(0); ++col) {
        int h = 0;
        while (h < la.length() && la.parts()[h] >= col) ++h;
        parts.push_back(h);
    }
    return Partition(std::move(parts));
}

bool dominates(const Partition& mu, const Partition& la) {
    if (mu.n() != la.n()) throw std::invalid_argument("dominance needs equal sizes");
    int len = std::max(mu.length(), la.length());
    int sm = 0, sl = 0;
    for (int i = 0; i < len; ++i) {
        sm += mu.part(i);
        sl += la.part(i);
        if (sm > sl) return false;
    }
    return true;
}

Partition d_core(const Partition& la, int d) {
    if (d < 1) throw std::invalid_argument("d_core needs d >= 1");
    std::vector<int> beta = beta_set(la, std::max(1, la.length()));
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i < beta.size(); ++i) {
            int target = beta[i] - d;
            if (target < 0) continue;
            if (std::find(beta.begin(), beta.end(), target) == beta.end()) {
                beta[i] = target;
                moved = true;
            }
        }
    }
    return partition_from_beta(std::move(beta));
}

namespace {

Partition staircase(int d) {
    std::vector<int> parts;
    for (int p = d; p >= 1; --p) parts.push_back(p);
    return Partition(std::move(parts));
}

// Greedy peel of the largest staircase embeddable in the part multiset,
// with backtracking over smaller choices.
bool split_rec(std::vector<int>& mult, int remaining, int max_d, Multipartition& out) {
    if (remaining == 0) return true;
    for (int d = max_d; d >= 1; --d) {
        if (d * (d + 1) / 2 > remaining) continue;
        bool fits = true;
        for (int p = 1; p <= d; ++p)
            if (mult[p] == 0) { fits = false; break; }
        if (!fits) continue;
        for (int p = 1; p <= d; ++p) --mult[p];
        out.push_back(staircase(d));
        if (split_rec(mult, remaining - d * (d + 1) / 2, d, out)) return true;
        out.pop_back();
        for (int p = 1; p <= d; ++p) ++mult[p];
    }
    return false;
}

}  // namespace

bool is_triangular(const Partition& la) {
    int d = la.length();
    for (int i = 0; i < d; ++i)
        if (la.parts()[i] != d - i) return false;
    return !la.empty();
}

std::optional<Multipartition> triangular_split(const Partition& la) {
    if (la.empty()) return Multipartition{};
    int top = la.part(0);
    std::vector<int> mult(top + 1, 0);
    for (int p : la.parts()) ++mult[p];
    Multipartition out;
    if (!split_rec(mult, la.n(), top, out)) return std::nullopt;
    // split_rec peels by decreasing size already; keep the canonical order.
    return out;
}

Partition bar_multipartition(const Multipartition& mp) {
    std::vector<int> parts;
    for (const Partition& comp : mp) {
        if (!is_triangular(comp))
            throw std::invalid_argument("bar_multipartition: component " + comp.str() + " is not triangular");
        int nj = comp.n();
        if (nj % 2 == 1) {
            parts.push_back(nj);
        } else {
            parts.push_back(nj - 1);
            parts.push_back(1);
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::vector<int> hook_lengths(const Partition& la) {
    Partition conj = conjugate(la);
    std::vector<int> hooks;
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < la.parts()[i]; ++j)
            hooks.push_back(la.parts()[i] - j + conj.parts()[j] - i - 1);
    return hooks;
}

bool has_only_odd_parts(const Partition& la) {
    for (int p : la.parts())
        if (p % 2 == 0) return false;
    return true;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition concatenate(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

}  // namespace sud
