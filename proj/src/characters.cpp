#include "sudecomp/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sud {

namespace {

std::mutex mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> mn_cache;

// Class parts are processed largest-first; "rest" is the still-unprocessed
// suffix, itself weakly decreasing.
long long mn_rec(const Partition& la, const std::vector<int>& rest, size_t idx) {
    if (idx == rest.size()) return 1;
    std::vector<int> key_rest(rest.begin() + idx, rest.end());
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_cache.find({la.parts(), key_rest});
        if (it != mn_cache.end()) return it->second;
    }
    int m = rest[idx];
    int k = std::max(1, la.length());
    std::vector<int> beta = beta_set(la, k);
    long long total = 0;
    for (int i = 0; i < k; ++i) {
        int target = beta[i] - m;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int height = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = target;
        Partition nla = partition_from_beta(std::move(nb));
        long long sub = mn_rec(nla, rest, idx + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        mn_cache.emplace(std::make_pair(la.parts(), std::move(key_rest)), total);
    }
    return total;
}

}  // namespace

long long mn_value(const Partition& la, const Partition& mu) {
    if (la.n() != mu.n()) throw std::invalid_argument("mn_value: size mismatch");
    return mn_rec(la, mu.parts(), 0);
}

int CharacterTable::find(const Partition& p) const {
    auto it = std::lower_bound(index.begin(), index.end(), p,
                               [](const Partition& a, const Partition& b) { return b < a; });
    if (it == index.end() || *it != p) throw std::invalid_argument("partition not in table: " + p.str());
    return static_cast<int>(it - index.begin());
}

const CharacterTable& character_table(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("character_table: n out of range (0..20)");
    static std::mutex m;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    CharacterTable t;
    t.n = n;
    t.index = partitions_of(n);
    t.chi.resize(t.index.size());
    for (size_t r = 0; r < t.index.size(); ++r) {
        t.chi[r].resize(t.index.size());
        for (size_t c = 0; c < t.index.size(); ++c) t.chi[r][c] = mn_value(t.index[r], t.index[c]);
    }
    for (const Partition& mu : t.index) t.class_sizes.push_back(class_size(n, mu));
    return cache.emplace(n, std::move(t)).first->second;
}

BigInt two_column_on_3cycles(int n, int j, int k) {
    if (j < 0 || 2 * j > n) throw std::invalid_argument("two_column_on_3cycles: j out of range");
    if (k < 0 || 3 * k > n) throw std::invalid_argument("two_column_on_3cycles: k out of range");
    BigInt total = 0;
    for (int r = 0; r <= k; ++r)
        total += binomial(k, r) * (binomial(n - 3 * k, j - 3 * r) - binomial(n - 3 * k, j - 3 * r - 1));
    return total;
}

BigInt centralizer_order(const Partition& mu) {
    BigInt z = 1;
    int i = 0;
    while (i < mu.length()) {
        int j = i;
        while (j < mu.length() && mu.parts()[j] == mu.parts()[i]) ++j;
        int m = j - i;
        for (int t = 0; t < m; ++t) z *= mu.parts()[i];
        z *= factorial(m);
        i = j;
    }
    return z;
}

BigInt class_size(int n, const Partition& mu) {
    if (mu.n() != n) throw std::invalid_argument("class_size: size mismatch");
    return factorial(n) / centralizer_order(mu);
}

namespace {

void tuples_rec(const Multipartition& mp, size_t idx, std::vector<const Partition*>& chosen,
                const std::vector<std::vector<Partition>>& classes, BigInt weight, const Partition& mu,
                BigInt& total) {
    if (idx == mp.size()) {
        Partition fused;
        for (const Partition* p : chosen) fused = concatenate(fused, *p);
        total += weight * mn_value(mu, fused);
        return;
    }
    for (const Partition& nu : classes[idx]) {
        long long chi = mn_value(mp[idx], nu);
        if (chi == 0) continue;
        chosen.push_back(&nu);
        tuples_rec(mp, idx + 1, chosen, classes, weight * class_size(mp[idx].n(), nu) * chi, mu, total);
        chosen.pop_back();
    }
}

}  // namespace

BigInt induced_multiplicity(const Multipartition& mp, const Partition& mu) {
    int n = 0;
    BigInt young_order = 1;
    std::vector<std::vector<Partition>> classes;
    for (const Partition& comp : mp) {
        n += comp.n();
        young_order *= factorial(comp.n());
        classes.push_back(partitions_of(comp.n()));
    }
    if (n != mu.n()) throw std::invalid_argument("induced_multiplicity: size mismatch");
    BigInt total = 0;
    std::vector<const Partition*> chosen;
    tuples_rec(mp, 0, chosen, classes, 1, mu, total);
    BigRat result(total, young_order);
    BigInt value = rat_to_int(result);
    if (value < 0) throw std::runtime_error("induced_multiplicity: negative multiplicity");
    return value;
}

}  // namespace sud
