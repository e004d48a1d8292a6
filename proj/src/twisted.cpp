#include "sudecomp/twisted.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sud {

FClassLabel fclass_label(const Permutation& w) {
    return cycle_type(w * longest_element(w.n()));
}

bool is_cuspidal(const FClassLabel& label) { return has_only_odd_parts(label); }

const MinLengthSet& TwistedClassTable::at(const FClassLabel& label) const {
    auto it = classes.find(label.parts());
    if (it == classes.end()) throw std::invalid_argument("no F-class with label " + label.str());
    return it->second;
}

namespace {

// Cycle type of the reverse of the one-line array (w * w0) and the inversion
// count of w, in one pass over the raw array.
void sweep_stats(const std::vector<int>& img, std::vector<int>& type_out, int& len_out) {
    int n = static_cast<int>(img.size());
    len_out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img[i] > img[j]) ++len_out;
    static thread_local std::vector<char> seen;
    seen.assign(n, 0);
    type_out.clear();
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = img[n - 1 - j];  // (w*w0)(j) = w(w0(j)); 0-based w0: j -> n-1-j
            ++len;
        }
        type_out.push_back(len);
    }
    std::sort(type_out.rbegin(), type_out.rend());
}

TwistedClassTable build_table(int n) {
    TwistedClassTable t;
    t.n = n;
    for (const Partition& la : partitions_of(n)) {
        MinLengthSet s;
        s.label = la;
        s.n = n;
        s.min_length = n * (n - 1) / 2 + 1;
        t.labels.push_back(la);
        t.classes.emplace(la.parts(), std::move(s));
    }
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<int> type;
    int len;
    do {
        sweep_stats(img, type, len);
        MinLengthSet& s = t.classes.at(type);
        ++s.class_size;
        if (len < s.min_length) {
            s.min_length = len;
            s.elements.clear();
        }
        if (len == s.min_length) {
            std::vector<int> one(n);
            for (int i = 0; i < n; ++i) one[i] = img[i] + 1;
            s.elements.emplace_back(std::move(one));
        }
    } while (std::next_permutation(img.begin(), img.end()));
    return t;
}

}  // namespace

const TwistedClassTable& TwistedClassTable::get(int n, int bound) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > bound)
        throw std::runtime_error("resource limit: class enumeration bound " + std::to_string(bound) +
                                 " exceeded (n = " + std::to_string(n) + ")");
    static std::mutex m;
    static std::map<int, TwistedClassTable> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, build_table(n)).first->second;
}

MinLengthSet min_length_elements(const FClassLabel& label, int n, int bound) {
    if (label.n() != n) throw std::invalid_argument("label is not a partition of n");
    return TwistedClassTable::get(n, bound).at(label);
}

std::vector<Permutation> shift_closure(const Permutation& w) {
    int n = w.n();
    int lw = length(w);
    std::set<std::vector<int>> seen{w.images0()};
    std::vector<Permutation> queue{w};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Permutation x = queue[qi];
        for (int i = 1; i < n; ++i) {
            Permutation s = simple_reflection(i, n);
            Permutation y = s * x * twist(s);
            if (length(y) != lw) continue;
            if (seen.insert(y.images0()).second) queue.push_back(y);
        }
    }
    return queue;
}

Permutation reduce_to_minimal(const Permutation& w) {
    int n = w.n();
    Permutation current = w;
    for (;;) {
        int lcur = length(current);
        std::set<std::vector<int>> seen{current.images0()};
        std::vector<Permutation> queue{current};
        bool descended = false;
        // Explore the equal-length plateau; jump down at the first strict drop.
        for (size_t qi = 0; qi < queue.size() && !descended; ++qi) {
            Permutation x = queue[qi];
            for (int i = 1; i < n; ++i) {
                Permutation s = simple_reflection(i, n);
                Permutation y = s * x * twist(s);
                int ly = length(y);
                if (ly < lcur) {
                    current = y;
                    descended = true;
                    break;
                }
                if (ly == lcur && seen.insert(y.images0()).second) queue.push_back(y);
            }
        }
        if (!descended) return current;
    }
}

namespace {

bool leq_definitional(const FClassLabel& smaller, const FClassLabel& larger, int n, int bound,
                      bool shortcut) {
    const TwistedClassTable& table = TwistedClassTable::get(n, bound);
    const MinLengthSet& small_set = table.at(smaller);
    const MinLengthSet& large_set = table.at(larger);
    std::vector<Permutation> reps;
    if (shortcut && is_cuspidal(larger)) {
        reps.push_back(large_set.elements.front());
    } else {
        reps = large_set.elements;
    }
    for (const Permutation& x : reps) {
        bool found = false;
        for (const Permutation& xp : small_set.elements) {
            if (bruhat_leq(xp, x)) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

bool class_leq(const FClassLabel& smaller, const FClassLabel& larger, int n, int bound) {
    static std::mutex m;
    static std::map<std::tuple<int, std::vector<int>, std::vector<int>>, bool> cache;
    std::tuple<int, std::vector<int>, std::vector<int>> key{n, smaller.parts(), larger.parts()};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool r = leq_definitional(smaller, larger, n, bound, true);
    std::lock_guard<std::mutex> lock(m);
    cache.emplace(std::move(key), r);
    return r;
}

bool class_leq_full(const FClassLabel& smaller, const FClassLabel& larger, int n, int bound) {
    return leq_definitional(smaller, larger, n, bound, false);
}

std::vector<FClassLabel> classes_above(const FClassLabel& label, int n, int bound) {
    std::vector<FClassLabel> out;
    for (const Partition& mu : partitions_of(n))
        if (class_leq(label, mu, n, bound)) out.push_back(mu);
    return out;
}

ConjectureReport verify_dominance_conjecture(int n, int bound) {
    ConjectureReport report;
    report.n = n;
    std::vector<Partition> odd;
    for (const Partition& la : partitions_of(n))
        if (has_only_odd_parts(la)) odd.push_back(la);
    for (const Partition& la : odd) {
        for (const Partition& mu : odd) {
            bool order = class_leq(la, mu, n, bound);
            bool dom = dominates(mu, la);
            ++report.pairs_checked;
            if (order != dom) {
                report.holds = false;
                report.violations.push_back("O_" + la.str() + " <= O_" + mu.str() + " is " +
                                            (order ? "true" : "false") + " but " + mu.str() +
                                            " trianglelefteq " + la.str() + " is " +
                                            (dom ? "true" : "false"));
            }
        }
    }
    return report;
}

}  // namespace sud
