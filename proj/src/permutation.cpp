#include "sudecomp/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sud {

Permutation Permutation::identity(int n) {
    Permutation w;
    w.img_.resize(n);
    std::iota(w.img_.begin(), w.img_.end(), 0);
    return w;
}

Permutation::Permutation(std::vector<int> images_1based) {
    int n = static_cast<int>(images_1based.size());
    img_.resize(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = images_1based[i] - 1;
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
        img_[i] = v;
    }
}

std::vector<int> Permutation::images1() const {
    std::vector<int> out(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (n() != o.n()) throw std::invalid_argument("size mismatch");
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[o.img_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<int>(i);
    return r;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(img_[i] + 1);
    }
    return s + "]";
}

Permutation simple_reflection(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::swap(img[i - 1], img[i]);
    return Permutation(std::move(img));
}

Permutation word_to_perm(const Word& word, int n) {
    Permutation w = Permutation::identity(n);
    for (int i : word) w = w * simple_reflection(i, n);
    return w;
}

Word reduced_word(const Permutation& w) {
    // Repeatedly strip a left descent: if w has descent at i (w(i) > w(i+1)
    // read through the inverse ordering), bubble sort one-line form. Sorting
    // w's one-line array by adjacent swaps from the right gives a reduced word
    // for w with our composition convention.
    std::vector<int> img = w.images0();
    Word rev;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < static_cast<int>(img.size()); ++i) {
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                rev.push_back(i + 1);
                moved = true;
            }
        }
    }
    // img is now identity; w = product of the recorded swaps in reverse.
    std::reverse(rev.begin(), rev.end());
    return rev;
}

int length(const Permutation& w) {
    int inv = 0;
    const auto& img = w.images0();
    for (size_t i = 0; i < img.size(); ++i)
        for (size_t j = i + 1; j < img.size(); ++j)
            if (img[i] > img[j]) ++inv;
    return inv;
}

Permutation longest_element(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(std::move(img));
}

Permutation parabolic_longest(const std::vector<int>& gens, int n) {
    // Decompose gens into maximal runs of consecutive indices; the longest
    // element reverses each run's point interval.
    std::set<int> g(gens.begin(), gens.end());
    for (int i : g)
        if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    auto it = g.begin();
    while (it != g.end()) {
        int a = *it;
        int b = a;
        auto jt = it;
        while (std::next(jt) != g.end() && *std::next(jt) == b + 1) {
            ++jt;
            ++b;
        }
        // generators s_a..s_b reverse points a..b+1
        std::reverse(img.begin() + (a - 1), img.begin() + (b + 1));
        it = std::next(jt);
    }
    return Permutation(std::move(img));
}

bool bruhat_leq(const Permutation& x, const Permutation& y) {
    if (x.n() != y.n()) throw std::invalid_argument("size mismatch");
    int n = x.n();
    // x <= y iff for all i,j: #{a <= i : x(a) >= j} <= #{a <= i : y(a) >= j}.
    std::vector<int> cx(n + 2, 0), cy(n + 2, 0);
    for (int i = 0; i < n; ++i) {
        // update counts-by-value for prefix length i+1
        for (int j = x.images0()[i] + 1; j >= 1; --j) ++cx[j];
        for (int j = y.images0()[i] + 1; j >= 1; --j) ++cy[j];
        for (int j = 1; j <= n; ++j)
            if (cx[j] > cy[j]) return false;
    }
    return true;
}

bool bruhat_leq_subword(const Permutation& x, const Permutation& y) {
    if (x == y) return true;
    Word wy = reduced_word(y);
    // x <= y iff some subword of a reduced word for y is a reduced word for x.
    int lx = length(x);
    int n = x.n();
    std::vector<std::pair<Permutation, int>> stack{{Permutation::identity(n), 0}};
    // DFS over subwords keeping only products with length = #letters used
    // (i.e. reduced subwords).
    std::set<std::pair<std::vector<int>, int>> seen;
    while (!stack.empty()) {
        auto [w, pos] = stack.back();
        stack.pop_back();
        int lw = length(w);
        if (lw == lx && w == x) return true;
        if (pos >= static_cast<int>(wy.size()) || lw >= lx) continue;
        if (!seen.insert({w.images0(), pos}).second) continue;
        stack.push_back({w, pos + 1});
        Permutation w2 = w * simple_reflection(wy[pos], n);
        if (length(w2) == lw + 1) stack.push_back({w2, pos + 1});
    }
    return false;
}

Permutation twist(const Permutation& w) {
    Permutation w0 = longest_element(w.n());
    return w0 * w * w0;
}

namespace {

Permutation cycle_perm(int n, const std::vector<int>& cyc) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i];
        int to = cyc[(i + 1) % cyc.size()];
        img[from - 1] = to;
    }
    return Permutation(std::move(img));
}

}  // namespace

Permutation sigma_cycle(int n, int m) {
    if (m < 1 || m > n) throw std::invalid_argument("cycle length out of range");
    std::vector<int> ordered;
    for (int i = 0; i < m; ++i) {
        if (i % 2 == 0)
            ordered.push_back(1 + i / 2);
        else
            ordered.push_back(n - i / 2);
    }
    return cycle_perm(n, ordered);
}

bool is_maximal_composition(const std::vector<int>& comp) {
    size_t c = 0;
    while (c < comp.size() && comp[c] % 2 == 0) ++c;
    for (size_t j = c; j < comp.size(); ++j) {
        if (comp[j] % 2 == 0) return false;
        if (j > c && comp[j] > comp[j - 1]) return false;
    }
    for (int p : comp)
        if (p <= 0) return false;
    return true;
}

Permutation sigma_of_composition(const std::vector<int>& comp, int n) {
    if (std::accumulate(comp.begin(), comp.end(), 0) != n)
        throw std::invalid_argument("composition does not sum to n");
    if (!is_maximal_composition(comp)) throw std::invalid_argument("composition is not maximal");
    size_t c = 0;
    while (c < comp.size() && comp[c] % 2 == 0) ++c;
    Permutation result = Permutation::identity(n);
    int prefix = 0;
    for (size_t j = 0; j < comp.size(); ++j) {
        int a = prefix / 2 + 1;
        int b = n - (prefix + 1) / 2;
        std::vector<int> ordered;
        for (int i = 0; i < comp[j]; ++i) {
            if (i % 2 == 0)
                ordered.push_back(a + i / 2);
            else
                ordered.push_back(b - i / 2);
        }
        Permutation factor = cycle_perm(n, ordered);
        if (j > c) {
            int twists = static_cast<int>(j - c);
            for (int t = 0; t < twists % 2; ++t) factor = twist(factor);
        }
        result = result * factor;
        prefix += comp[j];
    }
    return result;
}

Partition cycle_type(const Permutation& w) {
    int n = w.n();
    std::vector<char> seen(n, 0);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = w.images0()[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::vector<std::vector<int>> maximal_compositions(const Partition& la) {
    std::vector<int> evens, odds;
    for (int p : la.parts()) (p % 2 == 0 ? evens : odds).push_back(p);
    std::sort(odds.rbegin(), odds.rend());
    std::sort(evens.begin(), evens.end());
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> comp = evens;
        comp.insert(comp.end(), odds.begin(), odds.end());
        out.push_back(std::move(comp));
    } while (std::next_permutation(evens.begin(), evens.end()));
    return out;
}

}  // namespace sud
