#include "sudecomp/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

using namespace sud;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

// Independent d-core oracle: remove windows of d consecutive rim cells from
// the actual Young diagram, never touching beta sets.
std::vector<std::pair<int, int>> rim_cells(const std::vector<int>& shape) {
    std::vector<std::pair<int, int>> rim;
    int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i) {
        int next = (i + 1 < rows) ? shape[i + 1] : 0;
        for (int j = shape[i]; j > next; --j) rim.push_back({i, j});
        if (next > 0) rim.push_back({i, next});
    }
    return rim;
}

bool remove_rim_window(std::vector<int>& shape, int start, int d) {
    std::vector<std::pair<int, int>> rim = rim_cells(shape);
    if (start < 0 || start + d > static_cast<int>(rim.size())) return false;
    std::vector<int> out = shape;
    for (int k = start; k < start + d; ++k) {
        auto [i, j] = rim[k];
        if (i >= static_cast<int>(out.size()) || out[i] != j) return false;
        out[i] = j - 1;
    }
    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i] < out[i + 1]) return false;
    while (!out.empty() && out.back() == 0) out.pop_back();
    shape = out;
    return true;
}

Partition core_oracle(const Partition& la, int d, bool last_first) {
    std::vector<int> shape = la.parts();
    bool removed = true;
    while (removed) {
        removed = false;
        int rim_len = static_cast<int>(rim_cells(shape).size());
        for (int s = 0; s < rim_len && !removed; ++s) {
            std::vector<int> copy = shape;
            if (remove_rim_window(copy, last_first ? rim_len - d - s : s, d)) {
                shape = copy;
                removed = true;
            }
        }
    }
    return Partition(shape);
}

// Exhaustive staircase-concatenation search, independent of the greedy split.
bool splits_exhaustive(const Partition& la) {
    if (la.empty()) return true;
    int top = la.part(0);
    std::vector<int> mult(top + 2, 0);
    for (int p : la.parts()) ++mult[p];
    for (int d = 1; d <= top; ++d) {
        bool ok = true;
        for (int p = 1; p <= d; ++p)
            if (mult[p] == 0) ok = false;
        if (!ok) continue;
        std::vector<int> rest;
        std::vector<int> m2 = mult;
        for (int p = 1; p <= d; ++p) --m2[p];
        for (int p = top; p >= 1; --p)
            for (int c = 0; c < m2[p]; ++c) rest.push_back(p);
        if (splits_exhaustive(Partition(rest))) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("partition parsing and printing") {
    CHECK(P("3,3,1").parts() == std::vector<int>{3, 3, 1});
    CHECK(P("2^31^2").parts() == std::vector<int>{2, 2, 2, 1, 1});
    CHECK(P("321").parts() == std::vector<int>{3, 2, 1});
    CHECK(P("1^10").parts() == std::vector<int>(10, 1));
    CHECK(P("10").parts() == std::vector<int>{10});
    CHECK(P("3^221^2").parts() == std::vector<int>{3, 3, 2, 1, 1});
    CHECK(P("3^22^21^2").parts() == std::vector<int>{3, 3, 2, 2, 1, 1});
    CHECK(P("2^21").parts() == std::vector<int>{2, 2, 1});
    CHECK(P("4321^9").n() == 18);
    CHECK(P("").empty());
    CHECK_THROWS(P("2,0"));
    CHECK_THROWS(P("abc"));
    CHECK(P("1,2") == P("21"));  // comma form is sorted on input
    for (int n = 0; n <= 12; ++n)
        for (const Partition& la : partitions_of(n)) CHECK(Partition::parse(la.str()) == la);
}

TEST_CASE("conjugate") {
    CHECK(conjugate(P("5")) == P("1^5"));
    CHECK(conjugate(P("31")) == P("211"));
    CHECK(conjugate(P("4321")) == P("4321"));
    for (int n = 0; n <= 30; n += (n < 14 ? 1 : 8))
        for (const Partition& la : partitions_of(n)) CHECK(conjugate(conjugate(la)) == la);
}

TEST_CASE("dominance") {
    CHECK(dominates(P("1^6"), P("6")));
    CHECK(dominates(P("33"), P("51")));
    CHECK(!dominates(P("51"), P("33")));
    CHECK_THROWS(dominates(P("2"), P("3")));
    for (int n = 1; n <= 9; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            for (const Partition& la : partitions_of(n)) {
                bool d1 = dominates(mu, la);
                CHECK(d1 == dominates(conjugate(la), conjugate(mu)));
                if (d1 && dominates(la, mu)) CHECK(mu == la);
            }
        }
    }
}

TEST_CASE("d_core matches the rim-hook oracle and its invariants") {
    CHECK(d_core(P("91"), 3) == P("31"));
    CHECK(d_core(P("811"), 3) == P("211"));
    for (int n = 0; n <= 12; ++n) {
        for (const Partition& la : partitions_of(n)) {
            CHECK(d_core(la, 1) == Partition{});
            for (int d = 2; d <= 5; ++d) {
                Partition core = d_core(la, d);
                CHECK(core == core_oracle(la, d, false));
                CHECK(core == core_oracle(la, d, true));
                CHECK((la.n() - core.n()) % d == 0);
                CHECK(d_core(core, d) == core);
                for (int h : hook_lengths(core)) CHECK(h % d != 0);
            }
        }
    }
}

TEST_CASE("triangular_split") {
    auto split = triangular_split(P("2^21^2"));
    REQUIRE(split.has_value());
    CHECK(split->size() == 2);
    CHECK((*split)[0] == P("21"));
    CHECK((*split)[1] == P("21"));
    auto split2 = triangular_split(P("2^21^4"));  // n=8: two 21s and two 1s
    REQUIRE(split2.has_value());
    CHECK(split2->size() == 4);
    CHECK((*split2)[2] == P("1"));

    auto s321 = triangular_split(P("3211^2"));
    REQUIRE(s321.has_value());
    CHECK((*s321)[0] == P("321"));

    CHECK(!triangular_split(P("22")).has_value());
    CHECK(!triangular_split(P("2^3")).has_value());
    CHECK(!triangular_split(P("2^31")).has_value());
    CHECK(!triangular_split(P("2^31^2")).has_value());

    for (int n = 0; n <= 11; ++n) {
        for (const Partition& la : partitions_of(n)) {
            auto sp = triangular_split(la);
            CHECK(sp.has_value() == splits_exhaustive(la));
            if (sp) {
                Partition back;
                for (const Partition& comp : *sp) {
                    CHECK(is_triangular(comp));
                    back = concatenate(back, comp);
                }
                CHECK(back == la);
                for (size_t i = 1; i < sp->size(); ++i) CHECK((*sp)[i - 1].n() >= (*sp)[i].n());
            }
        }
    }
}

TEST_CASE("bar_multipartition") {
    CHECK(bar_multipartition({P("21"), P("21"), P("1"), P("1")}) == P("3^21^2"));
    CHECK(bar_multipartition({P("321"), P("21")}) == P("531"));
    CHECK(bar_multipartition({P("1")}) == P("1"));
    CHECK_THROWS(bar_multipartition({P("22")}));
    for (int n = 0; n <= 10; ++n) {
        for (const Partition& la : partitions_of(n)) {
            auto sp = triangular_split(la);
            if (!sp) continue;
            Partition bar = bar_multipartition(*sp);
            CHECK(bar.n() == n);
            CHECK(has_only_odd_parts(bar));
        }
    }
}

TEST_CASE("hook lengths") {
    CHECK(hook_lengths(P("1")) == std::vector<int>{1});
    std::vector<int> h = hook_lengths(P("222"));
    std::sort(h.rbegin(), h.rend());
    CHECK(h == std::vector<int>{4, 3, 3, 2, 2, 1});
    std::vector<int> row = hook_lengths(P("7"));
    std::sort(row.rbegin(), row.rend());
    CHECK(row == std::vector<int>{7, 6, 5, 4, 3, 2, 1});
}

TEST_CASE("odd parts predicate") {
    CHECK(has_only_odd_parts(P("531")));
    CHECK(!has_only_odd_parts(P("321")));
    CHECK(has_only_odd_parts(P("1^8")));
}
