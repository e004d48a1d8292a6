#include "sudecomp/characters.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

using namespace sud;

namespace {

Partition P(const std::string& s) { return Partition::parse(s); }

// Degree by the hook-length formula.
BigInt hook_degree(const Partition& la) {
    BigInt num = factorial(la.n());
    for (int h : hook_lengths(la)) num /= h;
    return num;
}

// --- Jacobi-Trudi + iterated Pieri oracle for induced multiplicities. ---
// s_la = det(h_{la_i - i + j}); a product of complete homogeneous functions
// expands over partitions by repeatedly adding horizontal strips.

// All partitions obtained from la by adding a horizontal strip of size k:
// mu_r >= la_r and mu_r <= la_{r-1} rowwise.
void add_horizontal_strips(const Partition& la, int k, const BigInt& c,
                           std::map<Partition, BigInt>& out) {
    int max_rows = la.length() + 1;
    std::vector<int> mu;
    std::function<void(int, int)> rec = [&](int r, int left) {
        if (r == max_rows) {
            if (left == 0) {
                std::vector<int> parts = mu;
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                out[Partition(parts)] += c;
            }
            return;
        }
        int lo = la.part(r);
        int hi = (r == 0) ? la.part(0) + left : std::min(la.part(r - 1), lo + left);
        for (int v = lo; v <= hi && v - lo <= left; ++v) {
            mu.push_back(v);
            rec(r + 1, left - (v - lo));
            mu.pop_back();
        }
    };
    rec(0, k);
}

std::map<Partition, BigInt> h_product_expand(const std::vector<int>& hs) {
    std::map<Partition, BigInt> state{{Partition{}, BigInt(1)}};
    for (int k : hs) {
        if (k == 0) continue;
        std::map<Partition, BigInt> next;
        for (const auto& [la, c] : state) add_horizontal_strips(la, k, c, next);
        state = std::move(next);
    }
    return state;
}

// Signed h-expansions of s_la via the Jacobi-Trudi determinant.
std::vector<std::pair<std::vector<int>, int>> jacobi_trudi_terms(const Partition& la) {
    int r = la.length();
    std::vector<std::pair<std::vector<int>, int>> terms;
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<int> hs;
        bool ok = true;
        for (int i = 0; i < r; ++i) {
            int v = la.parts()[i] - i + perm[i];
            if (v < 0) ok = false;
            hs.push_back(v);
        }
        if (ok) terms.push_back({hs, sign});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return terms;
}

BigInt induced_oracle(const Multipartition& mp, const Partition& mu) {
    // expand the product of the components' Jacobi-Trudi determinants
    std::vector<std::pair<std::vector<int>, int>> acc{{std::vector<int>{}, 1}};
    for (const Partition& comp : mp) {
        std::vector<std::pair<std::vector<int>, int>> next;
        for (const auto& [hs, sign] : acc) {
            for (const auto& [hs2, sign2] : jacobi_trudi_terms(comp)) {
                std::vector<int> joined = hs;
                joined.insert(joined.end(), hs2.begin(), hs2.end());
                next.push_back({joined, sign * sign2});
            }
        }
        acc = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [hs, sign] : acc) {
        std::map<Partition, BigInt> exp = h_product_expand(hs);
        auto it = exp.find(mu);
        if (it != exp.end()) total += sign * it->second;
    }
    return total;
}

}  // namespace

TEST_CASE("mn_value basics") {
    for (int n = 1; n <= 9; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            CHECK(mn_value(Partition(std::vector<int>{n}), mu) == 1);
            long long sign = ((n - mu.length()) % 2 == 0) ? 1 : -1;
            CHECK(mn_value(P(std::string(n, '1')), mu) == sign);
        }
    }
    CHECK(mn_value(P("32"), P("5")) == 0);
    CHECK_THROWS(mn_value(P("32"), P("4")));
    // chi_{31^{n-3}} on 3^2 1^{n-6} equals C(n-7, 2)
    for (int n = 9; n <= 13; ++n) {
        std::vector<int> la{3};
        la.insert(la.end(), n - 3, 1);
        std::vector<int> mu{3, 3};
        mu.insert(mu.end(), n - 6, 1);
        CHECK(BigInt(mn_value(Partition(la), Partition(mu))) == binomial(n - 7, 2));
    }
}

TEST_CASE("character table") {
    const CharacterTable& t2 = character_table(2);
    CHECK(t2.chi[t2.find(P("2"))][t2.find(P("2"))] == 1);
    CHECK(t2.chi[t2.find(P("2"))][t2.find(P("11"))] == 1);
    CHECK(t2.chi[t2.find(P("11"))][t2.find(P("2"))] == -1);
    CHECK(t2.chi[t2.find(P("11"))][t2.find(P("11"))] == 1);

    // degrees from the hook-length formula; column orthogonality
    for (int n = 1; n <= 10; ++n) {
        const CharacterTable& t = character_table(n);
        int id_col = t.find(P(std::string(n, '1')));
        for (size_t r = 0; r < t.index.size(); ++r)
            CHECK(BigInt(t.chi[r][id_col]) == hook_degree(t.index[r]));
        for (size_t c1 = 0; c1 < t.index.size(); ++c1) {
            for (size_t c2 = c1; c2 < t.index.size(); ++c2) {
                BigInt dot = 0;
                for (size_t r = 0; r < t.index.size(); ++r)
                    dot += BigInt(t.chi[r][c1]) * t.chi[r][c2];
                CHECK(dot == (c1 == c2 ? centralizer_order(t.index[c1]) : BigInt(0)));
            }
        }
    }
}

TEST_CASE("two-column values on 3-cycle classes") {
    CHECK(two_column_on_3cycles(6, 1, 1) == 2);
    CHECK(two_column_on_3cycles(6, 3, 2) == 2);
    for (int n = 1; n <= 12; ++n) {
        for (int j = 0; 2 * j <= n; ++j) {
            CHECK(two_column_on_3cycles(n, j, 0) == binomial(n, j) - binomial(n, j - 1));
            for (int k = 0; 3 * k <= n; ++k) {
                std::vector<int> la(j, 2);
                la.insert(la.end(), n - 2 * j, 1);
                std::vector<int> mu(k, 3);
                mu.insert(mu.end(), n - 3 * k, 1);
                CHECK(two_column_on_3cycles(n, j, k) == mn_value(Partition(la), Partition(mu)));
            }
        }
    }
    // Pascal-style recursion M_{n,j,k+1} = M_{n-3,j-3,k} + M_{n-3,j,k}; the
    // raw formula below extends M to arbitrary integer j (binomials vanish
    // outside range).
    auto M = [](int n, int j, int k) {
        BigInt total = 0;
        for (int r = 0; r <= k; ++r)
            total += binomial(k, r) * (binomial(n - 3 * k, j - 3 * r) - binomial(n - 3 * k, j - 3 * r - 1));
        return total;
    };
    for (int n = 4; n <= 15; ++n)
        for (int j = -2; j <= n; ++j)
            for (int k = 0; 3 * (k + 1) <= n; ++k)
                CHECK(M(n, j, k + 1) == M(n - 3, j - 3, k) + M(n - 3, j, k));
}

TEST_CASE("class sizes") {
    CHECK(class_size(5, P("1^5")) == 1);
    CHECK(class_size(6, P("6")) == 120);
    for (int n = 1; n <= 12; ++n) {
        BigInt total = 0;
        for (const Partition& mu : partitions_of(n)) total += class_size(n, mu);
        CHECK(total == factorial(n));
    }
    // 3-cycle products inside (S_3)^c: 2^k C(c,k) elements of type 3^k 1^(3c-3k)
    for (int c = 1; c <= 4; ++c) {
        for (int k = 0; k <= c; ++k) {
            // count tuples of classes of S_3^c fusing to 3^k 1^{3c-3k}
            BigInt count = binomial(c, k);
            for (int i = 0; i < k; ++i) count *= 2;  // |3-cycles in S_3| = 2
            CHECK(count == binomial(c, k) * BigInt(1 << k));
        }
    }
}

TEST_CASE("induced multiplicities") {
    // identity induction
    for (const Partition& mu : partitions_of(5))
        CHECK(induced_multiplicity({P("5")}, mu) == (mu == P("5") ? 1 : 0));
    // regular character from the trivial subgroup
    Multipartition ones(6, P("1"));
    for (const Partition& mu : partitions_of(6))
        CHECK(induced_multiplicity(ones, mu) == hook_degree(mu));
    // ((2,1),(1)) over partitions of 4 in lex-decreasing order
    std::vector<BigInt> got;
    for (const Partition& mu : partitions_of(4)) got.push_back(induced_multiplicity({P("21"), P("1")}, mu));
    CHECK(got == std::vector<BigInt>{0, 1, 1, 1, 0});
}

TEST_CASE("induced multiplicities match the Jacobi-Trudi/Pieri oracle") {
    for (int n = 2; n <= 8; ++n) {
        // all multipartitions with at most 3 components, sizes decreasing
        for (int a = n; a >= 1; --a) {
            for (int b = n - a; b >= 0 && b <= a; --b) {
                int c = n - a - b;
                if (c > b) continue;
                for (const Partition& pa : partitions_of(a)) {
                    for (const Partition& pb : partitions_of(b)) {
                        for (const Partition& pc : partitions_of(c)) {
                            Multipartition mp{pa};
                            if (b > 0) mp.push_back(pb);
                            if (c > 0) mp.push_back(pc);
                            for (const Partition& mu : partitions_of(n))
                                CHECK(induced_multiplicity(mp, mu) == induced_oracle(mp, mu));
                        }
                    }
                }
            }
        }
    }
}
