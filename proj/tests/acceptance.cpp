// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits 0 iff all pass.

#include "sudecomp/characters.hpp"
#include "sudecomp/corner.hpp"
#include "sudecomp/expr.hpp"
#include "sudecomp/partition.hpp"
#include "sudecomp/permutation.hpp"
#include "sudecomp/qpoly.hpp"
#include "sudecomp/reduction.hpp"
#include "sudecomp/tables.hpp"
#include "sudecomp/twisted.hpp"
#include "sudecomp/unipotent.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace sud;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, double seconds, const std::string& note = "") {
    std::printf("%s  %2d  %-58s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), seconds,
                note.empty() ? "" : "  -- ", note.c_str());
    if (!ok) ++g_failures;
}

template <typename F>
void criterion(int id, const std::string& name, double budget_seconds, F&& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > budget_seconds) {
        ok = false;
        note = "time budget exceeded";
    }
    report(id, name, ok, elapsed, note);
}

Partition P(const std::string& s) { return Partition::parse(s); }

Partition two_col(int n, int b) {
    std::vector<int> parts(b, 2);
    parts.insert(parts.end(), n - 2 * b, 1);
    return Partition(parts);
}

Partition three_col(int n, int k) {
    std::vector<int> parts(k, 3);
    parts.insert(parts.end(), n - 3 * k, 1);
    return Partition(parts);
}

// --- criterion bodies -------------------------------------------------------

bool crit1(std::string&) {
    for (int n = 1; n <= 12; ++n)
        for (int j = 0; 2 * j <= n; ++j)
            for (int k = 0; 3 * k <= n; ++k)
                if (two_column_on_3cycles(n, j, k) != mn_value(two_col(n, j), three_col(n, k)))
                    return false;
    return true;
}

bool crit2(std::string& note) {
    for (int n = 2; n <= 40; ++n) {
        for (int bound : {std::min(n / 3 + 1, n / 2), n / 2}) {
            if (!is_identity(mat_mul(matrix_C(n, bound), matrix_D_closed(n, bound)))) return false;
            if (!is_identity(mat_mul(matrix_D_closed(n, bound), matrix_C(n, bound)))) return false;
        }
    }
    for (int n = 2; n <= 30; ++n) {
        for (int i = 0; 2 * i <= n; ++i) {
            for (int j = i; 2 * j <= n; ++j) {
                BigInt B = 0;
                for (int k = i; k <= j; ++k) {
                    BigInt term = binomial(n - i - k, k - i) * binomial(n - 2 * k, j - k);
                    B += (k % 2 == 0) ? term : -term;
                }
                if (B != (i % 2 == 0 ? 1 : -1)) return false;
            }
        }
    }
    note = "B identity in corrected form: the sum equals (-1)^i, not (-1)^{j-i}";
    return true;
}

bool crit3(std::string&) {
    for (int n = 2; n <= 14; ++n) {
        for (int bound : {std::min(n / 3 + 1, n / 2), n / 2}) {
            CornerMatrix m = corner_decomposition_matrix(n, bound);  // asserts C*D = I
            for (int b = 0; b <= bound; ++b)
                for (int c = 0; c <= bound; ++c)
                    if (m.entry[b][c] != (b <= c ? binomial(n - c - b, c - b) : BigInt(0)))
                        return false;
        }
    }
    // corner agrees with the embedded tables entry-by-entry
    for (int n = 4; n <= 10; ++n) {
        const DecompTable& t = embedded_table(n, 1);
        int bound = n / 2;
        CornerMatrix m = corner_decomposition_matrix(n, bound);
        for (int b = 0; b <= bound; ++b)
            for (int c = 0; c <= bound; ++c) {
                Poly e = t.entry(two_col(n, b), two_col(n, c));
                if (!e.is_constant() || e.constant_term() != BigRat(m.entry[b][c])) return false;
            }
    }
    // quoted rows
    CornerMatrix m10 = corner_decomposition_matrix(10, 5);
    std::vector<BigInt> row10(m10.entry[0].rbegin(), m10.entry[0].rend());
    if (row10 != std::vector<BigInt>{1, 15, 35, 28, 9, 1}) return false;
    CornerMatrix m4 = corner_decomposition_matrix(4, 2);
    if (m4.entry[0][2] != 1 || m4.entry[0][1] != 3 || m4.entry[0][0] != 1) return false;
    return true;
}

bool crit4(std::string&) {
    // closed form vs embedded columns, n = 6..10
    for (int n = 6; n <= 10; ++n) {
        const DecompTable& t = embedded_table(n, 1);
        std::vector<int> parts{3, 2};
        parts.insert(parts.end(), n - 5, 1);
        Partition label(parts);
        VirtualUnipotentChar psi = psi_321_column(n).column;
        for (const Partition& mu : partitions_of(n)) {
            Poly e = t.entry(mu, label);
            if (!e.is_constant() || e.constant_term() != psi.at(mu)) return false;
        }
    }
    // re-derivation from reduction constraints for n = 9, 10
    for (int n : {9, 10}) {
        std::vector<int> parts{3, 2};
        parts.insert(parts.end(), n - 5, 1);
        UnknownColumn col;
        col.n = n;
        col.label = Partition(parts);
        col.entries.emplace(col.label, Poly(1));
        std::vector<Partition> support;
        std::vector<int> p1(3, 2);
        p1.insert(p1.end(), n - 6, 1);
        support.push_back(Partition(p1));
        std::vector<int> p2{3};
        p2.insert(p2.end(), n - 3, 1);
        support.push_back(Partition(p2));
        support.push_back(two_col(n, 2));
        support.push_back(two_col(n, 1));
        support.push_back(two_col(n, 0));
        std::vector<UnknownDomain> domains;
        for (size_t i = 0; i < support.size(); ++i) {
            std::string name = "y" + std::to_string(i + 1);
            col.entries.emplace(support[i], Poly::var(name));
            domains.push_back({name, BigRat(0), std::nullopt, true});
        }
        std::vector<Constraint> sys;
        for (int c = 0; c <= 3; ++c)
            sys.push_back(constraint_from_vector(col, rho_c_vector(n, c), "rho_c"));
        sys.push_back(constraint_from_vector(col, wI_constraint_vector(n), "w_I"));
        SolveReport r = solve(sys, domains);
        if (!r.consistent) return false;
        VirtualUnipotentChar psi = psi_321_column(n).column;
        for (size_t i = 0; i < support.size(); ++i) {
            auto it = r.resolved.find("y" + std::to_string(i + 1));
            if (it == r.resolved.end() || it->second != psi.at(support[i])) return false;
        }
    }
    return true;
}

bool crit5(std::string& note) {
    for (int n = 2; n <= 10; ++n)
        if (!verify_dominance_conjecture(n).holds) return false;
    // Prop 3.7 equivalence: la = 3^k 1^{n-3k} against all odd-part mu
    for (int n = 3; n <= 10; ++n) {
        for (int k = 0; 3 * k <= n; ++k) {
            Partition la = three_col(n, k);
            for (const Partition& mu : partitions_of(n)) {
                if (!has_only_odd_parts(mu)) continue;
                if (class_leq(la, mu, n) != dominates(mu, la)) return false;
            }
        }
    }
    // Prop 3.9 classification: classes above 3^k 2 1^{n-2-3k}
    for (int n = 3; n <= 10; ++n) {
        for (int k = 0; 3 * k + 2 <= n; ++k) {
            std::vector<int> parts(k, 3);
            parts.push_back(2);
            parts.insert(parts.end(), n - 2 - 3 * k, 1);
            Partition la(parts);
            std::set<Partition> above;
            for (const FClassLabel& mu : classes_above(la, n)) above.insert(mu);
            std::set<Partition> allowed;
            for (int l = 0; l <= k; ++l) {
                std::vector<int> p(l, 3);
                p.push_back(2);
                p.insert(p.end(), n - 2 - 3 * l, 1);
                allowed.insert(Partition(p));
                if (above.count(Partition(p)) == 0) return false;  // (1) must occur
            }
            for (int l = 0; l + 1 <= k && 5 + 3 * l <= n; ++l) {
                std::vector<int> p{5};
                p.insert(p.end(), l, 3);
                p.insert(p.end(), n - 5 - 3 * l, 1);
                allowed.insert(Partition(p));
                if (above.count(Partition(p)) == 0) return false;  // (2) must occur
            }
            for (int l = 0; 3 * l <= n; ++l) allowed.insert(three_col(n, l));
            for (const Partition& mu : above)
                if (allowed.count(mu) == 0) return false;
        }
    }
    note = "conjecture holds for n <= 10; Prop 3.7 and the 3.9 families confirmed";
    return true;
}

bool crit6(std::string&) {
    for (int n = 2; n <= 8; ++n) {
        const TwistedClassTable& table = TwistedClassTable::get(n);
        for (const Partition& la : partitions_of(n)) {
            int min_len = table.at(la).min_length;
            for (const auto& comp : maximal_compositions(la))
                if (length(sigma_of_composition(comp, n) * longest_element(n)) != min_len)
                    return false;
        }
    }
    return true;
}

bool crit7(std::string& note) {
    int checked = 0;
    for (auto [n, d] : embedded_pairs()) {
        if (n > 7 || d != 1) continue;  // the criterion covers the ell | (q+1) tables
        const DecompTable& t = embedded_table(n, d);
        for (const TableBlock& b : t.blocks) {
            for (const RowInfo& row : b.rows) {
                if (row.degree.empty()) continue;
                UnipotentCharInfo info = unipotent_char_info(row.partition);
                if (cyclotomic_factor(info.degree, 2 * n + 2).str() != row.degree) return false;
                ++checked;
            }
        }
    }
    note = std::to_string(checked) + " printed degrees reproduced";
    return checked >= 43;  // every degree printed in the d=1 tables, n <= 7
}

bool crit8(std::string&) {
    for (auto [n, d] : embedded_pairs()) {
        const DecompTable& t = embedded_table(n, d);
        BlockPartition bp = block_partition(n, d);
        for (const TableBlock& b : t.blocks) {
            Partition core = d_core(b.rows[0].partition, d);
            int idx = -1;
            for (size_t k = 0; k < bp.cores.size(); ++k)
                if (bp.cores[k] == core) idx = static_cast<int>(k);
            if (idx < 0) return false;
            std::set<Partition> stored, computed;
            for (const RowInfo& r : b.rows) stored.insert(r.partition);
            for (const Partition& p : bp.blocks[idx]) computed.insert(p);
            if (stored != computed) return false;
        }
        if (d == 1 && t.blocks.size() != 1) return false;
    }
    // the quoted d=3 and d=5 blocks of SU_10
    const DecompTable& t103 = embedded_table(10, 3);
    if (t103.blocks.size() != 3) return false;
    const DecompTable& t105 = embedded_table(10, 5);
    std::set<Partition> chain{P("82"), P("64"), P("3^31"), P("32^21^3"), P("321^5")};
    bool found = false;
    for (const TableBlock& b : t105.blocks) {
        std::set<Partition> s;
        for (const RowInfo& r : b.rows) s.insert(r.partition);
        if (s == chain) found = true;
    }
    return found;
}

bool crit9(std::string& note) {
    for (auto [n, d] : embedded_pairs())
        if (!validate(embedded_table(n, d)).all_passed()) return false;

    // mutation test: single-entry faults must be caught by v1 or v4
    std::mt19937 rng(2024);
    int v1_caught = 0, v4_caught = 0;
    // v1 mutants: diagonal or support breakage
    for (int trial = 0; trial < 12; ++trial) {
        auto pairs = embedded_pairs();
        auto [n, d] = pairs[rng() % pairs.size()];
        DecompTable t = embedded_table(n, d);
        TableBlock& b = t.blocks[rng() % t.blocks.size()];
        size_t i = rng() % b.rows.size();
        if (trial % 2 == 0) {
            b.entries[i][i] = Poly(2);  // break the unit diagonal
        } else {
            bool planted = false;
            for (size_t row = 0; row < b.rows.size() && !planted; ++row) {
                for (size_t col = 0; col < row; ++col) {
                    if (!b.entries[row][col].is_zero()) continue;
                    if (!dominates(b.rows[row].partition, b.cols[col].partition)) {
                        b.entries[row][col] = Poly(1);
                        planted = true;
                        break;
                    }
                }
            }
            if (!planted) b.entries[i][i] = Poly(0);
        }
        if (validate(t, {"v1"}).all_passed()) return false;
        ++v1_caught;
    }
    // v4 mutants: change a value participating in a James pair (row removal
    // for equal first parts, column removal for equal lengths)
    const std::vector<std::tuple<int, int, const char*, const char*>> spots = {
        {9, 1, "2^21^5", "2^31^3"}, {8, 1, "2^21^4", "2^31^2"}, {10, 1, "2^21^6", "2^31^4"},
        {7, 1, "21^5", "2^21^3"},   {9, 1, "31^6", "321^4"},    {10, 1, "31^7", "321^5"},
        {8, 1, "2^31^2", "2^4"},    {9, 1, "2^31^3", "2^41"},   {7, 3, "2^21^3", "2^31"},
        {10, 3, "31^7", "32^21^3"}, {10, 1, "2^31^4", "321^5"},
    };
    for (auto [n, d, rs, cs] : spots) {
        DecompTable t = embedded_table(n, d);
        bool mutated = false;
        for (TableBlock& b : t.blocks) {
            int i = b.row_index(P(rs));
            int j = b.col_index(P(cs));
            if (i < 0 || j < 0) continue;
            b.entries[i][j] = b.entries[i][j] + Poly(1);
            mutated = true;
        }
        if (!mutated) return false;
        if (validate(t, {"v4"}).all_passed()) return false;
        ++v4_caught;
    }
    note = std::to_string(v1_caught) + " v1 mutants + " + std::to_string(v4_caught) +
           " v4 mutants detected";
    return v1_caught + v4_caught >= 20;
}

bool crit10(std::string&) {
    for (auto [n, d] : embedded_pairs()) {
        ValidationReport r = validate(embedded_table(n, d), {"v4"});
        for (const CheckResult& c : r.checks) {
            if (c.status == "fail") return false;
            for (const std::string& detail : c.details)
                if (detail.find("violation") != std::string::npos) return false;
        }
    }
    return true;
}

bool crit11(std::string&) {
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        do {
            Permutation w(img);
            VirtualUnipotentChar v = dl_virtual_char(w);
            if (inner_product(v, v) != BigRat(centralizer_order(fclass_label(w)))) return false;
        } while (std::next_permutation(img.begin(), img.end()));
    }
    for (int n = 3; n <= 12; ++n)
        for (int c = 0; 3 * c <= n; ++c)
            if (!(ell_reduction_vector(two_col(n, c)).vec == rho_c_vector(n, c))) return false;
    return true;
}

bool crit12(std::string&) {
    // SU_8, ell | (q+1): R_w for w = s1 s2 s3 s4 against the column of 32^21
    // in its pre-solution state (c3 unknown; c5, c6, c7 expressed through c3).
    {
        DecompTable t = embedded_table(8, 1);
        TableBlock& b = t.blocks[0];
        int j = b.col_index(P("32^21"));
        Poly c3 = Poly::var("c3");
        auto set_entry = [&](const char* row, const Poly& e) {
            b.entries[b.row_index(P(row))][j] = e;
        };
        set_entry("2^31^2", c3);
        set_entry("2^21^4", c3 * Poly(3) - Poly(6));
        set_entry("21^6", c3 * Poly(6) - Poly(15));
        set_entry("1^8", c3 * Poly(10) - Poly(22));
        t.unknowns.push_back({"c3", 0, std::nullopt, ""});

        Permutation w = word_to_perm({1, 2, 3, 4}, 8);
        std::map<Partition, Poly> coeffs = rw_pim_decomposition(w, t);
        const std::vector<std::pair<const char*, long long>> display = {
            {"8", 1},  {"71", -1},  {"62", -1},    {"61^2", 1}, {"53", 1},
            {"521", -1}, {"42^2", 1}, {"32^21", 1}, {"2^4", -1},
        };
        for (auto [label, value] : display)
            if (coeffs.at(P(label)) != Poly(value)) return false;
        if (coeffs.at(P("2^31^2")) != Poly(3) - c3) return false;
        // remaining columns do not occur
        for (const auto& [la, c] : coeffs) {
            bool listed = la == P("2^31^2");
            for (auto [label, value] : display)
                if (la == P(label)) listed = true;
            if (!listed && !c.is_zero()) return false;
        }
        // substituting the solved value c3 = 3 kills the last term
        Poly solved = coeffs.at(P("2^31^2")).substitute({{"c3", BigRat(3)}});
        if (!solved.is_zero()) return false;
    }
    // SU_10, ell | (q^2-q+1): Coxeter element, columns 321^5 and 2^31^4 in
    // their pre-solution state (d12, d14, d16 unknown).
    {
        DecompTable t = embedded_table(10, 3);
        TableBlock& b = t.blocks[0];
        int j1 = b.col_index(P("321^5"));
        int j2 = b.col_index(P("2^31^4"));
        b.entries[b.row_index(P("2^31^4"))][j1] = Poly::var("d12");
        b.entries[b.row_index(P("1^10"))][j1] = Poly::var("d14");
        b.entries[b.row_index(P("1^10"))][j2] = Poly::var("d16");
        t.unknowns.push_back({"d12", 0, std::nullopt, ""});
        t.unknowns.push_back({"d14", 0, std::nullopt, ""});
        t.unknowns.push_back({"d16", 0, std::nullopt, ""});

        Permutation w = word_to_perm({1, 2, 3, 4, 5}, 10);
        std::map<Partition, Poly> coeffs = rw_pim_decomposition(w, t);
        Poly d12 = Poly::var("d12"), d14 = Poly::var("d14"), d16 = Poly::var("d16");
        if (coeffs.at(P("2^31^4")) != Poly(3) * d12) return false;
        const std::vector<std::pair<const char*, long long>> display = {
            {"10", 1},    {"82", -2},   {"73", -1},    {"721", -1},  {"71^3", 1},
            {"621^2", 3}, {"5^2", 2},   {"52^21", -2}, {"521^3", 2}, {"4^21^2", -4},
            {"43^2", -1}, {"42^3", 1},  {"421^4", -6}, {"3^31", 3},  {"321^5", -3},
            {"2^5", -2},  {"2^21^6", 6},
        };
        for (auto [label, value] : display)
            if (coeffs.at(P(label)) != Poly(value)) return false;
        if (coeffs.at(P("1^10")) != Poly(3) * d14 - Poly(3) * d12 * d16 - Poly(6)) return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "Lemma 5.2: closed form equals Murnaghan-Nakayama (n<=12)", 10.0, crit1);
    criterion(2, "Lemmas 5.3/5.4: C*D = I (n<=40) and the B identity (n<=30)", 5.0, crit2);
    criterion(3, "Theorem B corner: inversion, closed form, embedded tables", 5.0, crit3);
    criterion(4, "Prop 5.7: Psi_{321^{n-5}} columns and their re-derivation", 30.0, crit4);
    criterion(5, "Conjecture 3.5 (n<=10), Prop 3.7, Prop 3.9 families", 600.0, crit5);
    criterion(6, "Kim representatives minimal over full F-classes (n<=8)", 120.0, crit6);
    criterion(7, "degrees: factorized GU degrees match the printed tables", 30.0, crit7);
    criterion(8, "blocks: d-core partition reproduces every table's blocks", 30.0, crit8);
    criterion(9, "validators v1-v8 pass; injected mutants detected", 120.0, crit9);
    criterion(10, "James row/column removal: zero violations", 60.0, crit10);
    criterion(11, "DL norms equal centralizer orders; reductions match rho_c", 60.0, crit11);
    criterion(12, "R_w expansions over partially solved tables (n=8, n=10)", 30.0, crit12);
    if (g_failures == 0) {
        std::printf("all %d acceptance criteria passed\n", 12);
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
