#include "sudecomp/reduction.hpp"

#include "sudecomp/characters.hpp"
#include "sudecomp/tables.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace sud {

namespace {

struct YoungClassSums {
    // fused cycle type -> sum over class tuples of prod(class size * chi value)
    std::map<Partition, BigInt> weight;
    std::set<Partition> support;  // fused types with some nonvanishing tuple
    BigInt young_order = 1;
};

YoungClassSums young_class_sums(const Multipartition& mp) {
    YoungClassSums out;
    std::vector<std::vector<Partition>> classes;
    for (const Partition& comp : mp) {
        out.young_order *= factorial(comp.n());
        classes.push_back(partitions_of(comp.n()));
    }
    std::function<void(size_t, const Partition&, const BigInt&)> rec =
        [&](size_t idx, const Partition& fused, const BigInt& w) {
            if (idx == mp.size()) {
                out.weight[fused] += w;
                out.support.insert(fused);
                return;
            }
            for (const Partition& nu : classes[idx]) {
                long long chi = mn_value(mp[idx], nu);
                if (chi == 0) continue;
                rec(idx + 1, concatenate(fused, nu), w * class_size(mp[idx].n(), nu) * chi);
            }
        };
    rec(0, Partition{}, 1);
    return out;
}

Multipartition split_or_throw(const Partition& la) {
    auto mp = triangular_split(la);
    if (!mp)
        throw std::invalid_argument(la.str() + " is not a concatenation of triangular partitions");
    return *mp;
}

}  // namespace

std::vector<FClassLabel> c_lambda(const Partition& la) {
    Multipartition mp = split_or_throw(la);
    YoungClassSums sums = young_class_sums(mp);
    std::vector<FClassLabel> out(sums.support.begin(), sums.support.end());
    std::sort(out.begin(), out.end(), std::greater<Partition>());
    for (const FClassLabel& label : out)
        if (!is_cuspidal(label))
            throw std::logic_error("c_lambda produced a non-cuspidal label " + label.str());
    return out;
}

ReductionVector ell_reduction_vector(const Partition& la) {
    ReductionVector rv;
    rv.source = la;
    rv.split = split_or_throw(la);
    int n = la.n();
    rv.vec.n = n;

    YoungClassSums sums = young_class_sums(rv.split);

    int A_mp = 0;
    for (const Partition& comp : rv.split) A_mp += a_A(comp).second;
    std::vector<int> gens;
    int offset = 0;
    for (const Partition& comp : rv.split) {
        for (int i = 1; i < comp.n(); ++i) gens.push_back(offset + i);
        offset += comp.n();
    }
    Permutation ws = parabolic_longest(gens, n);
    int sign_exp = A_mp + length(ws * longest_element(n));

    for (const Partition& mu : partitions_of(n)) {
        BigInt total = 0;
        for (const auto& [type, w] : sums.weight) {
            if (w == 0) continue;
            total += w * mn_value(mu, type);
        }
        if (total == 0) continue;
        int A_mu = a_A(mu).second;
        BigRat c(total, sums.young_order);
        if ((sign_exp + A_mu) % 2 == 1) c = -c;
        rv.vec.coeff.emplace(mu, c);
    }

    if (rv.vec.at(la) != 1)
        throw std::logic_error("sign convention breach: coefficient of " + la.str() +
                               " in its reduction vector is " + rat_num(rv.vec.at(la)) + "/" +
                               rat_den(rv.vec.at(la)) + ", expected 1");
    return rv;
}

Prop56Report check_prop56(const Partition& la, int bound) {
    Prop56Report report;
    report.la = la;
    if (!triangular_split(la)) {
        report.witnesses.push_back("not a concatenation of triangular partitions");
        return report;
    }
    report.applicable = true;
    int n = la.n();

    // mu trianglelefteq la with a triangular split, keyed by bar(mu).
    std::map<Partition, Partition> bar_to_mu;
    std::vector<Partition> relevant;
    for (const Partition& mu : partitions_of(n)) {
        if (!dominates(mu, la)) continue;
        auto mp = triangular_split(mu);
        if (!mp) continue;
        relevant.push_back(mu);
        bar_to_mu.emplace(bar_multipartition(*mp), mu);
    }

    report.cond_i = true;
    for (const FClassLabel& label : c_lambda(la)) {
        if (!bar_to_mu.count(label)) {
            report.cond_i = false;
            report.witnesses.push_back("(i) fails: class " + label.str() +
                                       " is not bar(mu) for any admissible mu");
        }
    }

    report.cond_ii = true;
    report.cond_iii = true;
    for (const Partition& mu : relevant) {
        Multipartition mp = *triangular_split(mu);
        Partition bar = bar_multipartition(mp);
        std::set<Partition> c_mu_set;
        for (const FClassLabel& label : c_lambda(mu)) c_mu_set.insert(label);

        std::set<Partition> bars_below;
        for (const Partition& nu : partitions_of(n)) {
            if (!dominates(nu, mu)) continue;
            auto np = triangular_split(nu);
            if (np) bars_below.insert(bar_multipartition(*np));
        }
        for (const Partition& label : c_mu_set) {
            if (!bars_below.count(label)) {
                report.cond_ii = false;
                report.witnesses.push_back("(ii) fails at mu=" + mu.str() + ": class " + label.str());
            }
        }

        // (iii): C_mu = { O cuspidal : [sigma_{bar mu} w0]_F <= O }.
        for (const Partition& kappa : partitions_of(n)) {
            if (!has_only_odd_parts(kappa)) continue;
            bool in_c = c_mu_set.count(kappa) > 0;
            bool above = class_leq(bar, kappa, n, bound);
            if (in_c != above) {
                report.cond_iii = false;
                report.witnesses.push_back("(iii) fails at mu=" + mu.str() + ", class " + kappa.str() +
                                           ": in C_mu=" + (in_c ? "yes" : "no") + ", order says " +
                                           (above ? "yes" : "no"));
            }
        }
    }
    return report;
}

VirtualUnipotentChar wI_constraint_vector(int n) {
    if (n < 4) throw std::invalid_argument("wI_constraint_vector: needs n >= 4");
    std::vector<int> parts{2};
    parts.insert(parts.end(), n - 2, 1);
    return dl_virtual_char(Partition(std::move(parts)), n).scaled(BigRat(-1));
}

UnknownColumn UnknownColumn::fresh(const Partition& label, const std::string& prefix) {
    UnknownColumn col;
    col.n = label.n();
    col.label = label;
    col.entries.emplace(label, Poly(1));
    int idx = 0;
    for (const Partition& mu : partitions_of(label.n())) {
        if (mu == label || !dominates(mu, label)) continue;
        ++idx;
        col.entries.emplace(mu, Poly::var(prefix + std::to_string(idx)));
    }
    return col;
}

Constraint constraint_from_vector(const UnknownColumn& col, const VirtualUnipotentChar& vec,
                                  const std::string& provenance) {
    if (col.n != vec.n) throw std::invalid_argument("constraint_from_vector: size mismatch");
    Poly lhs;
    for (const auto& [mu, entry] : col.entries) {
        BigRat c = vec.at(mu);
        if (c == 0) continue;
        lhs += entry * Poly(c);
    }
    Constraint out;
    out.kind = ConstraintKind::Equality;
    out.lhs = lhs;
    out.rhs = 0;
    out.provenance = provenance;
    return out;
}

std::map<Partition, Poly> rw_pim_decomposition(const Permutation& w, const DecompTable& table) {
    int n = table.n;
    if (w.n() != n) throw std::invalid_argument("rw_pim_decomposition: size mismatch");

    // Columns as maps row -> entry; partitions outside the table are
    // defect-zero singletons.
    std::map<Partition, std::map<Partition, Poly>> columns;
    for (const TableBlock& block : table.blocks) {
        for (size_t j = 0; j < block.cols.size(); ++j) {
            std::map<Partition, Poly> col;
            for (size_t i = 0; i < block.rows.size(); ++i) {
                if (j < block.entries[i].size() && !block.entries[i][j].is_zero())
                    col.emplace(block.rows[i].partition, block.entries[i][j]);
            }
            const Partition& label = block.cols[j].partition;
            auto diag = col.find(label);
            if (diag == col.end() || diag->second != Poly(1))
                throw std::invalid_argument("table is not unitriangular at column " + label.str());
            columns.emplace(label, std::move(col));
        }
    }
    for (const Partition& la : partitions_of(n))
        if (!columns.count(la)) columns.emplace(la, std::map<Partition, Poly>{{la, Poly(1)}});

    VirtualUnipotentChar dl = dl_virtual_char(w);
    std::map<Partition, Poly> residual;
    for (const auto& [mu, c] : dl.coeff) residual.emplace(mu, Poly(c));

    std::vector<Partition> order = partitions_of(n);  // lex-decreasing
    std::map<Partition, Poly> coeffs;
    for (const Partition& la : order) {
        Poly c = residual.count(la) ? residual.at(la) : Poly();
        coeffs.emplace(la, c);
        if (c.is_zero()) continue;
        for (const auto& [mu, entry] : columns.at(la)) {
            residual[mu] -= c * entry;
            if (residual[mu].is_zero()) residual.erase(mu);
        }
    }
    if (!residual.empty()) throw std::logic_error("rw_pim_decomposition: nonzero residual");
    return coeffs;
}

}  // namespace sud
