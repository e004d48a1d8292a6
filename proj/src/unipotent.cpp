#include "sudecomp/unipotent.hpp"

#include "sudecomp/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sud {

QPoly gl_generic_degree(const Partition& la) {
    int n = la.n();
    int shift = 0;
    for (int i = 0; i < la.length(); ++i) shift += i * la.parts()[i];
    QPoly num = QPoly::monomial(shift);
    for (int i = 1; i <= n; ++i) num = num * QPoly::q_pow_minus_one(i);
    QPoly den = QPoly::constant(1);
    for (int h : hook_lengths(la)) den = den * QPoly::q_pow_minus_one(h);
    return num.div_exact(den);
}

QPoly gu_degree(const Partition& la) {
    QPoly p = gl_generic_degree(la).substitute_minus_q();
    if (p.leading() < 0) p = p.negate();
    return p;
}

namespace {

std::mutex aA_mutex;
std::map<std::vector<int>, std::pair<int, int>> aA_cache;

}  // namespace

std::pair<int, int> a_A(const Partition& la) {
    {
        std::lock_guard<std::mutex> lock(aA_mutex);
        auto it = aA_cache.find(la.parts());
        if (it != aA_cache.end()) return it->second;
    }
    QPoly p = gu_degree(la);
    std::pair<int, int> r{p.valuation(), p.degree()};
    std::lock_guard<std::mutex> lock(aA_mutex);
    aA_cache.emplace(la.parts(), r);
    return r;
}

UnipotentCharInfo unipotent_char_info(const Partition& la) {
    UnipotentCharInfo info;
    info.la = la;
    info.degree = gu_degree(la);
    info.a = info.degree.valuation();
    info.A = info.degree.degree();
    return info;
}

BigRat VirtualUnipotentChar::at(const Partition& mu) const {
    auto it = coeff.find(mu);
    return it == coeff.end() ? BigRat(0) : it->second;
}

void VirtualUnipotentChar::add(const Partition& mu, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = coeff.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
}

VirtualUnipotentChar& VirtualUnipotentChar::operator+=(const VirtualUnipotentChar& o) {
    if (n != o.n) throw std::invalid_argument("size mismatch");
    for (const auto& [mu, c] : o.coeff) add(mu, c);
    return *this;
}

VirtualUnipotentChar VirtualUnipotentChar::scaled(const BigRat& s) const {
    VirtualUnipotentChar r;
    r.n = n;
    if (s == 0) return r;
    for (const auto& [mu, c] : coeff) r.coeff.emplace(mu, c * s);
    return r;
}

bool VirtualUnipotentChar::operator==(const VirtualUnipotentChar& o) const {
    return n == o.n && coeff == o.coeff;
}

VirtualUnipotentChar dl_virtual_char(const FClassLabel& label, int n) {
    if (label.n() != n) throw std::invalid_argument("label is not a partition of n");
    VirtualUnipotentChar v;
    v.n = n;
    for (const Partition& mu : partitions_of(n)) {
        long long chi = mn_value(mu, label);
        if (chi == 0) continue;
        int A = a_A(mu).second;
        v.coeff.emplace(mu, BigRat((A % 2 == 0) ? chi : -chi));
    }
    return v;
}

VirtualUnipotentChar dl_virtual_char(const Permutation& w) {
    return dl_virtual_char(fclass_label(w), w.n());
}

BigRat inner_product(const VirtualUnipotentChar& u, const VirtualUnipotentChar& v) {
    if (u.n != v.n) throw std::invalid_argument("size mismatch");
    BigRat s = 0;
    const auto& small = u.coeff.size() <= v.coeff.size() ? u : v;
    const auto& large = u.coeff.size() <= v.coeff.size() ? v : u;
    for (const auto& [mu, c] : small.coeff) s += c * large.at(mu);
    return s;
}

BlockPartition block_partition(int n, int d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("block_partition: d must be odd (unitary primes)");
    std::map<Partition, std::vector<Partition>, std::greater<Partition>> by_core;
    for (const Partition& la : partitions_of(n)) by_core[d_core(la, d)].push_back(la);
    BlockPartition bp;
    bp.n = n;
    bp.d = d;
    Partition whole_core = d_core(Partition({n}), d);
    for (auto& [core, members] : by_core) {
        std::sort(members.begin(), members.end(), std::greater<Partition>());
        if (core == whole_core) bp.principal_index = static_cast<int>(bp.cores.size());
        bp.cores.push_back(core);
        bp.blocks.push_back(std::move(members));
    }
    return bp;
}

}  // namespace sud
