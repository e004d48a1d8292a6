#include "sudecomp/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sud {

Poly::Poly(long long c) {
    if (c != 0) terms_.emplace(Monomial{}, BigRat(c));
}

Poly::Poly(const BigRat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(const std::string& name) {
    Poly p;
    p.terms_.emplace(Monomial{{name, 1}}, BigRat(1));
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

BigRat Poly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? BigRat(0) : it->second;
}

bool Poly::is_affine() const {
    for (const auto& [m, c] : terms_) {
        int deg = 0;
        for (const auto& [v, e] : m) deg += e;
        if (deg > 1) return false;
    }
    return true;
}

bool Poly::has_integer_coeffs() const {
    for (const auto& [m, c] : terms_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

std::set<std::string> Poly::vars() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) out.insert(v);
    return out;
}

BigRat Poly::linear_coeff(const std::string& name) const {
    auto it = terms_.find(Monomial{{name, 1}});
    return it == terms_.end() ? BigRat(0) : it->second;
}

void Poly::prune(const Monomial& m) {
    auto it = terms_.find(m);
    if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        terms_[m] += c;
        prune(m);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        terms_[m] -= c;
        prune(m);
    }
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            for (const auto& [v, e] : m2) m[v] += e;
            r.terms_[m] += c1 * c2;
            r.prune(m);
        }
    }
    return r;
}

Poly Poly::substitute(const std::map<std::string, BigRat>& values) const {
    std::map<std::string, Poly> polys;
    for (const auto& [k, v] : values) polys.emplace(k, Poly(v));
    return substitute(polys);
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly term{Poly(c)};
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            Poly base = (it == values.end()) ? Poly::var(v) : it->second;
            for (int i = 0; i < e; ++i) term = term * base;
        }
        r += term;
    }
    return r;
}

namespace {

std::string rat_str(const BigRat& r) {
    std::string s = rat_num(r);
    if (boost::multiprecision::denominator(r) != 1) s += "/" + rat_den(r);
    return s;
}

std::string monomial_str(const Poly::Monomial& m) {
    std::string out;
    bool first = true;
    for (const auto& [v, e] : m) {
        if (!first) out += "*";
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
        first = false;
    }
    return out;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Constant first, then variable terms in monomial order.
    BigRat c0 = constant_term();
    if (c0 != 0) {
        out << rat_str(c0);
        first = false;
    }
    for (const auto& [m, c] : terms_) {
        if (m.empty()) continue;
        BigRat mag = c;
        if (!first) {
            if (c < 0) {
                out << "-";
                mag = -c;
            } else {
                out << "+";
            }
        } else if (c < 0) {
            out << "-";
            mag = -c;
        }
        if (mag != 1) out << rat_str(mag) << "*";
        out << monomial_str(m);
        first = false;
    }
    return out.str();
}

Poly Poly::parse(const std::string& s) {
    Poly result;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("empty expression");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw std::invalid_argument("expected +/- in expression: " + s);
        }
        first = false;
        // term: [number]['*'][name]
        BigInt coeff = 1;
        bool have_num = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coeff = BigInt(s.substr(i, j - i));
            i = j;
            have_num = true;
            skip_ws();
        }
        bool have_star = false;
        if (i < s.size() && s[i] == '*') {
            if (!have_num) throw std::invalid_argument("dangling * in expression: " + s);
            ++i;
            have_star = true;
            skip_ws();
        }
        if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            if (have_num && !have_star)
                throw std::invalid_argument("missing * between coefficient and name: " + s);
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            Poly term = Poly::var(name) * Poly(BigRat(sign * coeff));
            result += term;
        } else {
            if (!have_num) throw std::invalid_argument("bad term in expression: " + s);
            result += Poly(BigRat(sign * coeff));
        }
    }
    return result;
}

std::string Constraint::str() const {
    const char* op = kind == ConstraintKind::Equality ? " = "
                     : kind == ConstraintKind::LowerBound ? " >= "
                                                          : " <= ";
    return lhs.str() + op + rat_str(rhs);
}

namespace {

struct Interval {
    std::optional<BigRat> lo, hi;
    bool empty() const { return lo && hi && *lo > *hi; }
};

}  // namespace

SolveReport solve(const std::vector<Constraint>& constraints,
                  const std::vector<UnknownDomain>& unknowns) {
    SolveReport report;
    std::map<std::string, Poly> subst;  // var -> expression in free vars

    auto reduce = [&](const Poly& p) { return p.substitute(subst); };

    // Gaussian elimination over the equalities: repeatedly solve one equality
    // for its largest-named variable and substitute through.
    std::vector<Poly> pending;
    for (const Constraint& c : constraints) {
        if (c.kind != ConstraintKind::Equality) continue;
        if (!c.lhs.is_affine()) throw std::invalid_argument("solve: non-affine constraint " + c.str());
        pending.push_back(c.lhs - Poly(c.rhs));
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = pending.begin(); it != pending.end();) {
            Poly p = reduce(*it);
            auto vars = p.vars();
            if (vars.empty()) {
                if (p.constant_term() != 0) {
                    report.consistent = false;
                    report.conflicts.push_back("inconsistent equality: " + it->str() + " reduces to " +
                                               p.str() + " = 0");
                }
                it = pending.erase(it);
                progress = true;
                continue;
            }
            // Solve for the lexicographically largest variable.
            std::string pivot = *vars.rbegin();
            BigRat a = p.linear_coeff(pivot);
            Poly rest = p - Poly::var(pivot) * Poly(a);
            Poly expr = rest * Poly(BigRat(-1) / a);
            subst[pivot] = expr;
            // Re-reduce existing substitutions through the new one.
            for (auto& [k, v] : subst) v = v.substitute(subst);
            it = pending.erase(it);
            progress = true;
        }
    }

    // Classify unknowns.
    std::map<std::string, Interval> box;
    for (const UnknownDomain& u : unknowns) box[u.name] = Interval{u.lo, u.hi};
    for (const UnknownDomain& u : unknowns) {
        auto it = subst.find(u.name);
        if (it == subst.end()) continue;
        Poly v = reduce(it->second);
        subst[u.name] = v;
    }

    // Interval propagation over bound constraints plus domain bounds.
    std::vector<std::pair<Poly, int>> bounds;  // poly >= 0 when dir=+1, <= 0 when dir=-1
    for (const Constraint& c : constraints) {
        if (c.kind == ConstraintKind::Equality) continue;
        Poly p = c.lhs - Poly(c.rhs);
        bounds.push_back({p, c.kind == ConstraintKind::LowerBound ? +1 : -1});
    }
    auto eval_range = [&](const Poly& p) -> Interval {
        // Interval arithmetic over the current box (affine p).
        Interval r{p.constant_term(), p.constant_term()};
        for (const std::string& v : p.vars()) {
            BigRat a = p.linear_coeff(v);
            const Interval& bv = box.count(v) ? box[v] : Interval{};
            std::optional<BigRat> lo = (a > 0) ? bv.lo : bv.hi;
            std::optional<BigRat> hi = (a > 0) ? bv.hi : bv.lo;
            if (r.lo && lo)
                *r.lo += a * *lo;
            else
                r.lo.reset();
            if (r.hi && hi)
                *r.hi += a * *hi;
            else
                r.hi.reset();
        }
        return r;
    };
    for (int pass = 0; pass < 16; ++pass) {
        bool changed = false;
        for (auto& [p0, dir] : bounds) {
            Poly p = reduce(p0);
            // dir=+1: p >= 0; dir=-1: p <= 0.
            auto vars = p.vars();
            if (vars.empty()) {
                BigRat c = p.constant_term();
                if ((dir > 0 && c < 0) || (dir < 0 && c > 0)) {
                    report.consistent = false;
                    report.conflicts.push_back("violated bound: " + p0.str() +
                                               (dir > 0 ? " >= 0" : " <= 0"));
                }
                continue;
            }
            for (const std::string& v : vars) {
                BigRat a = p.linear_coeff(v);
                Poly rest = p - Poly::var(v) * Poly(a);
                Interval rr = eval_range(rest);
                // a*v + rest >= 0  =>  v >= -(hi rest)/a if a>0 ...
                bool lower;
                std::optional<BigRat> limit;
                if (dir > 0) {
                    if (a > 0) {
                        lower = true;
                        if (rr.hi) limit = -(*rr.hi) / a;
                    } else {
                        lower = false;
                        if (rr.hi) limit = -(*rr.hi) / a;
                    }
                } else {
                    if (a > 0) {
                        lower = false;
                        if (rr.lo) limit = -(*rr.lo) / a;
                    } else {
                        lower = true;
                        if (rr.lo) limit = -(*rr.lo) / a;
                    }
                }
                if (!limit) continue;
                Interval& bv = box[v];
                if (lower) {
                    if (!bv.lo || *limit > *bv.lo) {
                        bv.lo = limit;
                        changed = true;
                    }
                } else {
                    if (!bv.hi || *limit < *bv.hi) {
                        bv.hi = limit;
                        changed = true;
                    }
                }
                if (bv.empty()) {
                    report.consistent = false;
                    report.conflicts.push_back("empty interval for " + v);
                }
            }
        }
        // Pin variables whose interval collapsed to a point.
        for (auto& [v, bv] : box) {
            if (subst.count(v)) continue;
            if (bv.lo && bv.hi && *bv.lo == *bv.hi) {
                subst[v] = Poly(*bv.lo);
                for (auto& [k, val] : subst) val = val.substitute(subst);
                changed = true;
            }
        }
        if (!changed) break;
    }

    // Emit results.
    for (const auto& [v, expr] : subst) {
        if (expr.is_constant())
            report.resolved[v] = expr.constant_term();
        else
            report.dependent[v] = expr;
    }
    std::set<std::string> free_set;
    for (const UnknownDomain& u : unknowns)
        if (!subst.count(u.name)) free_set.insert(u.name);
    for (const auto& [v, expr] : subst)
        for (const std::string& fv : expr.vars()) free_set.insert(fv);
    for (const std::string& v : free_set) {
        report.free_unknowns.push_back(v);
        auto it = box.find(v);
        if (it != box.end() && (it->second.lo || it->second.hi))
            report.intervals[v] = {it->second.lo, it->second.hi};
    }
    return report;
}

std::string SolveReport::str() const {
    std::ostringstream out;
    out << (consistent ? "consistent" : "INCONSISTENT") << "\n";
    for (const auto& [v, val] : resolved) out << "  " << v << " = " << rat_str(val) << "\n";
    for (const auto& [v, expr] : dependent) out << "  " << v << " = " << expr.str() << "\n";
    for (const std::string& v : free_unknowns) {
        out << "  " << v << " free";
        auto it = intervals.find(v);
        if (it != intervals.end()) {
            out << " in [";
            out << (it->second.first ? rat_str(*it->second.first) : std::string("-inf"));
            out << ", ";
            out << (it->second.second ? rat_str(*it->second.second) : std::string("inf"));
            out << "]";
        }
        out << "\n";
    }
    for (const std::string& c : conflicts) out << "  conflict: " << c << "\n";
    return out.str();
}

}  // namespace sud
