#include "sudecomp/tables.hpp"

#include "sudecomp/corner.hpp"
#include "sudecomp/unipotent.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sud {

using nlohmann::json;

std::string hc_taxonomy(const std::string& hc) {
    if (hc == "ps") return "principal-series";
    if (hc == "c") return "cuspidal";
    return "named-source";
}

Poly TableBlock::entry(int row, int col) const {
    if (row < 0 || row >= static_cast<int>(rows.size()) || col < 0 ||
        col >= static_cast<int>(cols.size()))
        throw std::out_of_range("table entry index");
    if (col >= static_cast<int>(entries[row].size())) return Poly();
    return entries[row][col];
}

int TableBlock::row_index(const Partition& p) const {
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].partition == p) return static_cast<int>(i);
    return -1;
}

int TableBlock::col_index(const Partition& p) const {
    for (size_t j = 0; j < cols.size(); ++j)
        if (cols[j].partition == p) return static_cast<int>(j);
    return -1;
}

const TableBlock* DecompTable::block_of(const Partition& p) const {
    for (const TableBlock& b : blocks)
        if (b.row_index(p) >= 0) return &b;
    return nullptr;
}

bool DecompTable::has_partition(const Partition& p) const { return block_of(p) != nullptr; }

Poly DecompTable::entry(const Partition& la, const Partition& mu) const {
    const TableBlock* bc = block_of(mu);
    if (bc == nullptr) return la == mu ? Poly(1) : Poly();
    int i = bc->row_index(la);
    int j = bc->col_index(mu);
    if (i < 0 || j < 0) return Poly();
    return bc->entry(i, j);
}

namespace {

Poly parse_entry(const std::string& s) {
    if (s == ".") return Poly();
    Poly p = Poly::parse(s);
    if (!p.is_affine() || !p.has_integer_coeffs())
        throw std::invalid_argument("table entry must be affine with integer coefficients: " + s);
    return p;
}

std::string entry_str(const Poly& p) { return p.is_zero() ? "0" : p.str(); }

json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

Partition partition_from_json(const json& a) {
    std::vector<int> parts;
    for (const auto& x : a) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

}  // namespace

DecompTable load_table(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("table JSON parse error: ") + e.what());
    }
    DecompTable t;
    t.schema_version = j.value("schema_version", 1);
    t.group = j.value("group", "SU");
    t.n = j.at("n").get<int>();
    t.d = j.at("d").get<int>();
    t.ell = j.value("ell", "");
    if (j.contains("unknowns")) {
        for (const auto& u : j["unknowns"]) {
            UnknownDecl decl;
            decl.name = u.at("name").get<std::string>();
            if (u.contains("domain") && u["domain"].is_array()) {
                const auto& dom = u["domain"];
                if (dom.size() >= 1 && !dom[0].is_null()) decl.lo = dom[0].get<long long>();
                if (dom.size() >= 2 && !dom[1].is_null()) decl.hi = dom[1].get<long long>();
            }
            decl.note = u.value("note", "");
            t.unknowns.push_back(std::move(decl));
        }
    }
    if (j.contains("relations")) {
        for (const auto& r : j["relations"]) {
            TableRelation rel;
            rel.unknown = r.at("unknown").get<std::string>();
            rel.expr = Poly::parse(r.at("expr").get<std::string>());
            t.relations.push_back(std::move(rel));
        }
    }
    for (const auto& bj : j.at("blocks")) {
        TableBlock b;
        b.label = bj.value("label", "");
        b.provenance = bj.value("provenance", "");
        if (bj.contains("chain"))
            for (const auto& c : bj["chain"]) b.chain.push_back(c.get<std::string>());
        for (const auto& rj : bj.at("rows")) {
            RowInfo r;
            r.partition = partition_from_json(rj.at("partition"));
            r.alt = rj.value("alt", "");
            r.degree = rj.value("degree", "");
            b.rows.push_back(std::move(r));
        }
        for (const auto& cj : bj.at("columns")) {
            ColInfo c;
            c.partition = partition_from_json(cj.at("partition"));
            c.hc = cj.value("hc", "");
            b.cols.push_back(std::move(c));
        }
        if (bj.contains("series_row"))
            for (const auto& s : bj["series_row"]) b.series_row.push_back(s.get<std::string>());
        size_t i = 0;
        for (const auto& row : bj.at("entries")) {
            std::vector<Poly> parsed;
            for (const auto& e : row) {
                try {
                    parsed.push_back(parse_entry(e.get<std::string>()));
                } catch (const std::exception& ex) {
                    throw std::invalid_argument("block '" + b.label + "' row " + std::to_string(i) +
                                                ": " + ex.what());
                }
            }
            if (parsed.size() != i + 1)
                throw std::invalid_argument("block '" + b.label + "' row " + std::to_string(i) +
                                            ": expected " + std::to_string(i + 1) + " entries");
            b.entries.push_back(std::move(parsed));
            ++i;
        }
        if (b.entries.size() != b.rows.size() || b.rows.size() != b.cols.size())
            throw std::invalid_argument("block '" + b.label + "': inconsistent dimensions");
        t.blocks.push_back(std::move(b));
    }
    return t;
}

DecompTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_table(ss.str());
}

std::string save_table(const DecompTable& t) {
    json j;
    j["schema_version"] = t.schema_version;
    j["group"] = t.group;
    j["n"] = t.n;
    j["d"] = t.d;
    j["ell"] = t.ell;
    if (!t.unknowns.empty()) {
        json us = json::array();
        for (const UnknownDecl& u : t.unknowns) {
            json uj;
            uj["name"] = u.name;
            json dom = json::array();
            if (u.lo)
                dom.push_back(*u.lo);
            else
                dom.push_back(nullptr);
            if (u.hi)
                dom.push_back(*u.hi);
            else
                dom.push_back(nullptr);
            uj["domain"] = dom;
            if (!u.note.empty()) uj["note"] = u.note;
            us.push_back(uj);
        }
        j["unknowns"] = us;
    }
    if (!t.relations.empty()) {
        json rs = json::array();
        for (const TableRelation& r : t.relations) {
            json rj;
            rj["unknown"] = r.unknown;
            rj["expr"] = r.expr.str();
            rs.push_back(rj);
        }
        j["relations"] = rs;
    }
    json blocks = json::array();
    for (const TableBlock& b : t.blocks) {
        json bj;
        bj["label"] = b.label;
        if (!b.provenance.empty()) bj["provenance"] = b.provenance;
        if (!b.chain.empty()) bj["chain"] = b.chain;
        json rows = json::array();
        for (const RowInfo& r : b.rows) {
            json rj;
            rj["partition"] = partition_json(r.partition);
            if (!r.alt.empty()) rj["alt"] = r.alt;
            if (!r.degree.empty()) rj["degree"] = r.degree;
            rows.push_back(rj);
        }
        bj["rows"] = rows;
        json cols = json::array();
        for (const ColInfo& c : b.cols) {
            json cj;
            cj["partition"] = partition_json(c.partition);
            if (!c.hc.empty()) cj["hc"] = c.hc;
            cols.push_back(cj);
        }
        bj["columns"] = cols;
        if (!b.series_row.empty()) bj["series_row"] = b.series_row;
        json entries = json::array();
        for (const auto& row : b.entries) {
            json rj = json::array();
            for (const Poly& e : row) rj.push_back(entry_str(e));
            entries.push_back(rj);
        }
        bj["entries"] = entries;
        blocks.push_back(bj);
    }
    j["blocks"] = blocks;
    return j.dump(1);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {

Partition two_one_partition(int n, int b) {
    std::vector<int> parts(b, 2);
    parts.insert(parts.end(), n - 2 * b, 1);
    return Partition(std::move(parts));
}

CheckResult check_v1(const DecompTable& t) {
    CheckResult r{"v1", "pass", {}};
    std::set<std::string> declared;
    for (const UnknownDecl& u : t.unknowns) declared.insert(u.name);
    std::set<std::string> used;
    for (const TableBlock& b : t.blocks) {
        if (b.rows.size() != b.cols.size()) {
            r.details.push_back("block " + b.label + ": row/column count mismatch");
            r.status = "fail";
            continue;
        }
        for (size_t i = 0; i < b.rows.size(); ++i) {
            if (b.rows[i].partition.n() != t.n)
                r.details.push_back("block " + b.label + ": row " + b.rows[i].partition.str() +
                                    " is not a partition of n");
            if (b.rows[i].partition != b.cols[i].partition)
                r.details.push_back("block " + b.label + ": row/column order differs at index " +
                                    std::to_string(i));
            if (b.entry(static_cast<int>(i), static_cast<int>(i)) != Poly(1))
                r.details.push_back("block " + b.label + ": diagonal entry at " +
                                    b.rows[i].partition.str() + " is not 1");
            for (size_t j = 0; j < b.entries[i].size(); ++j) {
                const Poly& e = b.entries[i][j];
                if (e.is_zero()) continue;
                if (!dominates(b.rows[i].partition, b.cols[j].partition))
                    r.details.push_back("block " + b.label + ": support violation at (" +
                                        b.rows[i].partition.str() + ", " +
                                        b.cols[j].partition.str() + ")");
                for (const std::string& v : e.vars())
                    if (!declared.count(v))
                        r.details.push_back("block " + b.label + ": undeclared unknown " + v);
                for (const std::string& v : e.vars()) used.insert(v);
            }
        }
    }
    for (const TableRelation& rel : t.relations)
        if (!used.count(rel.unknown))
            r.details.push_back("relation unknown " + rel.unknown + " appears in no entry");
    if (!r.details.empty()) r.status = "fail";
    return r;
}

CheckResult check_v2(const DecompTable& t) {
    CheckResult r{"v2", "pass", {}};
    if (t.d != 1) {
        r.status = "skip";
        r.details.push_back("corner check applies to d=1 tables");
        return r;
    }
    int bound = t.n / 2;  // extended regime, valid for n <= 10
    CornerMatrix corner = corner_decomposition_matrix(t.n, bound);
    for (int b = 0; b <= bound; ++b) {
        for (int c = 0; c <= bound; ++c) {
            Poly e = t.entry(two_one_partition(t.n, b), two_one_partition(t.n, c));
            if (!e.is_constant()) {
                r.details.push_back("symbolic corner entry at b=" + std::to_string(b) +
                                    " c=" + std::to_string(c));
                continue;
            }
            BigRat want(corner.entry[b][c]);
            if (e.constant_term() != want)
                r.details.push_back("corner mismatch at (2^" + std::to_string(b) + ", 2^" +
                                    std::to_string(c) + ")");
        }
    }
    if (!r.details.empty()) r.status = "fail";
    return r;
}

CheckResult check_v3(const DecompTable& t) {
    CheckResult r{"v3", "pass", {}};
    if (t.d != 1 || t.n < 6) {
        r.status = "skip";
        r.details.push_back("Psi_{321^{n-5}} check applies to d=1, n >= 6");
        return r;
    }
    std::vector<int> parts{3, 2};
    parts.insert(parts.end(), t.n - 5, 1);
    Partition label(parts);
    VirtualUnipotentChar psi = psi_321_column(t.n).column;
    for (const Partition& mu : partitions_of(t.n)) {
        Poly e = t.entry(mu, label);
        BigRat want = psi.at(mu);
        if (!e.is_constant() || e.constant_term() != want)
            r.details.push_back("Psi column mismatch at row " + mu.str());
    }
    if (!r.details.empty()) r.status = "fail";
    return r;
}

bool embedded_available(int n, int d) {
    for (auto [en, ed] : embedded_pairs())
        if (en == n && ed == d) return true;
    return false;
}

CheckResult check_v4(const DecompTable& t) {
    CheckResult r{"v4", "pass", {}};
    int skipped = 0;
    std::vector<Partition> all = partitions_of(t.n);
    auto compare = [&](const Partition& la, const Partition& mu, const Partition& la2,
                       const Partition& mu2, int n2, const char* rule) {
        if (n2 <= 1 || !embedded_available(n2, t.d)) return;
        Poly lhs = t.entry(la, mu);
        Poly rhs = embedded_table(n2, t.d).entry(la2, mu2);
        if (lhs == rhs) return;
        if (!lhs.is_constant() || !rhs.is_constant()) {
            std::string names;
            for (const std::string& v : lhs.vars()) names += " " + v;
            for (const std::string& v : rhs.vars()) names += " " + v;
            r.details.push_back(std::string("skipped: unknown") + names + " at (" + la.str() + ", " +
                                mu.str() + ") [" + rule + "]");
            ++skipped;
            return;
        }
        r.details.push_back(std::string(rule) + " violation: d_{" + la.str() + "," + mu.str() +
                            "} != d_{" + la2.str() + "," + mu2.str() + "} at n'=" +
                            std::to_string(n2));
        r.status = "fail";
    };
    for (const Partition& la : all) {
        for (const Partition& mu : all) {
            // Row removal: first parts equal.
            if (la.part(0) == mu.part(0) && la.length() > 0) {
                std::vector<int> la2(la.parts().begin() + 1, la.parts().end());
                std::vector<int> mu2(mu.parts().begin() + 1, mu.parts().end());
                compare(la, mu, Partition(la2), Partition(mu2), t.n - la.part(0), "row-removal");
            }
            // Column removal: equal numbers of parts.
            if (la.length() == mu.length() && la.length() > 0) {
                std::vector<int> la2, mu2;
                for (int p : la.parts())
                    if (p > 1) la2.push_back(p - 1);
                for (int p : mu.parts())
                    if (p > 1) mu2.push_back(p - 1);
                compare(la, mu, Partition(la2), Partition(mu2), t.n - la.length(), "column-removal");
            }
        }
    }
    return r;
}

CheckResult check_v5(const DecompTable& t) {
    CheckResult r{"v5", "pass", {}};
    BlockPartition bp = block_partition(t.n, t.d);
    for (const TableBlock& b : t.blocks) {
        Partition core = d_core(b.rows[0].partition, t.d);
        int idx = -1;
        for (size_t k = 0; k < bp.cores.size(); ++k)
            if (bp.cores[k] == core) idx = static_cast<int>(k);
        std::set<Partition> stored;
        for (const RowInfo& row : b.rows) stored.insert(row.partition);
        std::set<Partition> computed(bp.blocks[idx].begin(), bp.blocks[idx].end());
        if (stored != computed) {
            r.status = "fail";
            r.details.push_back("block " + b.label + " does not match the d-core block of " +
                                core.str());
        }
    }
    // Everything not stored must be a defect-zero singleton.
    for (size_t k = 0; k < bp.blocks.size(); ++k) {
        if (bp.blocks[k].size() == 1) continue;
        bool found = false;
        for (const TableBlock& b : t.blocks)
            if (d_core(b.rows[0].partition, t.d) == bp.cores[k]) found = true;
        if (!found) {
            // Not an error for user tables, but embedded tables store every
            // non-singleton block.
            r.details.push_back("note: block with core " + bp.cores[k].str() + " not stored");
        }
    }
    return r;
}

CheckResult check_v6(const DecompTable& t) {
    CheckResult r{"v6", "pass", {}};
    bool any = false;
    for (const TableBlock& b : t.blocks) {
        if (!b.is_line()) continue;
        any = true;
        // Node adjacency from the chain, "o" transparent only as endpoint.
        std::vector<std::string> nodes = b.chain;
        for (size_t j = 0; j < b.cols.size(); ++j) {
            std::vector<Partition> support;
            for (size_t i = 0; i < b.rows.size(); ++i)
                if (j < b.entries[i].size() && !b.entries[i][j].is_zero())
                    support.push_back(b.rows[i].partition);
            if (support.size() > 2) {
                r.status = "fail";
                r.details.push_back("line block " + b.label + ": column " +
                                    b.cols[j].partition.str() + " has " +
                                    std::to_string(support.size()) + " entries");
                continue;
            }
            if (support.size() == 2) {
                // Must be adjacent in the chain.
                int i0 = -1, i1 = -1;
                for (size_t k = 0; k < nodes.size(); ++k) {
                    if (nodes[k] == "o") continue;
                    Partition p = Partition::parse(nodes[k]);
                    if (p == support[0]) i0 = static_cast<int>(k);
                    if (p == support[1]) i1 = static_cast<int>(k);
                }
                if (std::abs(i0 - i1) != 1) {
                    r.status = "fail";
                    r.details.push_back("line block " + b.label + ": column " +
                                        b.cols[j].partition.str() +
                                        " entries not adjacent along the chain");
                }
            }
        }
    }
    if (!any) {
        r.status = "skip";
        r.details.push_back("no line blocks");
    }
    return r;
}

bool minimal_a_row(const Partition& la) {
    int r = la.length();
    for (int i = 1; i < r; ++i)
        if (la.parts()[i] != r - i) return false;
    int m = la.part(0) - r;
    return m >= 0 && m % 2 == 0;
}

CheckResult check_v7(const DecompTable& t) {
    CheckResult r{"v7", "pass", {}};
    for (const TableBlock& b : t.blocks) {
        for (size_t i = 0; i < b.rows.size(); ++i) {
            if (!minimal_a_row(b.rows[i].partition)) continue;
            int nonzero = 0;
            for (size_t j = 0; j < b.entries[i].size(); ++j)
                if (!b.entries[i][j].is_zero()) ++nonzero;
            if (nonzero != 1) {
                r.status = "fail";
                r.details.push_back("row " + b.rows[i].partition.str() + " should have a single entry");
            }
        }
    }
    return r;
}

std::string normalize_series(const std::string& s) { return s == "p" ? "ps" : s; }

CheckResult check_v8(const DecompTable& t) {
    CheckResult r{"v8", "pass", {}};
    for (const TableBlock& b : t.blocks) {
        if (b.series_row.empty()) {
            if (b.is_line())
                r.details.push_back("note: block " + b.label + " has no printed series row");
            else {
                r.status = "fail";
                r.details.push_back("block " + b.label + " lacks a series row");
            }
            continue;
        }
        if (b.series_row.size() != b.cols.size()) {
            r.status = "fail";
            r.details.push_back("block " + b.label + ": series row length mismatch");
            continue;
        }
        std::multiset<std::string> printed, assigned;
        for (const std::string& s : b.series_row) printed.insert(normalize_series(s));
        for (const ColInfo& c : b.cols) {
            if (c.hc.empty()) {
                r.status = "fail";
                r.details.push_back("block " + b.label + ": column " + c.partition.str() +
                                    " lacks a series label");
            } else {
                assigned.insert(c.hc);
            }
        }
        if (printed != assigned) {
            r.status = "fail";
            r.details.push_back("block " + b.label + ": label counts differ from the printed row");
        }
    }
    return r;
}

}  // namespace

bool ValidationReport::all_passed() const {
    for (const CheckResult& c : checks)
        if (c.status == "fail") return false;
    return true;
}

std::string ValidationReport::str() const {
    std::ostringstream out;
    for (const CheckResult& c : checks) {
        out << c.id << ": " << c.status << "\n";
        for (const std::string& d : c.details) out << "    " << d << "\n";
    }
    return out.str();
}

ValidationReport validate(const DecompTable& t, const std::vector<std::string>& which) {
    auto wanted = [&](const std::string& id) {
        return which.empty() || std::find(which.begin(), which.end(), id) != which.end();
    };
    ValidationReport report;
    if (wanted("v1")) report.checks.push_back(check_v1(t));
    if (wanted("v2")) report.checks.push_back(check_v2(t));
    if (wanted("v3")) report.checks.push_back(check_v3(t));
    if (wanted("v4")) report.checks.push_back(check_v4(t));
    if (wanted("v5")) report.checks.push_back(check_v5(t));
    if (wanted("v6")) report.checks.push_back(check_v6(t));
    if (wanted("v7")) report.checks.push_back(check_v7(t));
    if (wanted("v8")) report.checks.push_back(check_v8(t));
    return report;
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

namespace {

std::string entry_display(const Poly& e) {
    if (e.is_zero()) return ".";
    return e.str();
}

std::string emit_text(const DecompTable& t) {
    std::ostringstream out;
    out << t.group << "_" << t.n << "(q), d = " << t.d;
    if (!t.ell.empty()) out << "  [" << t.ell << "]";
    out << "\n";
    for (const TableBlock& b : t.blocks) {
        out << "\nblock " << b.label << "\n";
        if (b.is_line()) {
            out << "  tree: ";
            for (size_t i = 0; i < b.chain.size(); ++i) {
                if (i) out << " - ";
                out << b.chain[i];
            }
            out << "\n";
        }
        std::vector<size_t> width(b.cols.size(), 1);
        std::vector<std::vector<std::string>> cells(b.rows.size());
        for (size_t i = 0; i < b.rows.size(); ++i) {
            for (size_t j = 0; j <= i; ++j) {
                std::string s = entry_display(b.entry(static_cast<int>(i), static_cast<int>(j)));
                width[j] = std::max(width[j], s.size());
                cells[i].push_back(s);
            }
        }
        size_t label_w = 1;
        for (const RowInfo& row : b.rows) label_w = std::max(label_w, row.partition.str().size());
        for (size_t i = 0; i < b.rows.size(); ++i) {
            std::string l = b.rows[i].partition.str();
            out << "  " << l << std::string(label_w - l.size(), ' ') << " |";
            for (size_t j = 0; j < cells[i].size(); ++j) {
                out << " " << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
            }
            out << "\n";
        }
        if (!b.cols.empty()) {
            out << "  " << std::string(label_w, ' ') << " |";
            for (size_t j = 0; j < b.cols.size(); ++j) {
                std::string s = b.cols[j].hc;
                if (s.empty()) s = "?";
                out << " " << std::string(width[j] > s.size() ? width[j] - s.size() : 0, ' ') << s;
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string emit_latex(const DecompTable& t) {
    std::ostringstream out;
    out << "% " << t.group << "_" << t.n << "(q), d = " << t.d << ", " << t.ell << "\n";
    for (const TableBlock& b : t.blocks) {
        out << "% block " << b.label << "\n";
        if (b.is_line()) {
            out << "% tree: ";
            for (size_t i = 0; i < b.chain.size(); ++i) {
                if (i) out << " --- ";
                out << (b.chain[i] == "o" ? "\\bigcirc" : b.chain[i]);
            }
            out << "\n";
        }
        out << "\\begin{tabular}{r|" << std::string(b.cols.size(), 'c') << "}\n";
        for (size_t i = 0; i < b.rows.size(); ++i) {
            out << "$" << b.rows[i].partition.str() << "$";
            for (size_t j = 0; j <= i; ++j)
                out << " & $" << entry_display(b.entry(static_cast<int>(i), static_cast<int>(j)))
                    << "$";
            out << " \\\\\n";
        }
        out << "\\hline\n";
        for (size_t j = 0; j < b.cols.size(); ++j) out << " & " << b.cols[j].hc;
        out << " \\\\\n\\end{tabular}\n";
    }
    return out.str();
}

}  // namespace

std::string emit_table(const DecompTable& t, const std::string& format) {
    if (format == "json") return save_table(t);
    if (format == "text") return emit_text(t);
    if (format == "latex") return emit_latex(t);
    throw std::invalid_argument("unknown format: " + format);
}

}  // namespace sud
