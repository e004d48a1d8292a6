// Command-line frontend: exact computations around decomposition matrices of
// unipotent blocks of SU_n(q) at unitary primes.

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

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

using nlohmann::json;
using namespace sud;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

json rat_json(const BigRat& r) {
    json j;
    j["num"] = rat_num(r);
    j["den"] = rat_den(r);
    return j;
}

json vuc_json(const VirtualUnipotentChar& v) {
    json j = json::array();
    for (const auto& [mu, c] : v.coeff) {
        json e;
        e["rho"] = mu.str();
        e["coeff"] = rat_json(c);
        j.push_back(e);
    }
    return j;
}

std::string vuc_text(const VirtualUnipotentChar& v) {
    std::string out;
    for (const auto& [mu, c] : v.coeff) {
        if (!out.empty()) out += " ";
        std::string s = rat_num(c);
        if (boost::multiprecision::denominator(c) != 1) s += "/" + rat_den(c);
        out += s + "*rho_" + mu.str();
    }
    return out.empty() ? "0" : out;
}

Word parse_word(const std::string& s) {
    Word w;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        w.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return w;
}

const DecompTable& resolve_table(const std::string& builtin, const std::string& file,
                                 DecompTable& storage) {
    if (!builtin.empty()) {
        size_t comma = builtin.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--builtin expects n,d");
        int n = std::stoi(builtin.substr(0, comma));
        int d = std::stoi(builtin.substr(comma + 1));
        return embedded_table(n, d);
    }
    if (file.empty()) throw CLI::ValidationError("need --table or --builtin");
    storage = load_table_file(file);
    return storage;
}

int run(int argc, char** argv) {
    CLI::App app{"decomposition-matrix toolkit for SU_n(q) at unitary primes"};
    app.require_subcommand(1);
    std::string format = "text";

    // ---- classes ----
    auto* classes_cmd = app.add_subcommand("classes", "F-conjugacy classes of S_n");
    int cl_n = 0;
    bool cl_cuspidal = false, cl_long = false;
    std::string cl_fmt = "text";
    classes_cmd->add_option("--n", cl_n, "window size")->required();
    classes_cmd->add_flag("--cuspidal-only", cl_cuspidal);
    classes_cmd->add_flag("--long", cl_long, "raise the enumeration bound");
    classes_cmd->add_option("--format", cl_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- class-order ----
    auto* order_cmd = app.add_subcommand("class-order", "compare two F-classes");
    int co_n = 0;
    bool co_long = false;
    std::string co_from, co_to, co_fmt = "text";
    order_cmd->add_option("--n", co_n)->required();
    order_cmd->add_option("--from", co_from, "label of the smaller class")->required();
    order_cmd->add_option("--to", co_to, "label of the larger class")->required();
    order_cmd->add_flag("--long", co_long);
    order_cmd->add_option("--format", co_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- conjecture ----
    auto* conj_cmd = app.add_subcommand("conjecture", "dominance description of the class order");
    int cj_n = 0;
    bool cj_long = false;
    std::string cj_fmt = "text";
    conj_cmd->add_option("--n", cj_n)->required();
    conj_cmd->add_flag("--long", cj_long);
    conj_cmd->add_option("--format", cj_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- chartab ----
    auto* chartab_cmd = app.add_subcommand("chartab", "character table of S_n");
    int ct_n = 0;
    std::string ct_fmt = "text";
    chartab_cmd->add_option("--n", ct_n)->required();
    chartab_cmd->add_option("--format", ct_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- chi ----
    auto* chi_cmd = app.add_subcommand("chi", "single character value");
    std::string chi_la, chi_mu;
    chi_cmd->add_option("--lambda", chi_la)->required();
    chi_cmd->add_option("--mu", chi_mu)->required();

    // ---- dl ----
    auto* dl_cmd = app.add_subcommand("dl", "Deligne-Lusztig virtual character in the rho basis");
    int dl_n = 0;
    std::string dl_word, dl_fmt = "json";
    dl_cmd->add_option("--n", dl_n)->required();
    dl_cmd->add_option("--word", dl_word, "comma-separated generator indices")->required();
    dl_cmd->add_option("--format", dl_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- degrees ----
    auto* deg_cmd = app.add_subcommand("degrees", "unipotent character degrees");
    int dg_n = 0;
    std::string dg_fmt = "text";
    deg_cmd->add_option("--n", dg_n)->required();
    deg_cmd->add_option("--format", dg_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- blocks ----
    auto* blocks_cmd = app.add_subcommand("blocks", "unipotent blocks by d-core");
    int bl_n = 0, bl_d = 1;
    std::string bl_fmt = "text";
    blocks_cmd->add_option("--n", bl_n)->required();
    blocks_cmd->add_option("--d", bl_d, "order of -q mod ell (odd)")->required();
    blocks_cmd->add_option("--format", bl_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- corner ----
    auto* corner_cmd = app.add_subcommand("corner", "two-column corner for ell | (q+1)");
    int cr_n = 0;
    bool cr_ext = false;
    std::string cr_fmt = "text";
    corner_cmd->add_option("--n", cr_n)->required();
    corner_cmd->add_flag("--extended", cr_ext, "bound floor(n/2) instead of floor(n/3)+1");
    corner_cmd->add_option("--format", cr_fmt)->check(CLI::IsMember({"text", "json", "latex"}));

    // ---- reduce ----
    auto* reduce_cmd = app.add_subcommand("reduce", "ell-reduction vector of a partition");
    int rd_n = 0;
    bool rd_long = false;
    std::string rd_la, rd_fmt = "text";
    reduce_cmd->add_option("--lambda", rd_la)->required();
    reduce_cmd->add_option("--n", rd_n)->required();
    reduce_cmd->add_flag("--long", rd_long, "allow n up to 20");
    reduce_cmd->add_option("--format", rd_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- constrain ----
    auto* con_cmd = app.add_subcommand("constrain", "constraint system for one PIM column");
    std::string con_table, con_builtin, con_col, con_reduce, con_fmt = "json";
    bool con_wI = false, con_forget = false;
    con_cmd->add_option("--table", con_table, "table JSON file");
    con_cmd->add_option("--builtin", con_builtin, "embedded table n,d");
    con_cmd->add_option("--column", con_col)->required();
    con_cmd->add_flag("--forget", con_forget, "treat the column's lower entries as unknowns");
    con_cmd->add_option("--reduce", con_reduce,
                        "semicolon-separated partitions whose reduction vectors to use "
                        "(default: all admissible ones below the column)");
    con_cmd->add_flag("--wI", con_wI, "add the parabolic constraint from the transposition class");
    con_cmd->add_option("--format", con_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- validate ----
    auto* val_cmd = app.add_subcommand("validate", "run table checks v1..v8");
    std::string val_table, val_builtin, val_fmt = "text";
    std::vector<std::string> val_checks;
    val_cmd->add_option("--table", val_table);
    val_cmd->add_option("--builtin", val_builtin);
    val_cmd->add_option("--check", val_checks, "subset of v1..v8");
    val_cmd->add_option("--format", val_fmt)->check(CLI::IsMember({"text", "json"}));

    // ---- emit-table ----
    auto* emit_cmd = app.add_subcommand("emit-table", "print a table");
    std::string em_table, em_builtin, em_fmt = "text";
    emit_cmd->add_option("--table", em_table);
    emit_cmd->add_option("--builtin", em_builtin);
    emit_cmd->add_option("--format", em_fmt)->check(CLI::IsMember({"text", "json", "latex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classes_cmd->parsed()) {
            int bound = cl_long ? kLongClassBound : kDefaultClassBound;
            const TwistedClassTable& table = TwistedClassTable::get(cl_n, bound);
            json out;
            out["schema_version"] = 1;
            out["n"] = cl_n;
            json list = json::array();
            for (const FClassLabel& label : table.labels) {
                if (cl_cuspidal && !is_cuspidal(label)) continue;
                const MinLengthSet& s = table.at(label);
                json e;
                e["label"] = label.str();
                e["cuspidal"] = is_cuspidal(label);
                e["min_length"] = s.min_length;
                e["min_count"] = s.elements.size();
                e["class_size"] = s.class_size;
                list.push_back(e);
                if (cl_fmt == "text")
                    std::cout << label.str() << (is_cuspidal(label) ? " cuspidal" : "         ")
                              << "  min_length=" << s.min_length << "  |O_min|=" << s.elements.size()
                              << "  |O|=" << s.class_size << "\n";
            }
            out["classes"] = list;
            if (cl_fmt == "json") std::cout << out.dump(1) << "\n";
            return kExitOk;
        }
        if (order_cmd->parsed()) {
            int bound = co_long ? kLongClassBound : kDefaultClassBound;
            bool leq = class_leq(Partition::parse(co_from), Partition::parse(co_to), co_n, bound);
            if (co_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["leq"] = leq;
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << "O_" << co_from << " <= O_" << co_to << " : " << (leq ? "true" : "false")
                          << "\n";
            }
            return kExitOk;
        }
        if (conj_cmd->parsed()) {
            int bound = cj_long ? kLongClassBound : kDefaultClassBound;
            ConjectureReport report = verify_dominance_conjecture(cj_n, bound);
            if (cj_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["n"] = report.n;
                out["holds"] = report.holds;
                out["pairs_checked"] = report.pairs_checked;
                out["violations"] = report.violations;
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << "n=" << report.n << ": " << (report.holds ? "holds" : "FAILS") << " ("
                          << report.pairs_checked << " pairs)\n";
                for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
            }
            return report.holds ? kExitOk : kExitFail;
        }
        if (chartab_cmd->parsed()) {
            const CharacterTable& t = character_table(ct_n);
            if (ct_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["n"] = t.n;
                json idx = json::array();
                for (const Partition& p : t.index) idx.push_back(p.str());
                out["index"] = idx;
                out["chi"] = t.chi;
                json sizes = json::array();
                for (const BigInt& s : t.class_sizes) sizes.push_back(s.str());
                out["class_sizes"] = sizes;
                std::cout << out.dump(1) << "\n";
            } else {
                for (size_t r = 0; r < t.index.size(); ++r) {
                    std::cout << t.index[r].str() << " :";
                    for (long long v : t.chi[r]) std::cout << " " << v;
                    std::cout << "\n";
                }
            }
            return kExitOk;
        }
        if (chi_cmd->parsed()) {
            std::cout << mn_value(Partition::parse(chi_la), Partition::parse(chi_mu)) << "\n";
            return kExitOk;
        }
        if (dl_cmd->parsed()) {
            Permutation w = word_to_perm(parse_word(dl_word), dl_n);
            VirtualUnipotentChar v = dl_virtual_char(w);
            if (dl_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["n"] = dl_n;
                out["fclass"] = fclass_label(w).str();
                out["coefficients"] = vuc_json(v);
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << vuc_text(v) << "\n";
            }
            return kExitOk;
        }
        if (deg_cmd->parsed()) {
            json list = json::array();
            for (const Partition& la : partitions_of(dg_n)) {
                UnipotentCharInfo info = unipotent_char_info(la);
                CyclotomicFactorization f = cyclotomic_factor(info.degree, 2 * dg_n + 2);
                if (dg_fmt == "text") {
                    std::cout << la.str() << " | " << f.str() << " | a=" << info.a
                              << " A=" << info.A << " | " << info.degree.str() << "\n";
                } else {
                    json e;
                    e["partition"] = la.str();
                    e["degree"] = info.degree.str();
                    e["factorization"] = f.str();
                    e["a"] = info.a;
                    e["A"] = info.A;
                    list.push_back(e);
                }
            }
            if (dg_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["n"] = dg_n;
                out["degrees"] = list;
                std::cout << out.dump(1) << "\n";
            }
            return kExitOk;
        }
        if (blocks_cmd->parsed()) {
            BlockPartition bp = block_partition(bl_n, bl_d);
            if (bl_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["n"] = bp.n;
                out["d"] = bp.d;
                json blocks = json::array();
                for (size_t k = 0; k < bp.blocks.size(); ++k) {
                    json b;
                    b["core"] = bp.cores[k].str();
                    b["principal"] = (static_cast<int>(k) == bp.principal_index);
                    json members = json::array();
                    for (const Partition& p : bp.blocks[k]) members.push_back(p.str());
                    b["members"] = members;
                    blocks.push_back(b);
                }
                out["blocks"] = blocks;
                std::cout << out.dump(1) << "\n";
            } else {
                for (size_t k = 0; k < bp.blocks.size(); ++k) {
                    std::cout << "core " << bp.cores[k].str()
                              << (static_cast<int>(k) == bp.principal_index ? " (principal):" : ":");
                    for (const Partition& p : bp.blocks[k]) std::cout << " " << p.str();
                    std::cout << "\n";
                }
            }
            return kExitOk;
        }
        if (corner_cmd->parsed()) {
            int bound = cr_ext ? cr_n / 2 : corner_default_bound(cr_n);
            CornerMatrix m = corner_decomposition_matrix(cr_n, bound);
            if (cr_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["n"] = m.n;
                out["bound"] = m.bound;
                out["extended"] = m.extended;
                out["conjectural"] = m.conjectural;
                json rows = json::array();
                for (int b = m.bound; b >= 0; --b) {
                    json r;
                    r["row"] = m.row_label(b).str();
                    json vals = json::array();
                    for (int c = m.bound; c >= 0; --c) vals.push_back(m.entry[b][c].str());
                    r["entries"] = vals;
                    rows.push_back(r);
                }
                out["rows"] = rows;
                std::cout << out.dump(1) << "\n";
            } else if (cr_fmt == "latex") {
                std::cout << "\\begin{array}{c|" << std::string(m.bound + 1, 'c') << "}\n";
                for (int b = m.bound; b >= 0; --b) {
                    std::cout << m.row_label(b).str();
                    for (int c = m.bound; c >= 0; --c)
                        std::cout << " & " << (m.entry[b][c] == 0 ? "." : m.entry[b][c].str());
                    std::cout << " \\\\\n";
                }
                std::cout << "\\end{array}\n";
            } else {
                for (int b = m.bound; b >= 0; --b) {
                    std::cout << m.row_label(b).str() << " :";
                    for (int c = m.bound; c >= b; --c)
                        std::cout << " " << (m.entry[b][c] == 0 ? "." : m.entry[b][c].str());
                    std::cout << "\n";
                }
                if (m.conjectural)
                    std::cout << "(entries beyond column 2^" << corner_default_bound(cr_n)
                              << "... are conjectural decomposition numbers)\n";
            }
            return kExitOk;
        }
        if (reduce_cmd->parsed()) {
            int limit = rd_long ? 20 : 12;
            if (rd_n > limit) {
                std::cerr << "resource limit: n > " << limit << " (use --long)\n";
                return kExitResource;
            }
            Partition la = Partition::parse(rd_la);
            if (la.n() != rd_n) {
                std::cerr << "--lambda is not a partition of --n\n";
                return kExitUsage;
            }
            ReductionVector rv = ell_reduction_vector(la);
            if (rd_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["lambda"] = la.str();
                json split = json::array();
                for (const Partition& comp : rv.split) split.push_back(comp.str());
                out["triangular_split"] = split;
                out["coefficients"] = vuc_json(rv.vec);
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << vuc_text(rv.vec) << "\n";
            }
            return kExitOk;
        }
        if (con_cmd->parsed()) {
            DecompTable storage;
            const DecompTable& table = resolve_table(con_builtin, con_table, storage);
            Partition col_label = Partition::parse(con_col);
            const TableBlock* block = table.block_of(col_label);
            if (block == nullptr) {
                std::cerr << "column " << col_label.str() << " not in the table\n";
                return kExitUsage;
            }
            UnknownColumn col;
            col.n = table.n;
            col.label = col_label;
            std::vector<UnknownDomain> domains;
            for (const UnknownDecl& u : table.unknowns) {
                UnknownDomain dom;
                dom.name = u.name;
                if (u.lo) dom.lo = BigRat(*u.lo);
                if (u.hi) dom.hi = BigRat(*u.hi);
                domains.push_back(dom);
            }
            int ci = block->col_index(col_label);
            for (size_t i = 0; i < block->rows.size(); ++i) {
                Poly e = block->entry(static_cast<int>(i), ci);
                const Partition& row = block->rows[i].partition;
                if (con_forget && row != col_label && static_cast<int>(i) > ci &&
                    dominates(row, col_label)) {
                    std::string name = "x" + std::to_string(i - ci);
                    e = Poly::var(name);
                    UnknownDomain dom;
                    dom.name = name;
                    dom.lo = BigRat(0);
                    domains.push_back(dom);
                }
                if (!e.is_zero()) col.entries.emplace(row, e);
            }
            std::vector<Constraint> constraints;
            std::vector<Partition> reduce_list;
            if (!con_reduce.empty()) {
                size_t pos = 0;
                while (pos < con_reduce.size()) {
                    size_t semi = con_reduce.find(';', pos);
                    std::string tok = con_reduce.substr(
                        pos, semi == std::string::npos ? std::string::npos : semi - pos);
                    reduce_list.push_back(Partition::parse(tok));
                    if (semi == std::string::npos) break;
                    pos = semi + 1;
                }
            } else {
                for (const Partition& mu : partitions_of(table.n)) {
                    if (mu == col_label || !dominates(mu, col_label)) continue;
                    if (triangular_split(mu)) reduce_list.push_back(mu);
                }
            }
            for (const Partition& mu : reduce_list) {
                ReductionVector rv = ell_reduction_vector(mu);
                constraints.push_back(
                    constraint_from_vector(col, rv.vec, "ell-reduction of " + mu.str()));
            }
            if (con_wI)
                constraints.push_back(constraint_from_vector(col, wI_constraint_vector(table.n),
                                                             "R_{w_I} pairing"));
            SolveReport report = solve(constraints, domains);
            if (con_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["column"] = col_label.str();
                json cs = json::array();
                for (const Constraint& c : constraints) {
                    json e;
                    e["constraint"] = c.str();
                    e["provenance"] = c.provenance;
                    cs.push_back(e);
                }
                out["constraints"] = cs;
                json unknown_rows = json::array();
                for (const auto& [row, e] : col.entries) {
                    if (e.is_constant()) continue;
                    json u;
                    u["row"] = row.str();
                    u["entry"] = e.str();
                    unknown_rows.push_back(u);
                }
                out["unknown_entries"] = unknown_rows;
                out["consistent"] = report.consistent;
                json resolved;
                for (const auto& [v, val] : report.resolved) resolved[v] = rat_json(val);
                out["resolved"] = resolved;
                json dep;
                for (const auto& [v, e] : report.dependent) dep[v] = e.str();
                out["dependent"] = dep;
                out["free"] = report.free_unknowns;
                out["conflicts"] = report.conflicts;
                std::cout << out.dump(1) << "\n";
            } else {
                for (const Constraint& c : constraints)
                    std::cout << c.provenance << ": " << c.str() << "\n";
                std::cout << report.str();
            }
            return report.consistent ? kExitOk : kExitFail;
        }
        if (val_cmd->parsed()) {
            DecompTable storage;
            const DecompTable& table = resolve_table(val_builtin, val_table, storage);
            ValidationReport report = validate(table, val_checks);
            if (val_fmt == "json") {
                json out;
                out["schema_version"] = 1;
                out["n"] = table.n;
                out["d"] = table.d;
                json checks = json::array();
                for (const CheckResult& c : report.checks) {
                    json e;
                    e["id"] = c.id;
                    e["status"] = c.status;
                    e["details"] = c.details;
                    checks.push_back(e);
                }
                out["checks"] = checks;
                out["all_passed"] = report.all_passed();
                std::cout << out.dump(1) << "\n";
            } else {
                std::cout << report.str();
            }
            return report.all_passed() ? kExitOk : kExitFail;
        }
        if (emit_cmd->parsed()) {
            DecompTable storage;
            const DecompTable& table = resolve_table(em_builtin, em_table, storage);
            std::cout << emit_table(table, em_fmt);
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::string msg = e.what();
        std::cerr << msg << "\n";
        return msg.rfind("resource limit", 0) == 0 ? kExitResource : kExitFail;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
