#pragma once

#include "sudecomp/expr.hpp"
#include "sudecomp/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sud {

struct RowInfo {
    Partition partition;
    std::string alt;     // bipartition label, when the paper prints one
    std::string degree;  // cyclotomic degree string, printed for n <= 7
};

struct ColInfo {
    Partition partition;
    std::string hc;  // Harish-Chandra series label ("ps", "c", or a source)
};

// "ps" / "c" / named source, derived mechanically from the label.
std::string hc_taxonomy(const std::string& hc);

struct TableBlock {
    std::string label;  // "principal", the d-core shorthand, or the partition itself
    std::string provenance;
    std::vector<std::string> chain;  // Brauer-tree line: node shorthands with "o"
    std::vector<RowInfo> rows;
    std::vector<ColInfo> cols;
    // Lower triangle: row i carries entries for columns 0..i.
    std::vector<std::vector<Poly>> entries;
    std::vector<std::string> series_row;  // bottom row as printed (may be empty)

    bool is_line() const { return !chain.empty(); }
    Poly entry(int row, int col) const;
    int row_index(const Partition& p) const;
    int col_index(const Partition& p) const;
};

struct UnknownDecl {
    std::string name;
    std::optional<long long> lo, hi;
    std::string note;
};

struct TableRelation {
    std::string unknown;
    Poly expr;
};

struct DecompTable {
    int schema_version = 1;
    std::string group = "SU";
    int n = 0;
    int d = 1;
    std::string ell;
    std::vector<UnknownDecl> unknowns;
    std::vector<TableRelation> relations;
    std::vector<TableBlock> blocks;

    // d_{la, mu}: zero across blocks; partitions absent from every block are
    // defect-zero singletons (identity column).
    Poly entry(const Partition& la, const Partition& mu) const;
    bool has_partition(const Partition& p) const;
    const TableBlock* block_of(const Partition& p) const;
};

DecompTable load_table(const std::string& json_text);
DecompTable load_table_file(const std::string& path);
std::string save_table(const DecompTable& t);  // canonical JSON

// The published set: d=1 for n=2..10, d=3 for n=3..10, d=5 for n=5..10.
std::vector<std::pair<int, int>> embedded_pairs();
const DecompTable& embedded_table(int n, int d);

struct CheckResult {
    std::string id;
    std::string status;  // "pass" | "fail" | "skip"
    std::vector<std::string> details;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    std::string str() const;
};

// Runs v1..v8 (or the requested subset).
//   v1 unitriangular/unit diagonal/dominance support (+ relation references)
//   v2 two-column corner vs the closed form (d=1)
//   v3 Psi_{321^{n-5}} column (d=1, n >= 6)
//   v4 James row and column removal against smaller embedded tables
//   v5 block membership equals the d-core partition
//   v6 line blocks: <= 2 entries per column, adjacent along the chain
//   v7 rows (d+m, d-1, ..., 1) with m even have a single nonzero entry
//   v8 series labels match the transcribed bottom row
ValidationReport validate(const DecompTable& t, const std::vector<std::string>& which = {});

// format: "latex" | "text" | "json"; dots stand for zeroes.
std::string emit_table(const DecompTable& t, const std::string& format);

}  // namespace sud
