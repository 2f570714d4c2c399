#pragma once
// Lift tables and the list of Sp(6,R) representations with infinitesimal
// character (beta,0,1), stored as text files of lines
//   PATTERN => TEMPLATE ; COND [; {LKT,...}]
// Lift tables map O patterns to Sp templates; the Sp(6) list maps Sp
// templates in the variable b (= beta) to their lowest K-types.

#include "thetalift/pattern.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tl {

struct EmbeddedTable {
  const char* name;
  const char* text;
};
const std::vector<EmbeddedTable>& embedded_tables();

struct TableRow {
  int line = 0;
  std::string source;
  ParamPattern lhs;
  std::optional<ParamPattern> rhs;
  Condition cond;
  std::vector<UKTypePattern> lkt;
  bool has_lkt = false;
};

struct Table {
  std::string name;
  std::string text;
  std::vector<TableRow> rows;
};

// Throws ParseError naming the table and line.
Table parse_table(const std::string& name, const std::string& text);

struct TableSet {
  std::vector<Table> tables;
  std::string origin;  // "embedded" or a directory
  const Table& get(const std::string& name) const;
};

// Active tables: the embedded copies unless THETALIFT_TABLE_DIR is set or
// use_table_dir was called.
std::shared_ptr<const TableSet> current_tables();
void use_table_dir(const std::string& dir);
void use_embedded_tables();
TableSet load_table_dir(const std::string& dir);

// File names.
inline constexpr const char* kTheta1 = "appendixB_theta1.tbl";
inline constexpr const char* kTheta2 = "appendixB_theta2.tbl";
inline constexpr const char* kTheta3 = "theta3.tbl";
inline constexpr const char* kTheta4 = "theta4_det.tbl";
inline constexpr const char* kSp6List = "appendixC.tbl";

// Row hits for a lift table.
struct RowMatch {
  const TableRow* row = nullptr;
  Bindings bindings;
};
std::vector<RowMatch> match_rows(const Table& table, const AnyParams& x);

}  // namespace tl
