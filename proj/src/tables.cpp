#include "thetalift/tables.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tl {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

TableRow parse_row(const std::string& line) {
  TableRow row;
  std::size_t arrow = line.find("=>");
  if (arrow == std::string::npos) throw ParseError("missing '=>'", 0);
  row.lhs = parse_pattern(line.substr(0, arrow));
  std::string rest = line.substr(arrow + 2);
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = rest.find(';', start);
    parts.push_back(trim(rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (parts.size() > 3) throw ParseError("too many ';' fields", arrow);
  const std::string& target = parts[0];
  if (!target.empty() && target[0] == '{') {
    row.lkt = parse_uktype_set(target);
    row.has_lkt = true;
  } else {
    row.rhs = parse_pattern(target);
  }
  if (parts.size() > 1) row.cond = Condition::parse(parts[1]);
  if (parts.size() > 2) {
    if (row.has_lkt) throw ParseError("lowest K-types given twice", arrow);
    row.lkt = parse_uktype_set(parts[2]);
    row.has_lkt = true;
  }

  // Every variable used must be bindable: from the pattern for lift rows,
  // or b for the Sp(6) list.
  std::set<std::string> known = row.rhs ? bindable_vars(row.lhs) : std::set<std::string>{"b"};
  std::set<std::string> used = all_vars(row.lhs);
  row.cond.collect_vars(used);
  if (row.rhs) {
    auto r = all_vars(*row.rhs);
    used.insert(r.begin(), r.end());
  }
  for (const auto& t : row.lkt)
    for (const auto& e : t) e.collect_vars(used);
  for (const auto& v : used)
    if (!known.count(v)) throw ParseError("variable '" + v + "' cannot be bound", 0);
  return row;
}

}  // namespace

Table parse_table(const std::string& name, const std::string& text) {
  Table t;
  t.name = name;
  t.text = text;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      TableRow row = parse_row(line);
      row.line = no;
      row.source = line;
      t.rows.push_back(std::move(row));
    } catch (const std::exception& e) {
      throw ParseError(name + ":" + std::to_string(no) + ": " + e.what(), 0);
    }
  }
  return t;
}

const Table& TableSet::get(const std::string& name) const {
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw std::out_of_range("table " + name + " not loaded from " + origin);
}

TableSet load_table_dir(const std::string& dir) {
  TableSet set;
  set.origin = dir;
  for (const auto& e : embedded_tables()) {
    std::filesystem::path path = std::filesystem::path(dir) / e.name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    set.tables.push_back(parse_table(e.name, ss.str()));
  }
  return set;
}

namespace {

std::mutex g_mutex;
std::shared_ptr<const TableSet> g_tables;

std::shared_ptr<const TableSet> embedded_set() {
  auto set = std::make_shared<TableSet>();
  set->origin = "embedded";
  for (const auto& e : embedded_tables()) set->tables.push_back(parse_table(e.name, e.text));
  return set;
}

}  // namespace

std::shared_ptr<const TableSet> current_tables() {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (!g_tables) {
    if (const char* dir = std::getenv("THETALIFT_TABLE_DIR"); dir && *dir)
      g_tables = std::make_shared<TableSet>(load_table_dir(dir));
    else
      g_tables = embedded_set();
  }
  return g_tables;
}

void use_table_dir(const std::string& dir) {
  auto set = std::make_shared<TableSet>(load_table_dir(dir));
  std::lock_guard<std::mutex> lock(g_mutex);
  g_tables = std::move(set);
}

void use_embedded_tables() {
  auto set = embedded_set();
  std::lock_guard<std::mutex> lock(g_mutex);
  g_tables = std::move(set);
}

std::vector<RowMatch> match_rows(const Table& table, const AnyParams& x) {
  std::vector<RowMatch> out;
  for (const auto& row : table.rows) {
    if (auto b = match(row.lhs, row.cond, x)) out.push_back({&row, *b});
  }
  return out;
}

}  // namespace tl
