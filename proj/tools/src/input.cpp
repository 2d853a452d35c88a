#include "knotguts_cli/input.hpp"

#include "knotguts/error.hpp"

#include <boost/algorithm/string/trim.hpp>
#include <boost/tokenizer.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace knotguts::cli {

std::string kind_name(InputKind k) {
  switch (k) {
    case InputKind::Pd: return "pd";
    case InputKind::Braid: return "braid";
    case InputKind::Montesinos: return "montesinos";
  }
  return "pd";
}

LoadedInput load_pd(const std::string& text) {
  LoadedInput in;
  in.kind = InputKind::Pd;
  auto pd = parse_table_pd(text);
  in.diagram = LinkDiagram::from_pd(pd);
  in.text = to_string(pd);
  return in;
}

LoadedInput load_braid(const std::string& text) {
  LoadedInput in;
  in.kind = InputKind::Braid;
  in.braid = parse_braid(text);
  in.diagram = LinkDiagram::from_braid(*in.braid);
  in.text = to_string(*in.braid);
  return in;
}

LoadedInput load_montesinos(const std::string& text) {
  LoadedInput in;
  in.kind = InputKind::Montesinos;
  auto v = parse_montesinos(text);
  in.montesinos = normalize(v);
  in.diagram = build_diagram(*in.montesinos).diagram;
  in.text = to_string(v);
  return in;
}

LoadedInput load_text(const std::string& raw) {
  const std::string text = boost::algorithm::trim_copy(raw);
  if (text.empty()) throw Error(ErrorCode::EmptyInput, "empty input");
  switch (text[0]) {
    case 'B': return load_braid(text);
    case 'M': return load_montesinos(text);
    default: return load_pd(text);
  }
}

LoadedInput load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return load_text(ss.str());
}

std::string normalize_name(const std::string& name) {
  std::string lower = boost::algorithm::trim_copy(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  static const std::regex table_name(R"(^(\d+)([an])_?0*(\d+)$)");
  std::smatch m;
  if (std::regex_match(lower, m, table_name)) return m[1].str() + m[2].str() + m[3].str();
  return lower;
}

PDCode parse_table_pd(const std::string& raw) {
  const std::string text = boost::algorithm::trim_copy(raw);
  if (text.size() >= 2 && text[0] == '[' && text[1] == '[') {
    // [[a,b,c,d],[e,f,g,h]] -> X(a,b,c,d) X(e,f,g,h)
    std::string converted;
    int depth = 0;
    for (char ch : text) {
      if (ch == '[') {
        if (++depth == 2) converted += "X(";
      } else if (ch == ']') {
        if (depth-- == 2) converted += ") ";
      } else if (depth == 2) {
        converted += ch;
      } else if (depth == 1 && ch != ',' && !std::isspace(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::SyntaxError, "unexpected character in nested PD list");
      }
    }
    if (depth != 0) throw Error(ErrorCode::SyntaxError, "unbalanced brackets in nested PD list");
    return parse_pd(converted);
  }
  return parse_pd(text);
}

namespace {

std::vector<std::string> split_record(const std::string& line, char sep) {
  boost::escaped_list_separator<char> separator('\\', sep, '"');
  boost::tokenizer<boost::escaped_list_separator<char>> tok(line, separator);
  std::vector<std::string> out;
  for (const auto& field : tok) out.push_back(boost::algorithm::trim_copy(field));
  return out;
}

}  // namespace

TableIngest ingest_table_text(const std::string& content) {
  std::istringstream in(content);
  std::string header;
  while (std::getline(in, header) && boost::algorithm::trim_copy(header).empty()) {
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (boost::algorithm::trim_copy(header).empty()) throw Error(ErrorCode::BadHeader, "table is empty");
  const char sep = header.find('|') != std::string::npos ? '|' : ',';
  auto columns = split_record(header, sep);
  auto find = [&](const std::string& col) -> int {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::string c = columns[i];
      std::transform(c.begin(), c.end(), c.begin(), [](unsigned char ch) { return std::tolower(ch); });
      if (c == col) return static_cast<int>(i);
    }
    return -1;
  };
  const int name_col = find("name"), pd_col = find("pd_notation"), jones_col = find("jones_polynomial");
  if (name_col < 0 || pd_col < 0) throw Error(ErrorCode::BadHeader, "table header needs columns name and pd_notation");

  TableIngest out;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (boost::algorithm::trim_copy(line).empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    std::vector<std::string> fields;
    try {
      fields = split_record(line, sep);
    } catch (const boost::escaped_list_error& e) {
      out.warnings.push_back(where + ": " + e.what());
      continue;
    }
    if (static_cast<int>(fields.size()) <= std::max(name_col, pd_col)) {
      out.warnings.push_back(where + ": too few fields");
      continue;
    }
    TableRow row;
    row.name = normalize_name(fields[name_col]);
    try {
      row.pd = parse_table_pd(fields[pd_col]);
      (void)LinkDiagram::from_pd(row.pd);
    } catch (const Error& e) {
      out.warnings.push_back(where + " (" + row.name + "): " + e.what());
      continue;
    }
    if (jones_col >= 0 && jones_col < static_cast<int>(fields.size()) && !fields[jones_col].empty())
      row.jones = fields[jones_col];
    out.rows.push_back(std::move(row));
  }
  return out;
}

TableIngest ingest_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ingest_table_text(ss.str());
}

LoadedInput load_named(const std::string& table_path, const std::string& name) {
  auto table = ingest_table(table_path);
  const std::string key = normalize_name(name);
  for (const auto& row : table.rows) {
    if (row.name != key) continue;
    LoadedInput in;
    in.kind = InputKind::Pd;
    in.diagram = LinkDiagram::from_pd(row.pd);
    in.text = to_string(row.pd);
    in.name = row.name;
    return in;
  }
  throw Error(ErrorCode::InvalidArgument, "no table entry named " + name);
}

}  // namespace knotguts::cli
