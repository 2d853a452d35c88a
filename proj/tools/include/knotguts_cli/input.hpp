#pragma once

#include "knotguts/diagram.hpp"
#include "knotguts/montesinos.hpp"
#include "knotguts/notation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotguts::cli {

enum class InputKind { Pd, Braid, Montesinos };

struct LoadedInput {
  InputKind kind = InputKind::Pd;
  std::string text;  // canonical serialization of what was parsed
  std::string name;  // table name when loaded with --name
  LinkDiagram diagram;
  std::optional<BraidWord> braid;
  std::optional<MontesinosNormalForm> montesinos;
};

std::string kind_name(InputKind k);

// Dispatches on the leading character: 'X' or '[' for PD codes, 'B' for braid words,
// 'M' for Montesinos vectors.
LoadedInput load_text(const std::string& text);
LoadedInput load_pd(const std::string& text);
LoadedInput load_braid(const std::string& text);
LoadedInput load_montesinos(const std::string& text);
LoadedInput load_file(const std::string& path);

// Knot table rows. The header must name the columns `name` and `pd_notation`;
// `jones_polynomial` is optional. Fields are separated by ',' or '|'.
struct TableRow {
  std::string name;
  PDCode pd;
  std::optional<std::string> jones;
};

struct TableIngest {
  std::vector<TableRow> rows;
  std::vector<std::string> warnings;
};

TableIngest ingest_table(const std::string& path);
TableIngest ingest_table_text(const std::string& content);

// "11n_95" -> "11n95", "12n_0706" -> "12n706"; other names are lowercased.
std::string normalize_name(const std::string& name);

// Accepts the table form "[[4,2,5,1],[10,4,11,3],...]" as well as "X(...)" text.
PDCode parse_table_pd(const std::string& text);

LoadedInput load_named(const std::string& table_path, const std::string& name);

}  // namespace knotguts::cli
