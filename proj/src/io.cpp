#include "boolrep/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boolrep/errors.hpp"

namespace boolrep {

using json = nlohmann::ordered_json;

namespace {

std::string label_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::Parse, "labels must be strings or integers");
}

std::vector<std::string> labels_of(const json& arr, const char* what) {
  if (!arr.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(label_of(v));
  return out;
}

json set_json(const GroundSet& g, ElementSet s) { return g.labels_of(s); }

// RFC 4180 fields; blank lines are skipped.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  auto end_row = [&] {
    if (any || !field.empty() || !row.empty()) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
    }
    row.clear();
    field.clear();
    any = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (quoted) throw Error(ErrorCode::Parse, "unterminated quoted CSV field");
  end_row();
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct CsvTable {
  std::vector<std::string> row_labels, col_labels;
  std::vector<std::vector<std::string>> cells;
};

CsvTable labeled_table(std::string_view text) {
  auto rows = parse_csv(text);
  if (rows.empty()) throw Error(ErrorCode::Parse, "empty CSV");
  CsvTable t;
  t.col_labels.assign(rows[0].begin() + 1, rows[0].end());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw Error(ErrorCode::Parse, "CSV row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                        " fields, expected " + std::to_string(rows[0].size()));
    t.row_labels.push_back(rows[i][0]);
    t.cells.emplace_back(rows[i].begin() + 1, rows[i].end());
  }
  return t;
}

template <class Cell>
std::string write_table(const std::vector<std::string>& rl, const std::vector<std::string>& cl, Cell cell) {
  std::string out;
  for (const auto& c : cl) out += "," + csv_field(c);
  out += "\n";
  for (std::size_t i = 0; i < rl.size(); ++i) {
    out += csv_field(rl[i]);
    for (std::size_t j = 0; j < cl.size(); ++j) out += "," + cell(i, j);
    out += "\n";
  }
  return out;
}

}  // namespace

Matroid matroid_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("ground")) throw Error(ErrorCode::Parse, "matroid JSON needs a \"ground\" array");
  const bool has_bases = doc.contains("bases"), has_indep = doc.contains("independent");
  if (has_bases == has_indep) throw Error(ErrorCode::Parse, "matroid JSON needs exactly one of \"bases\" and \"independent\"");
  GroundSet ground(labels_of(doc["ground"], "ground"));
  const auto& fam = has_bases ? doc["bases"] : doc["independent"];
  if (!fam.is_array()) throw Error(ErrorCode::Parse, "family must be an array of arrays");
  std::vector<ElementSet> sets;
  for (const auto& s : fam) sets.push_back(ground.subset(labels_of(s, "family member")));
  if (has_bases) return matroid_from_bases(std::move(ground), std::move(sets));
  return matroid_from_independent(hc_new(std::move(ground), std::move(sets)));
}

std::string matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (auto b : m.bases()) bases.push_back(set_json(m.ground(), b));
  return json{{"ground", m.ground().labels()}, {"bases", bases}}.dump() + "\n";
}

SbMatrix matrix_from_csv(std::string_view text) {
  const auto t = labeled_table(text);
  std::vector<SBool> e;
  for (const auto& row : t.cells)
    for (const auto& cell : row) {
      auto v = parse_sbool(cell);
      if (!v) throw Error(ErrorCode::Parse, "bad matrix entry '" + cell + "' (expected 0, 1 or 1v)");
      e.push_back(*v);
    }
  try {
    return SbMatrix(t.row_labels.size(), t.col_labels.size(), std::move(e), t.row_labels, t.col_labels);
  } catch (const Error& err) {
    throw Error(ErrorCode::Parse, err.what());
  }
}

std::string matrix_to_csv(const SbMatrix& m) {
  return write_table(m.row_labels(), m.col_labels(), [&](std::size_t i, std::size_t j) { return std::string(to_token(m.at(i, j))); });
}

std::string matrix_to_pretty(const SbMatrix& m) {
  std::size_t lw = 0, cw = 2;
  for (const auto& l : m.row_labels()) lw = std::max(lw, l.size());
  for (const auto& l : m.col_labels()) cw = std::max(cw, l.size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
  std::string out = std::string(lw, ' ');
  for (const auto& l : m.col_labels()) out += " " + pad(l, cw);
  out += "\n";
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    out += pad(m.row_label(i), lw);
    for (std::size_t j = 0; j < m.n_cols(); ++j) out += " " + pad(std::string(to_token(m.at(i, j))), cw);
    out += "\n";
  }
  return out;
}

std::string representation_to_json(const Representation& r) {
  json entries = json::array();
  for (std::size_t i = 0; i < r.matrix.n_rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < r.matrix.n_cols(); ++j) row.push_back(r.matrix.at(i, j) ? 1 : 0);
    entries.push_back(row);
  }
  return json{{"rows", r.matrix.row_labels()}, {"cols", r.matrix.col_labels()}, {"entries", entries}}.dump() + "\n";
}

std::string tropical_to_csv(const TropicalMatrix& t) {
  return write_table(t.row_labels, t.col_labels, [&](std::size_t i, std::size_t j) {
    return t.at(i, j).is_neg_inf() ? std::string("-inf") : std::string("0");
  });
}

TropicalMatrix tropical_from_csv(std::string_view text) {
  const auto t = labeled_table(text);
  TropicalMatrix out{t.row_labels.size(), t.col_labels.size(), {}, t.row_labels, t.col_labels};
  for (const auto& row : t.cells)
    for (const auto& cell : row) {
      if (cell == "0")
        out.entries.push_back(MaxPlus::unit());
      else if (cell == "-inf")
        out.entries.push_back(MaxPlus::neg_inf());
      else
        throw Error(ErrorCode::Parse, "bad tropical entry '" + cell + "' (expected 0 or -inf)");
    }
  return out;
}

std::string lattice_to_dot(const FlatLattice& l) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.size(); ++i) out += "  n" + std::to_string(i) + " [label=" + quote(l.label(i)) + "];\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    for (auto j : l.upper_covers(i)) out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  return out + "}\n";
}

std::string lattice_to_json(const FlatLattice& l) {
  json elements = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    json e{{"label", l.label(i)}, {"height", l.element_height(i)}, {"covers", l.upper_covers(i)}};
    if (l.has_ground()) e["flat"] = set_json(l.ground(), l.flat(i));
    elements.push_back(e);
  }
  const auto rep = lattice_representation(l);
  json rows = json::array();
  for (std::size_t i = 0; i < rep.n_rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rep.n_cols(); ++j) row.push_back(rep.at(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  return json{{"height", l.height()}, {"elements", elements}, {"representation", rows}}.dump() + "\n";
}

std::string lattice_to_pretty(const FlatLattice& l) {
  std::ostringstream out;
  out << l.size() << " elements, height " << l.height() << "\n";
  for (std::size_t i = 0; i < l.size(); ++i) out << "  " << l.element_height(i) << "  " << l.label(i) << "\n";
  out << "\n" << matrix_to_pretty(lattice_representation(l));
  return out.str();
}

std::string partition_to_json(const FlatLattice& l, const ChainPartition& q) {
  json chain = json::array(), blocks = json::array();
  for (auto f : q.chain.flats) chain.push_back(set_json(l.ground(), l.flat(f)));
  for (auto b : q.blocks) blocks.push_back(set_json(l.ground(), b));
  return json{{"chain", chain}, {"blocks", blocks}}.dump();
}

std::string partition_to_pretty(const FlatLattice& l, const ChainPartition& q) {
  std::string out;
  for (std::size_t i = 0; i < q.chain.flats.size(); ++i) out += (i ? " < " : "") + l.label(q.chain.flats[i]);
  out += "  :";
  for (auto b : q.blocks) out += " " + l.ground().format(b);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace boolrep
