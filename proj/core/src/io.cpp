#include "skewminor/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "skewminor/errors.hpp"

namespace skewminor {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::vector<std::string> read_labels(const Json& obj) {
  const Json& labels = member(obj, "labels");
  if (!labels.is_array()) throw FormatError("'labels' must be an array");
  std::vector<std::string> out;
  for (const auto& l : labels) {
    if (!l.is_string()) throw FormatError("labels must be strings");
    out.push_back(l.get<std::string>());
  }
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw FormatError("duplicate label");
  return out;
}

FieldElement read_entry(const Json& v, const FieldSpec& spec) {
  try {
    if (v.is_string()) return FieldElement::parse(spec, v.get<std::string>());
    if (v.is_number_integer()) return FieldElement(spec, v.get<long>());
  } catch (const DomainError& e) {
    throw FormatError(std::string("bad entry: ") + e.what());
  }
  throw FormatError("entries must be strings such as \"3\" or \"-1/2\"");
}

FieldSpec read_field(const Json& obj) {
  const Json& field = member(obj, "field");
  const Json& kind = member(field, "kind");
  if (kind == "rational") return FieldSpec::rationals();
  if (kind == "prime") {
    const Json& p = member(field, "p");
    if (!p.is_number_unsigned()) throw FormatError("'p' must be a positive integer");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const DomainError& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("field kind must be \"rational\" or \"prime\"");
}

Json field_json(const FieldSpec& spec) {
  Json f = Json::object();
  if (spec.is_prime()) {
    f["kind"] = "prime";
    f["p"] = spec.modulus();
  } else {
    f["kind"] = "rational";
  }
  return f;
}

Json labels_json(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(l);
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  const std::string t = lower(text);
  if (t == "rational" || t == "rationals" || t == "q") return FieldSpec::rationals();
  std::string digits = t;
  if (t.rfind("prime:", 0) == 0) {
    digits = t.substr(6);
  } else if (t.rfind("gf(", 0) == 0 && t.back() == ')') {
    digits = t.substr(3, t.size() - 4);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw FormatError("unrecognised field '" + std::string(text) + "'");
  }
  try {
    return FieldSpec::prime(std::stoull(digits));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  } catch (const std::out_of_range&) {
    throw FormatError("modulus out of range");
  }
}

LabeledMatrix read_matrix_json(std::string_view text) {
  const Json doc = parse_json(text);
  const FieldSpec spec = read_field(doc);
  const auto labels = read_labels(doc);
  const Json& rows = member(doc, "rows");
  if (!rows.is_array() || rows.size() != labels.size()) throw FormatError("'rows' must have one row per label");
  std::vector<FieldElement> entries;
  entries.reserve(labels.size() * labels.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != labels.size()) throw FormatError("matrix grid is not square");
    for (const auto& v : row) entries.push_back(read_entry(v, spec));
  }
  LabeledMatrix m(spec, labels, std::move(entries));
  if (doc.contains("skew")) {
    const Json& skew = doc.at("skew");
    if (!skew.is_boolean()) throw FormatError("'skew' must be a boolean");
    if (skew.get<bool>() && !is_skew_symmetric(m)) throw FormatError("matrix declared skew is not skew-symmetric");
  }
  return m;
}

std::string write_matrix_json(const LabeledMatrix& a) {
  if (!a.is_square()) throw DomainError("only square matrices have a file format");
  std::ostringstream out;
  out << "{\n";
  out << "  \"field\": " << field_json(a.spec()).dump() << ",\n";
  out << "  \"labels\": " << labels_json(a.labels()).dump() << ",\n";
  if (is_skew_symmetric(a)) out << "  \"skew\": true,\n";
  out << "  \"rows\": [";
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j).to_string());
    out << (i == 0 ? "\n    " : ",\n    ") << row.dump();
  }
  out << (a.size() == 0 ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

MinorTable read_minor_table_json(std::string_view text, const FieldSpec& spec) {
  const Json doc = parse_json(text);
  const auto labels = read_labels(doc);
  const Json& order = member(doc, "max_order");
  if (!order.is_number_unsigned()) throw FormatError("'max_order' must be a non-negative integer");
  const Json& minors = member(doc, "minors");
  if (!minors.is_array()) throw FormatError("'minors' must be an array");
  std::vector<MinorTable::Entry> entries;
  entries.reserve(minors.size());
  for (const auto& m : minors) {
    const Json& subset = member(m, "subset");
    if (!subset.is_array()) throw FormatError("'subset' must be an array of labels");
    Subset s;
    for (const auto& l : subset) {
      if (!l.is_string()) throw FormatError("subset members must be label strings");
      auto it = std::find(labels.begin(), labels.end(), l.get<std::string>());
      if (it == labels.end()) throw FormatError("unknown label '" + l.get<std::string>() + "' in subset");
      const auto pos = static_cast<std::size_t>(it - labels.begin());
      if (s.contains(pos)) throw FormatError("repeated label in subset");
      s = s.with(pos);
    }
    entries.push_back({s, read_entry(member(m, "value"), spec)});
  }
  try {
    return MinorTable(spec, labels, order.get<std::size_t>(), std::move(entries));
  } catch (const Error& e) {
    throw FormatError(std::string("invalid minor table: ") + e.what());
  }
}

std::string write_minor_table_json(const MinorTable& table) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"labels\": " << labels_json(table.labels()).dump() << ",\n";
  out << "  \"max_order\": " << table.max_order() << ",\n";
  out << "  \"minors\": [";
  bool first = true;
  for (const auto& e : table.entries()) {
    Json item = Json::object();
    Json subset = Json::array();
    for (std::size_t i : e.subset.members()) subset.push_back(table.labels()[i]);
    item["subset"] = std::move(subset);
    item["value"] = e.value.to_string();
    out << (first ? "\n    " : ",\n    ") << item.dump();
    first = false;
  }
  out << "\n  ]\n}\n";
  return out.str();
}

Witness read_witness_json(std::string_view text, const std::vector<std::string>& labels) {
  Json doc = parse_json(text);
  // Accept a report envelope that carries the witness as its verdict.
  if (doc.is_object() && doc.contains("verdict") && doc.at("verdict").is_object() &&
      doc.at("verdict").contains("signs")) {
    doc = doc.at("verdict");
  }
  const Json& transposed = member(doc, "transposed");
  if (!transposed.is_boolean()) throw FormatError("'transposed' must be a boolean");
  const Json& signs = member(doc, "signs");
  if (!signs.is_object()) throw FormatError("'signs' must be an object keyed by label");
  if (signs.size() != labels.size()) throw FormatError("witness must give exactly one sign per label");
  Witness w;
  w.transposed = transposed.get<bool>();
  for (const auto& l : labels) {
    if (!signs.contains(l)) throw FormatError("witness has no sign for label '" + l + "'");
    const Json& s = signs.at(l);
    if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) {
      throw FormatError("sign of '" + l + "' must be 1 or -1");
    }
    w.signs.push_back(s.get<int>());
  }
  return w;
}

std::string write_witness_json(const Witness& w, const std::vector<std::string>& labels) {
  if (w.signs.size() != labels.size()) throw DomainError("witness and label list differ in length");
  Json doc = Json::object();
  doc["transposed"] = w.transposed;
  Json signs = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) signs[labels[i]] = w.signs[i];
  doc["signs"] = std::move(signs);
  return doc.dump(2) + "\n";
}

}  // namespace skewminor
