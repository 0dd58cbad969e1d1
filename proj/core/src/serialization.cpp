#include "singlets/serialization.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "singlets/errors.hpp"

namespace singlets {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return object.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

Json exponent_array(const WeightVector& e) {
  Json out = Json::array();
  for (int v : e.entries()) out.push_back(v);
  return out;
}

WeightVector exponent_from(const Json& array, std::size_t rank) {
  if (!array.is_array()) throw FormatError("exponent must be an array of integers");
  std::vector<int> entries;
  for (const auto& v : array) {
    if (!v.is_number_integer()) throw FormatError("exponent entries must be integers");
    entries.push_back(v.get<int>());
  }
  if (entries.size() != rank) {
    throw FormatError("exponent of length " + std::to_string(entries.size()) +
                      " in a rank-" + std::to_string(rank) + " document");
  }
  return WeightVector(std::move(entries));
}

BigInt big_from(const Json& value) {
  if (value.is_string()) return parse_decimal(value.get<std::string>());
  if (value.is_number_integer()) return BigInt(std::to_string(value.get<long long>()), 10);
  throw FormatError("expected a decimal string or integer");
}

std::size_t rank_from(const Json& doc) {
  const long long rank = field<long long>(doc, "rank");
  if (rank < 0) throw FormatError("rank must be >= 0");
  return static_cast<std::size_t>(rank);
}

}  // namespace

std::string polynomial_to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["e"] = exponent_array(e);
    term["c"] = to_decimal(c);
    terms.push_back(std::move(term));
  }
  Json doc;
  doc["rank"] = p.rank();
  doc["terms"] = std::move(terms);
  return doc.dump();
}

LaurentPolynomial polynomial_from_json(std::string_view text) {
  Json doc = parse(text);
  const std::size_t rank = rank_from(doc);
  LaurentPolynomial p(rank);
  Json terms = field<Json>(doc, "terms");
  if (!terms.is_array()) throw FormatError("'terms' must be an array");
  for (const auto& term : terms) {
    p.add_term(exponent_from(field<Json>(term, "e"), rank), big_from(field<Json>(term, "c")));
  }
  return p;
}

std::string character_spec_to_json(const CharacterSpec& spec) {
  Json weights = Json::array();
  for (const auto& [w, m] : spec.weights) {
    Json entry;
    entry["w"] = exponent_array(w);
    if (m.fits_slong_p()) {
      entry["m"] = m.get_si();
    } else {
      entry["m"] = to_decimal(m);
    }
    weights.push_back(std::move(entry));
  }
  Json doc;
  doc["rank"] = spec.rank;
  doc["label"] = spec.label;
  doc["weights"] = std::move(weights);
  return doc.dump();
}

CharacterSpec character_spec_from_json(std::string_view text) {
  Json doc = parse(text);
  CharacterSpec spec;
  spec.rank = rank_from(doc);
  if (doc.contains("label")) spec.label = field<std::string>(doc, "label");
  Json weights = field<Json>(doc, "weights");
  if (!weights.is_array()) throw FormatError("'weights' must be an array");
  for (const auto& entry : weights) {
    WeightVector w = exponent_from(field<Json>(entry, "w"), spec.rank);
    BigInt m = entry.contains("m") ? big_from(entry.at("m")) : BigInt(1);
    if (m <= 0) throw FormatError("multiplicity of " + w.to_string() + " must be positive");
    spec.weights[w] += m;
  }
  if (spec.weights.empty()) throw FormatError("weight file lists no weights");
  return spec;
}

CharacterSpec load_weight_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open weight file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return character_spec_from_json(buffer.str());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string dimension_record_to_json(const DimensionRecord& record) {
  Json doc;
  doc["group"] = record.group;
  doc["rep"] = record.rep;
  doc["n"] = record.n;
  doc["dimension"] = to_decimal(record.dimension);
  return doc.dump();
}

DimensionRecord dimension_record_from_json(std::string_view text) {
  Json doc = parse(text);
  return {field<std::string>(doc, "group"), field<std::string>(doc, "rep"), field<int>(doc, "n"),
          big_from(field<Json>(doc, "dimension"))};
}

std::string check_report_to_json(const CheckReport& report) {
  Json doc;
  doc["check"] = report.check;
  doc["range"] = Json::array({report.range_begin, report.range_end});
  doc["status"] = report.passed ? "pass" : "fail";
  if (!report.passed && report.first_violation) doc["first_violation"] = *report.first_violation;
  return doc.dump();
}

CheckReport check_report_from_json(std::string_view text) {
  Json doc = parse(text);
  CheckReport report;
  report.check = field<std::string>(doc, "check");
  Json range = field<Json>(doc, "range");
  if (!range.is_array() || range.size() != 2) throw FormatError("'range' must be [begin, end]");
  report.range_begin = range[0].get<long>();
  report.range_end = range[1].get<long>();
  const std::string status = field<std::string>(doc, "status");
  if (status != "pass" && status != "fail") throw FormatError("unknown status '" + status + "'");
  report.passed = status == "pass";
  if (doc.contains("first_violation")) report.first_violation = field<long>(doc, "first_violation");
  return report;
}

void write_bfile(std::ostream& out, std::span<const BigInt> terms, long offset) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out << offset + static_cast<long>(i) << ' ' << to_decimal(terms[i]) << '\n';
  }
}

}  // namespace singlets
