// Copyright 2026 The weillab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "weillab/cli/record.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "weillab/error.hpp"
#include "weillab/label.hpp"
#include "weillab/two_adic.hpp"
#include "weillab/verdict.hpp"

namespace weillab::cli {

using json = nlohmann::ordered_json;

ClassRecord make_record(const WeilQuartic& f) { return make_record(f, classify(f)); }

ClassRecord make_record(const WeilQuartic& f, const ClassKind& kind) {
  ClassRecord rec;
  rec.q = f.q;
  rec.p = f.p;
  rec.r = f.r;
  rec.a = f.a;
  rec.b = f.b;
  rec.label = render_label(f);
  rec.class_kind = std::string(to_string(kind.family));
  if (kind.b_case) rec.b_case = std::string(to_string(*kind.b_case));
  rec.irreducible = is_irreducible_over_Q(f);
  rec.fplus_disc = fplus_discriminant(f);
  if (rec.fplus_disc != 0) {
    const auto sf = squarefree_part(rec.fplus_disc);
    rec.c = sf.c;
    rec.d = sf.d;
  }

  if (kind.family == Family::Outside) {
    rec.notes = "outside:" + kind.reason;
    return rec;
  }

  if (kind.in_family()) {
    const bool ordinary = p_rank_class(f, kind) == PRankClass::Ordinary;
    if (ordinary != is_ordinary_by_gcd(f)) {
      throw Error(ErrorCode::Internal, "p-rank class disagrees with gcd(b, p) for " + f.to_string());
    }
    rec.ordinary = ordinary;
    const TwoAdicData two = two_adic_data(f, kind);
    rec.split2_Kplus = std::string(to_string(two.split2_Kplus));
    rec.K_over_Kplus_ramified = two.K_over_Kplus_ramified;
    rec.shape2_K = two.shape2_K.to_string();
  }

  const Genus3Verdict verdict = genus3_verdict(f, kind);
  rec.deg4_polarisation = verdict.deg4_polarisation_exists;
  rec.genus3_exists = verdict.genus3_curve_exists;
  rec.rule = std::string(to_string(verdict.rule));
  rec.curve_constraints = curve_shape_constraints(f, kind).to_string();
  for (std::size_t i = 0; i < verdict.notes.size(); ++i) {
    if (i > 0) rec.notes += "; ";
    rec.notes += verdict.notes[i];
  }
  return rec;
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

std::string to_json(const ClassRecord& rec, int indent) {
  json j;
  j["q"] = rec.q;
  j["p"] = rec.p;
  j["r"] = rec.r;
  j["a"] = rec.a;
  j["b"] = rec.b;
  j["label"] = rec.label;
  j["class_kind"] = rec.class_kind;
  j["b_case"] = opt(rec.b_case);
  j["ordinary"] = opt(rec.ordinary);
  j["irreducible"] = rec.irreducible;
  j["fplus_disc"] = rec.fplus_disc;
  j["c"] = opt(rec.c);
  j["d"] = opt(rec.d);
  j["split2_Kplus"] = opt(rec.split2_Kplus);
  j["K_over_Kplus_ramified"] = opt(rec.K_over_Kplus_ramified);
  j["shape2_K"] = opt(rec.shape2_K);
  j["deg4_polarisation"] = opt(rec.deg4_polarisation);
  j["genus3_exists"] = opt(rec.genus3_exists);
  j["rule"] = opt(rec.rule);
  j["curve_constraints"] = opt(rec.curve_constraints);
  j["notes"] = rec.notes;
  return j.dump(indent);
}

ClassRecord record_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad record json: ") + e.what());
  }
  ClassRecord rec;
  try {
    rec.q = j.at("q").get<i64>();
    rec.p = j.at("p").get<i64>();
    rec.r = j.at("r").get<int>();
    rec.a = j.at("a").get<i64>();
    rec.b = j.at("b").get<i64>();
    rec.label = j.at("label").get<std::string>();
    rec.class_kind = j.at("class_kind").get<std::string>();
    rec.b_case = get_opt<std::string>(j, "b_case");
    rec.ordinary = get_opt<bool>(j, "ordinary");
    rec.irreducible = j.at("irreducible").get<bool>();
    rec.fplus_disc = j.at("fplus_disc").get<i64>();
    rec.c = get_opt<i64>(j, "c");
    rec.d = get_opt<i64>(j, "d");
    rec.split2_Kplus = get_opt<std::string>(j, "split2_Kplus");
    rec.K_over_Kplus_ramified = get_opt<bool>(j, "K_over_Kplus_ramified");
    rec.shape2_K = get_opt<std::string>(j, "shape2_K");
    rec.deg4_polarisation = get_opt<bool>(j, "deg4_polarisation");
    rec.genus3_exists = get_opt<bool>(j, "genus3_exists");
    rec.rule = get_opt<std::string>(j, "rule");
    rec.curve_constraints = get_opt<std::string>(j, "curve_constraints");
    rec.notes = j.at("notes").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad record json: ") + e.what());
  }
  return rec;
}

namespace {

std::string cell(bool v) { return v ? "true" : "false"; }
std::string cell(i64 v) { return std::to_string(v); }
std::string cell(int v) { return std::to_string(v); }
std::string cell(const std::string& v) { return v; }

template <class T>
std::string cell(const std::optional<T>& v) {
  return v ? cell(*v) : std::string();
}

std::vector<std::string> cells(const ClassRecord& rec) {
  return {cell(rec.q),
          cell(rec.p),
          cell(rec.r),
          cell(rec.a),
          cell(rec.b),
          cell(rec.label),
          cell(rec.class_kind),
          cell(rec.b_case),
          cell(rec.ordinary),
          cell(rec.irreducible),
          cell(rec.fplus_disc),
          cell(rec.c),
          cell(rec.d),
          cell(rec.split2_Kplus),
          cell(rec.K_over_Kplus_ramified),
          cell(rec.shape2_K),
          cell(rec.deg4_polarisation),
          cell(rec.genus3_exists),
          cell(rec.rule),
          cell(rec.curve_constraints),
          cell(rec.notes)};
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

i64 parse_int(const std::string& s) {
  std::size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size()) throw Error(ErrorCode::InvalidArgument, "bad integer cell '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw Error(ErrorCode::InvalidArgument, "bad boolean cell '" + s + "'");
}

std::optional<std::string> opt_str(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}
std::optional<bool> opt_bool(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_bool(s);
}
std::optional<i64> opt_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_int(s);
}

}  // namespace

std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    if (i > 0) out += ',';
    out += kColumns[i];
  }
  return out;
}

std::string to_csv_row(const ClassRecord& rec) {
  std::string out;
  const auto row = cells(rec);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += quote(row[i]);
  }
  return out;
}

std::vector<std::string> split_csv_row(std::string_view line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          out.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  if (quoted) throw Error(ErrorCode::InvalidArgument, "unterminated quoted CSV field");
  return out;
}

ClassRecord record_from_csv(std::string_view line) {
  const auto f = split_csv_row(line);
  if (f.size() != kColumns.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "expected " + std::to_string(kColumns.size()) + " CSV fields, got " + std::to_string(f.size()));
  }
  ClassRecord rec;
  rec.q = parse_int(f[0]);
  rec.p = parse_int(f[1]);
  rec.r = static_cast<int>(parse_int(f[2]));
  rec.a = parse_int(f[3]);
  rec.b = parse_int(f[4]);
  rec.label = f[5];
  rec.class_kind = f[6];
  rec.b_case = opt_str(f[7]);
  rec.ordinary = opt_bool(f[8]);
  rec.irreducible = parse_bool(f[9]);
  rec.fplus_disc = parse_int(f[10]);
  rec.c = opt_int(f[11]);
  rec.d = opt_int(f[12]);
  rec.split2_Kplus = opt_str(f[13]);
  rec.K_over_Kplus_ramified = opt_bool(f[14]);
  rec.shape2_K = opt_str(f[15]);
  rec.deg4_polarisation = opt_bool(f[16]);
  rec.genus3_exists = opt_bool(f[17]);
  rec.rule = opt_str(f[18]);
  rec.curve_constraints = opt_str(f[19]);
  rec.notes = f[20];
  return rec;
}

namespace {

constexpr int kTableWidths[] = {8, 5, 7, 14, 10, 24, 13, 9, 12, 6, 7, 27};

std::string table_line(const std::vector<std::string>& cols) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i + 1 == cols.size()) {
      os << cols[i];
    } else {
      os << std::left << std::setw(kTableWidths[i]) << cols[i] << ' ';
    }
  }
  return os.str();
}

std::string dash(const std::string& s) { return s.empty() ? "-" : s; }

}  // namespace

std::string table_header() {
  return table_line({"q", "a", "b", "label", "kind", "b_case", "ordinary", "split2", "shape2_K", "deg4", "genus3", "rule"});
}

std::string to_table_row(const ClassRecord& rec) {
  return table_line({cell(rec.q), cell(rec.a), cell(rec.b), rec.label, rec.class_kind, dash(cell(rec.b_case)),
                     rec.ordinary ? (*rec.ordinary ? "ordinary" : "supersing.") : "-", dash(cell(rec.split2_Kplus)),
                     dash(cell(rec.shape2_K)), dash(cell(rec.deg4_polarisation)), dash(cell(rec.genus3_exists)),
                     dash(cell(rec.rule))});
}

}  // namespace weillab::cli
