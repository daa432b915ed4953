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
#include "weillab/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "weillab/bounds.hpp"
#include "weillab/error.hpp"
#include "weillab/label.hpp"

namespace weillab::cli {

namespace {

i64 parse_i64(std::string_view text, std::string_view what) {
  std::string s(text);
  std::size_t pos = 0;
  i64 v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + ": not an integer: '" + s + "'");
  }
  return v;
}

void check_bound(i64 q, i64 bound) {
  if (q > bound) {
    throw Error(ErrorCode::QTooLarge,
                "q=" + std::to_string(q) + " exceeds the safe bound " + std::to_string(bound));
  }
}

}  // namespace

i64 resolve_safe_bound(std::optional<i64> flag, const char* env_value) {
  i64 bound = kDefaultSafeBound;
  if (flag) {
    bound = *flag;
  } else if (env_value != nullptr && *env_value != '\0') {
    bound = parse_i64(env_value, "WEILLAB_SAFE_BOUND");
  }
  if (bound < 2 || bound > kMaxQ) {
    throw Error(ErrorCode::InvalidArgument,
                "safe bound must lie in [2, " + std::to_string(kMaxQ) + "], got " + std::to_string(bound));
  }
  return bound;
}

std::vector<i64> prime_powers_in_range(i64 lo, i64 hi) {
  std::vector<i64> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (i64 p = 2; p <= hi; ++p) {
    if (composite[p]) continue;
    for (i64 m = p * p; m <= hi; m += p) composite[m] = true;
    for (i64 pk = p;; pk *= p) {
      if (pk >= lo) out.push_back(pk);
      if (pk > hi / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassRecord> enumerate_records(i64 q_min, i64 q_max, unsigned threads) {
  const std::vector<i64> qs = prime_powers_in_range(q_min, q_max);
  std::vector<std::vector<ClassRecord>> slots(qs.size());
  std::vector<std::exception_ptr> failures(qs.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i = next++; i < qs.size(); i = next++) {
      try {
        for (const auto& cls : enumerate_classes(qs[i])) slots[i].push_back(make_record(cls.f, cls.kind));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(qs.size(), 1))));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::vector<ClassRecord> out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
    out.insert(out.end(), slots[i].begin(), slots[i].end());
  }
  return out;
}

std::string Summary::to_string() const {
  std::ostringstream os;
  os << "summary: classes=" << total << " PirrA=" << pirr_a << " PirrB=" << pirr_b << " SpecialQ2=" << special_q2
     << " SpecialQ3=" << special_q3 << " genus3=" << genus3 << " no-genus3=" << no_genus3;
  return os.str();
}

Summary summarise(const std::vector<ClassRecord>& records) {
  Summary s;
  for (const auto& rec : records) {
    ++s.total;
    if (rec.class_kind == "PirrA") ++s.pirr_a;
    if (rec.class_kind == "PirrB") ++s.pirr_b;
    if (rec.class_kind == "SpecialQ2") ++s.special_q2;
    if (rec.class_kind == "SpecialQ3") ++s.special_q3;
    if (rec.genus3_exists == true) ++s.genus3;
    if (rec.genus3_exists == false) ++s.no_genus3;
  }
  return s;
}

namespace {

struct ClassifyArgs {
  std::optional<i64> q, a, b;
  std::optional<std::string> label;
};

struct EnumerateArgs {
  i64 q_min = 0;
  i64 q_max = 0;
  std::string format = "table";
  bool only_no_genus3 = false;
  std::optional<std::string> output;
  unsigned threads = 0;
};

struct BoundsArgs {
  i64 q = 0;
  std::optional<i64> a, pa, b, g;
  std::string family;
};

struct LabelArgs {
  std::optional<std::string> encode;
  std::optional<std::string> decode;
};

void cmd_classify(const ClassifyArgs& args, i64 bound, std::ostream& out) {
  const bool numeric = args.q || args.a || args.b;
  if (numeric == args.label.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "classify takes either --q/--a/--b or --label");
  }
  WeilQuartic f;
  if (args.label) {
    f = parse_label(*args.label);
    check_bound(f.q, bound);
  } else {
    if (!args.q || !args.a || !args.b) throw Error(ErrorCode::InvalidArgument, "classify needs all of --q, --a, --b");
    check_bound(*args.q, bound);
    f = make_weil_quartic(*args.q, *args.a, *args.b);
  }
  out << to_json(make_record(f), 2) << '\n';
}

void cmd_enumerate(const EnumerateArgs& args, i64 bound, std::ostream& out, std::ostream& err) {
  if (args.q_min < 2 || args.q_min > args.q_max) {
    throw Error(ErrorCode::InvalidArgument, "need 2 <= q-min <= q-max, got q-min=" + std::to_string(args.q_min) +
                                                " q-max=" + std::to_string(args.q_max));
  }
  check_bound(args.q_max, bound);

  unsigned threads = args.threads;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<ClassRecord> records = enumerate_records(args.q_min, args.q_max, threads);
  if (args.only_no_genus3) {
    std::erase_if(records, [](const ClassRecord& r) { return r.genus3_exists != false; });
  }

  std::ofstream file;
  if (args.output) {
    file.open(*args.output, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + *args.output);
  }
  std::ostream& sink = args.output ? file : out;

  const Summary summary = summarise(records);
  if (args.format == "csv") {
    sink << csv_header() << '\n';
    for (const auto& rec : records) sink << to_csv_row(rec) << '\n';
    err << summary.to_string() << '\n';
  } else if (args.format == "json") {
    for (const auto& rec : records) sink << to_json(rec) << '\n';
    err << summary.to_string() << '\n';
  } else {
    sink << table_header() << '\n';
    for (const auto& rec : records) sink << to_table_row(rec) << '\n';
    sink << summary.to_string() << '\n';
  }
  sink.flush();
  if (!sink) throw Error(ErrorCode::InvalidArgument, "write failed");
}

void cmd_bounds(const BoundsArgs& args, i64 bound, std::ostream& out) {
  check_bound(args.q, bound);
  auto reject = [&](bool present, const char* flag) {
    if (present) throw Error(ErrorCode::InvalidArgument, std::string(flag) + " is not used by --family " + args.family);
  };
  PointBounds pb;
  std::vector<std::string> notes;
  if (args.family == "general") {
    if (!args.a || !args.pa) throw Error(ErrorCode::InvalidArgument, "--family general needs --a and --pa");
    reject(args.b.has_value(), "--b");
    reject(args.g.has_value(), "--g");
    pb = genus_bounds_on_surface(args.q, *args.a, *args.pa);
    notes.emplace_back(kNonAbsIrreducibleNote);
  } else if (args.family == "wres") {
    reject(args.a.has_value(), "--a");
    reject(args.pa.has_value(), "--pa");
    reject(args.b.has_value(), "--b");
    reject(args.g.has_value(), "--g");
    pb = weil_restriction_bounds(args.q);
  } else if (args.family == "nonpp") {
    reject(args.a.has_value(), "--a");
    reject(args.pa.has_value(), "--pa");
    reject(args.g.has_value(), "--g");
    if (args.b) {
      pb = non_pp_bounds_exact(args.q, *args.b);
      notes.emplace_back("pre-estimation form q + 1 +- (ceil sqrt(q - b) + floor(2 sqrt q))");
    } else {
      pb = non_pp_bounds(args.q);
    }
  } else {
    if (!args.g) throw Error(ErrorCode::InvalidArgument, "--family serre needs --g");
    reject(args.a.has_value(), "--a");
    reject(args.pa.has_value(), "--pa");
    reject(args.b.has_value(), "--b");
    pb = serre_weil_interval(args.q, *args.g);
  }

  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(pb.family));
  j["q"] = args.q;
  j["genus"] = pb.genus;
  j["center"] = pb.center;
  j["radius"] = pb.radius;
  j["lo"] = pb.lo;
  j["hi"] = pb.hi;
  j["raw_lo"] = pb.raw_lo;
  j["notes"] = notes;
  out << j.dump() << '\n';
}

void cmd_label(const LabelArgs& args, std::ostream& out) {
  if (args.encode.has_value() == args.decode.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "label takes exactly one of --encode or --decode");
  }
  if (args.encode) {
    std::vector<std::string> parts;
    std::stringstream ss(*args.encode);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "--encode expects q,a,b");
    const WeilQuartic f =
        make_weil_quartic(parse_i64(parts[0], "q"), parse_i64(parts[1], "a"), parse_i64(parts[2], "b"));
    out << render_label(f) << '\n';
  } else {
    const WeilQuartic f = parse_label(*args.decode);
    out << "q=" << f.q << " a=" << f.a << " b=" << f.b << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isogeny classes of abelian surfaces without small-genus curves, and genus-3 verdicts"};
  app.name("weillab");
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<i64> safe_bound;
  app.add_option("--safe-bound", safe_bound, "Largest q accepted (default 1000000, env WEILLAB_SAFE_BOUND)");

  ClassifyArgs cargs;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one Weil quartic");
  classify_cmd->add_option("--q", cargs.q, "Field size, a prime power");
  classify_cmd->add_option("--a", cargs.a, "Coefficient of t^3");
  classify_cmd->add_option("--b", cargs.b, "Coefficient of t^2");
  classify_cmd->add_option("--label", cargs.label, "Isogeny label 2.<q>.<a>_<b>");

  EnumerateArgs eargs;
  auto* enum_cmd = app.add_subcommand("enumerate", "List every family member for q in a range");
  enum_cmd->add_option("--q-min", eargs.q_min, "Smallest q")->required();
  enum_cmd->add_option("--q-max", eargs.q_max, "Largest q")->required();
  enum_cmd->add_option("--format", eargs.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  enum_cmd->add_flag("--only-no-genus3", eargs.only_no_genus3, "Keep classes without genus-3 curves");
  enum_cmd->add_option("--output", eargs.output, "Write records to a file");
  enum_cmd->add_option("--threads", eargs.threads, "Worker threads (0 = hardware)");

  BoundsArgs bargs;
  auto* bounds_cmd = app.add_subcommand("bounds", "Point-count intervals");
  bounds_cmd->add_option("--q", bargs.q, "Field size")->required();
  bounds_cmd->add_option("--a", bargs.a, "Coefficient of t^3 (general)");
  bounds_cmd->add_option("--pa", bargs.pa, "Arithmetic genus (general)");
  bounds_cmd->add_option("--b", bargs.b, "Coefficient of t^2 (exact nonpp variant)");
  bounds_cmd->add_option("--g", bargs.g, "Genus (serre)");
  bounds_cmd->add_option("--family", bargs.family, "general, wres, nonpp or serre")
      ->required()
      ->check(CLI::IsMember({"general", "wres", "nonpp", "serre"}));

  LabelArgs largs;
  auto* label_cmd = app.add_subcommand("label", "Encode or decode isogeny labels");
  label_cmd->add_option("--encode", largs.encode, "q,a,b");
  label_cmd->add_option("--decode", largs.decode, "Label text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    const i64 bound = resolve_safe_bound(safe_bound, std::getenv("WEILLAB_SAFE_BOUND"));
    if (classify_cmd->parsed()) cmd_classify(cargs, bound, out);
    if (enum_cmd->parsed()) cmd_enumerate(eargs, bound, out, err);
    if (bounds_cmd->parsed()) cmd_bounds(bargs, bound, out);
    if (label_cmd->parsed()) cmd_label(largs, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Internal ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace weillab::cli
