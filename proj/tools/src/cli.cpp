#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewminor/skewminor.hpp"

namespace skewminor::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Unreadable files, bad flags, bad environment.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

unsigned threads_from_env() {
  const char* raw = std::getenv("SKEWMINOR_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  const std::string_view text(raw);
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0 || value > 1024) {
    throw InputError("SKEWMINOR_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

Json labels_json(const LabeledMatrix& a, Subset s) {
  Json out = Json::array();
  for (const auto& l : a.labels_of(s)) out.push_back(l);
  return out;
}

Json pair_json(const LabeledMatrix& a, std::pair<std::size_t, std::size_t> p) {
  return Json::array({a.labels()[p.first], a.labels()[p.second]});
}

Json clan_report_json(const LabeledMatrix& a, const ClanReport& r) {
  Json out = {{"kind", to_string(r.kind)}};
  if (r.subset) out["subset"] = labels_json(a, *r.subset);
  if (r.partition) out["partition"] = Json::array({labels_json(a, r.partition->first), labels_json(a, r.partition->second)});
  if (r.constant) out["constant"] = r.constant->to_string();
  return out;
}

Json witness_json(const Witness& w, const std::vector<std::string>& labels) {
  return Json::parse(write_witness_json(w, labels));
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

class Session {
 public:
  Session(std::string command, std::ostream& out, std::ostream& err, bool quiet)
      : command_(std::move(command)), out_(out), err_(err), quiet_(quiet) {}

  /// Reads a file and records its digest.
  std::string load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    inputs_.push_back({{"path", path}, {"sha256", sha256_hex(text)}});
    return text;
  }

  LabeledMatrix load_matrix(const std::string& path) { return read_matrix_json(load(path)); }

  SkewMatrix load_skew(const std::string& path) {
    LabeledMatrix m = load_matrix(path);
    if (!is_skew_symmetric(m)) throw InputError("'" + path + "' is not skew-symmetric");
    return SkewMatrix(std::move(m));
  }

  void note(const std::string& line) {
    if (!quiet_) err_ << command_ << ": " << line << '\n';
  }

  /// Prints the report envelope and returns the matching exit code.
  int report(const std::string& status, Json verdict, const std::string& message = {}) {
    Json env = {{"command", command_}, {"inputs", inputs_}, {"status", status}};
    if (status != "input-error") env["verdict"] = std::move(verdict);
    if (!message.empty()) env["message"] = message;
    out_ << env.dump(2) << '\n';
    if (!message.empty()) note(message);
    if (status == "ok") return kExitOk;
    return status == "negative" ? kExitNegative : kExitInputError;
  }

  int input_error(const std::string& message) { return report("input-error", nullptr, message); }

  /// Writes `text` to `path`, or to stdout when `path` is empty.
  int emit_file(const std::string& path, const std::string& text, const std::string& what) {
    if (path.empty()) {
      out_ << text;
      return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
    return report("ok", {{"output", path}}, "wrote " + what + " to " + path);
  }

 private:
  std::string command_;
  std::ostream& out_;
  std::ostream& err_;
  bool quiet_;
  Json inputs_ = Json::array();
};

void require_same_frame(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.labels() != b.labels()) throw InputError("matrices carry different labels");
  if (!(a.spec() == b.spec())) throw InputError("matrices live over different fields");
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string matrix;
};

int analyze(Session& s, const AnalyzeArgs& args) {
  const LabeledMatrix a = s.load_matrix(args.matrix);
  const std::size_t n = a.size();
  const bool skew = is_skew_symmetric(a);
  const DensityReport dense = density(a);
  Json v = {{"size", n}, {"field", a.spec().to_string()}, {"skew", skew}, {"dense", dense.dense}};
  if (dense.zero_pair) v["zero_pair"] = pair_json(a, *dense.zero_pair);
  if (n >= 2) v["clan"] = clan_report_json(a, find_nontrivial_clan(a));
  if (skew && n >= 2) v["separability"] = clan_report_json(a, is_separable(SkewMatrix(a)));
  v["hl"] = clan_report_json(a, hl_indecomposable(a));
  s.note(std::string(dense.dense ? "dense" : "not dense") + ", " + v["hl"]["kind"].get<std::string>());
  return s.report("ok", std::move(v));
}

struct CompareArgs {
  std::string a;
  std::string b;
  std::optional<std::size_t> order;
  bool full = false;
};

int compare(Session& s, const CompareArgs& args, unsigned threads) {
  const LabeledMatrix a = s.load_matrix(args.a);
  const LabeledMatrix b = s.load_matrix(args.b);
  require_same_frame(a, b);
  const std::size_t k = args.order.value_or(a.size());
  if (k > a.size()) throw InputError("--order exceeds the number of labels");
  const auto verdict = hl_equivalent(a, b, k, {.full = args.full, .threads = threads});
  Json v = {{"equivalent", verdict.equivalent}, {"order_checked", verdict.order_checked}};
  if (verdict.witness_subset) {
    v["witness_subset"] = labels_json(a, *verdict.witness_subset);
    v["minor_a"] = principal_minor(a, *verdict.witness_subset).to_string();
    v["minor_b"] = principal_minor(b, *verdict.witness_subset).to_string();
  } else {
    v["witness_subset"] = nullptr;
  }
  if (args.full) v["mismatches"] = verdict.mismatches;
  if (verdict.equivalent) return s.report("ok", std::move(v), "(<= " + std::to_string(k) + ")-HL-equivalent");
  return s.report("negative", std::move(v), "principal minors differ");
}

struct WitnessArgs {
  std::string a;
  std::string b;
  bool verify_input = false;
  std::string out;
};

int witness(Session& s, const WitnessArgs& args) {
  const SkewMatrix a = s.load_skew(args.a);
  const SkewMatrix b = s.load_skew(args.b);
  require_same_frame(a, b);
  Witness w;
  try {
    w = recover_witness(a, b, {.verify_input = args.verify_input});
  } catch (const HypothesisError& e) {
    Json v = {{"hypothesis", "failed"}};
    if (e.subset()) v["hl_clan"] = labels_json(a, Subset(*e.subset()));
    if (e.pair()) v["pair"] = pair_json(a, *e.pair());
    return s.report("negative", std::move(v), e.what());
  } catch (const DensityError& e) {
    Json v = {{"hypothesis", "failed"}};
    if (e.pair()) v["zero_pair"] = pair_json(a, *e.pair());
    return s.report("negative", std::move(v), e.what());
  } catch (const DomainError& e) {
    return s.report("negative", {{"hypothesis", "failed"}}, e.what());
  }
  if (!args.out.empty()) {
    std::ofstream file(args.out, std::ios::binary);
    if (!file || !(file << write_witness_json(w, a.labels()))) throw InputError("cannot write '" + args.out + "'");
  }
  return s.report("ok", witness_json(w, a.labels()), w.transposed ? "B^t = DAD" : "B = DAD");
}

struct ApplyArgs {
  std::string matrix;
  std::string witness;
  std::string out;
};

int apply(Session& s, const ApplyArgs& args) {
  const SkewMatrix a = s.load_skew(args.matrix);
  const Witness w = read_witness_json(s.load(args.witness), a.labels());
  return s.emit_file(args.out, write_matrix_json(apply_witness(a, w)), "matrix");
}

struct ReconstructArgs {
  std::string minors;
  std::string field = "rational";
  std::string out;
};

int reconstruct(Session& s, const ReconstructArgs& args) {
  const FieldSpec spec = parse_field_spec(args.field);
  const MinorTable table = read_minor_table_json(s.load(args.minors), spec);
  const LabeledMatrix frame(spec, table.labels());
  std::vector<SkewMatrix> solutions;
  try {
    solutions = reconstruct_from_minors(table, spec);
  } catch (const InconsistencyError& e) {
    return s.report("negative", {{"violated_subset", labels_json(frame, Subset(e.subset()))}}, e.what());
  } catch (const DensityError& e) {
    Json v = Json::object();
    if (e.pair()) v["violated_subset"] = pair_json(frame, *e.pair());
    return s.report("negative", std::move(v), e.what());
  } catch (const FieldError& e) {
    return s.report("negative", Json::object(), e.what());
  }
  Json reps = Json::array();
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const std::string text = write_matrix_json(solutions[i]);
    reps.push_back(Json::parse(text));
    if (!args.out.empty()) {
      const std::string path = args.out + "-" + std::to_string(i + 1) + ".json";
      std::ofstream file(path, std::ios::binary);
      if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
    }
  }
  Json v = {{"count", solutions.size()}, {"representatives", std::move(reps)}};
  return s.report("ok", std::move(v), std::to_string(solutions.size()) + " representative(s)");
}

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  std::string variant = "A";
  std::string field = "rational";
  std::uint64_t seed = 0;
  std::string input;
  std::optional<std::string> set;
  std::string out;
};

CycleVariant parse_variant(const std::string& v) {
  if (v == "A" || v == "a") return CycleVariant::A;
  if (v == "B" || v == "b") return CycleVariant::B;
  throw InputError("--variant must be A or B");
}

int generate(Session& s, const GenerateArgs& args) {
  const FieldSpec spec = parse_field_spec(args.field);
  if (args.family == "flip") {
    if (args.input.empty()) throw InputError("flip needs --input");
    if (!args.set) throw InputError("flip needs --set (comma-separated labels, may be empty)");
    const SkewMatrix a = s.load_skew(args.input);
    const Subset x = a.matrix().subset_of(split_labels(*args.set));
    return s.emit_file(args.out, write_matrix_json(flip_on_set(a, x)), "matrix");
  }
  if (args.n == 0) throw InputError(args.family + " needs --n");
  if (args.family == "skew-cycle") return s.emit_file(args.out, write_matrix_json(skew_cycle(args.n, parse_variant(args.variant), spec)), "matrix");
  if (args.family == "sym-cycle") return s.emit_file(args.out, write_matrix_json(sym_cycle(args.n, parse_variant(args.variant), spec)), "matrix");
  if (args.family == "random-dense") return s.emit_file(args.out, write_matrix_json(random_dense(spec, args.n, args.seed)), "matrix");
  throw InputError("unknown family '" + args.family + "'");
}

struct PuArgs {
  std::string matrix;
  std::string mode = "direct";
};

int pu_check(Session& s, const PuArgs& args, unsigned threads) {
  const LabeledMatrix a = s.load_matrix(args.matrix);
  bool verdict = false;
  std::string message;
  if (args.mode == "wesp") {
    if (!is_skew_symmetric(a)) throw InputError("wesp mode needs a skew-symmetric matrix");
    verdict = wesp_check(SkewMatrix(a));
    if (a.size() < 4) message = "vacuously true: no 4-subsets";
  } else {
    verdict = is_principally_unimodular(a, {threads});
  }
  Json v = {{"mode", args.mode}, {"unimodular", verdict}};
  if (message.empty()) message = verdict ? "principally unimodular" : "not principally unimodular";
  return s.report(verdict ? "ok" : "negative", std::move(v), message);
}

struct MinorsArgs {
  std::string matrix;
  std::optional<std::size_t> order;
  std::string out;
};

int minors(Session& s, const MinorsArgs& args, unsigned threads) {
  const LabeledMatrix a = s.load_matrix(args.matrix);
  const std::size_t k = args.order.value_or(a.size());
  if (k > a.size()) throw InputError("--order exceeds the number of labels");
  return s.emit_file(args.out, write_minor_table_json(principal_minors(a, k, {threads})), "minor table");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal-minor analysis of skew-symmetric matrices", "skewminor"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress diagnostics on stderr");
  app.fallthrough();

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Density, clans, separability, HL-decomposability");
  analyze_cmd->add_option("matrix", analyze_args.matrix, "Matrix file")->required();

  CompareArgs compare_args;
  auto* compare_cmd = app.add_subcommand("compare", "Compare principal minors up to an order");
  compare_cmd->add_option("a", compare_args.a, "First matrix file")->required();
  compare_cmd->add_option("b", compare_args.b, "Second matrix file")->required();
  compare_cmd->add_option("-k,--order", compare_args.order, "Largest order compared (default: all)");
  compare_cmd->add_flag("--full", compare_args.full, "Count every mismatch instead of stopping at the first");

  WitnessArgs witness_args;
  auto* witness_cmd = app.add_subcommand("witness", "Recover D with B = DAD or B^t = DAD");
  witness_cmd->add_option("a", witness_args.a, "Dense HL-indecomposable matrix")->required();
  witness_cmd->add_option("b", witness_args.b, "Matrix with the same principal minors")->required();
  witness_cmd->add_flag("--verify-input", witness_args.verify_input, "Check order <= 4 minors first");
  witness_cmd->add_option("-o,--out", witness_args.out, "Also write the witness file here");

  ApplyArgs apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "Apply a sign witness to a matrix");
  apply_cmd->add_option("matrix", apply_args.matrix, "Matrix file")->required();
  apply_cmd->add_option("witness", apply_args.witness, "Witness file or witness report")->required();
  apply_cmd->add_option("-o,--out", apply_args.out, "Output path (default: stdout)");

  ReconstructArgs reconstruct_args;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild a dense skew matrix from its minors");
  reconstruct_cmd->add_option("minors", reconstruct_args.minors, "Minor table file")->required();
  reconstruct_cmd->add_option("-f,--field", reconstruct_args.field, "rational, prime:<p>, gf(<p>) or <p>");
  reconstruct_cmd->add_option("-o,--out", reconstruct_args.out, "Write representatives to <out>-<i>.json");

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated matrix");
  generate_cmd->add_option("family", generate_args.family, "skew-cycle, sym-cycle, random-dense or flip")
      ->required()
      ->check(CLI::IsMember({"skew-cycle", "sym-cycle", "random-dense", "flip"}));
  generate_cmd->add_option("-n,--n", generate_args.n, "Order");
  generate_cmd->add_option("--variant", generate_args.variant, "Cycle variant A or B");
  generate_cmd->add_option("-f,--field", generate_args.field, "rational, prime:<p>, gf(<p>) or <p>");
  generate_cmd->add_option("--seed", generate_args.seed, "Seed for random-dense");
  generate_cmd->add_option("-i,--input", generate_args.input, "Input matrix for flip");
  generate_cmd->add_option("--set", generate_args.set, "Comma-separated labels for flip");
  generate_cmd->add_option("-o,--out", generate_args.out, "Output path (default: stdout)");

  PuArgs pu_args;
  auto* pu_cmd = app.add_subcommand("pu-check", "Principal unimodularity of a sign matrix");
  pu_cmd->add_option("matrix", pu_args.matrix, "Matrix file")->required();
  pu_cmd->add_option("--mode", pu_args.mode, "direct (all minors) or wesp (order-4 minors)")
      ->check(CLI::IsMember({"direct", "wesp"}));

  MinorsArgs minors_args;
  auto* minors_cmd = app.add_subcommand("minors", "Dump the principal minor table");
  minors_cmd->add_option("matrix", minors_args.matrix, "Matrix file")->required();
  minors_cmd->add_option("-k,--order", minors_args.order, "Largest order (default: all)");
  minors_cmd->add_option("-o,--out", minors_args.out, "Output path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto* chosen = app.get_subcommands().front();
  Session session(chosen->get_name(), out, err, quiet);
  try {
    const unsigned threads = threads_from_env();
    if (chosen == analyze_cmd) return analyze(session, analyze_args);
    if (chosen == compare_cmd) return compare(session, compare_args, threads);
    if (chosen == witness_cmd) return witness(session, witness_args);
    if (chosen == apply_cmd) return apply(session, apply_args);
    if (chosen == reconstruct_cmd) return reconstruct(session, reconstruct_args);
    if (chosen == generate_cmd) return generate(session, generate_args);
    if (chosen == pu_cmd) return pu_check(session, pu_args, threads);
    return minors(session, minors_args, threads);
  } catch (const Error& e) {
    return session.input_error(e.what());
  }
}

}  // namespace skewminor::cli
