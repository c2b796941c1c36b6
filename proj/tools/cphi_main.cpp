// Command line front end: compute / verify / search / dissect with JSON or
// CSV output.  Exit codes: 0 success (or congruence holds), 1 internal error,
// 2 usage error, 3 counterexample found.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cphi/congruence.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

constexpr int kSchemaVersion = 1;

class Timer {
public:
  std::int64_t elapsed_ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cphi::UsageError("cannot open output file: " + out_path);
  out << payload;
  if (!out.flush()) throw std::runtime_error("failed to write output file: " + out_path);
}

std::string render_json(const ordered_json& record) { return record.dump(2) + "\n"; }

ordered_json make_record(const std::string& command, ordered_json parameters,
                         const std::string& method, std::int64_t elapsed_ms,
                         ordered_json results) {
  ordered_json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["parameters"] = std::move(parameters);
  record["method"] = method;
  record["elapsed_ms"] = elapsed_ms;
  record["results"] = std::move(results);
  return record;
}

/* CSV records mirror the JSON ones: parameters echoed as '#' comments, then
 * a mandatory header row, then the data. */
class CsvBuilder {
public:
  explicit CsvBuilder(const std::string& command) {
    comment("schema_version", std::to_string(kSchemaVersion));
    comment("command", command);
  }

  void comment(const std::string& key, const std::string& value) {
    lines_.push_back("# " + key + ": " + value);
  }
  void header(const std::string& h) { lines_.push_back(h); }
  void row(const std::string& r) { lines_.push_back(r); }

  std::string str() const {
    std::string out;
    for (const std::string& line : lines_) out += line + "\n";
    return out;
  }

private:
  std::vector<std::string> lines_;
};

const char* csv_bool(bool b) { return b ? "true" : "false"; }

struct OutputOptions {
  std::string format = "json";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts->out_path, "Write the record to this file instead of stdout");
}

/* ---------------------------------------------------------------- compute */

struct ComputeArgs {
  std::uint64_t colors = 0;
  int upto = -1;
  std::uint64_t mod = 0; /* 0: exact */
  std::string method;    /* empty: pick a default */
  OutputOptions out;
};

int run_compute(const ComputeArgs& a) {
  std::string method = a.method;
  if (method.empty()) method = (a.mod != 0 && cphi::is_prime(a.mod)) ? "descent" : "direct";
  if (method == "descent" && (a.mod == 0 || !cphi::is_prime(a.mod)))
    throw cphi::UsageError("the descent method requires --mod with a prime");

  Timer timer;
  std::vector<std::string> values;
  values.reserve(static_cast<std::size_t>(a.upto) + 1);
  if (a.mod == 0) {
    cphi::CphiTable<cphi::ExactRing> t =
        method == "theta" ? cphi::cphi_theta(a.colors, a.upto, cphi::ExactRing{})
                          : cphi::cphi_direct(a.colors, a.upto, cphi::ExactRing{});
    for (int n = 0; n <= a.upto; ++n) values.push_back(t.series[n].str());
  } else {
    cphi::CphiTable<cphi::ModRing> t =
        method == "descent" ? cphi::cphi_mod_descent(a.colors, a.upto, a.mod)
        : method == "theta" ? cphi::cphi_theta(a.colors, a.upto, cphi::ModRing(a.mod))
                            : cphi::cphi_direct(a.colors, a.upto, cphi::ModRing(a.mod));
    for (int n = 0; n <= a.upto; ++n) values.push_back(std::to_string(t.series[n]));
  }
  const std::int64_t elapsed = timer.elapsed_ms();

  if (a.out.format == "csv") {
    CsvBuilder csv("compute");
    csv.comment("colors", std::to_string(a.colors));
    csv.comment("upto", std::to_string(a.upto));
    csv.comment("mod", a.mod ? std::to_string(a.mod) : "-");
    csv.comment("method", method);
    csv.comment("elapsed_ms", std::to_string(elapsed));
    csv.header("n,value");
    for (int n = 0; n <= a.upto; ++n) csv.row(std::to_string(n) + "," + values[n]);
    emit(csv.str(), a.out.out_path);
  } else {
    ordered_json params;
    params["colors"] = a.colors;
    params["upto"] = a.upto;
    if (a.mod)
      params["mod"] = a.mod;
    else
      params["mod"] = nullptr;
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= a.upto; ++n) rows.push_back({{"n", n}, {"value", values[n]}});
    ordered_json results;
    results["values"] = std::move(rows);
    emit(render_json(make_record("compute", std::move(params), method, elapsed,
                                 std::move(results))),
         a.out.out_path);
  }
  return kExitOk;
}

/* ----------------------------------------------------------------- verify */

struct VerifyArgs {
  std::uint64_t prime = 0;
  std::uint64_t residue = 0;
  std::uint64_t colors = 0;
  std::uint64_t step = 0;
  std::int64_t family_upto = 0;
  std::int64_t n_upto = 0;
  std::string composite; /* "k,p,r;k,p,r;..." of lifted member families */
  std::string method = "descent";
  OutputOptions out;
  bool has_prime = false, has_residue = false, has_colors = false, has_step = false;
};

std::vector<cphi::CongruenceFamily> parse_composite(const std::string& text) {
  std::vector<cphi::CongruenceFamily> members;
  std::istringstream stream(text);
  std::string chunk;
  while (std::getline(stream, chunk, ';')) {
    std::uint64_t k = 0, p = 0, r = 0;
    char c1 = 0, c2 = 0;
    std::istringstream fields(chunk);
    if (!(fields >> k >> c1 >> p >> c2 >> r) || c1 != ',' || c2 != ',' ||
        (fields >> std::ws, !fields.eof()))
      throw cphi::UsageError("composite members must look like k,p,r;k,p,r");
    members.push_back(cphi::make_family(k, p, r, p));
  }
  return members;
}

ordered_json witness_json(const cphi::Counterexample& w, std::uint64_t class_mod,
                          std::uint64_t class_residue) {
  ordered_json j;
  j["colors"] = w.colors;
  j["n"] = (w.n - class_residue) / class_mod; /* scan index of the witness */
  j["point"] = w.n;
  j["residue"] = w.residue;
  j["modulus"] = w.modulus;
  return j;
}

std::string witness_csv(const std::optional<cphi::Counterexample>& w, std::uint64_t class_mod,
                        std::uint64_t class_residue) {
  if (!w) return ",,,,";
  std::ostringstream os;
  os << w->colors << "," << (w->n - class_residue) / class_mod << "," << w->n << ","
     << w->residue << "," << w->modulus;
  return os.str();
}

int run_verify(const VerifyArgs& a) {
  const bool composite = !a.composite.empty();
  if (composite && (a.has_prime || a.has_residue || a.has_colors || a.has_step))
    throw cphi::UsageError("--composite replaces --prime/--residue/--colors/--step");
  if (!composite && !(a.has_prime && a.has_residue && a.has_colors))
    throw cphi::UsageError("verify needs --prime, --residue and --colors (or --composite)");

  cphi::Method method;
  if (a.method == "direct")
    method = cphi::Method::Direct;
  else if (a.method == "descent")
    method = cphi::Method::Descent;
  else
    throw cphi::UsageError("verification method must be direct or descent");

  std::string kind, label, method_name = a.method;
  std::uint64_t class_mod = 0, class_residue = 0;
  ordered_json params;
  cphi::CompositeCongruence comp;

  Timer timer;
  cphi::Verdict verdict;
  if (composite) {
    const auto members = parse_composite(a.composite);
    comp = cphi::crt_combine(members);
    kind = "composite";
    method_name = "descent"; /* per-prime checks need the digit collapse */
    class_mod = comp.modulus;
    class_residue = comp.n_residue;
    std::ostringstream os;
    os << "cphi_{" << comp.modulus << "N+" << comp.k_residue << "}(" << comp.modulus << "n+"
       << comp.n_residue << ") = 0 (mod " << comp.modulus << ")";
    label = os.str();
    params["composite"] = a.composite;
    params["family_upto"] = a.family_upto;
    params["n_upto"] = a.n_upto;
    verdict = cphi::verify_composite(comp, a.family_upto, a.n_upto);
  } else {
    const cphi::CongruenceFamily family =
        cphi::make_family(a.colors, a.prime, a.residue, a.step);
    kind = a.step ? "family" : "single";
    class_mod = a.prime;
    class_residue = a.residue;
    label = family.label;
    params["colors"] = a.colors;
    params["prime"] = a.prime;
    params["residue"] = a.residue;
    params["step"] = a.step;
    params["family_upto"] = a.family_upto;
    params["n_upto"] = a.n_upto;
    verdict = cphi::verify_family(family, a.step ? a.family_upto : 0, a.n_upto, method);
  }
  const std::int64_t elapsed = timer.elapsed_ms();

  if (a.out.format == "csv") {
    CsvBuilder csv("verify");
    csv.comment("kind", kind);
    csv.comment("label", label);
    for (const auto& [key, value] : params.items())
      csv.comment(key, value.is_string() ? value.get<std::string>() : value.dump());
    if (composite) {
      csv.comment("modulus", std::to_string(comp.modulus));
      csv.comment("k_residue", std::to_string(comp.k_residue));
      csv.comment("n_residue", std::to_string(comp.n_residue));
    }
    csv.comment("method", method_name);
    csv.comment("elapsed_ms", std::to_string(elapsed));
    csv.header(
        "holds,checked_N_max,checked_n_max,"
        "witness_colors,witness_n,witness_point,witness_residue,witness_modulus");
    std::ostringstream os;
    os << csv_bool(verdict.holds) << "," << verdict.checked_N_max << ","
       << verdict.checked_n_max << ","
       << witness_csv(verdict.counterexample, class_mod, class_residue);
    csv.row(os.str());
    emit(csv.str(), a.out.out_path);
  } else {
    ordered_json results;
    results["kind"] = kind;
    results["label"] = label;
    if (composite) {
      results["modulus"] = comp.modulus;
      results["k_residue"] = comp.k_residue;
      results["n_residue"] = comp.n_residue;
    }
    results["holds"] = verdict.holds;
    results["checked_N_max"] = verdict.checked_N_max;
    results["checked_n_max"] = verdict.checked_n_max;
    results["counterexample"] =
        verdict.counterexample
            ? witness_json(*verdict.counterexample, class_mod, class_residue)
            : ordered_json(nullptr);
    emit(render_json(make_record("verify", std::move(params), method_name, elapsed,
                                 std::move(results))),
         a.out.out_path);
  }
  return verdict.holds ? kExitOk : kExitCounterexample;
}

/* ----------------------------------------------------------------- search */

struct SearchArgs {
  std::uint64_t prime = 0;
  std::uint64_t colors_from = 0;
  std::uint64_t colors_to = 0;
  std::int64_t n_scan = 0;
  OutputOptions out;
};

int run_search(const SearchArgs& a) {
  Timer timer;
  const auto candidates = cphi::search(a.prime, a.colors_from, a.colors_to, a.n_scan);
  const std::int64_t elapsed = timer.elapsed_ms();

  if (a.out.format == "csv") {
    CsvBuilder csv("search");
    csv.comment("prime", std::to_string(a.prime));
    csv.comment("colors_from", std::to_string(a.colors_from));
    csv.comment("colors_to", std::to_string(a.colors_to));
    csv.comment("n_scan", std::to_string(a.n_scan));
    csv.comment("evidence", "empirical");
    csv.comment("method", "descent");
    csv.comment("elapsed_ms", std::to_string(elapsed));
    csv.header("colors,residue");
    for (const auto& c : candidates)
      csv.row(std::to_string(c.colors) + "," + std::to_string(c.r));
    emit(csv.str(), a.out.out_path);
  } else {
    ordered_json params;
    params["prime"] = a.prime;
    params["colors_from"] = a.colors_from;
    params["colors_to"] = a.colors_to;
    params["n_scan"] = a.n_scan;
    ordered_json rows = ordered_json::array();
    for (const auto& c : candidates)
      rows.push_back({{"colors", c.colors}, {"residue", c.r}});
    ordered_json results;
    results["evidence"] = "empirical";
    results["candidates"] = std::move(rows);
    emit(render_json(make_record("search", std::move(params), "descent", elapsed,
                                 std::move(results))),
         a.out.out_path);
  }
  return kExitOk;
}

/* ---------------------------------------------------------------- dissect */

struct DissectArgs {
  std::uint64_t prime = 0;
  std::uint64_t residue = 0;
  std::uint64_t colors = 0;
  std::int64_t j_upto = 0;
  std::int64_t n_upto = 0;
  OutputOptions out;
};

int run_dissect(const DissectArgs& a) {
  Timer timer;
  const auto rows =
      cphi::verify_dissection_ingredients(a.colors, a.prime, a.residue, a.j_upto, a.n_upto);
  const std::int64_t elapsed = timer.elapsed_ms();

  if (a.out.format == "csv") {
    CsvBuilder csv("dissect");
    csv.comment("colors", std::to_string(a.colors));
    csv.comment("prime", std::to_string(a.prime));
    csv.comment("residue", std::to_string(a.residue));
    csv.comment("j_upto", std::to_string(a.j_upto));
    csv.comment("n_upto", std::to_string(a.n_upto));
    csv.comment("method", "direct");
    csv.comment("elapsed_ms", std::to_string(elapsed));
    csv.header("j,z_exponent,outside_window,vanishes,failure_n,failure_residue");
    for (const auto& row : rows) {
      std::ostringstream os;
      os << row.j << "," << row.z_exponent << "," << csv_bool(row.outside_window) << ","
         << csv_bool(row.vanishes) << ",";
      if (row.first_failure)
        os << row.first_failure->first << "," << row.first_failure->second;
      else
        os << ",";
      csv.row(os.str());
    }
    emit(csv.str(), a.out.out_path);
  } else {
    ordered_json params;
    params["colors"] = a.colors;
    params["prime"] = a.prime;
    params["residue"] = a.residue;
    params["j_upto"] = a.j_upto;
    params["n_upto"] = a.n_upto;
    ordered_json jrows = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      j["j"] = row.j;
      j["z_exponent"] = row.z_exponent;
      j["outside_window"] = row.outside_window;
      j["vanishes"] = row.vanishes;
      j["first_failure"] =
          row.first_failure
              ? ordered_json{{"n", row.first_failure->first},
                             {"residue", row.first_failure->second}}
              : ordered_json(nullptr);
      jrows.push_back(std::move(j));
    }
    ordered_json results;
    results["rows"] = std::move(jrows);
    emit(render_json(make_record("dissect", std::move(params), "direct", elapsed,
                                 std::move(results))),
         a.out.out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-colored generalized Frobenius partition numbers and their congruences"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand(
      "compute", "Tabulate cphi_k(0..T), exactly or modulo an integer");
  compute->add_option("--colors", compute_args.colors, "Color count k")->required();
  compute->add_option("--upto", compute_args.upto, "Largest n to tabulate")->required();
  compute->add_option("--mod", compute_args.mod, "Report residues modulo this value");
  compute->add_option("--method", compute_args.method,
                      "direct, descent (mod prime only) or theta");
  add_output_flags(compute, &compute_args.out);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check a congruence cphi_k(pn+r) = 0 (mod p), a family, or a composite");
  auto* p_opt = verify->add_option("--prime", verify_args.prime, "Prime modulus p");
  auto* r_opt = verify->add_option("--residue", verify_args.residue, "Residue class r");
  auto* k_opt = verify->add_option("--colors", verify_args.colors, "Base color count k");
  auto* s_opt = verify->add_option("--step", verify_args.step,
                                   "Color stride for a family (must equal the prime)");
  verify->add_option("--family-upto", verify_args.family_upto,
                     "Largest family index N to check");
  verify->add_option("--n-upto", verify_args.n_upto, "Largest scan index n to check")
      ->required();
  verify->add_option("--composite", verify_args.composite,
                     "Combine lifted members k,p,r;k,p,r;... and verify mod their product");
  verify->add_option("--method", verify_args.method, "direct or descent")
      ->capture_default_str();
  add_output_flags(verify, &verify_args.out);

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand(
      "search", "Scan color counts for residue classes that vanish mod a prime");
  search->add_option("--prime", search_args.prime, "Prime modulus p")->required();
  search->add_option("--colors-from", search_args.colors_from, "First color count")
      ->required();
  search->add_option("--colors-to", search_args.colors_to, "Last color count")->required();
  search->add_option("--n-scan", search_args.n_scan, "Scan depth (at least 25)")->required();
  add_output_flags(search, &search_args.out);

  DissectArgs dissect_args;
  CLI::App* dissect = app.add_subcommand(
      "dissect", "Report vanishing of the z^{p*j} product rows on a residue class");
  dissect->add_option("--prime", dissect_args.prime, "Prime modulus p")->required();
  dissect->add_option("--residue", dissect_args.residue, "Residue class r")->required();
  dissect->add_option("--colors", dissect_args.colors, "Color count k")->required();
  dissect->add_option("--j-upto", dissect_args.j_upto, "Largest |j| to report")->required();
  dissect->add_option("--n-upto", dissect_args.n_upto, "Largest scan index n")->required();
  add_output_flags(dissect, &dissect_args.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  verify_args.has_prime = p_opt->count() > 0;
  verify_args.has_residue = r_opt->count() > 0;
  verify_args.has_colors = k_opt->count() > 0;
  verify_args.has_step = s_opt->count() > 0;

  try {
    if (compute->parsed()) return run_compute(compute_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (search->parsed()) return run_search(search_args);
    return run_dissect(dissect_args);
  } catch (const cphi::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
