// fedder-dp1: F-splitting checks and classification of degree-1 del Pezzo
// sextics over small finite fields.
//
// Subcommands:
//   check     parse a polynomial and run the Fedder membership test
//   classify  full report for a sextic equation (splitting, predicate, j,
//             configuration, smoothness, fiber spot-checks)
//   roots     divisor of roots of a binary form in s, t
//   census    sweep a coefficient space comparing Fedder with the closed-form
//             predicate
//
// Exit codes: 0 success, 1 mathematical error, 2 input/parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fdp/classify.hpp"

using nlohmann::json;

namespace {

constexpr const char* kSchema = "fedder-dp1/1";

struct CommonOpts {
  uint32_t p = 0;
  uint64_t field_order = 0;  // 0 = prime field
  bool json_output = false;
  uint64_t seed = 0;
  std::string input;  // inline expression
  std::string file;   // coefficient file
};

int degree_for_order(uint32_t p, uint64_t q) {
  if (q == 0) return 1;
  uint64_t pow = 1;
  for (int n = 1; n <= fdp::Field::kMaxDegree; ++n) {
    pow *= p;
    if (pow == q) return n;
    if (pow > q) break;
  }
  throw CLI::ValidationError("--field", "field order must be a power of --char within p^" +
                                            std::to_string(fdp::Field::kMaxDegree));
}

void apply_seed_env(uint64_t& seed) {
  if (const char* env = std::getenv("FEDDER_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') seed = static_cast<uint64_t>(v);
  }
}

std::string format_term(const fdp::AlphabetRef& a, const fdp::Term& t) {
  const fdp::MultiPoly one_term =
      fdp::MultiPoly::from_terms(t.c.field(), a, std::vector<fdp::Term>{t});
  return fdp::format_poly(one_term);
}

// coefficient file: lines "a1: c0 c1" .. "a6: c0 .. c6"; '#' comments; each
// form line optional (missing = zero form); coefficients are field elements in
// the u-polynomial rendering, written without spaces (e.g. 2*u+1)
fdp::DP1Equation read_coefficient_file(const std::string& path, fdp::FieldRef F) {
  std::ifstream in(path);
  if (!in) throw fdp::parse_error(0, "cannot open coefficient file '" + path + "'");
  fdp::DP1Equation eq = fdp::DP1Equation::zero(F);
  const std::map<std::string, std::pair<fdp::BinaryForm*, int>> forms = {
      {"a1", {&eq.a1, 1}}, {"a2", {&eq.a2, 2}}, {"a3", {&eq.a3, 3}},
      {"a4", {&eq.a4, 4}}, {"a6", {&eq.a6, 6}}};
  std::string line;
  std::size_t lineno = 0, byte_base = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t line_start = byte_base;
    byte_base += line.size() + 1;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head.back() == ':') head.pop_back();
    const auto it = forms.find(head);
    if (it == forms.end())
      throw fdp::parse_error(line_start,
                             where + "unknown form '" + head + "' (expected a1, a2, a3, a4, a6)");
    std::vector<fdp::FieldElem> coeffs;
    std::string tok;
    while (ls >> tok) coeffs.push_back(fdp::parse_elem(tok, F));
    const int want = it->second.second + 1;
    if (static_cast<int>(coeffs.size()) != want)
      throw fdp::parse_error(line_start, where + head + " needs exactly " + std::to_string(want) +
                                             " coefficients, got " +
                                             std::to_string(coeffs.size()));
    *it->second.first = fdp::BinaryForm::from_coeffs(F, std::move(coeffs));
  }
  return fdp::DP1Equation::make(eq.a1, eq.a2, eq.a3, eq.a4, eq.a6);
}

fdp::MultiPoly load_input_poly(const CommonOpts& o, fdp::FieldRef F, fdp::AlphabetRef a) {
  if (!o.file.empty()) return to_poly(read_coefficient_file(o.file, F));
  return fdp::parse_poly(o.input, F, a);
}

json invocation_json(const std::string& sub, const CommonOpts& o) {
  json inv{{"subcommand", sub}, {"char", o.p}};
  inv["field"] = o.field_order ? o.field_order : o.p;
  if (!o.input.empty()) inv["input"] = o.input;
  if (!o.file.empty()) inv["file"] = o.file;
  return inv;
}

const char* verdict_name(fdp::SmoothnessVerdict v) {
  switch (v) {
    case fdp::SmoothnessVerdict::smooth: return "smooth";
    case fdp::SmoothnessVerdict::singular: return "singular";
    default: return "undetermined";
  }
}

json smoothness_json(const fdp::SmoothnessReport& r) {
  json j{{"verdict", verdict_name(r.verdict)},
         {"method", r.method == fdp::SmoothnessMethod::exact ? "exact" : "point_search"},
         {"search_bound", r.search_bound},
         {"detail", r.detail}};
  j["witness"] = r.witness ? json(r.witness->to_string()) : json(nullptr);
  return j;
}

// ---------------------------------------------------------------- check ----

int run_check(const CommonOpts& o, const std::string& vars) {
  fdp::FieldRef F = fdp::make_field(o.p, degree_for_order(o.p, o.field_order));
  fdp::AlphabetRef alpha = fdp::Alphabet::dp1();
  if (!vars.empty()) {
    std::vector<std::string> names;
    std::istringstream vs(vars);
    std::string n;
    while (std::getline(vs, n, ',')) names.push_back(n);
    alpha = fdp::Alphabet::generic(names);
  }
  const fdp::MultiPoly f = load_input_poly(o, F, alpha);
  const fdp::FedderVerdict v = fdp::is_fsplit_hypersurface(f);
  if (o.json_output) {
    json doc{{"schema", kSchema},
             {"invocation", invocation_json("check", o)},
             {"characteristic", o.p},
             {"field", F->name()},
             {"f_split", v.f_split}};
    doc["witness"] = v.witness ? json(format_term(alpha, *v.witness)) : json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "field: " << F->name() << "\n"
              << "F-split: " << (v.f_split ? "yes" : "no") << "\n";
    if (v.witness)
      std::cout << "witness monomial of f^(p-1) outside (x_i^p): "
                << format_term(alpha, *v.witness) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------- classify ----

const char* predicate_text(uint32_t p) {
  switch (p) {
    case 2: return "a1 = 0";
    case 3: return "a2 = 0 and a4 in span{s^4, s^3*t, s*t^3, t^4} (after completing the square)";
    default:
      return "a4 = 0 and a6 in span{s^6, s^5*t, s*t^5, t^6} (after completing square and cube)";
  }
}

int run_classify(const CommonOpts& o, int search_bound) {
  fdp::FieldRef F = fdp::make_field(o.p, degree_for_order(o.p, o.field_order));
  const fdp::MultiPoly f = load_input_poly(o, F, fdp::Alphabet::dp1());
  const fdp::DP1Equation eq = fdp::equation_from_poly(f);
  const fdp::ClassificationReport rep = fdp::classify(eq, search_bound);
  const std::string label = fdp::delta_class_name(rep.configuration.label);
  if (o.json_output) {
    json inv = invocation_json("classify", o);
    inv["search_bound"] = search_bound;
    json doc{{"schema", kSchema},
             {"invocation", inv},
             {"characteristic", rep.p},
             {"field", F->name()},
             {"f_split", rep.fedder.f_split},
             {"predicate", rep.predicate},
             {"predicate_text", predicate_text(rep.p)},
             {"consistent", rep.consistent},
             {"configuration", {{"label", label}}},
             {"smoothness", smoothness_json(rep.smoothness)},
             {"fibers_checked", rep.fibers_checked},
             {"fibers_agree", rep.fibers_agree}};
    doc["fedder_witness"] = rep.fedder.witness
                                ? json(format_term(fdp::Alphabet::dp1(), *rep.fedder.witness))
                                : json(nullptr);
    doc["j"] = json{{"defined", rep.j.defined},
                    {"j_zero", rep.j.defined && rep.j.j_is_zero},
                    {"numerator", rep.j.numerator.to_string()},
                    {"delta", rep.j.delta.to_string()}};
    if (rep.configuration.witness)
      doc["configuration"]["witness"] = rep.configuration.witness->to_string();
    doc["normalized"] = json{{"a1", rep.normalized.a1.to_string()},
                             {"a2", rep.normalized.a2.to_string()},
                             {"a3", rep.normalized.a3.to_string()},
                             {"a4", rep.normalized.a4.to_string()},
                             {"a6", rep.normalized.a6.to_string()}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "characteristic: " << rep.p << " (field " << F->name() << ")\n"
              << "F-split: " << (rep.fedder.f_split ? "yes" : "no") << "\n";
    if (rep.fedder.witness)
      std::cout << "Fedder witness: " << format_term(fdp::Alphabet::dp1(), *rep.fedder.witness)
                << "\n";
    std::cout << "normal-form predicate [" << predicate_text(rep.p) << "]: "
              << (rep.predicate ? "satisfied" : "not satisfied") << "\n"
              << "consistent (not-F-split <=> predicate): " << (rep.consistent ? "yes" : "no")
              << "\n"
              << "j identically zero: "
              << (rep.j.defined ? (rep.j.j_is_zero ? "yes" : "no") : "undefined (delta = 0)")
              << "\n"
              << "delta: " << rep.j.delta.to_string() << "\n"
              << "configuration: " << label << "\n"
              << "smoothness: " << verdict_name(rep.smoothness.verdict) << " ("
              << (rep.smoothness.method == fdp::SmoothnessMethod::exact ? "exact"
                                                                        : "point search")
              << ", bound " << rep.smoothness.search_bound << ") -- " << rep.smoothness.detail
              << "\n";
    if (rep.smoothness.witness)
      std::cout << "singular point: " << rep.smoothness.witness->to_string() << "\n";
    std::cout << "smooth fibers spot-checked: " << rep.fibers_checked
              << ", supersingular <=> c4 = 0: " << (rep.fibers_agree ? "agreed" : "DISAGREED")
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- roots ----

int run_roots(const CommonOpts& o) {
  fdp::FieldRef F = fdp::make_field(o.p, degree_for_order(o.p, o.field_order));
  const fdp::MultiPoly f = fdp::parse_poly(o.input, F, fdp::Alphabet::dp1());
  if (f.is_zero()) throw fdp::math_error(fdp::errc::zero_input, "cannot take roots of 0");
  const int d = f.weighted_degree();
  const fdp::BinaryForm g = fdp::BinaryForm::from_poly(f, d, fdp::kVarS, fdp::kVarT);
  const fdp::DivisorP1 div = fdp::roots(g, o.seed);
  if (o.json_output) {
    json pts = json::array();
    for (const auto& [pt, m] : div.points)
      pts.push_back(json{{"point", pt.to_string()}, {"multiplicity", m}});
    json doc{{"schema", kSchema},
             {"invocation", invocation_json("roots", o)},
             {"characteristic", o.p},
             {"coefficient_field", F->name()},
             {"splitting_field", div.field->name()},
             {"degree", div.degree()},
             {"divisor", div.to_string()},
             {"points", pts}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "form of degree " << d << " over " << F->name() << "\n"
              << "splitting field: " << div.field->name() << "\n"
              << "divisor of roots: " << div.to_string() << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- census ----

int run_census(const CommonOpts& o, const std::string& space, const std::string& mode,
               int workers, uint64_t ceiling) {
  fdp::CensusSpec spec;
  spec.p = o.p;
  spec.field_degree = degree_for_order(o.p, o.field_order);
  spec.seed = o.seed;
  spec.workers = workers;
  if (ceiling) spec.exhaustive_ceiling = ceiling;
  if (space == "full") spec.space = fdp::CensusSpace::full;
  else if (space == "normalized") spec.space = fdp::CensusSpace::normalized;
  else if (space == "a6-only") spec.space = fdp::CensusSpace::a6_only;
  else throw CLI::ValidationError("--space", "expected full, normalized or a6-only");
  if (mode == "exhaustive") {
    spec.exhaustive = true;
  } else if (mode.rfind("sample=", 0) == 0) {
    spec.exhaustive = false;
    char* end = nullptr;
    spec.samples = std::strtoull(mode.c_str() + 7, &end, 10);
    if (!end || *end != '\0' || spec.samples == 0)
      throw CLI::ValidationError("--mode", "expected sample=<positive count>");
  } else {
    throw CLI::ValidationError("--mode", "expected exhaustive or sample=N");
  }

  const bool tty_progress = true;  // progress always goes to stderr, never stdout
  fdp::CensusProgress progress;
  if (tty_progress) {
    progress = [](uint64_t done, uint64_t total) {
      std::cerr << "\rcensus: " << done << "/" << total << " ("
                << (total ? 100.0 * static_cast<double>(done) / static_cast<double>(total) : 100.0)
                << "%)" << (done == total ? "\n" : "") << std::flush;
    };
  }
  const fdp::CensusSummary sum = fdp::census(spec, progress);

  if (o.json_output) {
    json inv = invocation_json("census", o);
    inv["space"] = space;
    inv["mode"] = mode;
    inv["workers"] = workers;
    inv["seed"] = o.seed;
    json mm = json::array();
    for (const auto& m : sum.mismatches)
      mm.push_back(json{{"index", m.index},
                        {"digits", m.digits},
                        {"f_split", m.f_split},
                        {"predicate", m.predicate},
                        {"equation", m.equation}});
    json doc{{"schema", kSchema},
             {"invocation", inv},
             {"characteristic", spec.p},
             {"field", fdp::make_field(spec.p, spec.field_degree)->name()},
             {"space", space},
             {"mode", mode},
             {"space_size", sum.space_size},
             {"scanned", sum.scanned},
             {"non_f_split", sum.non_f_split},
             {"mismatch_count", sum.mismatch_count},
             {"mismatches", mm},
             {"workers", workers},
             {"seed", o.seed},
             {"seconds", sum.seconds}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "census: char " << spec.p << ", field "
              << fdp::make_field(spec.p, spec.field_degree)->name() << ", space " << space
              << ", " << mode << "\n"
              << "scanned " << sum.scanned << " of " << sum.space_size
              << " possible instances in " << sum.seconds << " s (" << workers << " worker"
              << (workers == 1 ? "" : "s") << ")\n"
              << "non-F-split: " << sum.non_f_split << "\n"
              << "mismatches (Fedder vs predicate): " << sum.mismatch_count << "\n";
    for (const auto& m : sum.mismatches)
      std::cout << "  MISMATCH index " << m.index << ": f_split=" << m.f_split
                << " predicate=" << m.predicate << "  " << m.equation << "\n";
  }
  return sum.mismatch_count == 0 ? 0 : 1;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input) {
  cmd->add_option("--char,-p", o.p, "characteristic (prime)")->required();
  cmd->add_option("--field,-q", o.field_order,
                  "field order q = p^n (default: the prime field)");
  cmd->add_flag("--json", o.json_output, "emit a JSON document instead of prose");
  if (needs_input) {
    cmd->add_option("expression", o.input, "polynomial expression");
    cmd->add_option("--file", o.file, "coefficient file (lines 'a1: c0 c1', ...)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fedder-criterion F-splitting and degree-1 del Pezzo classification"};
  app.require_subcommand(1);

  CommonOpts check_o, classify_o, roots_o, census_o;
  std::string check_vars;
  int classify_bound = 6;
  std::string census_space = "normalized", census_mode = "exhaustive";
  int census_workers = 1;
  uint64_t census_ceiling = 0;

  CLI::App* check = app.add_subcommand("check", "Fedder F-splitting test for a hypersurface");
  add_common(check, check_o, true);
  check->add_option("--vars", check_vars,
                    "comma-separated variable names (default: s,t,x,y with weights 1,1,2,3)");

  CLI::App* classify = app.add_subcommand("classify", "full sextic classification report");
  add_common(classify, classify_o, true);
  classify->add_option("--search-bound", classify_bound,
                       "max residue-field degree for singular-point search");
  classify->add_option("--seed", classify_o.seed, "random seed (overridden by FEDDER_SEED)");

  CLI::App* roots_cmd = app.add_subcommand("roots", "divisor of roots of a binary form in s, t");
  add_common(roots_cmd, roots_o, true);
  roots_cmd->add_option("--seed", roots_o.seed, "random seed (overridden by FEDDER_SEED)");

  CLI::App* census_cmd =
      app.add_subcommand("census", "sweep a coefficient space: Fedder vs closed-form predicate");
  add_common(census_cmd, census_o, false);
  census_cmd->add_option("--space", census_space, "full | normalized | a6-only");
  census_cmd->add_option("--mode", census_mode, "exhaustive | sample=N");
  census_cmd->add_option("--workers", census_workers, "worker thread count");
  census_cmd->add_option("--seed", census_o.seed, "sampling seed (overridden by FEDDER_SEED)");
  census_cmd->add_option("--ceiling", census_ceiling,
                         "instance ceiling for exhaustive mode (default 3e8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      apply_seed_env(check_o.seed);
      return run_check(check_o, check_vars);
    }
    if (classify->parsed()) {
      apply_seed_env(classify_o.seed);
      return run_classify(classify_o, classify_bound);
    }
    if (roots_cmd->parsed()) {
      apply_seed_env(roots_o.seed);
      return run_roots(roots_o);
    }
    apply_seed_env(census_o.seed);
    return run_census(census_o, census_space, census_mode, census_workers, census_ceiling);
  } catch (const fdp::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const fdp::math_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
