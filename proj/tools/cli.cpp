#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "eacp/classification.hpp"
#include "eacp/dynamics.hpp"
#include "eacp/elements.hpp"
#include "eacp/identities.hpp"
#include "eacp/operators.hpp"

namespace eacp::cli {

using nlohmann::json;

namespace {

std::string pointer(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

Rational parse_entry(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where, e.what());
    }
  }
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational::parse(std::to_string(v.get<std::uint64_t>()))
                                  : Rational(v.get<std::int64_t>());
  }
  throw ParseError(where, "expected a rational string or an integer, got " +
                              std::string(v.type_name()) +
                              (v.is_number_float() ? " (floats are not exact)" : ""));
}

AlgebraDocument parse_document(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  if (j.contains("algebra") && !j.contains("A")) {
    return parse_document(j.at("algebra"), where + "/algebra");
  }
  for (const char* key : {"n", "A", "b"}) {
    if (!j.contains(key)) throw ParseError(where + "/" + key, "missing field");
  }
  const json& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1) {
    throw ParseError(where + "/n", "n must be a positive integer");
  }
  AlgebraDocument doc;
  doc.n = jn.get<std::size_t>();
  const json& ja = j.at("A");
  if (!ja.is_array()) throw ParseError(where + "/A", "expected an array of rows");
  if (ja.size() != doc.n) {
    throw ParseError(where + "/A", "expected " + std::to_string(doc.n) + " rows, got " +
                                       std::to_string(ja.size()));
  }
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string row_at = pointer(where + "/A", i);
    if (!ja[i].is_array()) throw ParseError(row_at, "expected an array");
    if (ja[i].size() != doc.n) {
      throw ParseError(row_at, "ragged matrix: expected " + std::to_string(doc.n) +
                                   " entries, got " + std::to_string(ja[i].size()));
    }
    Vector row;
    for (std::size_t k = 0; k < ja[i].size(); ++k) {
      row.push_back(parse_entry(ja[i][k], pointer(row_at, k)));
    }
    doc.a.push_back(std::move(row));
  }
  const json& jb = j.at("b");
  if (!jb.is_array()) throw ParseError(where + "/b", "expected an array");
  if (jb.size() != doc.n) {
    throw ParseError(where + "/b", "expected " + std::to_string(doc.n) + " entries, got " +
                                       std::to_string(jb.size()));
  }
  for (std::size_t k = 0; k < jb.size(); ++k) {
    doc.b.push_back(parse_entry(jb[k], pointer(where + "/b", k)));
  }
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw ParseError(where + "/label", "expected a string");
    doc.label = j.at("label").get<std::string>();
  }
  return doc;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json strings(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json element_json(const AlgebraElement& x) { return strings(x.coords()); }

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(strings(m.row(r)));
  return out;
}

json affine_json(const AffineSolutionSet& s) {
  json out;
  out["empty"] = s.empty();
  out["particular"] = s.particular ? strings(*s.particular) : json(nullptr);
  json kernel = json::array();
  for (const auto& v : s.kernel_basis) kernel.push_back(strings(v));
  out["kernel_basis"] = std::move(kernel);
  return out;
}

json optional_index(const std::optional<unsigned>& k) {
  return k ? json(*k) : json(nullptr);
}

json verdict_json(const IdentityVerdict& v) {
  json out;
  out["holds"] = v.holds;
  out["method"] = to_string(v.method);
  if (v.witness) {
    json w;
    json args = json::array();
    for (const auto& a : v.witness->args) args.push_back(element_json(a));
    w["args"] = std::move(args);
    w["lhs"] = element_json(v.witness->lhs);
    w["rhs"] = element_json(v.witness->rhs);
    if (!v.witness->detail.empty()) w["detail"] = v.witness->detail;
    out["witness"] = std::move(w);
  }
  return out;
}

json signature_json(const InvariantSignature& s) {
  return {{"c2c2_zero", s.c2c2_zero}, {"nilpotent", s.nilpotent}, {"dim_c2", s.dim_c2}};
}

struct Options {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t samples = 32;
  std::size_t max_steps = 100;
  std::size_t max_bits = 4096;
  unsigned max_k = 6;
  std::string init;
  std::string mode = "exact";
  double tolerance = 1e-9;
};

json analyze(const Algebra& alg, const Options& opt, json& warnings) {
  json r;
  r["det_A"] = alg.det_a().to_string();
  r["bisexual_special_case"] = is_bisexual_special_case(alg);
  r["structural_associativity"] = satisfies_structural_associativity(alg);
  json ids;
  for (auto kind : all_identity_kinds()) {
    const auto v = check_identity(alg, {kind, 6}, opt.samples, opt.seed);
    if (v.holds && v.method == VerdictMethod::randomized) {
      warnings.push_back(to_string(kind) + ": holds on random samples only (not a proof)");
    }
    ids[to_string(kind)] = verdict_json(v);
  }
  r["identities"] = std::move(ids);
  r["triple_products_vanish"] = verdict_json(triple_products_vanish(alg, opt.samples, opt.seed));
  const auto idx = nilpotency_indices(alg, opt.max_k);
  r["indices"] = {{"max_k", opt.max_k},
                  {"solvability", optional_index(idx.solvability)},
                  {"right_nilpotency", optional_index(idx.right_nilpotency)},
                  {"nilpotency", optional_index(idx.nilpotency)}};
  const auto unit = find_unit(alg);
  r["unital"] = unit.unit.has_value();
  r["unit_certificate"] = {{"system", unit.certificate.system},
                           {"multipliers", strings(unit.certificate.multipliers)},
                           {"verified", unit.certificate.verify()},
                           {"contradiction", unit.certificate.contradiction()}};
  // Probe non-division with a = h_1 + ... + h_n + r.
  const AlgebraElement probe(Vector(alg.n(), Rational(1)), Rational(1));
  const auto dw = division_witness(alg, probe);
  r["division_algebra"] = false;
  r["division_witness"] = {{"a", element_json(probe)},
                           {"target", element_json(dw.target)},
                           {"rank_core", dw.rank_core},
                           {"rank_augmented", dw.rank_augmented},
                           {"confirmed_unsolvable", solve_ax_eq_b(alg, probe, dw.target).empty()}};
  r["left_span_dimension"] = left_span_dimension(alg);
  r["centroid_dimension"] = centroid_basis(alg).dim;
  r["centroidal"] = is_centroidal(alg);
  r["dim_c_squared"] = dim_c_squared(alg);
  json subs = json::array();
  for (std::size_t m = 1; m <= alg.n(); ++m) {
    if (is_coordinate_subalgebra(alg, m)) subs.push_back(m);
  }
  r["coordinate_subalgebras"] = std::move(subs);
  return r;
}

json idempotents_json(const Algebra& alg, json& warnings) {
  const auto rep = idempotents(alg);
  json r;
  r["det_poly"] = rep.det_poly.to_string("u");
  r["det_poly_coefficients"] = strings(rep.det_poly.coefficients());
  r["identically_zero_det"] = rep.identically_zero_det;
  json families = json::array();
  json points = json::array();
  points.push_back(element_json(AlgebraElement::zero(alg.n())));
  for (const auto& f : rep.rational_root_families) {
    json fam = affine_json(f.x_set);
    fam["u"] = f.u_star.to_string();
    families.push_back(std::move(fam));
    if (!f.x_set.empty() && f.x_set.kernel_basis.empty()) {
      points.push_back(element_json(AlgebraElement(*f.x_set.particular, f.u_star)));
    }
  }
  r["rational_root_families"] = std::move(families);
  r["isolated_idempotents"] = std::move(points);
  json intervals = json::array();
  for (const auto& iv : rep.irrational_root_intervals) {
    intervals.push_back({iv.lo.to_string(), iv.hi.to_string()});
  }
  if (!rep.irrational_root_intervals.empty()) {
    warnings.push_back("det(T_u) has irrational real roots; idempotents there are not "
                       "computed exactly");
  }
  r["irrational_root_intervals"] = std::move(intervals);
  return r;
}

json nilpotents_json(const Algebra& alg) {
  const auto rep = absolute_nilpotents(alg);
  json r;
  r["hyperplane_u0"] = rep.hyperplane_u0;
  r["det_A_nonzero"] = rep.det_a_nonzero;
  r["extra_set"] = affine_json(rep.extra_set);
  r["description"] =
      "{(x, 0)} union {(x, u) : u != 0, x in extra_set}";
  return r;
}

json classify_json(const Algebra& alg, json& warnings) {
  const auto c = classify(alg);
  json r;
  r["label"] = to_string(c.label);
  r["signature"] = signature_json(c.signature);
  r["pattern"] = c.pattern ? json(to_string(*c.pattern)) : json(nullptr);
  r["proportionality"] = c.proportionality ? json(c.proportionality->to_string()) : json(nullptr);
  if (c.change) {
    r["basis_change"] = matrix_json(c.change->map);
    r["verified"] = verify_isomorphism(canonical_algebra(c.label.kind, alg.n()), alg,
                                       c.change->map);
  } else {
    r["basis_change"] = nullptr;
  }
  if (c.label.kind == ClassKind::unclassified) warnings.push_back(to_string(c.label));
  for (const auto& note : c.notes) warnings.push_back(note);
  r["notes"] = c.notes;
  return r;
}

AlgebraElement parse_init(const std::string& text, std::size_t n) {
  Vector coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coords.push_back(Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      throw ParseError("--init", e.what());
    }
  }
  if (coords.size() != n + 1) {
    throw ParseError("--init", "expected " + std::to_string(n + 1) + " coordinates, got " +
                                   std::to_string(coords.size()));
  }
  return AlgebraElement::from_coords(coords);
}

json trajectory_json(const Algebra& alg, const Options& opt) {
  if (opt.init.empty()) throw ParseError("--init", "trajectory needs initial coordinates");
  TrajectoryOptions to;
  to.max_steps = opt.max_steps;
  to.max_bits = opt.max_bits;
  to.tolerance = opt.tolerance;
  to.mode = opt.mode == "float" ? TrajectoryMode::approximate : TrajectoryMode::exact;
  const auto rec = trajectory(alg, parse_init(opt.init, alg.n()), to);
  json r;
  r["status"] = to_string(rec.status);
  r["steps"] = rec.steps;
  r["cycle_length"] = rec.cycle_length ? json(*rec.cycle_length) : json(nullptr);
  json points = json::array();
  if (rec.mode == TrajectoryMode::exact) {
    r["mode"] = "exact";
    for (const auto& p : rec.exact_points) points.push_back(element_json(p));
  } else {
    r["mode"] = "float";
    r["numeric"] = "binary64";
    for (const auto& p : rec.float_points) points.push_back(p);
  }
  r["points"] = std::move(points);
  return r;
}

json centroid_json(const Algebra& alg) {
  const auto cb = centroid_basis(alg);
  json basis = json::array();
  for (const auto& m : cb.basis) basis.push_back(matrix_json(m));
  return {{"dimension", cb.dim}, {"centroidal", cb.dim == 1}, {"basis", std::move(basis)}};
}

json operators_json(const Algebra& alg, const Options& opt, json& warnings) {
  json maps;
  for (std::size_t k = 0; k < alg.dim(); ++k) {
    const std::string name = k < alg.n() ? "h" + std::to_string(k + 1) : "r";
    maps[name] = matrix_json(alg.basis_left_mul(k));
  }
  const auto rel = verify_composition_relations(alg, opt.samples, opt.seed);
  if (!rel.holds) {
    throw InternalInconsistency("composition relation violated: " + rel.violations.front());
  }
  const auto env = enveloping_dimension(alg, 2 * static_cast<unsigned>(alg.dim()) + 2);
  if (!env.stabilized) warnings.push_back("enveloping span did not stabilize within bound");
  json r;
  r["left_multiplications"] = std::move(maps);
  r["left_span_dimension"] = left_span_dimension(alg);
  r["composition_relations"] = {{"holds", rel.holds},
                                {"chains_checked", rel.chains_checked},
                                {"rooster_after_hen_checked", rel.rooster_after_hen},
                                {"hen_after_rooster_checked", rel.hen_after_rooster},
                                {"violations", rel.violations}};
  r["enveloping"] = {{"dimension", env.dim},
                     {"length", env.length},
                     {"stabilized", env.stabilized}};
  return r;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_structured()) return false;
  }
  return true;
}

void render_text(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    const std::string key = v.is_object() ? it.key() : "-";
    if (flat_array(x)) {
      os << pad << key << ": (";
      for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar_text(x[i]);
      os << ")\n";
    } else if (x.is_structured()) {
      os << pad << key << ":" << (x.empty() ? " (none)" : "") << "\n";
      render_text(os, x, indent + 2);
    } else {
      os << pad << key << ": " << scalar_text(x) << "\n";
    }
  }
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError(path, "cannot open input file");
    buf << file.rdbuf();
  }
  return buf.str();
}

}  // namespace

Algebra AlgebraDocument::to_algebra() const { return Algebra::from_rows(a, b); }

json AlgebraDocument::to_json() const {
  json j;
  j["n"] = n;
  json rows = json::array();
  for (const auto& row : a) rows.push_back(strings(row));
  j["A"] = std::move(rows);
  j["b"] = strings(b);
  if (label) j["label"] = *label;
  return j;
}

std::string AlgebraDocument::digest() const {
  json j = to_json();
  j.erase("label");
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::vector<AlgebraDocument> parse_algebras(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::string msg = e.what();
    throw ParseError(line_column(text, e.byte > 0 ? e.byte - 1 : 0),
                     "invalid JSON (" + msg.substr(msg.find(':') + 2) + ")");
  }
  std::vector<AlgebraDocument> docs;
  if (j.is_array()) {
    if (j.empty()) throw ParseError("/", "empty batch");
    for (std::size_t i = 0; i < j.size(); ++i) {
      docs.push_back(parse_document(j[i], pointer("", i)));
    }
  } else {
    docs.push_back(parse_document(j, ""));
  }
  for (std::size_t i = 0; i < docs.size(); ++i) {
    // Structural checks beyond the schema (n >= 1 etc.) happen here.
    try {
      (void)docs[i].to_algebra();
    } catch (const DimensionError& e) {
      throw ParseError(j.is_array() ? pointer("", i) : "/", e.what());
    }
  }
  return docs;
}

AlgebraDocument parse_algebra(std::string_view text) {
  auto docs = parse_algebras(text);
  if (docs.size() != 1) {
    throw ParseError("/", "expected a single algebra, got " + std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

int exit_code_for(const std::exception& e) {
  return dynamic_cast<const InternalInconsistency*>(&e) != nullptr ? 2 : 1;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact analysis of hen/rooster evolution algebras", "eacp"};
  app.require_subcommand(1);
  Options opt;
  std::string input;
  app.add_option("--input", input, "Algebra document (JSON); stdin when omitted");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  app.add_option("--samples", opt.samples, "Random samples per check")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", opt.max_steps, "Trajectory step budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-bits", opt.max_bits, "Per-coordinate bit cap (exact trajectories)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-k", opt.max_k, "Bound for nilpotency chains")
      ->check(CLI::Range(2U, 64U));
  app.fallthrough();

  app.add_subcommand("analyze", "Identities, indices, unit/division, operator dimensions");
  app.add_subcommand("idempotents", "Idempotent elements");
  app.add_subcommand("nilpotents", "Absolute nilpotent elements");
  app.add_subcommand("classify", "Isomorphism class in dimensions 2 and 3");
  auto* traj = app.add_subcommand("trajectory", "Iterate the evolution operator");
  traj->add_option("--init", opt.init, "Initial coordinates x_1,...,x_n,u")->required();
  traj->add_option("--steps", opt.max_steps, "Step budget")->check(CLI::PositiveNumber);
  traj->add_option("--mode", opt.mode, "Arithmetic")->check(CLI::IsMember({"exact", "float"}));
  traj->add_option("--tolerance", opt.tolerance, "Relative tolerance (float mode)")
      ->check(CLI::PositiveNumber);
  app.add_subcommand("centroid", "Centroid basis");
  app.add_subcommand("operators", "Left multiplications and their composition relations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const auto docs = parse_algebras(read_input(input, in));
    json reports = json::array();
    for (const auto& doc : docs) {
      const Algebra alg = doc.to_algebra();
      json warnings = json::array();
      json results;
      if (command == "analyze") results = analyze(alg, opt, warnings);
      else if (command == "idempotents") results = idempotents_json(alg, warnings);
      else if (command == "nilpotents") results = nilpotents_json(alg);
      else if (command == "classify") results = classify_json(alg, warnings);
      else if (command == "trajectory") results = trajectory_json(alg, opt);
      else if (command == "centroid") results = centroid_json(alg);
      else results = operators_json(alg, opt, warnings);
      json report;
      report["command"] = command;
      report["input_digest"] = doc.digest();
      report["algebra"] = doc.to_json();
      report["options"] = {{"seed", opt.seed}, {"samples", opt.samples}};
      report["results"] = std::move(results);
      report["warnings"] = std::move(warnings);
      reports.push_back(std::move(report));
    }
    if (opt.format == "machine") {
      out << (docs.size() == 1 ? reports.front() : reports).dump(2) << "\n";
    } else {
      for (const auto& report : reports) {
        out << "command: " << report["command"].get<std::string>() << "\n";
        out << "input: " << report["input_digest"].get<std::string>();
        if (report["algebra"].contains("label")) {
          out << " (" << report["algebra"]["label"].get<std::string>() << ")";
        }
        out << "\n";
        render_text(out, report["results"], 0);
        for (const auto& w : report["warnings"]) {
          out << "warning: " << w.get<std::string>() << "\n";
        }
      }
    }
    return 0;
  } catch (const std::exception& e) {
    const int code = exit_code_for(e);
    err << (code == 2 ? "internal invariant violated: " : "error: ") << e.what() << "\n";
    return code;
  }
}

}  // namespace eacp::cli
