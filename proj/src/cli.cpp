#include "ftcat/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

#include "ftcat/algebra_builders.hpp"
#include "ftcat/catalog.hpp"
#include "ftcat/error.hpp"
#include "ftcat/io.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

// Property failure reported through the exit status, with the report still printed.
struct Outcome {
  Json result = Json::object();
  Report findings;
  int status = 0;
};

class Digest {
 public:
  void add(const std::string& bytes) {
    for (unsigned char c : bytes) {
      h_ ^= c;
      h_ *= 1099511628211ULL;
    }
    h_ ^= 0xff;
    h_ *= 1099511628211ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 1469598103934665603ULL;
};

Json nf_json(const NFElement& x) { return real_to_json(to_real(x)); }

std::string dir_of(const std::string& path) { return std::filesystem::path(path).parent_path().string(); }

int simple_index(const BasedRing& r, const std::string& s) {
  for (int i = 0; i < r.rank(); ++i)
    if (r.labels()[z(i)] == s) return i;
  try {
    std::size_t used = 0;
    const int i = std::stoi(s, &used);
    if (used == s.size() && i >= 0 && i < r.rank()) return i;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::InvalidInput, "no simple object '" + s + "'");
}

GrVector parse_vector(const std::string& text, int n) {
  GrVector v;
  std::string t = text;
  for (char& c : t)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(t);
  std::int64_t x;
  while (in >> x) v.push_back(x);
  if (!in.eof() || static_cast<int>(v.size()) != n)
    fail(ErrorCode::InvalidInput, "object vector needs " + std::to_string(n) + " integers");
  return v;
}

Json labels_json(const BasedRing& r, const std::vector<int>& idx) {
  Json a = Json::array();
  for (int i : idx) a.push_back(r.labels()[z(i)]);
  return a;
}

Json kvector_json(const BasedRing& r, const KVector& v) {
  Json o = Json::object();
  for (int i = 0; i < r.rank(); ++i)
    if (v[z(i)]) o[r.labels()[z(i)]] = v[z(i)];
  return o;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["value"] = to_string(v.value);
  j["reason"] = v.reason;
  return j;
}

Json algebra_summary(const EquivariantAlgebra& a) {
  Json j;
  j["field"] = a.field.name();
  j["dim"] = a.dim;
  j["basis"] = a.basis;
  Json acts = Json::array();
  for (auto& g : a.actions) acts.push_back(g.name);
  j["actions"] = acts;
  Json ders = Json::array();
  for (auto& d : a.derivations) ders.push_back(d.name);
  j["derivations"] = ders;
  return j;
}

Outcome cmd_validate(const TensorCatData& c) {
  Outcome o;
  o.findings = validate_category(c);
  o.result["rank"] = c.ring.rank();
  o.result["valid"] = !has_errors(o.findings);
  o.status = has_errors(o.findings) ? 2 : 0;
  return o;
}

void require_valid(const TensorCatData& c) {
  const Report r = validate_category(c);
  for (auto& f : r)
    if (f.severity == "error") fail(ErrorCode::InvalidInput, "category data invalid: " + f.code + ": " + f.message);
}

Outcome cmd_fpdim(const TensorCatData& data, const std::string& object) {
  require_valid(data);
  const TensorCategory c(data);
  Outcome o;
  o.result["category"] = nf_json(fpdim_category(c));
  Json simples = Json::object();
  for (int i = 0; i < c.rank(); ++i) simples[c.ring().labels()[z(i)]] = nf_json(c.fpdims().d[z(i)]);
  o.result["simples"] = simples;
  if (!object.empty()) o.result["object"] = nf_json(fpdim_object(c, parse_vector(object, c.rank())));
  return o;
}

Outcome cmd_regular(const TensorCatData& data) {
  require_valid(data);
  const TensorCategory c(data);
  Outcome o;
  const NFVector r = regular_object(c);
  Json coeffs = Json::object();
  for (int i = 0; i < c.rank(); ++i) coeffs[c.ring().labels()[z(i)]] = nf_json(r[z(i)]);
  o.result["projective_coefficients"] = coeffs;
  o.result["dimension"] = nf_json(fpdim_category(c));
  return o;
}

Outcome cmd_distinguished(const TensorCatData& data) {
  require_valid(data);
  const TensorCategory c(data);
  Outcome o;
  const Distinguished d = distinguished(c);
  o.result["rho"] = c.ring().labels()[z(d.rho)];
  Json dm = Json::object();
  for (int i = 0; i < c.rank(); ++i) dm[c.ring().labels()[z(i)]] = c.ring().labels()[z(d.D[z(i)])];
  o.result["D"] = dm;
  o.result["unimodular"] = d.rho == c.ring().unit_index();
  o.findings = check_distinguished(c, d);
  return o;
}

Outcome cmd_cartan(const TensorCatData& data) {
  require_valid(data);
  Outcome o;
  const CartanRank cr = cartan_rank(data);
  o.result["size"] = cr.size;
  o.result["rank_q"] = cr.rank_q;
  if (cr.rank_p) o.result["rank_p"] = *cr.rank_p;
  o.result["ground_rank"] = cr.ground_rank();
  o.result["degenerate"] = cr.ground_rank() < cr.size;
  o.findings = cr.findings;
  return o;
}

Outcome cmd_proj_fusion(const TensorCatData& data, const std::string& i, const std::string& j) {
  require_valid(data);
  Outcome o;
  const KVector v = proj_fusion(data, simple_index(data.ring, i), simple_index(data.ring, j));
  o.result["projectives"] = kvector_json(data.ring, v);
  return o;
}

Outcome cmd_functor_check(const FunctorData& f) {
  Outcome o;
  o.findings = validate_functor(f);
  o.result["valid"] = !has_errors(o.findings);
  if (has_errors(o.findings)) {
    o.status = has_code(o.findings, "shape") || has_code(o.findings, "negative_entry") ? 2 : 1;
    return o;
  }
  o.result["surjective"] = verdict_json(is_surjective(f));
  o.result["injective"] = verdict_json(is_injective(f));
  o.result["image"] = labels_json(f.target.ring(), image_closure(f).labels);
  return o;
}

Outcome cmd_freeness(const FunctorData& f) {
  Outcome o;
  const Freeness fr = freeness_check(f);
  o.result["ratio"] = nf_json(fr.ratio);
  o.result["ok"] = fr.ok;
  const IntegerFreeness in = integer_freeness(f);
  o.result["integer"] = in.integer;
  if (in.integer) o.result["free_rank"] = in.rank.get_str();
  o.findings = fr.findings;
  o.status = fr.ok ? 0 : 1;
  return o;
}

Outcome cmd_lagrange(const TensorCatData& sub, const TensorCatData& amb, const Json& map) {
  require_valid(sub);
  require_valid(amb);
  const Json& m = map.is_object() && map.contains("map") ? map.at("map") : map;
  if (!m.is_array()) fail(ErrorCode::InvalidInput, "map must be a list of ambient simples");
  std::vector<int> embed;
  for (auto& x : m) embed.push_back(x.is_string() ? simple_index(amb.ring, x.get<std::string>()) : x.get<int>());
  Outcome o;
  const Lagrange l = lagrange(TensorCategory(sub), TensorCategory(amb), embed);
  o.result["quotient"] = nf_json(l.quotient);
  o.result["quotient_minpoly"] = to_string(minimal_polynomial(l.quotient));
  o.result["integral"] = l.integral;
  o.findings = l.findings;
  o.status = l.integral ? 0 : 1;
  return o;
}

Outcome cmd_nimrep(const TensorCatData& data, int max_rank, bool no_duality) {
  const Report rr = validate_ring(data.ring);
  for (auto& f : rr)
    if (f.severity == "error") fail(ErrorCode::InvalidInput, "ring data invalid: " + f.code);
  Outcome o;
  EnumerateOptions opt;
  opt.duality = !no_duality;
  const auto mods = enumerate(data.ring, max_rank, opt);
  Json list = Json::array();
  for (auto& m : mods) list.push_back(module_to_json(m));
  o.result["count"] = mods.size();
  o.result["modules"] = list;
  return o;
}

Outcome cmd_census(const std::string& spec) {
  Outcome o;
  if (spec.rfind("taft:", 0) == 0) {
    const std::string arg = spec.substr(5);
    if (arg.empty() || !std::all_of(arg.begin(), arg.end(), ::isdigit)) fail(ErrorCode::InvalidInput, "taft census needs an integer");
    const int l = std::stoi(arg);
    Json entries = Json::array();
    std::vector<int> ranks;
    for (auto& e : taft_module_census(l)) {
      Json j;
      j["description"] = e.description;
      j["simple_count"] = e.simple_count;
      j["parameter_dimension"] = e.parameter_dimension;
      entries.push_back(j);
      ranks.push_back(e.simple_count);
    }
    o.result["entries"] = entries;
    const auto mods = enumerate(build_taft(l).ring, l, true);
    Json mr = Json::array();
    for (auto& m : mods) mr.push_back(m.rank);
    o.result["nimrep_ranks"] = mr;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    o.result["census_match"] = census_match(mods, ranks);
    o.status = census_match(mods, ranks) ? 0 : 1;
    return o;
  }
  if (spec.rfind("repg:", 0) == 0) {
    std::string arg = spec.substr(5);
    int p = 0;
    const auto colon = arg.find(':');
    if (colon != std::string::npos) {
      const std::string c = arg.substr(colon + 1);
      if (c.empty() || !std::all_of(c.begin(), c.end(), ::isdigit)) fail(ErrorCode::InvalidInput, "characteristic must be an integer");
      p = std::stoi(c);
      arg = arg.substr(0, colon);
    }
    const RepGCount rc = count_repG_module_cats(parse_group(arg), p);
    o.result["total"] = rc.total;
    Json items = Json::array();
    for (auto& [h, n] : rc.items) {
      Json j;
      j["subgroup"] = h;
      j["classes"] = n;
      items.push_back(j);
    }
    o.result["subgroups"] = items;
    return o;
  }
  fail(ErrorCode::InvalidInput, "census spec must be taft:L or repg:SPEC[:CHAR]");
}

Outcome cmd_simplecheck(const Json& spec) {
  const EquivariantAlgebra a = algebra_from_json(spec);
  Outcome o;
  o.result["algebra"] = algebra_summary(a);
  o.findings = validate_algebra(a);
  if (has_errors(o.findings)) {
    o.status = 2;
    return o;
  }
  const SimpleResult s = is_simple_from_right(a);
  o.result["simple"] = s.simple;
  o.result["closure_dim"] = s.closure_dim;
  o.result["message"] = s.message;
  if (s.witness) {
    Json w = Json::array();
    for (auto& v : *s.witness) w.push_back(scalar_vector_to_json(a.field, v));
    o.result["witness"] = w;
  }
  const int p = a.field.characteristic();
  if (p == 0 || p > a.dim) o.result["semisimple"] = semisimplicity_test(a);
  const Fingerprint fp = fingerprint(a);
  Json fj;
  fj["dim"] = fp.dim;
  fj["center_dim"] = fp.center_dim;
  fj["trace_rank"] = fp.trace_rank;
  if (fp.lambda) fj["lambda"] = a.field.to_string(*fp.lambda);
  o.result["fingerprint"] = fj;
  o.status = s.simple ? 0 : 1;
  return o;
}

Outcome cmd_filtration(const Json& spec) {
  const EquivariantAlgebra a = algebra_from_json(spec);
  Outcome o;
  o.result["algebra"] = algebra_summary(a);
  const Report v = validate_algebra(a);
  if (has_errors(v)) {
    o.findings = v;
    o.status = 2;
    return o;
  }
  const Filtration f = compute_filtration(a);
  o.result["dims"] = f.dims;
  if (f.a0_simple) o.result["a0_simple"] = *f.a0_simple;
  o.findings = f.findings;
  if (spec.value("builder", std::string()) == "taft_A") {
    const Report d = verify_taft_derivative_powers(a, spec.at("l").get<int>());
    o.result["derivative_powers_verified"] = d.empty();
    o.findings.insert(o.findings.end(), d.begin(), d.end());
  }
  sort_findings(o.findings);
  o.status = has_errors(o.findings) ? 1 : 0;
  return o;
}

void print_findings(std::ostream& err, const Report& r) {
  for (auto& f : r) {
    err << f.severity << " " << f.code << ": " << f.message;
    if (!f.witness.empty()) {
      err << " [";
      for (std::size_t i = 0; i < f.witness.size(); ++i) err << (i ? "," : "") << f.witness[i];
      err << "]";
    }
    err << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial and exact-algebra checks for finite tensor categories", "ftcat"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("--verbose", verbose, "Also print findings to standard error");

  std::string file, file2, file3, object, name, a1, a2;
  int max_rank = 0;
  bool no_duality = false;
  std::function<Outcome()> action;
  std::vector<std::string> inputs;
  std::string command;

  auto category_cmd = [&](const char* n, const char* help, std::function<Outcome(const TensorCatData&)> fn) {
    auto* sc = app.add_subcommand(n, help);
    sc->add_option("FILE", file, "Category JSON file or catalog name")->required();
    sc->callback([&, fn] {
      inputs = {file};
      action = [&, fn] { return fn(category_reference(Json(file), "")); };
    });
    return sc;
  };
  category_cmd("validate", "Check category data", cmd_validate);
  auto* fp = category_cmd("fpdim", "Frobenius-Perron dimensions", [&](const TensorCatData& c) { return cmd_fpdim(c, object); });
  fp->add_option("--object", object, "Object as a vector of simple multiplicities");
  category_cmd("regular", "Regular object", cmd_regular);
  category_cmd("distinguished", "Distinguished invertible object", cmd_distinguished);
  category_cmd("cartan", "Cartan matrix rank", cmd_cartan);
  auto* pf = category_cmd("proj-fusion", "Decompose P_i (x) P_j",
                          [&](const TensorCatData& c) { return cmd_proj_fusion(c, a1, a2); });
  pf->add_option("I", a1)->required();
  pf->add_option("J", a2)->required();

  auto functor_cmd = [&](const char* n, const char* help, Outcome (*fn)(const FunctorData&)) {
    auto* sc = app.add_subcommand(n, help);
    sc->add_option("F", file, "Functor JSON")->required();
    sc->callback([&, fn] {
      inputs = {file};
      action = [&, fn] { return fn(functor_from_json(load_json(file), dir_of(file))); };
    });
  };
  functor_cmd("functor-check", "Validate functor data and classify it", cmd_functor_check);
  functor_cmd("freeness", "Categorical freeness ratio", cmd_freeness);

  auto* lg = app.add_subcommand("lagrange", "Lagrange quotient for a fusion subcategory");
  lg->add_option("SUB", file)->required();
  lg->add_option("AMB", file2)->required();
  lg->add_option("MAP", file3)->required();
  lg->callback([&] {
    inputs = {file, file2, file3};
    action = [&] {
      return cmd_lagrange(category_reference(Json(file), ""), category_reference(Json(file2), ""), load_json(file3));
    };
  });

  auto* nr = app.add_subcommand("nimrep", "Enumerate irreducible NIM-reps");
  nr->add_option("FILE", file)->required();
  nr->add_option("--max-rank", max_rank)->required();
  nr->add_flag("--no-duality", no_duality);
  nr->callback([&] {
    inputs = {file};
    action = [&] { return cmd_nimrep(category_reference(Json(file), ""), max_rank, no_duality); };
  });

  auto* ex = app.add_subcommand("example", "Print a catalog category as JSON");
  ex->add_option("NAME", name)->required();
  ex->callback([&] { action = nullptr; });

  auto* cs = app.add_subcommand("census", "Module category census");
  cs->add_option("SPEC", name)->required();
  cs->callback([&] { action = [&] { return cmd_census(name); }; });

  auto* sp = app.add_subcommand("simplecheck", "Certify simplicity from the right");
  sp->add_option("SPEC", file)->required();
  sp->callback([&] {
    inputs = {file};
    action = [&] { return cmd_simplecheck(load_json(file)); };
  });
  auto* ft = app.add_subcommand("filtration", "Derivation filtration and its properties");
  ft->add_option("SPEC", file)->required();
  ft->callback([&] {
    inputs = {file};
    action = [&] { return cmd_filtration(load_json(file)); };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  command = app.get_subcommands().front()->get_name();

  Json report;
  report["command"] = command;
  int status = 0;
  try {
    if (command == "example") {
      out << category_to_json(build_named(name)).dump(2) << "\n";
      return 0;
    }
    Digest dg;
    dg.add(command);
    for (auto& a : args) dg.add(a);
    for (auto& p : inputs)
      if (std::filesystem::is_regular_file(p)) dg.add(read_file(p));
    report["inputs_digest"] = dg.hex();
    Outcome o = action();
    sort_findings(o.findings);
    report["result"] = o.result;
    report["findings"] = findings_to_json(o.findings);
    status = o.status;
    if (verbose) print_findings(err, o.findings);
  } catch (const Error& e) {
    status = is_resource_cap(e.code()) ? 3 : e.code() == ErrorCode::NotSurjective ? 1 : 2;
    report["error"] = {{"code", std::string(error_name(e.code()))}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    status = 2;
    report["error"] = {{"code", "InvalidInput"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  out << report.dump(2) << "\n";
  return status;
}

}  // namespace ftcat
