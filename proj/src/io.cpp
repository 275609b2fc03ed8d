#include "ftcat/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ftcat/algebra_builders.hpp"
#include "ftcat/catalog.hpp"
#include "ftcat/error.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

int label_index(const std::vector<std::string>& labels, const Json& v) {
  if (v.is_number_integer()) {
    const int i = v.get<int>();
    if (i < 0 || i >= static_cast<int>(labels.size())) fail(ErrorCode::IndexOutOfRange, "index out of range");
    return i;
  }
  if (!v.is_string()) fail(ErrorCode::InvalidInput, "expected a label");
  const std::string s = v.get<std::string>();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return static_cast<int>(i);
  fail(ErrorCode::InvalidInput, "unknown label '" + s + "'");
}

IntMatrix int_matrix(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "expected a matrix");
  IntMatrix m;
  for (auto& row : j) {
    if (!row.is_array()) fail(ErrorCode::InvalidInput, "expected a matrix row");
    std::vector<std::int64_t> r;
    for (auto& x : row) {
      if (!x.is_number_integer()) fail(ErrorCode::InvalidInput, "matrix entries must be integers");
      r.push_back(x.get<std::int64_t>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

Scalar scalar(const ExactField& f, const Json& j) {
  if (j.is_number_integer()) return f.from_rational(Rational(j.get<long>()));
  if (j.is_string()) return f.parse(j.get<std::string>());
  fail(ErrorCode::InvalidInput, "expected a scalar (integer or string)");
}

SMatrix scalar_matrix(const ExactField& f, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "expected a matrix");
  SMatrix m;
  for (auto& row : j) {
    if (!row.is_array()) fail(ErrorCode::InvalidInput, "expected a matrix row");
    SVector r;
    for (auto& x : row) r.push_back(scalar(f, x));
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<int> word(const std::vector<std::string>& gens, const Json& j) {
  if (!j.is_string()) fail(ErrorCode::InvalidInput, "words are strings");
  const std::string s = j.get<std::string>();
  if (s.empty() || s == "1") return {};
  return parse_word(gens, s);
}

std::vector<Term> terms(const ExactField& f, const std::vector<std::string>& gens, const Json& j) {
  std::vector<Term> out;
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "expected a list of [coeff, word] terms");
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 2) fail(ErrorCode::InvalidInput, "terms are [coeff, word] pairs");
    out.push_back({scalar(f, t[0]), word(gens, t[1])});
  }
  return out;
}

std::vector<int> int_list(const Json& j) {
  std::vector<int> out;
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "expected a list of integers");
  for (auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorCode::InvalidInput, "expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

SuperData super_data(const ExactField& f, const Json& j) {
  SuperData s;
  s.group = parse_group(need(j, "group").get<std::string>());
  s.u = j.value("u", 0);
  if (j.contains("chi")) s.chi = int_list(j.at("chi"));
  s.h = j.contains("subgroup") ? int_list(j.at("subgroup")) : std::vector<int>{0};
  s.w_dim = j.value("w_dim", 0);
  if (j.contains("y")) s.y = scalar_matrix(f, j.at("y"));
  if (j.contains("b")) s.b = scalar_matrix(f, j.at("b"));
  if (j.contains("cocycle")) {
    const Json& c = j.at("cocycle");
    s.psi = c.is_string() && c.get<std::string>() == "standard" ? standard_cocycle_2x2(f) : scalar_matrix(f, c);
  }
  if (j.contains("rep")) {
    const Json& r = j.at("rep");
    if (r.is_string() && r.get<std::string>() == "pauli") s.rep = pauli_representation(f);
    else
      for (auto& m : r) s.rep.push_back(scalar_matrix(f, m));
  }
  return s;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::InvalidInput, "malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json load_json(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::InvalidInput, path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

Json ring_to_json(const BasedRing& r) {
  const auto& lab = r.labels();
  Json j;
  j["labels"] = lab;
  if (r.single_unit()) j["unit"] = lab[z(r.unit()[0])];
  else {
    Json u = Json::array();
    for (int i : r.unit()) u.push_back(lab[z(i)]);
    j["unit"] = u;
  }
  Json star = Json::object();
  for (int i = 0; i < r.rank(); ++i) star[lab[z(i)]] = lab[z(r.star(i))];
  j["star"] = star;
  Json fusion = Json::object();
  for (int a = 0; a < r.rank(); ++a)
    for (int b = 0; b < r.rank(); ++b) {
      Json entry = Json::object();
      for (int k = 0; k < r.rank(); ++k)
        if (r.N(a, b, k) != 0) entry[lab[z(k)]] = r.N(a, b, k);
      if (!entry.empty()) fusion[lab[z(a)] + "|" + lab[z(b)]] = entry;
    }
  j["fusion"] = fusion;
  return j;
}

BasedRing ring_from_json(const Json& j) {
  const Json& jl = need(j, "labels");
  if (!jl.is_array() || jl.empty()) fail(ErrorCode::InvalidInput, "labels must be a nonempty list");
  std::vector<std::string> labels;
  for (auto& l : jl) {
    if (!l.is_string()) fail(ErrorCode::InvalidInput, "labels must be strings");
    const std::string s = l.get<std::string>();
    if (s.find('|') != std::string::npos) fail(ErrorCode::InvalidInput, "labels may not contain '|'");
    if (std::find(labels.begin(), labels.end(), s) != labels.end()) fail(ErrorCode::InvalidInput, "duplicate label '" + s + "'");
    labels.push_back(s);
  }
  const int n = static_cast<int>(labels.size());
  std::vector<int> unit;
  const Json& ju = need(j, "unit");
  if (ju.is_array())
    for (auto& u : ju) unit.push_back(label_index(labels, u));
  else
    unit.push_back(label_index(labels, ju));
  std::vector<int> star(z(n));
  for (int i = 0; i < n; ++i) star[z(i)] = i;
  if (j.contains("star")) {
    const Json& js = j.at("star");
    if (!js.is_object()) fail(ErrorCode::InvalidInput, "star must be an object");
    for (auto& [k, v] : js.items()) star[z(label_index(labels, Json(k)))] = label_index(labels, v);
  }
  std::vector<std::int64_t> fusion(z(n) * z(n) * z(n), 0);
  const Json& jf = need(j, "fusion");
  if (!jf.is_object()) fail(ErrorCode::InvalidInput, "fusion must be an object");
  for (auto& [key, entry] : jf.items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) fail(ErrorCode::InvalidInput, "fusion keys look like 'i|j'");
    const int a = label_index(labels, Json(key.substr(0, bar))), b = label_index(labels, Json(key.substr(bar + 1)));
    if (!entry.is_object()) fail(ErrorCode::InvalidInput, "fusion entries must be objects");
    for (auto& [k, v] : entry.items()) {
      if (!v.is_number_integer()) fail(ErrorCode::InvalidInput, "fusion coefficients must be integers");
      fusion[(z(a) * z(n) + z(b)) * z(n) + z(label_index(labels, Json(k)))] = v.get<std::int64_t>();
    }
  }
  return BasedRing(labels, unit, fusion, star);
}

Json category_to_json(const TensorCatData& c) {
  Json j = ring_to_json(c.ring);
  j["cartan"] = c.cartan;
  j["characteristic"] = c.characteristic;
  if (c.socle) {
    Json s = Json::object();
    for (std::size_t i = 0; i < c.socle->size(); ++i)
      s[c.ring.labels()[i]] = c.ring.labels()[z((*c.socle)[i])];
    j["socle"] = s;
  }
  if (c.pivotal_trace_exists) j["pivotal_trace_exists"] = *c.pivotal_trace_exists;
  return j;
}

TensorCatData category_from_json(const Json& j) {
  TensorCatData c;
  c.ring = ring_from_json(j);
  const int n = c.ring.rank();
  if (j.contains("cartan")) c.cartan = int_matrix(j.at("cartan"));
  else {
    c.cartan.assign(z(n), std::vector<std::int64_t>(z(n), 0));
    for (int i = 0; i < n; ++i) c.cartan[z(i)][z(i)] = 1;
  }
  c.characteristic = j.value("characteristic", 0);
  if (j.contains("socle")) {
    const Json& js = j.at("socle");
    if (!js.is_object()) fail(ErrorCode::InvalidInput, "socle must be an object");
    std::vector<int> s(z(n), -1);
    for (auto& [k, v] : js.items()) s[z(label_index(c.ring.labels(), Json(k)))] = label_index(c.ring.labels(), v);
    if (std::count(s.begin(), s.end(), -1)) fail(ErrorCode::InvalidInput, "socle must name every simple");
    c.socle = s;
  }
  if (j.contains("pivotal_trace_exists")) c.pivotal_trace_exists = j.at("pivotal_trace_exists").get<bool>();
  return c;
}

TensorCatData category_reference(const Json& j, const std::string& base_dir) {
  if (j.is_object()) return category_from_json(j);
  if (!j.is_string()) fail(ErrorCode::InvalidInput, "category must be an object, a catalog name or a path");
  const std::string s = j.get<std::string>();
  if (is_catalog_name(s)) return build_named(s);
  std::filesystem::path p(s);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return category_from_json(load_json(p.string()));
}

FunctorData functor_from_json(const Json& j, const std::string& base_dir) {
  FunctorData f{TensorCategory(category_reference(need(j, "source"), base_dir)),
                TensorCategory(category_reference(need(j, "target"), base_dir)), int_matrix(need(j, "A")), {}, {}, false};
  if (j.contains("B")) f.B = int_matrix(j.at("B"));
  if (j.contains("image_cartan")) f.image_cartan = int_matrix(j.at("image_cartan"));
  f.image_semisimple = j.value("image_semisimple", false);
  return f;
}

Json module_to_json(const ZPlusModule& m) {
  Json j;
  j["rank"] = m.rank;
  j["matrices"] = m.action;
  return j;
}

ZPlusModule module_from_json(const Json& j) {
  ZPlusModule m;
  m.rank = need(j, "rank").get<int>();
  for (auto& mat : need(j, "matrices")) m.action.push_back(int_matrix(mat));
  return m;
}

Json real_to_json(const RealAlgebraic& a, int digits) {
  Json j;
  j["minpoly"] = to_string(a.minpoly());
  if (a.is_rational()) j["interval"] = {to_string(a.rational_value()), to_string(a.rational_value())};
  else j["interval"] = {to_string(a.lo()), to_string(a.hi())};
  j["decimal"] = to_decimal(a, digits);
  return j;
}

Json findings_to_json(const Report& r) {
  Json out = Json::array();
  for (const Finding& f : r) {
    Json j;
    j["severity"] = f.severity;
    j["code"] = f.code;
    j["message"] = f.message;
    j["witness"] = f.witness;
    out.push_back(j);
  }
  return out;
}

Json scalar_vector_to_json(const ExactField& f, const SVector& v) {
  Json out = Json::array();
  for (auto& x : v) out.push_back(f.to_string(x));
  return out;
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.field = ExactField::parse_name(j.value("field", std::string("Q")));
  const ExactField& f = p.field;
  for (auto& g : need(j, "generators")) p.generators.push_back(g.get<std::string>());
  const auto& gens = p.generators;
  const int ng = static_cast<int>(gens.size());
  if (j.contains("relations"))
    for (auto& r : j.at("relations")) {
      const auto lhs = word(gens, need(r, "lhs"));
      if (lhs.empty()) fail(ErrorCode::InvalidInput, "relation with an empty left side");
      p.rules.push_back({lhs, terms(f, gens, need(r, "rhs"))});
    }
  std::vector<std::string> action_names;
  if (j.contains("actions"))
    for (auto& a : j.at("actions")) {
      ActionSpec as;
      as.name = need(a, "name").get<std::string>();
      as.order = a.value("order", 1);
      for (int g = 0; g < ng; ++g) as.images.push_back({Term{f.one(), {g}}});
      if (a.contains("images"))
        for (auto& [k, v] : a.at("images").items()) as.images[z(label_index(gens, Json(k)))] = terms(f, gens, v);
      action_names.push_back(as.name);
      p.actions.push_back(std::move(as));
    }
  auto action_index = [&](const Json& v) { return label_index(action_names, v); };
  if (j.contains("derivations"))
    for (auto& d : j.at("derivations")) {
      DerivationSpec ds;
      ds.name = need(d, "name").get<std::string>();
      ds.images.assign(z(ng), {});
      if (d.contains("twist") && !d.at("twist").is_null()) ds.twist = action_index(d.at("twist"));
      if (d.contains("nilpotence")) ds.nilpotence = d.at("nilpotence").get<int>();
      if (d.contains("images"))
        for (auto& [k, v] : d.at("images").items()) ds.images[z(label_index(gens, Json(k)))] = terms(f, gens, v);
      p.derivations.push_back(std::move(ds));
    }
  if (j.contains("compat"))
    for (auto& m : j.at("compat")) p.compat.push_back(scalar_matrix(f, m));
  p.anticommuting = j.value("anticommuting", false);
  if (j.contains("parity")) p.parity = action_index(j.at("parity"));
  if (j.contains("filtration_bound")) p.filtration_bound = j.at("filtration_bound").get<int>();
  p.dimension_bound = j.value("dimension_bound", 64);
  return p;
}

EquivariantAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "algebra spec must be an object");
  if (!j.contains("builder")) return build_from_presentation(presentation_from_json(j));
  const std::string b = j.at("builder").get<std::string>();
  if (b == "taft_A") {
    const int l = need(j, "l").get<int>();
    const int d = need(j, "d").get<int>();
    if (l < 2 || l > 60) fail(ErrorCode::BadParameter, "l must lie in 2..60");
    const ExactField f = j.contains("field") ? ExactField::parse_name(j.at("field").get<std::string>()) : ExactField::cyclotomic(l);
    return build_taft_A(l, d, j.contains("lambda") ? scalar(f, j.at("lambda")) : f.one(), f);
  }
  const ExactField f = ExactField::parse_name(j.value("field", std::string("Q")));
  if (b == "group_quotient") {
    const SuperData s = super_data(f, j);
    return build_group_quotient(f, s.group, s.h, s.psi, s.rep);
  }
  if (b == "clifford_smash") return build_clifford_smash(f, super_data(f, j));
  if (b == "supergroup_internal_hom") return supergroup_internal_hom(f, super_data(f, j), j.value("max_dim", 64));
  fail(ErrorCode::InvalidInput, "unknown builder '" + b + "'");
}

}  // namespace ftcat
