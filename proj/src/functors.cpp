#include "ftcat/functors.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ftcat/error.hpp"

namespace ftcat {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

bool shapes_ok(const FunctorData& f, Report& rep) {
  const int ns = f.source.rank(), nt = f.target.rank();
  bool ok = static_cast<int>(f.A.size()) == ns;
  for (auto& row : f.A) ok = ok && static_cast<int>(row.size()) == nt;
  if (!ok) rep.push_back({"error", "shape", "A must have one row per source simple and one column per target simple", {}});
  if (f.B) {
    bool bok = static_cast<int>(f.B->size()) == nt;
    for (auto& row : *f.B) bok = bok && static_cast<int>(row.size()) == ns;
    if (!bok) rep.push_back({"error", "shape", "B must be target-projectives by source-projectives", {}});
    ok = ok && bok;
  }
  return ok;
}

bool fp_ready(const TensorCategory& c) { return c.ring().single_unit() && is_transitive(c.ring()); }

RealAlgebraic dplus(const TensorCategory& c) { return to_real(fpdim_category(c)); }

}  // namespace

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Undetermined: return "undetermined";
  }
  return "undetermined";
}

Report validate_functor(const FunctorData& f) {
  Report rep;
  if (!shapes_ok(f, rep)) return rep;
  const BasedRing& rs = f.source.ring();
  const BasedRing& rt = f.target.ring();
  const int ns = rs.rank(), nt = rt.rank();
  auto add = [&](const char* code, std::string msg, std::vector<int> w) {
    rep.push_back({"error", code, std::move(msg), std::move(w)});
  };
  for (int i = 0; i < ns; ++i) {
    bool zero = true;
    for (int j = 0; j < nt; ++j) {
      if (f.A[z(i)][z(j)] < 0) add("negative_entry", "negative entry in A", {i, j});
      if (f.A[z(i)][z(j)] != 0) zero = false;
    }
    if (zero) add("faithfulness", "F kills a simple object", {i});
  }
  if (f.B) {
    const IntMatrix& B = *f.B;
    const IntMatrix& Cs = f.source.cartan();
    const IntMatrix& Ct = f.target.cartan();
    for (int i = 0; i < ns; ++i) {
      GrVector via_a(z(nt), 0), via_b(z(nt), 0);
      for (int j = 0; j < ns; ++j)
        for (int k = 0; k < nt; ++k) via_a[z(k)] += Cs[z(i)][z(j)] * f.A[z(j)][z(k)];
      for (int j = 0; j < nt; ++j)
        for (int k = 0; k < nt; ++k) via_b[z(k)] += B[z(j)][z(i)] * Ct[z(j)][z(k)];
      if (via_a != via_b) add("gr_k_compatibility", "class of F(P_i) differs when computed from A and from B", {i});
    }
  }
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j) {
      GrVector lhs(z(nt), 0);
      for (int k = 0; k < ns; ++k)
        for (int m = 0; m < nt; ++m) lhs[z(m)] += rs.N(i, j, k) * f.A[z(k)][z(m)];
      if (lhs != gr_mul(rt, f.A[z(i)], f.A[z(j)])) add("multiplicativity", "F(L_i L_j) differs from F(L_i) F(L_j)", {i, j});
    }
  {
    GrVector image_unit(z(nt), 0);
    for (int u : rs.unit())
      for (int m = 0; m < nt; ++m) image_unit[z(m)] += f.A[z(u)][z(m)];
    if (image_unit != rt.unit_vector()) add("unit", "F does not send the unit to the unit", {});
  }
  if (fp_ready(f.source) && fp_ready(f.target)) {
    for (int i = 0; i < ns; ++i) {
      const RealAlgebraic lhs = to_real(fpdim_object(f.target, f.A[z(i)]));
      const RealAlgebraic rhs = to_real(f.source.fpdims().d[z(i)]);
      if (!equal(lhs, rhs)) add("fp_preservation", "d(F(L_i)) differs from d(L_i)", {i});
    }
  } else {
    rep.push_back({"warning", "fp_preservation", "FP dimensions unavailable for a non-transitive ring", {}});
  }
  sort_findings(rep);
  return rep;
}

Image image_closure(const FunctorData& f) {
  const BasedRing& rt = f.target.ring();
  const int nt = rt.rank();
  std::set<int> s;
  for (auto& row : f.A)
    for (int j = 0; j < nt; ++j)
      if (row[z(j)] > 0) s.insert(j);
  bool grown = true;
  while (grown) {
    grown = false;
    std::set<int> next = s;
    for (int a : s) {
      next.insert(rt.star(a));
      for (int b : s)
        for (int k = 0; k < nt; ++k)
          if (rt.N(a, b, k) > 0) next.insert(k);
    }
    if (next.size() != s.size()) {
      s = std::move(next);
      grown = true;
    }
  }
  Image img;
  img.labels.assign(s.begin(), s.end());
  std::map<int, int> pos;
  for (std::size_t t = 0; t < img.labels.size(); ++t) pos[img.labels[t]] = static_cast<int>(t);
  const int m = static_cast<int>(img.labels.size());
  std::vector<std::string> labels;
  std::vector<int> star, unit;
  for (int j : img.labels) {
    labels.push_back(rt.labels()[z(j)]);
    star.push_back(pos.at(rt.star(j)));
  }
  for (int u : rt.unit())
    if (pos.count(u)) unit.push_back(pos.at(u));
  if (unit.empty()) unit.push_back(0);
  BasedRing r(std::move(labels), std::move(unit), std::vector<std::int64_t>(z(m) * z(m) * z(m), 0), std::move(star));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) r.N(a, b, c) = rt.N(img.labels[z(a)], img.labels[z(b)], img.labels[z(c)]);
  img.ring = std::move(r);
  return img;
}

std::optional<RealAlgebraic> image_dimension(const FunctorData& f) {
  const Image img = image_closure(f);
  const int m = static_cast<int>(img.labels.size());
  if (f.image_cartan) {
    TensorCatData d;
    d.ring = img.ring;
    d.cartan = *f.image_cartan;
    d.characteristic = f.target.data().characteristic;
    return dplus(TensorCategory(std::move(d)));
  }
  const bool target_semisimple = is_semisimple(f.target.data());
  if (f.image_semisimple || target_semisimple) {
    TensorCatData d;
    d.ring = img.ring;
    d.cartan.assign(z(m), std::vector<std::int64_t>(z(m), 0));
    for (int i = 0; i < m; ++i) d.cartan[z(i)][z(i)] = 1;
    d.characteristic = f.target.data().characteristic;
    return dplus(TensorCategory(std::move(d)));
  }
  if (f.B) {
    // Every target projective occurs in some F(P_i): the image is everything.
    bool all = true;
    for (auto& row : *f.B) all = all && std::any_of(row.begin(), row.end(), [](std::int64_t x) { return x > 0; });
    if (all) return dplus(f.target);
  }
  return std::nullopt;
}

Verdict is_surjective(const FunctorData& f) {
  Verdict v;
  const RealAlgebraic ds = dplus(f.source), dt = dplus(f.target);
  const auto di = image_dimension(f);
  if (di) {
    const bool eq = equal(*di, dt);
    v.value = eq ? Tri::True : Tri::False;
    v.reason = eq ? "d+(Im F) equals d+(target)" : "d+(Im F) is smaller than d+(target)";
    if (eq && equal(ds, dt) && f.B) {
      for (int i = 0; i < f.source.rank(); ++i) {
        std::int64_t diag = 0;
        for (int j = 0; j < f.target.rank(); ++j) diag += f.A[z(i)][z(j)] * (*f.B)[z(j)][z(i)];
        if (diag < 1) v.findings.push_back({"error", "equivalence_diagonal", "diagonal of AB vanishes", {i}});
      }
    }
    return v;
  }
  if (cmp(dt, ds) == Order::Greater) {
    v.value = Tri::False;
    v.reason = "d+(target) exceeds d+(source), which bounds d+(Im F)";
    return v;
  }
  v.reason = "image Cartan data unavailable and dimension bounds are inconclusive";
  return v;
}

Verdict is_injective(const FunctorData& f) {
  Verdict v;
  const RealAlgebraic ds = dplus(f.source), dt = dplus(f.target);
  const auto di = image_dimension(f);
  if (di) {
    const bool eq = equal(*di, ds);
    v.value = eq ? Tri::True : Tri::False;
    v.reason = eq ? "d+(Im F) equals d+(source)" : "d+(Im F) is smaller than d+(source)";
    return v;
  }
  if (cmp(ds, dt) == Order::Greater) {
    v.value = Tri::False;
    v.reason = "d+(source) exceeds d+(target), which bounds d+(Im F)";
    return v;
  }
  v.reason = "image Cartan data unavailable and dimension bounds are inconclusive";
  return v;
}

bool is_surjective_strict(const FunctorData& f) {
  const Verdict v = is_surjective(f);
  if (v.value == Tri::Undetermined) fail(ErrorCode::ImageCartanUnavailable, v.reason);
  return v.value == Tri::True;
}

bool is_injective_strict(const FunctorData& f) {
  const Verdict v = is_injective(f);
  if (v.value == Tri::Undetermined) fail(ErrorCode::ImageCartanUnavailable, v.reason);
  return v.value == Tri::True;
}

Freeness freeness_check(const FunctorData& f) {
  if (!f.B) fail(ErrorCode::InvalidInput, "freeness needs the projective matrix B");
  const Verdict s = is_surjective(f);
  if (s.value == Tri::False) fail(ErrorCode::NotSurjective, s.reason);
  Freeness out;
  if (s.value == Tri::Undetermined)
    out.findings.push_back({"warning", "surjectivity_undetermined", s.reason, {}});
  const FpDims& fs = f.source.fpdims();
  const FpDims& ft = f.target.fpdims();
  const IntMatrix& B = *f.B;
  const int ns = f.source.rank(), nt = f.target.rank();
  const int unit = f.target.ring().unit_index();
  out.ratio = NFElement::rational(fs.field, 0);
  for (int i = 0; i < ns; ++i)
    out.ratio += NFElement::rational(fs.field, Rational(static_cast<long>(B[z(unit)][z(i)]))) * fs.d[z(i)];
  const RealAlgebraic ratio = to_real(out.ratio);
  out.ok = true;
  if (!equal(real_mul(ratio, dplus(f.target)), dplus(f.source))) {
    out.ok = false;
    out.findings.push_back({"error", "freeness_ratio", "sum of d_i [F(P_i) : P'_unit] differs from d+(C)/d+(D)", {}});
  }
  for (int j = 0; j < nt; ++j) {
    NFElement lhs = NFElement::rational(fs.field, 0);
    for (int i = 0; i < ns; ++i) lhs += NFElement::rational(fs.field, Rational(static_cast<long>(B[z(j)][z(i)]))) * fs.d[z(i)];
    if (!equal(to_real(lhs), real_mul(ratio, to_real(ft.d[z(j)])))) {
      out.ok = false;
      out.findings.push_back({"error", "freeness", "F(R_C) differs from ratio R_D at a projective", {j}});
    }
  }
  sort_findings(out.findings);
  return out;
}

IntegerFreeness integer_freeness(const FunctorData& f) {
  const Freeness fr = freeness_check(f);
  IntegerFreeness out;
  if (!fr.ok || !integrality_flag(f.source)) return out;
  if (fr.ratio.is_rational() && fr.ratio.rational_value().get_den() == 1) {
    out.integer = true;
    out.rank = fr.ratio.rational_value().get_num();
  }
  return out;
}

Lagrange lagrange(const TensorCategory& sub, const TensorCategory& amb, const std::vector<int>& embed) {
  const BasedRing& rs = sub.ring();
  const BasedRing& ra = amb.ring();
  const int ns = rs.rank(), na = ra.rank();
  if (static_cast<int>(embed.size()) != ns) fail(ErrorCode::NotASubring, "label map must cover every simple of the subcategory");
  std::set<int> image;
  for (int e : embed) {
    if (e < 0 || e >= na) fail(ErrorCode::NotASubring, "label map leaves the ambient category");
    image.insert(e);
  }
  if (static_cast<int>(image.size()) != ns) fail(ErrorCode::NotASubring, "label map is not injective");
  {
    std::vector<int> u;
    for (int x : rs.unit()) u.push_back(embed[z(x)]);
    std::sort(u.begin(), u.end());
    std::vector<int> ua = ra.unit();
    std::sort(ua.begin(), ua.end());
    if (u != ua) fail(ErrorCode::NotASubring, "unit is not preserved");
  }
  for (int i = 0; i < ns; ++i) {
    if (embed[z(rs.star(i))] != ra.star(embed[z(i)])) fail(ErrorCode::NotASubring, "duality is not preserved");
    for (int j = 0; j < ns; ++j) {
      for (int k = 0; k < ns; ++k)
        if (rs.N(i, j, k) != ra.N(embed[z(i)], embed[z(j)], embed[z(k)]))
          fail(ErrorCode::NotASubring, "fusion differs at (" + rs.labels()[z(i)] + "," + rs.labels()[z(j)] + ")");
      for (int k = 0; k < na; ++k)
        if (!image.count(k) && ra.N(embed[z(i)], embed[z(j)], k) > 0)
          fail(ErrorCode::NotASubring, "products leave the subcategory");
    }
  }
  const FpDims& fa = amb.fpdims();
  const FpDims& fs = sub.fpdims();
  for (int i = 0; i < ns; ++i)
    if (!equal(to_real(fs.d[z(i)]), to_real(fa.d[z(embed[z(i)])])))
      fail(ErrorCode::FieldEmbeddingFailed, "FP dimension of " + rs.labels()[z(i)] + " changes under the embedding");
  NFElement dsub = NFElement::rational(fa.field, 0);
  for (int i = 0; i < ns; ++i) {
    NFElement proj = NFElement::rational(fa.field, 0);
    for (int j = 0; j < ns; ++j)
      proj += NFElement::rational(fa.field, Rational(static_cast<long>(sub.cartan()[z(i)][z(j)]))) * fa.d[z(embed[z(j)])];
    dsub += fa.d[z(embed[z(i)])] * proj;
  }
  if (!equal(to_real(dsub), dplus(sub))) fail(ErrorCode::FieldEmbeddingFailed, "d+(sub) changes in the ambient field");
  Lagrange out;
  out.quotient = fpdim_category(amb) / dsub;
  out.integral = is_algebraic_integer(out.quotient);
  if (!out.integral)
    out.findings.push_back({"error", "lagrange_counterexample", "d+(amb)/d+(sub) is not an algebraic integer", {}});
  return out;
}

bool verify_dual_pair(const TensorCategory& c, const TensorCategory& cdual) { return equal(dplus(c), dplus(cdual)); }

Report verify_center_dim(const TensorCategory& c, const TensorCategory& zc, const FunctorData& forgetful) {
  Report rep;
  const RealAlgebraic dc = dplus(c);
  if (!equal(dplus(zc), real_mul(dc, dc)))
    rep.push_back({"error", "center_dimension", "d+(Z(C)) differs from d+(C)^2", {}});
  const Verdict s = is_surjective(forgetful);
  if (s.value != Tri::True)
    rep.push_back({"error", "forgetful_not_surjective", "forgetful functor is not certified surjective: " + s.reason, {}});
  else {
    const Freeness fr = freeness_check(forgetful);
    if (!fr.ok || !equal(to_real(fr.ratio), dc))
      rep.push_back({"error", "freeness_ratio", "F(R_Z) is not d+(C) R_C", {}});
  }
  sort_findings(rep);
  return rep;
}

}  // namespace ftcat
