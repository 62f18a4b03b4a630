#include "suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <set>
#include <thread>

#include "qortho/contiguous.hpp"
#include "qortho/error.hpp"
#include "qortho/families.hpp"

namespace qortho::suite {

namespace {

using nlohmann::json;

struct Task {
  std::string key;
  std::function<Record()> run;
};

Rational R(long num, long den = 1) { return Rational(num, den); }

std::string params_key(const Point& p) {
  std::string out;
  for (const auto& [name, value] : p) {
    if (!out.empty()) out += ";";
    out += name + "=" + value.pretty();
  }
  return out;
}

std::string make_key(SubSuite s, const std::string& check, const Rational& q, const Point& p, int n) {
  char nbuf[16];
  std::snprintf(nbuf, sizeof nbuf, "n=%02d", n);
  return std::string(to_string(s)) + "|" + check + "|q=" + q.pretty() + "|" + params_key(p) + "|" + nbuf;
}

ParamPoint to_param_point(const Rational& q, const Point& p) {
  ParamPoint pt(q);
  for (const auto& [name, value] : p) pt = pt.with(name, value);
  return pt;
}

// Restricts p to `names`; nullopt when one is missing.
std::optional<Point> pick(const Point& p, const std::vector<std::string>& names) {
  Point out;
  for (const auto& name : names) {
    const auto it = p.find(name);
    if (it == p.end()) return std::nullopt;
    out.emplace(name, it->second);
  }
  return out;
}

json coeffs_json(const QPoly& p) { return p.coeff_strings(); }

Record base_record(SubSuite s, const std::string& check, const Rational& q, const Point& p, int n) {
  Record r;
  r.key = make_key(s, check, q, p, n);
  r.suite = std::string(to_string(s));
  r.check = check;
  r.n = n;
  r.q = q.to_string();
  r.params = p;
  return r;
}

// Runs body; a library error becomes a failed record carrying the message.
Task make_task(Record proto, std::function<void(Record&)> body) {
  std::string key = proto.key;
  return {std::move(key), [proto = std::move(proto), body = std::move(body)]() {
            Record r = proto;
            try {
              body(r);
            } catch (const Error& e) {
              r.pass = false;
              r.verdict = e.what();
            }
            return r;
          }};
}

std::vector<Rational> qs_or(const SuiteConfig& cfg, std::vector<Rational> fallback) {
  return cfg.qs ? *cfg.qs : std::move(fallback);
}

std::vector<int> ks_or(const SuiteConfig& cfg, std::vector<int> fallback) {
  return cfg.ks ? *cfg.ks : std::move(fallback);
}

std::pair<int, int> n_range(const SuiteConfig& cfg, int lo, int hi) {
  return {cfg.n_min.value_or(lo), cfg.n_max.value_or(hi)};
}

// ---------------------------------------------------------------- relations

std::vector<Point> default_relation_points(RelationId id) {
  switch (id) {
    case RelationId::LaguerreMultiplier:
    case RelationId::LaguerreDilation:
    case RelationId::LaguerreParameterShift: return {{{"t", R(1, 2)}}, {{"t", R(1, 5)}}, {{"t", R(6, 5)}}};
    case RelationId::JacobiMultiplier:
    case RelationId::JacobiParameterLowering:
      return {{{"a", R(1, 2)}, {"b", R(1, 2)}}, {{"a", R(1, 3)}, {"b", R(-2)}}, {{"a", R(6, 5)}, {"b", R(1, 5)}}};
    case RelationId::MeixnerMultiplier:
      return {{{"b", R(1, 2)}, {"c", R(2)}}, {{"b", R(1, 3)}, {"c", R(1, 2)}}, {{"b", R(6, 5)}, {"c", R(5)}}};
    case RelationId::DoubleSplit:
      return {{{"t", R(1, 2)}, {"u", R(3)}}, {{"t", R(1, 5)}, {"u", R(1, 3)}}, {{"t", R(6, 5)}, {"u", R(-2)}}};
  }
  return {};
}

void relation_tasks(const SuiteConfig& cfg, std::vector<Task>& out) {
  const auto [lo, hi] = n_range(cfg, 1, 8);
  for (const Rational& q : qs_or(cfg, {R(1, 2), R(2, 3)})) {
    for (RelationId id : kAllRelations) {
      const std::vector<Point> points = cfg.points ? *cfg.points : default_relation_points(id);
      for (const Point& raw : points) {
        const auto p = pick(raw, relation_parameters(id));
        if (!p) continue;
        for (int n = std::max(lo, relation_min_degree(id)); n <= hi; ++n) {
          const std::string name(relation_name(id));
          out.push_back(make_task(base_record(SubSuite::Relations, name, q, *p, n), [=](Record& r) {
            const RelationCheck c = relation_residual(id, n, to_param_point(q, *p));
            r.pass = c.residual.is_zero();
            r.verdict = r.pass ? "residual-zero" : "residual-nonzero";
            r.certificate = {{"residual_zero", r.pass},
                             {"lhs_degree", c.lhs.degree()},
                             {"residual", coeffs_json(c.residual)}};
          }));
        }
      }
    }
  }
}

// --------------------------------------------------------------- expansions

void expansion_tasks(const SuiteConfig& cfg, std::vector<Task>& out) {
  const auto [lo, hi] = n_range(cfg, 3, 8);
  std::vector<Point> descend_points;
  std::vector<Point> ladder_points;
  if (cfg.points) {
    for (const Point& raw : *cfg.points) {
      if (auto p = pick(raw, {"t", "u"})) descend_points.push_back(*p);
      if (auto p = pick(raw, {"t"})) ladder_points.push_back(*p);
    }
  } else {
    for (long num : {3L, -2L, 7L}) descend_points.push_back({{"t", R(1, 2)}, {"u", R(num)}});
    descend_points.push_back({{"t", R(1, 2)}, {"u", R(1, 3)}});
    ladder_points = {{{"t", R(1, 2)}}, {{"t", R(3)}}};
  }
  const std::vector<int> ks = ks_or(cfg, {1, 2, 3});
  for (const Rational& q : qs_or(cfg, {R(1, 2), R(2, 3)})) {
    for (int n = lo; n <= hi; ++n) {
      for (int k : ks) {
        if (k < 1 || k > n - 1) continue;
        for (const Point& p : descend_points) {
          const std::string check = "descend-k" + std::to_string(k);
          out.push_back(make_task(base_record(SubSuite::Expansions, check, q, p, n), [=](Record& r) {
            const PhiSmall target{k, p.at("t"), p.at("u")};
            require_target_parameters(target, n, q);
            const LadderExpansion ex = descend_expand(n, k, target.u * q.pow(k - 1), q);
            const QPoly residual = verify_identity(build_series(quasi_spec(target, n, q)),
                                                   reconstruct_descend(quasi_spec(target, n, q), ex));
            const bool nonzero = std::none_of(ex.coeffs.begin(), ex.coeffs.end(),
                                              [](const Rational& a) { return a.is_zero(); });
            const bool sum_one = ex.sum() == Rational(1);
            r.pass = nonzero && sum_one && residual.is_zero();
            r.verdict = r.pass ? "certified" : "not-certified";
            json coeffs = json::array();
            for (const auto& a : ex.coeffs) coeffs.push_back(a.to_string());
            r.certificate = {{"coefficients", coeffs},
                             {"sum", ex.sum().to_string()},
                             {"all_nonzero", nonzero},
                             {"residual_zero", residual.is_zero()}};
          }));
        }
        for (const Point& p : ladder_points) {
          const std::string check = "laguerre-ladder-j" + std::to_string(k);
          out.push_back(make_task(base_record(SubSuite::Expansions, check, q, p, n), [=](Record& r) {
            const LadderExpansion ex = laguerre_ladder(n, k, q);
            const Rational& t = p.at("t");
            const QPoly residual = verify_identity(classical_poly(QLaguerre{t}, n, q),
                                                   reconstruct_laguerre_ladder(ex, t, q));
            const bool nonzero = std::none_of(ex.coeffs.begin(), ex.coeffs.end(),
                                              [](const Rational& a) { return a.is_zero(); });
            r.pass = nonzero && residual.is_zero();
            r.verdict = r.pass ? "certified" : "not-certified";
            json coeffs = json::array();
            for (const auto& a : ex.coeffs) coeffs.push_back(a.to_string());
            r.certificate = {{"coefficients", coeffs}, {"all_nonzero", nonzero}, {"residual_zero", residual.is_zero()}};
          }));
        }
      }
    }
  }
}

// -------------------------------------------------------------------- quasi

struct TargetSpec {
  std::string name;
  std::vector<std::string> params;
  std::function<QuasiTargetId(int k, const Point&)> make;
};

std::vector<TargetSpec> target_specs() {
  return {
      {"phi-small", {"t", "u"}, [](int k, const Point& p) -> QuasiTargetId { return PhiSmall{k, p.at("t"), p.at("u")}; }},
      {"phi-big", {"a", "b", "u"},
       [](int k, const Point& p) -> QuasiTargetId { return PhiBig{k, p.at("a"), p.at("b"), p.at("u")}; }},
      {"varphi-meixner", {"b", "c", "u"},
       [](int k, const Point& p) -> QuasiTargetId { return VarphiMeixner{k, p.at("b"), p.at("c"), p.at("u")}; }},
      {"varphi-asc", {"a", "u"}, [](int k, const Point& p) -> QuasiTargetId { return VarPhiASC{k, p.at("a"), p.at("u")}; }},
  };
}

Point default_target_point(const std::string& name) {
  if (name == "phi-small") return {{"t", R(1, 2)}, {"u", R(3)}};
  if (name == "phi-big") return {{"a", R(1, 2)}, {"b", R(1, 2)}, {"u", R(3)}};
  if (name == "varphi-meixner") return {{"b", R(1, 2)}, {"c", R(2)}, {"u", R(3)}};
  return {{"a", R(-1)}, {"u", R(3)}};
}

bool admissible(const QuasiTargetId& target, const Rational& q) {
  try {
    require_orthogonal(underlying_family(target), q);
    return true;
  } catch (const Error&) {
    return false;
  }
}

json moments_json(const std::vector<MomentRow>& rows) {
  json out = json::array();
  for (const auto& m : rows) {
    out.push_back({{"t", m.t_power},
                   {"value", format_double(m.value)},
                   {"magnitude", format_double(m.magnitude)},
                   {"normalized", format_double(m.normalized)},
                   {"verdict", std::string(to_string(m.verdict))}});
  }
  return out;
}

Task structure_task(const std::string& name, const QuasiTargetId& target, const Rational& q, const Point& p, int n) {
  const int k = target_order(target);
  const std::string check = name + "-structure-k" + std::to_string(k);
  return make_task(base_record(SubSuite::Quasi, check, q, p, n), [=](Record& r) {
    const PrefactoredExpansion ex = prefactored_expand(target, n, q);
    const bool law = ex.degree_law_holds();
    r.pass = ex.certified() && law;
    r.verdict = r.pass ? "certified" : "not-certified";
    json structured = json::array();
    for (const auto& g : ex.structured) structured.push_back(coeffs_json(g));
    json constant = json::array();
    for (const auto& c : ex.constant.coeffs) constant.push_back(c.is_zero() ? std::string("0/1") : c.coeff(0).to_string());
    r.certificate = {{"structured", structured},
                     {"structured_residual_zero", ex.structured_residual.is_zero()},
                     {"degree_law", law},
                     {"constant", constant},
                     {"lowest_degree", ex.constant.lowest_degree()},
                     {"constant_residual_zero", ex.constant.residual.is_zero()}};
  });
}

Task order_task(const std::string& check, const OrderTarget& target, int expected, const Rational& q, const Point& p,
                int n, const Tolerances& tol) {
  return make_task(base_record(SubSuite::Quasi, check, q, p, n), [=](Record& r) {
    const OrderResult res = detect_order(target, n, q, tol);
    r.pass = res.order == expected && res.agree();
    r.verdict = "order " + std::to_string(res.order) + (r.pass ? "" : " (expected " + std::to_string(expected) + ")");
    r.certificate = {{"order", res.order},
                     {"structural_order", res.structural_order},
                     {"expected_order", expected},
                     {"moments", moments_json(res.moments)}};
  });
}

void quasi_tasks(const SuiteConfig& cfg, std::vector<Task>& out) {
  const auto specs = target_specs();
  const std::vector<int> ks = ks_or(cfg, {1, 2, 3});
  const std::vector<Rational> qs = qs_or(cfg, {R(1, 2)});
  if (cfg.points) {
    const auto [lo, hi] = n_range(cfg, 4, 8);
    for (const Rational& q : qs) {
      for (const Point& raw : *cfg.points) {
        for (const auto& spec : specs) {
          const auto p = pick(raw, spec.params);
          if (!p) continue;
          for (int n = lo; n <= hi; ++n) {
            for (int k : ks) {
              if (k < 1 || k > n - 1) continue;
              const QuasiTargetId target = spec.make(k, *p);
              if (!admissible(target, q)) continue;
              out.push_back(structure_task(spec.name, target, q, *p, n));
              out.push_back(order_task(spec.name + "-order-k" + std::to_string(k), target, k, q, *p, n, cfg.tol));
            }
          }
        }
        if (const auto p = pick(raw, {"t"}); p && p->at("t") > q.inverse()) {
          for (int n = lo; n <= hi; ++n) {
            try {
              const int j = laguerre_range_index(p->at("t"), q);
              out.push_back(order_task("laguerre-below-range-order", LaguerreBelowRange{p->at("t")}, j, q, *p, n, cfg.tol));
            } catch (const Error&) {
              // boundary t: nothing to claim
            }
          }
        }
      }
    }
    return;
  }

  const auto [lo, hi] = n_range(cfg, 4, 8);
  for (const Rational& q : qs) {
    for (const auto& spec : specs) {
      const Point p = default_target_point(spec.name);
      for (int n = lo; n <= hi; ++n) {
        for (int k : ks) {
          if (k < 1 || k > n - 1) continue;
          out.push_back(structure_task(spec.name, spec.make(k, p), q, p, n));
        }
      }
    }
    // Moment corroboration at desk-scale sizes.
    for (const auto& spec : specs) {
      const Point p = default_target_point(spec.name);
      const int n = spec.name == "varphi-asc" ? 5 : 6;
      out.push_back(order_task(spec.name + "-order-k2", spec.make(2, p), 2, q, p, n, cfg.tol));
    }
    for (int n = 3; n <= 6; ++n) {
      const Point p{{"t", R(3)}};
      out.push_back(order_task("laguerre-below-range-order", LaguerreBelowRange{R(3)}, 1, q, p, n, cfg.tol));
    }
    const std::vector<std::pair<Point, FamilyId>> classical = {
        {{{"t", R(1, 2)}}, QLaguerre{R(1, 2)}},
        {{{"a", R(1, 2)}, {"b", R(1, 2)}}, LittleQJacobi{R(1, 2), R(1, 2)}},
        {{{"b", R(1, 2)}, {"c", R(2)}}, QMeixner{R(1, 2), R(2)}},
        {{{"a", R(-1)}}, AlSalamCarlitzI{R(-1)}},
    };
    for (const auto& [p, fam] : classical) {
      const std::string check = std::string(family_key(fam).substr(0, family_key(fam).find('('))) + "-orthogonal";
      out.push_back(order_task(check, fam, 0, q, p, 5, cfg.tol));
    }
  }
}

// ---------------------------------------------------------- zeros/interlace

Task zero_task(SubSuite s, ZeroTheorem th, const Rational& q, const Point& p, int n) {
  const std::string code(theorem_code(th));
  return make_task(base_record(s, code, q, p, n), [=](Record& r) {
    const ZeroClassification c = classify_zeros(th, n, to_param_point(q, p));
    r.pass = c.pass;
    r.verdict = c.pass ? "agree" : "disagree";
    json claims = json::array();
    for (const auto& cl : c.claims) {
      claims.push_back({{"name", cl.name}, {"predicted", cl.predicted}, {"observed", cl.observed}, {"pass", cl.pass}});
    }
    const auto roots_json = [](const RootSet& set) {
      json a = json::array();
      for (const auto& root : set.roots) {
        a.push_back({{"lower", root.lower.to_string()}, {"upper", root.upper.to_string()}, {"value", format_double(root.value)}});
      }
      return a;
    };
    json refs = json::object();
    for (const auto& [label, set] : c.references) refs[label] = roots_json(set);
    json inter = json::array();
    for (const auto& v : c.interlacing) {
      int held = 0;
      for (const auto& cmp : v.witness) held += cmp.holds;
      inter.push_back({{"expected", std::string(to_string(v.expected))},
                       {"pattern", std::string(to_string(v.pattern))},
                       {"comparisons", v.witness.size()},
                       {"held", held},
                       {"details", v.details}});
    }
    r.certificate = {{"predicted_case", c.predicted_case},
                     {"observed_case", c.observed_case},
                     {"claims", claims},
                     {"square_free", c.zeros.simple},
                     {"roots", roots_json(c.zeros)},
                     {"references", refs},
                     {"interlacing", inter}};
    for (std::size_t i = 0; i < c.zeros.roots.size(); ++i) {
      const auto& root = c.zeros.roots[i];
      r.roots.push_back({code, n, q.to_string(), params_key(p), static_cast<int>(i) + 1, root.lower.to_string(),
                         root.upper.to_string(), format_double(root.value)});
    }
  });
}

bool wanted(const SuiteConfig& cfg, ZeroTheorem th) { return !cfg.theorem || *cfg.theorem == th; }

void points_mode_zero_tasks(SubSuite s, const SuiteConfig& cfg, const std::vector<ZeroTheorem>& theorems, int lo, int hi,
                            std::vector<Task>& out) {
  for (const Rational& q : qs_or(cfg, {R(1, 2)})) {
    for (ZeroTheorem th : theorems) {
      if (!wanted(cfg, th)) continue;
      for (const Point& raw : *cfg.points) {
        const auto p = pick(raw, theorem_parameters(th));
        if (!p) continue;
        for (int n = lo; n <= hi; ++n) out.push_back(zero_task(s, th, q, *p, n));
      }
    }
  }
}

void interlace_tasks(const SuiteConfig& cfg, std::vector<Task>& out, SubSuite tag);

bool location_theorem(ZeroTheorem th) { return th == ZeroTheorem::LaguerreOrder1 || th == ZeroTheorem::JacobiOrder1; }

void zero_location_tasks(const SuiteConfig& cfg, std::vector<Task>& out) {
  // Theorems without a location statement are sampled on their interlacing grid.
  if (cfg.theorem && !location_theorem(*cfg.theorem)) {
    interlace_tasks(cfg, out, SubSuite::Zeros);
    return;
  }
  const auto [lo, hi] = n_range(cfg, 2, 6);
  if (cfg.points) {
    points_mode_zero_tasks(SubSuite::Zeros, cfg, {ZeroTheorem::LaguerreOrder1, ZeroTheorem::JacobiOrder1}, lo, hi, out);
    return;
  }
  for (const Rational& q : qs_or(cfg, {R(1, 2)})) {
    for (int n = lo; n <= hi; ++n) {
      const Rational top = q.pow(-n);
      if (wanted(cfg, ZeroTheorem::LaguerreOrder1)) {
        // Both sides of each boundary {1, q^-n}, near and far.
        for (const Rational& u : {R(1, 3), R(9, 10), R(11, 10), top * R(9, 10), top * R(11, 10), top * q.pow(-2) * R(3)}) {
          out.push_back(zero_task(SubSuite::Zeros, ZeroTheorem::LaguerreOrder1, q, {{"t", R(1, 2)}, {"u", u}}, n));
        }
      }
      if (wanted(cfg, ZeroTheorem::JacobiOrder1)) {
        const Rational qn1 = q.pow(n - 1);
        const Rational abq = R(1, 4) * q.pow(n + 1);
        for (const Rational& u : {abq * R(1, 2), (abq + qn1) * R(1, 2), (qn1 + R(1)) * R(1, 2), R(9, 10), R(11, 10),
                                  top * R(9, 10), top * R(11, 10)}) {
          out.push_back(zero_task(SubSuite::Zeros, ZeroTheorem::JacobiOrder1, q, {{"a", R(1, 2)}, {"b", R(1, 2)}, {"u", u}}, n));
        }
        for (const Rational& u : {qn1 * R(1, 3), (qn1 + R(1)) * R(1, 2)}) {
          out.push_back(zero_task(SubSuite::Zeros, ZeroTheorem::JacobiOrder1, q, {{"a", R(1, 2)}, {"b", R(-2)}, {"u", u}}, n));
        }
      }
    }
  }
}

void interlace_tasks(const SuiteConfig& cfg, std::vector<Task>& out, SubSuite tag) {
  const auto [lo, hi] = n_range(cfg, 3, 6);
  if (cfg.points) {
    points_mode_zero_tasks(tag, cfg, std::vector<ZeroTheorem>(std::begin(kAllZeroTheorems), std::end(kAllZeroTheorems)),
                           lo, hi, out);
    return;
  }
  for (const Rational& q : qs_or(cfg, {R(1, 2)})) {
    for (int n = lo; n <= hi; ++n) {
      const Rational top = q.pow(-n);
      const Rational mid_next = top * (R(1) + q.inverse()) * R(1, 2);  // inside (q^-n, q^-n-1)
      if (wanted(cfg, ZeroTheorem::LaguerreOrder1)) {
        for (const Rational& t : {R(1, 2), R(3, 2)}) {
          for (const Rational& u : {R(1, 3), R(3, 2), top * R(5, 4)}) {
            out.push_back(zero_task(tag, ZeroTheorem::LaguerreOrder1, q, {{"t", t}, {"u", u}}, n));
          }
        }
      }
      if (wanted(cfg, ZeroTheorem::LaguerreOrder2)) {
        for (const Rational& t : {R(1, 2), R(3, 2), R(1, 5)}) {
          out.push_back(zero_task(tag, ZeroTheorem::LaguerreOrder2, q, {{"t", t}, {"u", mid_next}}, n));
        }
      }
      if (wanted(cfg, ZeroTheorem::JacobiOrder1)) {
        const Rational abq = R(1, 4) * q.pow(n + 1);
        for (const Rational& u : {R(3, 2), top * R(3, 2), abq * R(1, 2)}) {
          out.push_back(zero_task(tag, ZeroTheorem::JacobiOrder1, q, {{"a", R(1, 2)}, {"b", R(1, 2)}, {"u", u}}, n));
        }
        out.push_back(zero_task(tag, ZeroTheorem::JacobiOrder1, q,
                                {{"a", R(1, 2)}, {"b", R(-2)}, {"u", q.pow(n - 1) * R(1, 3)}}, n));
      }
      if (wanted(cfg, ZeroTheorem::JacobiOrder2)) {
        for (const auto& [a, b] : {std::pair{R(1, 2), R(1, 2)}, std::pair{R(1, 3), R(-2)}, std::pair{R(3, 2), R(1, 5)}}) {
          out.push_back(zero_task(tag, ZeroTheorem::JacobiOrder2, q, {{"a", a}, {"b", b}, {"u", mid_next}}, n));
        }
      }
      if (wanted(cfg, ZeroTheorem::LaguerreBelowRange)) {
        for (const Rational& t : {q.inverse() * R(3, 2), q.inverse() * R(5, 4), q.inverse() * R(7, 4)}) {
          out.push_back(zero_task(tag, ZeroTheorem::LaguerreBelowRange, q, {{"t", t}}, n));
        }
      }
    }
  }
}

}  // namespace

std::string_view to_string(SubSuite s) noexcept {
  switch (s) {
    case SubSuite::Relations: return "relations";
    case SubSuite::Expansions: return "expansions";
    case SubSuite::Quasi: return "quasi";
    case SubSuite::Zeros: return "zeros";
    case SubSuite::Interlace: return "interlace";
  }
  return "unknown";
}

SubSuite parse_sub_suite(std::string_view text) {
  for (SubSuite s : kAllSubSuites) {
    if (to_string(s) == text) return s;
  }
  throw Error(ErrorKind::Config, "unknown sub-suite '" + std::string(text) + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const Record& r) { return r.pass; }));
}

Report run(const std::vector<SubSuite>& which, const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (SubSuite s : which) {
    switch (s) {
      case SubSuite::Relations: relation_tasks(cfg, tasks); break;
      case SubSuite::Expansions: expansion_tasks(cfg, tasks); break;
      case SubSuite::Quasi: quasi_tasks(cfg, tasks); break;
      case SubSuite::Zeros: zero_location_tasks(cfg, tasks); break;
      case SubSuite::Interlace: interlace_tasks(cfg, tasks, SubSuite::Interlace); break;
    }
  }
  Report report;
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) report.records[i] = tasks[i].run();
  };
  const int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const Record& a, const Record& b) { return a.key < b.key; });
  return report;
}

json to_json(const Report& report, const std::vector<SubSuite>& which, const SuiteConfig& cfg,
             const std::string& generated) {
  json suites = json::array();
  for (SubSuite s : which) suites.push_back(std::string(to_string(s)));
  json records = json::array();
  for (const Record& r : report.records) {
    json params = json::object();
    for (const auto& [name, value] : r.params) params[name] = value.to_string();
    records.push_back({{"key", r.key},
                       {"suite", r.suite},
                       {"check", r.check},
                       {"n", r.n},
                       {"q", r.q},
                       {"params", params},
                       {"pass", r.pass},
                       {"verdict", r.verdict},
                       {"certificate", r.certificate}});
  }
  return {{"schema", "qortho-report/1"},
          {"generated", generated},
          {"sub_suites", suites},
          {"tolerances", {{"zero", format_double(cfg.tol.zero)}, {"nonzero", format_double(cfg.tol.nonzero)}}},
          {"summary", {{"checks", report.records.size()}, {"passed", report.passed()}, {"failed", report.failed()}}},
          {"records", records}};
}

std::vector<std::filesystem::path> write_artifacts(const Report& report, const std::vector<SubSuite>& which,
                                                   const SuiteConfig& cfg) {
  namespace fs = std::filesystem;
  std::vector<fs::path> written;
  fs::create_directories(cfg.out);

  char stamp[32];
  const std::time_t now = std::time(nullptr);
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  const fs::path report_path = cfg.out / "report.json";
  {
    std::ofstream os(report_path, std::ios::binary);
    os << to_json(report, which, cfg, stamp).dump(2) << '\n';
    if (!os) throw Error(ErrorKind::Config, "cannot write " + report_path.string());
  }
  written.push_back(report_path);

  if (cfg.emit_csv) {
    std::map<std::string, std::vector<const RootRow*>> by_theorem;
    for (const Record& r : report.records) {
      for (const RootRow& row : r.roots) by_theorem[row.theorem].push_back(&row);
    }
    for (const auto& [theorem, rows] : by_theorem) {
      const fs::path path = cfg.out / ("zeros_" + theorem + ".csv");
      std::ofstream os(path, std::ios::binary);
      os << "theorem,n,q,params,root_index,lower,upper,value\n";
      for (const RootRow* row : rows) {
        os << row->theorem << ',' << row->n << ',' << row->q << ',' << row->params << ',' << row->index << ','
           << row->lower << ',' << row->upper << ',' << row->value << '\n';
      }
      if (!os) throw Error(ErrorKind::Config, "cannot write " + path.string());
      written.push_back(path);
    }
  }
  return written;
}

void load_grid(const std::filesystem::path& path, SuiteConfig& cfg) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::Config, "cannot read grid file " + path.string());
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Config, std::string("grid file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::Config, "grid file must hold a JSON object");
  static const std::set<std::string> known = {"q", "n_min", "n_max", "k", "points", "theorem", "tol_zero", "tol_nonzero"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw Error(ErrorKind::Config, "unknown grid key '" + key + "'");
  }
  const auto rational = [](const json& v) {
    if (!v.is_string()) throw Error(ErrorKind::Config, "rationals must be \"p/q\" strings");
    return Rational::parse(v.get<std::string>());
  };
  const auto integer = [](const json& v, const char* what) {
    if (!v.is_number_integer()) throw Error(ErrorKind::Config, std::string(what) + " must be an integer");
    return v.get<int>();
  };
  if (doc.contains("q")) {
    if (!doc["q"].is_array()) throw Error(ErrorKind::Config, "\"q\" must be a list");
    std::vector<Rational> qs;
    for (const auto& v : doc["q"]) {
      qs.push_back(rational(v));
      ParamPoint check(qs.back());  // rejects q outside (0, 1)
    }
    cfg.qs = qs;
  }
  if (doc.contains("n_min")) cfg.n_min = integer(doc["n_min"], "n_min");
  if (doc.contains("n_max")) cfg.n_max = integer(doc["n_max"], "n_max");
  if (doc.contains("k")) {
    if (!doc["k"].is_array()) throw Error(ErrorKind::Config, "\"k\" must be a list");
    std::vector<int> ks;
    for (const auto& v : doc["k"]) ks.push_back(integer(v, "k"));
    cfg.ks = ks;
  }
  if (doc.contains("points")) {
    if (!doc["points"].is_array()) throw Error(ErrorKind::Config, "\"points\" must be a list");
    std::vector<Point> points;
    for (const auto& obj : doc["points"]) {
      if (!obj.is_object()) throw Error(ErrorKind::Config, "each point must be an object");
      Point p;
      for (const auto& [name, value] : obj.items()) p.emplace(name, rational(value));
      points.push_back(std::move(p));
    }
    cfg.points = points;
  }
  if (doc.contains("theorem")) {
    if (!doc["theorem"].is_string()) throw Error(ErrorKind::Config, "\"theorem\" must be a string");
    cfg.theorem = parse_zero_theorem(doc["theorem"].get<std::string>());
  }
  if (doc.contains("tol_zero")) cfg.tol.zero = doc["tol_zero"].get<double>();
  if (doc.contains("tol_nonzero")) cfg.tol.nonzero = doc["tol_nonzero"].get<double>();
  if (cfg.n_min && cfg.n_max && *cfg.n_min > *cfg.n_max && !(doc.contains("points") && doc["points"].empty())) {
    throw Error(ErrorKind::Config, "n_min exceeds n_max");
  }
}

}  // namespace qortho::suite
