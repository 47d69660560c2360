#include "stieltjes/cli/runner.hpp"

#include "stieltjes/approx.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/hankel.hpp"
#include "stieltjes/laguerre.hpp"
#include "stieltjes/polysys.hpp"
#include "stieltjes/resolvent.hpp"

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace stieltjes::cli {

using nlohmann::json;

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.to_string());
  return a;
}

json to_json(const SFraction& sf) {
  json a = json::array();
  for (const auto& pr : sf.pairs) a.push_back({{"m", to_json(pr.m)}, {"l", to_json(pr.l)}});
  return a;
}

json to_json(const PFraction& p) {
  json a = json::array(), b = json::array();
  for (const auto& x : p.a) a.push_back(to_json(x));
  for (const auto& x : p.b) b.push_back(to_json(x));
  return {{"a", a}, {"b", b}, {"truncated", p.truncated}};
}

namespace {

using cli::to_json;

json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const PolyMatrix2& w) {
  return {{"w11", to_json(w.w11)}, {"w12", to_json(w.w12)}, {"w21", to_json(w.w21)}, {"w22", to_json(w.w22)}};
}

json to_json(const RationalMatrix2& w) {
  return {{"w11", to_json(w.w11)}, {"w12", to_json(w.w12)}, {"w21", to_json(w.w21)}, {"w22", to_json(w.w22)}};
}

json to_json(const Inertia& i) { return {{"negative", i.negative}, {"zero", i.zero}, {"positive", i.positive}}; }

json to_json(const FromMinusOne<Poly>& v) {
  json a = json::array();
  for (const auto& p : v.raw()) a.push_back(to_json(p));
  return a;
}

json to_json(const IndexBudget& b) {
  json per = json::array();
  for (const auto& f : b.per_factor)
    per.push_back({{"kappa_zm", f.kappa_zm}, {"kappa_m", f.kappa_m}, {"kappa_zl", f.kappa_zl}});
  return {{"kappa_N", b.kappa_N}, {"k_N", b.k_N}, {"k_N_plus", b.k_N_plus}, {"per_factor", per}};
}

const char* to_string(Trend t) {
  switch (t) {
    case Trend::Convergent: return "convergent";
    case Trend::Divergent: return "divergent";
    case Trend::Unclear: return "unclear";
  }
  return "unclear";
}

const JobInput& require_input(const JobSpec& job) {
  if (!job.input) throw JobError("no input given: use --input, --moments or --alpha", "command line");
  return *job.input;
}

Parity parity_of(const JobOptions& o) {
  const std::string p = o.parity.value_or("even");
  if (p == "even") return Parity::Even;
  if (p == "odd") return Parity::Odd;
  throw JobError("parity must be even or odd", "--parity");
}

PadeKind kind_of(const JobOptions& o) {
  const std::string k = o.kind.value_or("diagonal");
  if (k == "diagonal") return PadeKind::Diagonal;
  if (k == "subdiagonal") return PadeKind::Subdiagonal;
  throw JobError("kind must be diagonal or subdiagonal", "--kind");
}

SFraction fraction_prefix(const SFraction& sf, std::optional<std::size_t> N) {
  if (!N) return sf;
  if (*N > sf.size())
    throw DomainError("fraction has only " + std::to_string(sf.size()) + " pairs, need " + std::to_string(*N));
  return SFraction{std::vector<SPair>(sf.pairs.begin(), sf.pairs.begin() + static_cast<std::ptrdiff_t>(*N))};
}

json cmd_analyze(const JobSpec& job) {
  const MomentSequence s = resolve_moments(require_input(job));
  const HankelReport h = class_indices(s);
  json r;
  r["moments_used"] = s.size();
  r["normal_indices"] = h.normal_indices;
  r["dets"] = to_json(h.dets);
  r["dets_plus"] = to_json(h.dets_plus);
  r["inertia"] = json::array();
  for (const auto& i : h.inertia) r["inertia"].push_back(to_json(i));
  r["inertia_plus"] = json::array();
  for (const auto& i : h.inertia_plus) r["inertia_plus"].push_back(to_json(i));
  r["kappa"] = h.kappa ? json(*h.kappa) : json(nullptr);
  r["k_plus"] = h.k_plus ? json(*h.k_plus) : json(nullptr);
  r["kappa_stabilized"] = h.kappa_stabilized;
  r["k_plus_stabilized"] = h.k_plus_stabilized;
  r["regular"] = h.regular;
  const SFraction sf = schur_s_fraction_all(s);
  r["schur_steps"] = sf.size();
  if (sf.size() > 0) {
    const IndexBudget b = index_budget(sf, sf.size());
    r["budget"] = to_json(b);
    r["k"] = b.k_N;
  } else {
    r["k"] = r["k_plus"];
  }
  return r;
}

json cmd_fractions(const JobSpec& job) {
  const JobInput& in = require_input(job);
  SFraction sf;
  json r;
  if (const auto* given = std::get_if<SFractionInput>(&in)) {
    sf = fraction_prefix(given->fraction, job.options.N);
  } else {
    const MomentSequence s = resolve_moments(in);
    sf = job.options.N ? schur_s_fraction(s, *job.options.N).fraction : schur_s_fraction_all(s);
    r["p_fraction"] = to_json(p_fraction(s));
  }
  if (job.options.emit) return {{"s_fraction", to_json(sf)}, {"length", 2 * sf.normal_index(sf.size())}};
  if (!r.contains("p_fraction")) r["p_fraction"] = to_json(p_from_s(sf));
  r["s_fraction"] = to_json(sf);
  json n = json::array();
  for (std::size_t j = 1; j <= sf.size(); ++j) n.push_back(sf.normal_index(j));
  r["normal_indices"] = n;
  return r;
}

json cmd_moments(const JobSpec& job) {
  const JobInput& in = require_input(job);
  if (job.options.from_fraction && !std::holds_alternative<SFractionInput>(in))
    throw JobError("--from-fraction expects an s_fraction job", "input");
  return {{"moments", to_json(resolve_moments(in).values())}};
}

json cmd_polys(const JobSpec& job) {
  const SFraction sf = resolve_fraction(require_input(job));
  const std::size_t N = job.options.N.value_or(sf.size());
  const PolySystem ps = build_poly_system(sf, N);
  return {{"N", N},
          {"first_index", -1},
          {"lanczos_P", to_json(ps.lanczos_P)},
          {"lanczos_Q", to_json(ps.lanczos_Q)},
          {"stieltjes_P", to_json(ps.stieltjes_P)},
          {"stieltjes_Q", to_json(ps.stieltjes_Q)},
          {"btilde", to_json(ps.btilde)}};
}

json cmd_resolvent(const JobSpec& job) {
  const JobInput& in = require_input(job);
  const SFraction sf = resolve_fraction(in);
  const std::size_t N = job.options.N.value_or(sf.size());
  const Parity parity = parity_of(job.options);
  const ResolventMatrix W = resolvent(sf, N, parity);
  json r{{"N", N},
         {"parity", parity == Parity::Even ? "even" : "odd"},
         {"W", to_json(W.W)},
         {"det", to_json(W.W.det())},
         {"factors", W.factors.size()},
         {"budget", to_json(index_budget(sf, N))}};
  if (job.options.tau) {
    const SolutionCandidate c = solution_candidate(W, *job.options.tau, resolve_moments(in));
    r["candidate"] = {{"numer", to_json(c.f.numer)}, {"denom", to_json(c.f.denom)}, {"matched_order", c.matched_order}};
  }
  return r;
}

json cmd_pade(const JobSpec& job) {
  const MomentSequence s = resolve_moments(require_input(job));
  const std::size_t j = job.options.j.value_or(1);
  const PadeResult p = pade(s, j, kind_of(job.options));
  return {{"kind", p.kind == PadeKind::Diagonal ? "diagonal" : "subdiagonal"},
          {"j", j},
          {"n", p.n},
          {"numer", to_json(p.numer)},
          {"denom", to_json(p.denom)},
          {"verified_order", p.verified_order}};
}

json cmd_determinacy(const JobSpec& job) {
  const SFraction sf = resolve_fraction(require_input(job));
  const DeterminacyReport d = determinacy(sf, job.options.N.value_or(sf.size()));
  return {{"N", d.N},
          {"partial_M", to_json(d.partial_M)},
          {"partial_L", to_json(d.partial_L)},
          {"l_all_positive", d.l_all_positive},
          {"inertia_series", to_json(d.inertia_series)},
          {"m_trend", to_string(d.m_trend)},
          {"l_trend", to_string(d.l_trend)},
          {"verdict", to_string(d.verdict)}};
}

std::string float_text(double x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return os.str();
}

json cmd_probe(const JobSpec& job) {
  const SFraction sf = resolve_fraction(require_input(job));
  const std::size_t N = job.options.N.value_or(sf.size());
  std::vector<std::size_t> Ns;
  for (std::size_t n = 1; n < N; n *= 2) Ns.push_back(n);
  if (N > 0) Ns.push_back(N);
  const std::vector<Rational> points = job.options.points.value_or(std::vector<Rational>{Rational(1)});
  json rows = json::array();
  for (const ProbeRow& row : winf_probe(sf, points, Ns)) {
    json jr{{"N", row.N}, {"z", to_json(row.z)}, {"W", to_json(row.W)}};
    if (job.options.floats)
      jr["W_float"] = {{"w11", row.W.w11.to_double()},
                       {"w12", row.W.w12.to_double()},
                       {"w21", row.W.w21.to_double()},
                       {"w22", row.W.w22.to_double()}};
    rows.push_back(std::move(jr));
  }
  return {{"rows", rows}, {"floats", job.options.floats}};
}

json cmd_laguerre_demo(const JobSpec& job) {
  LaguerreInput li{Rational(-3, 2), 10};
  if (job.input) {
    const auto* given = std::get_if<LaguerreInput>(&*job.input);
    if (!given) throw JobError("laguerre-demo takes a laguerre input", "input");
    li = *given;
  }
  const LaguerreConfig cfg = laguerre_config(li.alpha, li.count);
  const MomentSequence s = laguerre_moments(cfg);
  const LaguerreClosedForms cf = laguerre_closed_forms(cfg);
  const std::size_t N = cf.s_fraction.size();
  const SFraction schur = schur_s_fraction(s, N).fraction;
  PFraction p = p_fraction(s);
  p.a.resize(std::min(p.a.size(), N));
  p.b.resize(std::min(p.b.size(), N));
  bool polys_agree = true;
  const LanczosPolys L = lanczos(cf.p_fraction, N);
  for (std::size_t n = 0; n <= N; ++n) {
    const auto [P, Q] = laguerre_polys(cfg, n);
    polys_agree = polys_agree && P == L.P[static_cast<long>(n)] && Q == L.Q[static_cast<long>(n)];
  }
  const HankelReport h = class_indices(s);
  json r{{"alpha", to_json(cfg.alpha)},
         {"count", cfg.count},
         {"gamma_sign", cfg.gamma_sign},
         {"moments", to_json(s.values())},
         {"closed_form", {{"s_fraction", to_json(cf.s_fraction)}, {"p_fraction", to_json(cf.p_fraction)}}},
         {"schur_agrees", schur == cf.s_fraction},
         {"p_fraction_agrees", p == cf.p_fraction},
         {"polys_agree", polys_agree},
         {"kappa", h.kappa ? json(*h.kappa) : json(nullptr)},
         {"k_plus", h.k_plus ? json(*h.k_plus) : json(nullptr)},
         {"regular", h.regular}};
  if (N > 0) r["budget"] = to_json(index_budget(cf.s_fraction, N));
  return r;
}

struct Suite {
  std::size_t checks = 0;
  json failures = json::array();
  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  json to_json() const { return {{"checks", checks}, {"failures", failures}, {"passed", failures.empty()}}; }
};

json cmd_verify(const JobSpec& job, bool& passed) {
  const JobInput& in = require_input(job);
  const MomentSequence s = resolve_moments(in);
  const SFraction sf = fraction_prefix(resolve_fraction(in), job.options.N);
  const std::size_t N = sf.size();
  json suites;

  Suite ident;
  const IdentityReport rep = verify_identities(build_poly_system(sf, N), sf);
  for (const auto& c : rep.checks)
    ident.check(c.passed, c.name + "[" + std::to_string(c.index) + "]: " + c.lhs + " != " + c.rhs);
  suites["identities"] = ident.to_json();

  Suite structural;
  const PFraction p = p_from_s(sf);
  const StieltjesPolys rec = stieltjes_polys(sf, N);
  const StieltjesPolys det = stieltjes_by_determinants(p, N);
  structural.check(rec.P == det.P && rec.Q == det.Q, "recurrence vs determinant Stieltjes polynomials");
  for (std::size_t j = 1; j <= N; ++j)
    structural.check(convergent(sf, 2 * j) == convergent(p, j), "S/P convergent " + std::to_string(j));
  structural.check(s_from_p(p) == sf, "P -> S round trip");
  if (!std::holds_alternative<SFractionInput>(in)) {
    PFraction direct = p_fraction(s);
    direct.a.resize(std::min(direct.a.size(), N));
    direct.b.resize(std::min(direct.b.size(), N));
    structural.check(direct == p, "p_fraction vs S -> P conversion");
  }
  suites["structural"] = structural.to_json();

  Suite resolvents;
  for (std::size_t j = 1; j <= N; ++j) {
    resolvents.check(resolvent(sf, j, Parity::Even).W.det() == Poly(1), "det W_" + std::to_string(2 * j));
    resolvents.check(resolvent(sf, j, Parity::Odd).W.det() == Poly(1), "det W_" + std::to_string(2 * j - 1));
  }
  for (std::size_t M = 1; M < N; ++M) {
    const SchurResult head = schur_s_fraction(s, M);
    const SFraction induced = schur_s_fraction_all(head.induced);
    const std::size_t avail = std::min(N - M, induced.size());
    for (std::size_t k = 1; k <= avail; ++k)
      resolvents.check(resolvent(sf, M + k, Parity::Even).W ==
                           resolvent(sf, M, Parity::Even).W * resolvent(induced, k, Parity::Even).W,
                       "nesting N=" + std::to_string(M) + " j=" + std::to_string(M + k));
  }
  suites["resolvent"] = resolvents.to_json();

  Suite pades;
  for (std::size_t j = 1; j <= N; ++j) {
    for (PadeKind kind : {PadeKind::Diagonal, PadeKind::Subdiagonal}) {
      const std::string name = std::string(kind == PadeKind::Diagonal ? "diagonal" : "subdiagonal") + " j=" +
                               std::to_string(j);
      try {
        const PadeResult r = pade(s, j, kind);
        const std::size_t need = kind == PadeKind::Diagonal ? 2 * r.n : 2 * r.n - 1;
        pades.check(r.verified_order >= std::min(need, s.size()), name);
      } catch (const InternalError& e) {
        pades.check(false, name + ": " + e.what());
      }
    }
  }
  suites["pade"] = pades.to_json();

  passed = true;
  for (const auto& [name, suite] : suites.items()) passed = passed && suite["passed"].get<bool>();
  return {{"N", N}, {"suites", suites}, {"passed", passed}};
}

void render_text(const json& v, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  auto flat = [&](const json& x) {
    if (!x.is_array()) return false;
    for (const auto& e : x)
      if (e.is_structured()) return false;
    return true;
  };
  auto inline_array = [&](const json& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + scalar(x[i]);
    return s + "]";
  };
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (val.is_structured() && !flat(val)) {
        out << pad << key << ":\n";
        render_text(val, out, indent + 2);
      } else {
        out << pad << key << ": " << (val.is_array() ? inline_array(val) : scalar(val)) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& e : v) {
      if (e.is_structured() && !flat(e)) {
        out << pad << "-\n";
        render_text(e, out, indent + 2);
      } else {
        out << pad << "- " << (e.is_array() ? inline_array(e) : scalar(e)) << "\n";
      }
    }
  } else {
    out << pad << scalar(v) << "\n";
  }
}

void render_csv(const json& report, std::ostream& out) {
  if (!report.contains("rows")) throw JobError("csv output is only available for probe", "--format");
  const bool floats = report.value("floats", false);
  out << "N,z,w11,w12,w21,w22\n";
  for (const auto& row : report["rows"]) {
    out << row["N"].get<std::size_t>() << ',' << row["z"].get<std::string>();
    for (const char* k : {"w11", "w12", "w21", "w22"}) {
      out << ',';
      if (floats)
        out << float_text(row["W_float"][k].get<double>());
      else
        out << row["W"][k].get<std::string>();
    }
    out << '\n';
  }
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

Outcome execute(const JobSpec& job) {
  const std::string& c = job.command;
  Outcome o;
  if (c == "analyze") o.report = cmd_analyze(job);
  else if (c == "fractions") o.report = cmd_fractions(job);
  else if (c == "moments") o.report = cmd_moments(job);
  else if (c == "polys") o.report = cmd_polys(job);
  else if (c == "resolvent") o.report = cmd_resolvent(job);
  else if (c == "pade") o.report = cmd_pade(job);
  else if (c == "determinacy") o.report = cmd_determinacy(job);
  else if (c == "probe") o.report = cmd_probe(job);
  else if (c == "laguerre-demo") {
    o.report = cmd_laguerre_demo(job);
    const bool ok = o.report["schur_agrees"].get<bool>() && o.report["p_fraction_agrees"].get<bool>() &&
                    o.report["polys_agree"].get<bool>();
    if (!ok) o.exit_code = kInternalError;
  } else if (c == "verify") {
    bool passed = false;
    o.report = cmd_verify(job, passed);
    if (!passed) o.exit_code = kInternalError;
  } else {
    throw JobError("unknown command \"" + c + "\"", "command");
  }
  return o;
}

void render(const json& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: out << report.dump(2) << "\n"; break;
    case Format::Text: render_text(report, out, 0); break;
    case Format::Csv: render_csv(report, out); break;
  }
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    const Outcome o = execute(job);
    render(o.report, job.options.format.value_or(Format::Json), out);
    return o.exit_code;
  } catch (const JobError& e) {
    json j = error_json("parse", e.what());
    j["error"]["position"] = e.position();
    err << j.dump() << "\n";
    return kParseError;
  } catch (const InsufficientMoments& e) {
    json j = error_json("insufficient_moments", e.what());
    j["error"]["required"] = e.required();
    j["error"]["available"] = e.available();
    err << j.dump() << "\n";
    return kDomainError;
  } catch (const NotRegular& e) {
    json j = error_json("not_regular", e.what());
    j["error"]["step"] = e.step();
    err << j.dump() << "\n";
    return kDomainError;
  } catch (const DomainError& e) {
    err << error_json("domain", e.what()).dump() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << "\n";
    return kInternalError;
  }
}

}  // namespace stieltjes::cli
