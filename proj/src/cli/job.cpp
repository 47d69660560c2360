#include "stieltjes/cli/job.hpp"

#include "stieltjes/errors.hpp"

#include <json.hpp>

namespace stieltjes::cli {

using nlohmann::json;

namespace {

std::string join_path(const std::string& base, const std::string& key) { return base + "/" + key; }

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational_at(v.get<std::string>(), where);
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw JobError("expected a rational string \"p/q\" or an integer", where);
}

std::vector<Rational> rational_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw JobError("expected an array", where);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_from_json(v[i], join_path(where, std::to_string(i))));
  return out;
}

std::size_t count_from_json(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw JobError("expected a nonnegative integer", where);
  return v.get<std::size_t>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw JobError("unknown field \"" + key + "\"", join_path(where, key));
  }
}

std::string string_from_json(const json& v, const std::string& where) {
  if (!v.is_string()) throw JobError("expected a string", where);
  return v.get<std::string>();
}

JobOptions options_from_json(const json& o, const std::string& where) {
  if (!o.is_object()) throw JobError("expected an object", where);
  reject_unknown(o, {"N", "j", "parity", "kind", "tau", "points", "format"}, where);
  JobOptions opt;
  if (o.contains("N")) opt.N = count_from_json(o["N"], join_path(where, "N"));
  if (o.contains("j")) opt.j = count_from_json(o["j"], join_path(where, "j"));
  if (o.contains("parity")) opt.parity = string_from_json(o["parity"], join_path(where, "parity"));
  if (o.contains("kind")) opt.kind = string_from_json(o["kind"], join_path(where, "kind"));
  if (o.contains("format")) opt.format = parse_format(string_from_json(o["format"], join_path(where, "format")));
  if (o.contains("points")) opt.points = rational_list(o["points"], join_path(where, "points"));
  if (o.contains("tau")) {
    const json& t = o["tau"];
    const std::string tw = join_path(where, "tau");
    if (t.is_string()) {
      opt.tau = parse_tau(t.get<std::string>());
    } else if (t.is_object()) {
      reject_unknown(t, {"numer", "denom"}, tw);
      if (!t.contains("numer") || !t.contains("denom")) throw JobError("tau needs numer and denom", tw);
      RationalFunction f{Poly(rational_list(t["numer"], join_path(tw, "numer"))),
                         Poly(rational_list(t["denom"], join_path(tw, "denom")))};
      if (f.denom.is_zero()) throw JobError("tau has a zero denominator", tw);
      opt.tau = f;
    } else {
      throw JobError("expected a string or {numer, denom}", tw);
    }
  }
  return opt;
}

std::vector<Rational> coefficient_list(const std::string& text, bool integers_only, const std::string& what) {
  std::vector<Rational> out;
  std::size_t start = 0, item = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::string pos = what + " item " + std::to_string(item);
    if (integers_only && tok.find('/') != std::string::npos)
      throw JobError("bracket the coefficient lists to use rational coefficients", pos);
    out.push_back(parse_rational_at(tok, pos));
    if (comma == std::string::npos) break;
    start = comma + 1;
    ++item;
  }
  return out;
}

}  // namespace

Rational parse_rational_at(const std::string& text, const std::string& position) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw JobError(std::string("bad rational \"") + text + "\": " + e.what(), position);
  } catch (const std::domain_error& e) {
    throw JobError(std::string("bad rational \"") + text + "\": " + e.what(), position);
  }
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& what) {
  return coefficient_list(text, false, what);
}

Tau parse_tau(const std::string& text) {
  if (text == "zero" || text == "0") return TauSymbol::Zero;
  if (text == "infinity" || text == "inf") return TauSymbol::Infinity;
  std::string num, den;
  bool bracketed = false;
  if (!text.empty() && text.front() == '[') {
    const std::size_t close = text.find(']');
    if (close == std::string::npos || close + 2 >= text.size() || text[close + 1] != '/' || text[close + 2] != '[' ||
        text.back() != ']')
      throw JobError("expected [NUM]/[DEN]", "--tau");
    num = text.substr(1, close - 1);
    den = text.substr(close + 3, text.size() - close - 4);
    bracketed = true;
  } else {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos || text.find('/', slash + 1) != std::string::npos)
      throw JobError("expected NUM_COEFFS/DEN_COEFFS", "--tau");
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  RationalFunction f{Poly(coefficient_list(num, !bracketed, "--tau numerator")),
                     Poly(coefficient_list(den, !bracketed, "--tau denominator"))};
  if (f.denom.is_zero()) throw JobError("tau has a zero denominator", "--tau");
  return f;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  throw JobError("unknown format \"" + text + "\"", "--format");
}

JobSpec parse_job_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw JobError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw JobError("job must be a JSON object", "/");
  reject_unknown(doc, {"moments", "laguerre", "s_fraction", "length", "command", "options"}, "");

  JobSpec job;
  const int inputs = static_cast<int>(doc.contains("moments")) + static_cast<int>(doc.contains("laguerre")) +
                     static_cast<int>(doc.contains("s_fraction"));
  if (inputs != 1) throw JobError("exactly one of moments, laguerre, s_fraction is required", "/");
  if (doc.contains("length") && !doc.contains("s_fraction"))
    throw JobError("length is only valid with s_fraction", "/length");

  if (doc.contains("moments")) {
    job.input = InlineMoments{MomentSequence(rational_list(doc["moments"], "/moments"))};
  } else if (doc.contains("laguerre")) {
    const json& l = doc["laguerre"];
    if (!l.is_object()) throw JobError("expected an object", "/laguerre");
    reject_unknown(l, {"alpha", "count"}, "/laguerre");
    if (!l.contains("alpha")) throw JobError("laguerre needs alpha", "/laguerre");
    LaguerreInput in;
    in.alpha = rational_from_json(l["alpha"], "/laguerre/alpha");
    if (l.contains("count")) in.count = count_from_json(l["count"], "/laguerre/count");
    job.input = in;
  } else {
    const json& arr = doc["s_fraction"];
    if (!arr.is_array()) throw JobError("expected an array", "/s_fraction");
    SFractionInput in;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "/s_fraction/" + std::to_string(i);
      const json& pr = arr[i];
      if (!pr.is_object()) throw JobError("expected {m, l}", where);
      reject_unknown(pr, {"m", "l"}, where);
      if (!pr.contains("m") || !pr.contains("l")) throw JobError("pair needs m and l", where);
      SPair p{Poly(rational_list(pr["m"], where + "/m")), rational_from_json(pr["l"], where + "/l")};
      if (p.m.is_zero()) throw JobError("m must be a nonzero polynomial", where + "/m");
      if (p.l.is_zero()) throw JobError("l must be nonzero", where + "/l");
      in.fraction.pairs.push_back(std::move(p));
    }
    if (doc.contains("length")) in.length = count_from_json(doc["length"], "/length");
    job.input = in;
  }
  if (doc.contains("command")) job.command = string_from_json(doc["command"], "/command");
  if (doc.contains("options")) job.options = options_from_json(doc["options"], "/options");
  return job;
}

MomentSequence resolve_moments(const JobInput& in) {
  if (const auto* m = std::get_if<InlineMoments>(&in)) return m->moments;
  if (const auto* l = std::get_if<LaguerreInput>(&in)) return laguerre_moments(laguerre_config(l->alpha, l->count));
  const auto& sf = std::get<SFractionInput>(in);
  const std::size_t len = sf.length.value_or(2 * sf.fraction.normal_index(sf.fraction.size()));
  return moments_from_s_fraction(sf.fraction, len);
}

SFraction resolve_fraction(const JobInput& in) {
  if (const auto* sf = std::get_if<SFractionInput>(&in)) return sf->fraction;
  return schur_s_fraction_all(resolve_moments(in));
}

}  // namespace stieltjes::cli
