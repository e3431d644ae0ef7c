#include "udeform/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "udeform/analysis.hpp"
#include "udeform/contfrac.hpp"
#include "udeform/errors.hpp"
#include "udeform/qdeform.hpp"
#include "udeform/udeform.hpp"

#ifndef UDEFORM_VERSION
#define UDEFORM_VERSION "0.0.0"
#endif

namespace udeform::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { text, json, latex };

struct Options {
  std::string format = "text";
  std::string u;
  std::string x;
  std::string constant;
  std::string j;
  std::size_t order = 10;
  std::string property;
  std::size_t max_ell = 10;
  unsigned jobs = 1;
  std::size_t from_index = 0;
  bool heuristic = false;
};

struct Output {
  json input = json::object();
  json result = json::object();
  std::string text;
  std::string latex;
  int code = kOk;
};

struct Matrix {
  std::string spec;
  bool symbolic = false;
  std::optional<IntParams> ints;
  PolyParams polys = szero_family();
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

Matrix parse_matrix(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) parts.push_back(trim(item));
  if (parts.size() != 4 || spec.empty() || spec.back() == ',') {
    throw ParseError("matrix must be four comma-separated entries like p,1,1,0: '" + spec + "'");
  }
  Matrix m;
  m.spec = spec;
  std::array<RingPoly, 4> poly;
  std::array<BigInt, 4> num;
  for (std::size_t i = 0; i < 4; ++i) {
    if (parts[i] == "p") {
      m.symbolic = true;
      poly[i] = RingPoly::variable();
    } else {
      num[i] = parse_bigint(parts[i]);
      poly[i] = RingPoly::constant(num[i]);
    }
  }
  if (m.symbolic) {
    m.polys = PolyParams::make(poly[0], poly[1], poly[2], poly[3]);
  } else {
    m.ints = IntParams::make(num[0], num[1], num[2], num[3]);
    m.polys = to_poly_params(*m.ints);
  }
  return m;
}

std::size_t max_order() {
  const char* env = std::getenv("UDEFORM_MAX_ORDER");
  if (env == nullptr || *env == '\0') return 200;
  try {
    return to_count(parse_bigint(env));
  } catch (const std::exception&) {
    throw ParseError(std::string("UDEFORM_MAX_ORDER must be a non-negative integer: '") + env + "'");
  }
}

void check_order(std::size_t order) {
  const auto cap = max_order();
  if (order > cap) {
    throw DomainError("order " + std::to_string(order) + " exceeds UDEFORM_MAX_ORDER=" + std::to_string(cap));
  }
}

json poly_json(const RingPoly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(to_string(c));
  return a;
}

json ratfun_json(const RationalFunction& f) { return {{"num", poly_json(f.num())}, {"den", poly_json(f.den())}}; }

json series_json(const TruncatedSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_string(c));
  return a;
}

json terms_json(std::span<const BigInt> terms) {
  json a = json::array();
  for (const auto& t : terms) a.push_back(to_string(t));
  return a;
}

std::string series_latex(const TruncatedSeries& s, std::string_view var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i <= s.order(); ++i) {
    const Rational& c = s[i];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (!first || c < 0) out << (c < 0 ? "-" : "+");
    first = false;
    if (i == 0 || mag != 1) {
      if (denominator_of(mag) == 1) {
        out << to_string(mag);
      } else {
        out << "\\frac{" << numerator_of(mag) << "}{" << denominator_of(mag) << '}';
      }
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^{" << i << '}';
  }
  if (first) out << '0';
  out << "+O(" << var << "^{" << s.order() + 1 << "})";
  return out.str();
}

std::string coefficient_line(const TruncatedSeries& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i <= s.order(); ++i) out << (i ? ", " : "") << to_string(s[i]);
  return out.str();
}

StreamingCF constant_stream(const std::string& name) {
  if (name == "e") return StreamingCF::e();
  if (name == "pi") return StreamingCF::pi();
  if (name == "golden") return StreamingCF::golden();
  throw ParseError("unknown constant '" + name + "' (expected e, pi or golden)");
}

// Commands ------------------------------------------------------------------

Output cmd_eval(const Options& o) {
  const Matrix m = parse_matrix(o.u);
  const Rational x = parse_rational(o.x);
  Output doc;
  doc.input = {{"u", o.u}, {"x", to_string(x)}};
  RingPoly fx, finv;
  RationalFunction value;
  if (m.symbolic) {
    const auto v = f_pair(m.polys, x);
    value = fraction_of(v.fx, v.finv);
    fx = v.fx;
    finv = v.finv;
  } else {
    const auto v = f_pair(*m.ints, x);
    value = RationalFunction(fraction_of(v.fx, v.finv));
    fx = RingPoly::constant(v.fx);
    finv = RingPoly::constant(v.finv);
  }
  doc.result = {{"fx", poly_json(fx)}, {"finv", poly_json(finv)}, {"value", ratfun_json(value)}};
  const std::string shown =
      m.symbolic ? to_string(value) : to_string(fraction_of(fx.coeff(0), finv.coeff(0)));
  doc.text = "f_U(x)   = " + to_string(fx) + "\nf_U(1/x) = " + to_string(finv) + "\n[x]_U    = " + shown + "\n";
  doc.latex = "f_U(x) = " + to_latex(fx) + "\\\\\nf_U(1/x) = " + to_latex(finv) +
              "\\\\\n\\llbracket x\\rrbracket_U = " + to_latex(value) + "\n";
  return doc;
}

Output cmd_series(const Options& o) {
  check_order(o.order);
  const Matrix m = parse_matrix(o.u);
  Output doc;
  doc.input = {{"u", o.u}};
  TruncatedSeries s(0);
  if (!o.constant.empty()) {
    doc.input["const"] = o.constant;
    doc.input["order"] = o.order;
    auto src = constant_stream(o.constant);
    if (m.polys != szero_family() && !o.heuristic) {
      throw DomainError("stabilization is proved only for U = p,1,1,0; pass --heuristic to require agreement instead");
    }
    const auto r = irrational_series(src, m.polys, o.order);
    s = r.series;
    doc.result = {{"coefficients", series_json(s)}, {"proved", r.proved}, {"terms_used", r.terms_used}};
  } else {
    const Rational x = parse_rational(o.x);
    doc.input["x"] = to_string(x);
    doc.input["order"] = o.order;
    s = deformed_series(m.polys, x, o.order);
    doc.result = {{"coefficients", series_json(s)}};
  }
  doc.text = to_string(s) + "\n" + coefficient_line(s) + "\n";
  doc.latex = series_latex(s, "p") + "\n";
  return doc;
}

Output cmd_qseries(const Options& o) {
  check_order(o.order);
  Output doc;
  TruncatedSeries s(0);
  if (!o.constant.empty()) {
    doc.input = {{"const", o.constant}, {"order", o.order}};
    auto src = constant_stream(o.constant);
    const auto r = q_deform_series(src, o.order);
    s = r.series;
    doc.result = {{"coefficients", series_json(s)}, {"terms_used", r.terms_used}};
  } else {
    const Rational x = parse_rational(o.x);
    doc.input = {{"x", to_string(x)}, {"order", o.order}};
    s = q_deform_series(cf_expand(x), o.order);
    doc.result = {{"coefficients", series_json(s)}};
  }
  doc.text = to_string(s, "q") + "\n" + coefficient_line(s) + "\n";
  doc.latex = series_latex(s, "q") + "\n";
  return doc;
}

Output cmd_compare(const Options& o) {
  check_order(o.order);
  const Rational x = parse_rational(o.x);
  const auto cf = cf_expand(x);
  const auto us = deformed_series(szero_family(), std::span<const BigInt>(cf.terms()), o.order);
  const auto qs = q_deform_series(cf, o.order);
  Output doc;
  doc.input = {{"x", to_string(x)}, {"order", o.order}};
  doc.result = {{"u", series_json(us)}, {"q", series_json(qs)}};
  std::ostringstream text;
  text << "i\tU=(p,1;1,0)\tq (MGO)\n";
  for (std::size_t i = 0; i <= o.order; ++i) text << i << '\t' << to_string(us[i]) << '\t' << to_string(qs[i]) << '\n';
  doc.text = text.str();
  std::ostringstream latex;
  latex << "\\begin{tabular}{rrr}\n$i$ & $U$ & $q$\\\\\n\\hline\n";
  for (std::size_t i = 0; i <= o.order; ++i) latex << i << " & " << us[i] << " & " << qs[i] << "\\\\\n";
  latex << "\\end{tabular}\n";
  doc.latex = latex.str();
  return doc;
}

const std::array<std::string, 9> kProperties = {"defining-equations", "integrality", "unimodality",
                                                "anti-unimodality",   "alternation", "stabilization",
                                                "stabilization-sharp", "involution", "oracle-equivalence"};

Output cmd_check(const Options& o) {
  if (std::find(kProperties.begin(), kProperties.end(), o.property) == kProperties.end()) {
    throw ParseError("unknown property '" + o.property + "'");
  }
  check_order(o.order);
  const std::string u_spec = o.u.empty() ? "p,1,1,0" : o.u;
  const Matrix m = parse_matrix(u_spec);
  const bool szero = m.polys == szero_family();
  const bool rzero = m.polys == rzero_family();
  const std::string& p = o.property;
  PropertyReport report;
  bool proved = false;
  if (p == "defining-equations") {
    report = m.symbolic ? sweep_defining_equations(m.polys, o.max_ell, o.jobs)
                        : sweep_defining_equations(*m.ints, o.max_ell, o.jobs);
    proved = true;
  } else if (p == "oracle-equivalence") {
    report = m.symbolic ? sweep_oracle_equivalence(m.polys, o.max_ell, o.jobs)
                        : sweep_oracle_equivalence(*m.ints, o.max_ell, o.jobs);
    proved = true;
  } else if (p == "integrality") {
    report = sweep_integrality(m.polys, o.max_ell, o.order, o.jobs);
    proved = szero || rzero;
  } else if (p == "unimodality") {
    report = sweep_unimodality(m.polys, o.max_ell, o.jobs);
  } else if (p == "anti-unimodality") {
    report = sweep_anti_unimodality(m.polys, o.max_ell, o.from_index, o.jobs);
  } else if (p == "alternation") {
    report = sweep_alternation(m.polys, o.max_ell, o.order, o.from_index, o.jobs);
  } else if (p == "stabilization" || p == "stabilization-sharp") {
    report = sweep_stabilization(m.polys, o.max_ell, p == "stabilization-sharp", o.jobs);
    proved = szero;
  } else {
    report = sweep_involution(o.max_ell, o.jobs);
    proved = true;
  }

  Output doc;
  doc.input = {{"property", p}, {"u", u_spec}, {"max_ell", o.max_ell}, {"order", o.order}};
  doc.result = json::parse(to_json(report));
  doc.result["kind"] = proved ? "theorem" : "observation";
  std::ostringstream text;
  text << p << ": " << (report.holds ? "holds" : "fails") << " on " << report.tested << " inputs ("
       << (proved ? "theorem" : "observation") << ")\n";
  if (report.counterexample) {
    text << "counterexample x=" << report.counterexample->x << " index=" << report.counterexample->index << ": "
         << report.counterexample->detail << '\n';
  }
  for (const auto& n : report.notes) text << "note: " << n << '\n';
  doc.text = text.str();
  doc.latex = doc.text;
  if (proved && !report.holds) doc.code = kViolation;
  return doc;
}

Output cmd_cf(const Options& o) {
  Output doc;
  if (!o.j.empty()) {
    const Rational x = parse_rational(o.j);
    const Rational jx = j_quotient(x);
    const auto cf = cf_expand(x);
    const auto& t = cf.terms();
    const bool has_rewrite = t.size() >= 2 && !(t[0] == 0 && t.size() < 3);
    const CFExpansion image = has_rewrite ? j_rewrite(cf) : cf_expand(jx);
    doc.input = {{"j", to_string(x)}};
    doc.result["x_terms"] = terms_json(t);
    if (has_rewrite) {
      const auto raw = j_rewrite_raw(cf);
      doc.result["raw"] = terms_json(raw);
      doc.text = format_cf(raw) + " = ";
    } else {
      doc.result["raw"] = nullptr;
    }
    doc.result["terms"] = terms_json(image.terms());
    doc.result["value"] = to_string(jx);
    doc.result["ell"] = to_string(image.ell());
    doc.text += format_cf(image.terms()) + " -> " + to_string(jx) + "\n";
    doc.latex = "\\mathbf{J}(" + to_string(x) + ") = " + format_cf(image.terms()) + " = " + to_string(jx) + "\n";
  } else {
    const Rational x = parse_rational(o.x);
    const auto cf = cf_expand(x);
    doc.input = {{"x", to_string(x)}};
    doc.result = {{"terms", terms_json(cf.terms())}, {"ell", to_string(cf.ell())}, {"value", to_string(x)}};
    doc.text = format_cf(cf.terms()) + ", ell=" + to_string(cf.ell()) + "\n";
    doc.latex = to_string(x) + " = " + format_cf(cf.terms()) + "\n";
  }
  return doc;
}

void emit(std::ostream& out, const std::string& command, const Output& doc, const std::string& format) {
  if (format == "json") {
    json d;
    d["command"] = command;
    d["input"] = doc.input;
    d["result"] = doc.result;
    d["version"] = UDEFORM_VERSION;
    out << d.dump(2) << '\n';
  } else if (format == "latex") {
    out << doc.latex;
  } else {
    out << doc.text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact U-deformations of continued fractions", "udeform"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

  auto* eval = app.add_subcommand("eval", "f_U(x), f_U(1/x) and the deformation of x");
  eval->add_option("--u", o.u, "Matrix p,q,r,s; entries are integers or p")->required();
  eval->add_option("--x", o.x, "Positive rational a/b")->required();

  auto* series = app.add_subcommand("series", "Taylor coefficients of the deformation");
  series->add_option("--u", o.u, "Matrix p,q,r,s")->required();
  auto* sx = series->add_option("--x", o.x, "Positive rational");
  auto* sc = series->add_option("--const", o.constant, "e, pi or golden");
  sx->excludes(sc);
  series->add_option("--order", o.order, "Highest power N")->required();
  series->add_flag("--heuristic", o.heuristic, "Allow constants outside the proved case");

  auto* qseries = app.add_subcommand("qseries", "Taylor coefficients of the q-deformation");
  auto* qx = qseries->add_option("--x", o.x, "Positive rational");
  auto* qc = qseries->add_option("--const", o.constant, "e, pi or golden");
  qx->excludes(qc);
  qseries->add_option("--order", o.order, "Highest power N")->required();

  auto* compare = app.add_subcommand("compare", "U=(p,1;1,0) series next to the q-series");
  compare->add_option("--x", o.x, "Positive rational")->required();
  compare->add_option("--order", o.order, "Highest power N")->required();

  auto* check = app.add_subcommand("check", "Sweep a property over all x with ell <= L");
  check->add_option("--property", o.property, "Property name")->required();
  check->add_option("--u", o.u, "Matrix p,q,r,s (default p,1,1,0)");
  check->add_option("--max-ell", o.max_ell, "Largest ell")->check(CLI::Range(1, 20));
  check->add_option("--order", o.order, "Series order");
  check->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
  check->add_option("--from-index", o.from_index, "First index for coefficient patterns");

  auto* cf = app.add_subcommand("cf", "Continued fraction expansion, or its J image");
  auto* cx = cf->add_option("--x", o.x, "Positive rational");
  auto* cj = cf->add_option("--j", o.j, "Positive rational");
  cx->excludes(cj);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if ((sub == series || sub == qseries) && o.x.empty() && o.constant.empty()) {
      throw ParseError(command + " needs --x or --const");
    }
    if (sub == cf && o.x.empty() && o.j.empty()) throw ParseError("cf needs --x or --j");
    Output doc;
    if (sub == eval) doc = cmd_eval(o);
    else if (sub == series) doc = cmd_series(o);
    else if (sub == qseries) doc = cmd_qseries(o);
    else if (sub == compare) doc = cmd_compare(o);
    else if (sub == check) doc = cmd_check(o);
    else doc = cmd_cf(o);
    emit(out, command, doc, o.format);
    if (doc.code == kViolation) err << "error: property '" << o.property << "' violated\n";
    return doc.code;
  } catch (const DegenerateMatrixError& e) {
    err << "error: " << e.what() << '\n';
    return kDegenerate;
  } catch (const StabilizationError& e) {
    err << "error: " << e.what() << '\n';
    return kUnstable;
  } catch (const TermsExhaustedError& e) {
    err << "error: " << e.what() << '\n';
    return kUnstable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
}

}  // namespace udeform::cli
