#include "novbi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>

#include "novbi/bialgebra.hpp"
#include "novbi/error.hpp"
#include "novbi/io.hpp"
#include "novbi/liewindow.hpp"
#include "novbi/ybe.hpp"

namespace novbi {

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

/// Flags that take a value which may start with '-'.
const std::vector<std::string> kSignedFlags = {"--q", "--p", "--min", "--max"};

/// Join "--q -1/2" into "--q=-1/2" so negative values are not read as flags.
std::vector<std::string> join_signed_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool is_signed = std::find(kSignedFlags.begin(), kSignedFlags.end(), args[i]) != kSignedFlags.end();
    if (is_signed && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        args[i + 1][1] != '-') {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

Bindings parse_bindings(const std::vector<std::string>& items) {
  Bindings b;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw Error("--bind expects role=name, got '" + item + "'");
    b[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return b;
}

template <class M>
void bind_default(Bindings& b, const std::string& role, const M& components) {
  if (b.count(role) || components.count(role)) return;
  if (components.size() == 1) b[role] = components.begin()->first;
}

/// The q flag: "sym" is the indeterminate, anything else a rational.
Scalar parse_q(const std::string& text) {
  if (text == "sym") return Scalar::symbol();
  return parse_scalar(text, Ring::Rational);
}

std::vector<std::string> generic_names(std::size_t n, const std::string& prefix) {
  return numbered_space(n, prefix).names;
}

struct Rendered {
  std::string tuple, residual;
};

std::optional<Rendered> render_witness(const AxiomReport& r, const Presentation* p) {
  if (!r.witness) return std::nullopt;
  const auto& w = *r.witness;
  Rendered out;
  if (w.tuple.size() == r.input_spaces.size() && !w.tuple.empty()) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < w.tuple.size(); ++i) {
      std::vector<std::string> names;
      if (p && r.input_spaces[i] == "A" && p->dim() > w.tuple[i]) names = p->space.names;
      if (names.empty()) names = generic_names(w.tuple[i] + 1, r.input_spaces[i] == "A" ? "e" : "v");
      parts.push_back(names[w.tuple[i]]);
    }
    out.tuple = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) out.tuple += (i ? ", " : "") + parts[i];
    out.tuple += ")";
  }
  std::size_t dim = w.residual.order() ? w.residual.dims()[0] : 0;
  bool uniform = true;
  for (auto d : w.residual.dims()) uniform = uniform && d == dim;
  if (uniform) {
    std::vector<std::string> names = (p && p->dim() == dim) ? p->space.names : generic_names(dim, "e");
    out.residual = render_tensor(w.residual, names);
  } else {
    out.residual = w.residual.is_zero() ? "0" : "(nonzero)";
  }
  return out;
}

std::string verdict_text(const AxiomReport& r) {
  switch (r.verdict) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::HoldsOnLocus:
      return "holds on q in " + r.locus->str();
  }
  return "";
}

class Reporter {
 public:
  Reporter(std::ostream& out, const Presentation* p) : out_(out), p_(p) {}

  /// Lines written before presentation text start with "# " so the output still parses.
  void as_comments() { lead_ = "# "; }

  void bundle(const ReportBundle& b) {
    out_ << lead_ << b.name << "\n";
    for (const auto& r : b.reports) report(r);
  }

  void report(const AxiomReport& r) {
    out_ << lead_ << "  " << r.axiom_id << ": " << verdict_text(r);
    auto w = render_witness(r, p_);
    if (w) {
      if (!w->tuple.empty()) out_ << " witness " << w->tuple;
      if (r.witness->part) out_ << " part " << r.witness->part + 1;
      out_ << ": residual " << w->residual;
    }
    if (r.verdict != Verdict::Holds && r.residual_degree >= 0 && r.ring == Ring::Poly)
      out_ << " (residual degree " << r.residual_degree << ")";
    if (r.tuples_skipped) out_ << " [checked " << r.tuples_checked << ", skipped " << r.tuples_skipped << "]";
    if (!r.note.empty()) out_ << " [" << r.note << "]";
    out_ << "\n";

    Json j;
    j["axiom_id"] = r.axiom_id;
    j["verdict"] = to_string(r.verdict);
    j["ring"] = to_string(r.ring);
    j["residual_degree"] = r.residual_degree;
    if (w) {
      Json wj;
      wj["tuple"] = w->tuple;
      wj["part"] = r.witness->part;
      wj["residual"] = w->residual;
      j["witness"] = wj;
    } else {
      j["witness"] = nullptr;
    }
    if (r.locus) {
      j["locus"] = r.locus->str();
      j["nonrational_flag"] = r.locus->nonrational_flag;
    } else {
      j["locus"] = nullptr;
    }
    j["tuples_checked"] = r.tuples_checked;
    j["tuples_skipped"] = r.tuples_skipped;
    if (!r.note.empty()) j["note"] = r.note;
    reports_.push_back(j);
  }

  Json reports() const { return reports_; }

 private:
  std::ostream& out_;
  const Presentation* p_;
  std::string lead_;
  Json reports_ = Json::array();
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

Presentation load_for_q(const std::string& file, const std::optional<std::string>& q_text) {
  Presentation p = load_presentation(file);
  if (q_text && *q_text != "sym" && p.ring == Ring::Poly) p = specialize(p, parse_q(*q_text).to_rational());
  return p;
}

ReportBundle profile_bundle(const std::string& profile, const Presentation& p, Bindings b,
                            const Scalar& q) {
  if (profile == "novikov") {
    bind_default(b, "circ", p.products);
    return check_axioms("novikov", {"NOV_LSYM", "NOV_RCOMM"}, make_env(p, b));
  }
  if (profile == "zinbiel") {
    bind_default(b, "diamond", p.products);
    b["dot"] = b.count("diamond") ? b["diamond"] : "diamond";
    return check_axioms("zinbiel", {"ZINBIEL", "DERIV", "ZINB_ADMISS"}, make_env(p, b));
  }
  if (profile == "pre-novikov") {
    return check_axioms("pre-novikov", {"PRE_NOV_1", "PRE_NOV_2", "PRE_NOV_3", "PRE_NOV_4"}, make_env(p, b));
  }
  if (profile == "admissible") {
    bind_default(b, "dot", p.products);
    return is_admissible_quadruple(p, b);
  }
  if (profile == "diff-asi") {
    bind_default(b, "dot", p.products);
    bind_default(b, "delta", p.coproducts);
    return check_diff_asi_bialgebra(p, b);
  }
  if (profile == "compat") {
    bind_default(b, "dot", p.products);
    bind_default(b, "delta", p.coproducts);
    return bialg_q_residuals(p, q, b);
  }
  if (profile == "novikov-bialgebra") {
    bind_default(b, "circ", p.products);
    bind_default(b, "Delta", p.coproducts);
    Env env = make_env(p, b);
    return check_novikov_bialgebra(env.bilinear("circ"), env.coproduct("Delta"));
  }
  if (profile == "manin") {
    bind_default(b, "circ", p.products);
    if (p.dim() % 2) throw Error("manin profile needs an even-dimensional space A (+) A*");
    return check_manin_triple(SplitPresentation{p, p.dim() / 2}, make_env(p, b).bilinear("circ"));
  }
  if (profile == "quadratic") {
    bind_default(b, "circ", p.products);
    bind_default(b, "B", p.forms);
    Env env = make_env(p, b);
    return quadratic_novikov_check(env.bilinear("circ"), p.form(env.resolve("B")));
  }
  throw Error("unknown profile " + profile);
}

int bundle_exit(const ReportBundle& b, std::ostream& out) {
  Verdict v = b.verdict();
  out << "result: " << to_string(v);
  if (v == Verdict::HoldsOnLocus) out << " q in " << b.locus().str();
  out << "\n";
  return v == Verdict::Holds ? kPass : kFail;
}

bool has_diamond(const Presentation& p, const Bindings& b) {
  return p.products.count(b.count("diamond") ? b.at("diamond") : "diamond") > 0;
}

DiffAlgebra zinbiel_of(const Presentation& p, const Bindings& b) {
  Env env = make_env(p, b);
  return DiffAlgebra{env.bilinear("diamond"), env.map("D"), env.map("Q")};
}

/// The circ of a file: a stored product, or the product induced from (dot, D, Q) at q.
Bilinear circ_of(const Presentation& p, Bindings b, const Scalar& q) {
  Env env = make_env(p, b);
  if (p.products.count(env.resolve("circ"))) return env.bilinear("circ");
  if (p.products.count(env.resolve("dot")) && p.maps.count(env.resolve("D")) && p.maps.count(env.resolve("Q")))
    return induce_novikov(env.bilinear("dot").in_ring(q.ring()), env.map("D").in_ring(q.ring()),
                          env.map("Q").in_ring(q.ring()), q);
  bind_default(b, "circ", p.products);
  return make_env(p, b).bilinear("circ");
}

struct Options {
  std::string file, profile, emit, json_out, r_name, check, q_text;
  std::optional<std::string> p_text;
  std::vector<std::string> binds;
  bool no_verify = false;
  long deg_min = 0, deg_max = 0;
  unsigned N = 0;
};

int dispatch(const std::string& cmd, const Options& o, const CLI::App& app, std::ostream& out, Json& doc) {
  Bindings b = parse_bindings(o.binds);
  const CLI::Option* q_opt = app.get_subcommand(cmd)->get_option_no_throw("--q");
  bool q_given = q_opt && q_opt->count() > 0;
  std::optional<std::string> q_text = q_given ? std::optional<std::string>(o.q_text) : std::nullopt;

  if (cmd == "polywindow") {
    Scalar q = parse_q(o.q_text);
    Reporter rep(out, nullptr);
    auto bundle = polyalg_window_check(o.N, q);
    rep.bundle(bundle);
    int code = bundle_exit(bundle, out);
    doc["reports"] = rep.reports();
    return code;
  }

  Presentation p = load_for_q(o.file, q_text);
  Reporter rep(out, &p);

  if (cmd == "verify") {
    Scalar q = q_text ? parse_q(*q_text) : Scalar::symbol();
    if (p.ring == Ring::Rational && q.ring() == Ring::Poly && o.profile != "compat") q = Scalar(0);
    auto bundle = profile_bundle(o.profile, p, b, q);
    rep.bundle(bundle);
    int code = bundle_exit(bundle, out);
    doc["reports"] = rep.reports();
    doc["verdict"] = to_string(bundle.verdict());
    return code;
  }

  if (cmd == "induce") {
    rep.as_comments();
    Scalar q = parse_q(o.q_text);
    bind_default(b, "dot", p.products);
    bind_default(b, "delta", p.coproducts);
    Env env = make_env(p, b).in_ring(q.ring() == Ring::Poly ? Ring::Poly : p.ring);
    Verify verify = o.no_verify ? Verify::No : Verify::Yes;
    if (verify == Verify::Yes) {
      auto pre = is_admissible_quadruple(p, b);
      rep.bundle(pre);
      require(pre, "admissible quadruple");
    }
    Presentation outp;
    outp.space = p.space;
    outp.ring = q.ring() == Ring::Poly ? Ring::Poly : p.ring;
    Scalar qq = q.in_ring(outp.ring);
    if (o.p_text) {
      Rational pv = parse_q(*o.p_text).to_rational();
      outp.products["circ"] = induce_novikov(env.bilinear("dot"), env.map("D"), env.map("Q"), pv, qq);
    } else {
      outp.products["circ"] = induce_novikov(env.bilinear("dot"), env.map("D"), env.map("Q"), qq);
    }
    if (p.coproducts.count(env.resolve("delta"))) {
      if (verify == Verify::Yes) {
        auto pre = check_axioms("coalgebra", {"COASSOC", "COCOMM", "CODERIV", "CO_ADMISS"}, make_env(p, b));
        rep.bundle(pre);
        require(pre, "admissible cocommutative differential coalgebra");
      }
      outp.coproducts["Delta"] = induce_nov_coalg(env.coproduct("delta"), env.map("Q"), env.map("D"), qq);
    }
    std::string text = emit_presentation(outp);
    if (!o.emit.empty()) write_text(o.emit, text);
    out << text;
    doc["emitted"] = o.emit;
    doc["reports"] = rep.reports();
    return kPass;
  }

  if (cmd == "double") {
    rep.as_comments();
    Verify verify = o.no_verify ? Verify::No : Verify::Yes;
    SplitPresentation sp;
    if (has_diamond(p, b)) {
      if (verify == Verify::Yes) {
        Bindings zb = b;
        zb["dot"] = b.count("diamond") ? b["diamond"] : "diamond";
        auto pre = check_axioms("zinbiel", {"ZINBIEL", "ZINB_ADMISS", "DERIV"}, make_env(p, zb));
        rep.bundle(pre);
      }
      sp = zinbiel_double(zinbiel_of(p, b), p.space, verify);
      doc["construction"] = "zinbiel";
    } else {
      bind_default(b, "dot", p.products);
      bind_default(b, "delta", p.coproducts);
      sp = double_construction(p, b, verify);
      doc["construction"] = "frobenius";
    }
    std::string text = emit_presentation(sp.total);
    if (!o.emit.empty()) write_text(o.emit, text);
    out << text;
    doc["emitted"] = o.emit;
    doc["reports"] = rep.reports();
    return kPass;
  }

  if (cmd == "ybe") {
    b["r"] = o.r_name;
    Scalar q = q_text ? parse_q(*q_text) : Scalar::symbol();
    AxiomReport r;
    if (o.check == "aybe") {
      bind_default(b, "dot", p.products);
      r = check_axiom("AYBE", p, b);
    } else if (o.check == "nybe") {
      Bilinear circ = circ_of(p, b, q);
      Env env = make_env(p, b).in_ring(circ.ring());
      env.bilinears["circ"] = circ;
      env.bindings.erase("circ");
      r = check_axiom("NYBE", env);
    } else {
      r = check_axiom("R_ADMISS", p, b);
    }
    ReportBundle bundle{"ybe " + o.check, {r}};
    rep.bundle(bundle);
    int code = bundle_exit(bundle, out);
    doc["reports"] = rep.reports();
    return code;
  }

  if (cmd == "locus") {
    QLocus locus;
    if (has_diamond(p, b)) {
      DiffAlgebra z = zinbiel_of(p, b);
      SplitPresentation sp = zinbiel_double(z, p.space, Verify::Yes);
      locus = novikov_bialgebra_locus(sp.total);
      out << locus.str() << "\n";
      Json points = Json::array();
      for (const auto& pt : annotate_zinbiel_locus(z, locus)) {
        out << "  q = " << to_string(pt.q) << ": "
            << (pt.double_induced ? "double-induced" : "not double-induced") << "\n";
        points.push_back({{"q", to_string(pt.q)}, {"double_induced", pt.double_induced}});
      }
      doc["annotations"] = points;
    } else {
      bind_default(b, "dot", p.products);
      bind_default(b, "delta", p.coproducts);
      locus = novikov_bialgebra_locus(p, b);
      out << locus.str() << "\n";
    }
    if (locus.nonrational_flag) out << "  further roots outside Q\n";
    doc["locus"] = locus.str();
    doc["nonrational_flag"] = locus.nonrational_flag;
    return locus.kind == QLocus::Kind::Empty ? kFail : kPass;
  }

  if (cmd == "window") {
    ReportBundle bundle;
    Scalar q = parse_q(o.q_text);
    if (q.ring() == Ring::Poly) throw Error("window needs a rational --q");
    if (p.products.count(b.count("circ") ? b["circ"] : "circ")) {
      bind_default(b, "Delta", p.coproducts);
      Env env = make_env(p, b);
      bundle = window_lie_bialgebra_check(env.bilinear("circ"), env.coproduct("Delta"), o.deg_min, o.deg_max);
    } else {
      bind_default(b, "dot", p.products);
      bind_default(b, "delta", p.coproducts);
      bundle = window_lie_bialgebra_check(p.in_ring(Ring::Rational), WindowSpec{o.deg_min, o.deg_max, q}, b);
    }
    rep.bundle(bundle);
    int code = bundle_exit(bundle, out);
    doc["reports"] = rep.reports();
    return code;
  }
  throw Error("unknown command " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Novikov and differential ASI bialgebras", "novbi"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool with_file) {
    if (with_file) c->add_option("file", o.file, "presentation file")->required();
    c->add_option("--json-out", o.json_out, "write a JSON report to this path");
    c->add_option("--bind", o.binds, "role=name; repeatable")->take_all();
  };

  auto* verify = app.add_subcommand("verify", "check an axiom bundle");
  add_common(verify, true);
  verify->add_option("--profile", o.profile)
      ->required()
      ->check(CLI::IsMember({"novikov", "zinbiel", "pre-novikov", "admissible", "diff-asi", "compat",
                             "novikov-bialgebra", "manin", "quadratic"}));
  verify->add_option("--q", o.q_text, "rational value, or sym");

  auto* induce = app.add_subcommand("induce", "build (circ_q, Delta_q)");
  add_common(induce, true);
  induce->add_option("--q", o.q_text, "rational value, or sym")->required();
  induce->add_option("--p", o.p_text, "rational coefficient of D");
  induce->add_option("--emit", o.emit, "output presentation file");
  induce->add_flag("--no-verify", o.no_verify, "skip precondition checks");

  auto* dbl = app.add_subcommand("double", "build the double on A (+) A*");
  add_common(dbl, true);
  dbl->add_option("--emit", o.emit, "output presentation file");
  dbl->add_flag("--no-verify", o.no_verify, "skip precondition checks");

  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter and admissibility checks of an r-element");
  add_common(ybe, true);
  ybe->add_option("--r", o.r_name, "relement name")->required();
  ybe->add_option("--check", o.check)->required()->check(CLI::IsMember({"aybe", "nybe", "admissible"}));
  ybe->add_option("--q", o.q_text, "q used to induce circ from dot, or sym");

  auto* locus = app.add_subcommand("locus", "q at which the induced pair is a Novikov bialgebra");
  add_common(locus, true);

  auto* window = app.add_subcommand("window", "Lie bialgebra identities on a degree window");
  add_common(window, true);
  window->add_option("--q", o.q_text, "rational value")->required();
  window->add_option("--min", o.deg_min)->required();
  window->add_option("--max", o.deg_max)->required();

  auto* poly = app.add_subcommand("polywindow", "the polynomial-algebra family on degrees 0..N");
  add_common(poly, false);
  poly->add_option("--N", o.N)->required()->check(CLI::Range(2u, 64u));
  poly->add_option("--q", o.q_text, "rational value, or sym")->required();

  std::vector<std::string> args = join_signed_values(raw_args);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  Json doc;
  doc["command"] = cmd;
  if (!o.file.empty()) doc["file"] = o.file;
  int code = kPass;
  try {
    code = dispatch(cmd, o, app, out, doc);
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << "\n";
    doc["error"] = e.what();
    code = kFail;
  } catch (const DegenerateForm& e) {
    err << "degenerate form: " << e.what() << "\n";
    doc["error"] = e.what();
    code = kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    doc["error"] = e.what();
    code = kUsage;
  }
  doc["exit_code"] = code;
  if (!o.json_out.empty()) {
    try {
      write_text(o.json_out, doc.dump(2) + "\n");
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return code;
}

}  // namespace novbi
