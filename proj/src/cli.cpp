#include "orthomat/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "orthomat/axioms.hpp"
#include "orthomat/errors.hpp"
#include "orthomat/linalg.hpp"
#include "orthomat/orientation.hpp"
#include "orthomat/representations.hpp"
#include "orthomat/text_io.hpp"

namespace orthomat::cli {
namespace {

struct Options {
  std::string bases, rep, matrix, skew, signmap, form, basis, out;
  int max_n = 0;
  int max_k = 0;
  bool machine = false;
};

// Human report plus optional key=value records and an optional file payload.
class Report {
 public:
  explicit Report(const Options& o) : opts_(o) {}

  void line(const std::string& s) { human_ << s << '\n'; }
  void record(const std::string& key, const std::string& value) { machine_ << key << '=' << value << '\n'; }
  void field(const std::string& key, const std::string& value) {
    line(key + ": " + value);
    record(key, value);
  }
  void flag(const std::string& key, bool v) {
    line(key + ": " + (v ? "yes" : "no"));
    record(key, v ? "1" : "0");
  }
  void payload(std::string text) { payload_ = std::move(text); }

  void flush(std::ostream& out) const {
    out << human_.str();
    if (!payload_.empty()) {
      if (opts_.out.empty()) {
        out << payload_;
      } else {
        std::ofstream f(opts_.out, std::ios::binary);
        if (!f) throw ParseError("cannot write " + opts_.out, 0, 0);
        f << payload_;
      }
    }
    if (opts_.machine) out << machine_.str();
  }

 private:
  const Options& opts_;
  std::ostringstream human_;
  std::ostringstream machine_;
  std::string payload_;
};

template <class F>
auto load(const std::string& path, F&& parse) {
  std::string text = text::read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

Limits limits_from(const Options& o) {
  Limits l;
  if (o.max_n > 0) l.ordering_n = l.linear_n = l.exhaustive_n = l.chirotope_n = o.max_n;
  if (o.max_k > 0) l.chirotope_k = o.max_k;
  return l;
}

std::optional<ElementSet> basis_flag(const Options& o, int n) {
  if (o.basis.empty()) return std::nullopt;
  return text::parse_element_list(n, o.basis);
}

IsotropicRepresentation load_rep(const Options& o) {
  auto r = load(o.rep, text::parse_isotropic);
  if (!o.form.empty() && o.form != to_string(r.form()))
    throw FlavorError("--form " + o.form + " does not match the file's form " + to_string(r.form()));
  return r;
}

void require(bool present, const char* what) {
  if (!present) throw PreconditionError(std::string("missing input: ") + what);
}

int cmd_classify(const Options& o, Report& rep) {
  require(!o.bases.empty(), "--bases");
  auto c = load(o.bases, text::parse_bases);
  auto cls = classify(c, limits_from(o));
  rep.field("n", std::to_string(c.ambient()));
  rep.field("k", std::to_string(c.rank()));
  rep.field("bases", std::to_string(c.size()));
  rep.flag("classical", cls.is_classical);
  rep.flag("delta", cls.is_delta);
  rep.flag("symplectic", cls.is_symplectic);
  rep.flag("orthogonal", cls.is_orthogonal);
  rep.flag("lagrangian", cls.is_lagrangian);
  rep.flag("even", cls.is_even);
  for (const auto& w : cls.witnesses) {
    rep.line("witness: " + w.flag + ": " + describe(w.witness));
    rep.record("witness." + w.flag, describe(w.witness));
  }
  return kOk;
}

int cmd_bases(const Options& o, Report& rep) {
  require(!o.matrix.empty() || !o.rep.empty(), "--matrix or --rep");
  BasisCollection c = !o.matrix.empty()
                          ? bases_from_classical_rep(ClassicalRepresentation(load(o.matrix, text::parse_matrix)))
                          : bases_from_isotropic_rep(load_rep(o));
  rep.field("bases", std::to_string(c.size()));
  rep.payload(text::format_bases(c));
  return kOk;
}

int cmd_standard_form(const Options& o, Report& rep) {
  require(!o.rep.empty(), "--rep");
  auto r = load_rep(o);
  auto sf = standard_form(r, basis_flag(o, r.ambient()));
  rep.field("form", to_string(r.form()));
  rep.field("twist", to_string(sf.twist));
  rep.field("s", std::to_string(sf.s));
  rep.payload(text::format_matrix(sf.core));
  return kOk;
}

int cmd_orient(const Options& o, Report& rep) {
  require(!o.rep.empty() || !o.matrix.empty(), "--rep or --matrix");
  LagrangianSignMap p(0);
  if (!o.rep.empty()) {
    auto r = load_rep(o);
    p = orient_orthogonal_rep(r, basis_flag(o, r.ambient()));
  } else {
    p = orient_embedded_classical(ClassicalRepresentation(load(o.matrix, text::parse_matrix)));
  }
  rep.field("support", std::to_string(p.nonzero().size()));
  rep.payload(text::format_signmap(p));
  return kOk;
}

int cmd_embed(const Options& o, Report& rep) {
  require(!o.matrix.empty(), "--matrix");
  auto r = embed_classical_rep(ClassicalRepresentation(load(o.matrix, text::parse_matrix)));
  rep.payload(text::format_isotropic(r));
  return kOk;
}

int cmd_invariance(const Options& o, Report& rep) {
  require(!o.rep.empty(), "--rep");
  auto r = load_rep(o);
  auto bases = bases_from_isotropic_rep(r);
  const auto& list = bases.bases();
  auto first = orient_orthogonal_rep(r, list.front());
  for (std::size_t i = 1; i < list.size(); ++i) {
    auto other = orient_orthogonal_rep(r, list[i]);
    if (!signmaps_equivalent(first, other)) {
      rep.field("agree", "no");
      rep.line("witness: bases " + to_string(list.front()) + " and " + to_string(list[i]) +
               " give inequivalent orientations");
      rep.record("witness", to_string(list.front()) + " " + to_string(list[i]));
      return kCheckFailed;
    }
  }
  rep.line("all " + std::to_string(list.size()) + " basis choices agree");
  rep.record("agree", "1");
  rep.record("basis_choices", std::to_string(list.size()));
  return kOk;
}

template <class V>
int report_verdict(Report& rep, const std::string& what, const V& v) {
  rep.flag(what, v.holds);
  if (!v.holds && v.witness) {
    rep.line("witness: " + describe(*v.witness));
    rep.record("witness", describe(*v.witness));
  }
  return v.holds ? kOk : kCheckFailed;
}

int cmd_verify_axioms(const Options& o, Report& rep) {
  const Limits lim = limits_from(o);
  if (!o.signmap.empty()) {
    auto p = load(o.signmap, text::parse_signmap);
    return report_verdict(rep, "oriented-delta", check_oriented_delta(delta_restriction(p), lim));
  }
  if (!o.skew.empty()) {
    SkewSymmetricMatrix a(load(o.skew, text::parse_matrix));
    const int n = static_cast<int>(a.dim());
    ElementSet t = o.basis.empty() ? ElementSet(n) : text::parse_element_list(n, o.basis);
    if (!t.is_subset_of_plain()) throw DomainError("--basis for --skew must be a subset of 1..n");
    return report_verdict(rep, "twisted-pfaffian", check_twisted_pfaffian(pfaffian_map(a, t), lim));
  }
  if (!o.matrix.empty()) {
    ClassicalRepresentation r(load(o.matrix, text::parse_matrix));
    return report_verdict(rep, "chirotope", check_chirotope_axioms(chirotope_from_rep(r), lim));
  }
  require(!o.bases.empty(), "--signmap, --skew, --matrix or --bases");
  auto c = load(o.bases, text::parse_bases);
  AxiomCheck check;
  std::string what;
  if (c.all_plain()) {
    what = "classical-exchange";
    check = check_classical_exchange(c);
  } else {
    what = "symmetric-exchange";
    check = check_symmetric_matroid_exchange(c);
  }
  rep.flag(what, check.holds);
  if (!check.holds && check.witness) {
    rep.line("witness: " + describe(*check.witness));
    rep.record("witness", describe(*check.witness));
  }
  return check.holds ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of symplectic and orthogonal matroids"};
  app.name("orthomat");
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-n", o.max_n, "raise every n-limit of the exhaustive checks")->check(CLI::Range(1, 16));
    sub->add_flag("--machine", o.machine, "append key=value records");
    sub->add_option("--out", o.out, "write the produced file here instead of stdout");
  };
  auto* classify_cmd = app.add_subcommand("classify", "classify a basis collection");
  classify_cmd->add_option("--bases", o.bases)->required();
  auto* bases_cmd = app.add_subcommand("bases", "extract bases from a representation");
  bases_cmd->add_option("--matrix", o.matrix);
  bases_cmd->add_option("--rep", o.rep);
  bases_cmd->add_option("--form", o.form)->check(CLI::IsMember({"symplectic", "orthogonal"}));
  auto* sf_cmd = app.add_subcommand("standard-form", "normal form of a Lagrangian representation");
  sf_cmd->add_option("--rep", o.rep)->required();
  sf_cmd->add_option("--basis", o.basis);
  sf_cmd->add_option("--form", o.form)->check(CLI::IsMember({"symplectic", "orthogonal"}));
  auto* orient_cmd = app.add_subcommand("orient", "Pfaffian orientation of an orthogonal representation");
  orient_cmd->add_option("--rep", o.rep);
  orient_cmd->add_option("--matrix", o.matrix);
  orient_cmd->add_option("--basis", o.basis);
  orient_cmd->add_option("--form", o.form)->check(CLI::IsMember({"symplectic", "orthogonal"}));
  auto* embed_cmd = app.add_subcommand("embed", "embed a classical representation");
  embed_cmd->add_option("--matrix", o.matrix)->required();
  auto* inv_cmd = app.add_subcommand("invariance", "orient from every basis and compare");
  inv_cmd->add_option("--rep", o.rep)->required();
  inv_cmd->add_option("--form", o.form)->check(CLI::IsMember({"symplectic", "orthogonal"}));
  auto* verify_cmd = app.add_subcommand("verify-axioms", "check axioms of a sign map, matrix or collection");
  verify_cmd->add_option("--signmap", o.signmap);
  verify_cmd->add_option("--skew", o.skew);
  verify_cmd->add_option("--matrix", o.matrix);
  verify_cmd->add_option("--bases", o.bases);
  verify_cmd->add_option("--basis", o.basis, "twist T for --skew");
  verify_cmd->add_option("--max-k", o.max_k, "raise the chirotope rank limit")->check(CLI::Range(1, 16));
  for (auto* sub : {classify_cmd, bases_cmd, sf_cmd, orient_cmd, embed_cmd, inv_cmd, verify_cmd}) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  Report rep(o);
  try {
    int code = kOk;
    if (*classify_cmd) code = cmd_classify(o, rep);
    else if (*bases_cmd) code = cmd_bases(o, rep);
    else if (*sf_cmd) code = cmd_standard_form(o, rep);
    else if (*orient_cmd) code = cmd_orient(o, rep);
    else if (*embed_cmd) code = cmd_embed(o, rep);
    else if (*inv_cmd) code = cmd_invariance(o, rep);
    else if (*verify_cmd) code = cmd_verify_axioms(o, rep);
    rep.flush(out);
    return code;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (raise with " << e.flag() << ")\n";
    return kResourceLimit;
  } catch (const InternalConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace orthomat::cli
