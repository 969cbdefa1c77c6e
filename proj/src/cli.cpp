#include "syzygy/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "syzygy/io.hpp"
#include "syzygy/orders.hpp"
#include "syzygy/repetition.hpp"

namespace syzygy {

namespace {

using Json = nlohmann::ordered_json;

Json number(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json rational(const Rational& q) {
  if (q.get_den() == 1) return number(q.get_num());
  return q.get_str();
}

Json claim(const std::string& name, Json value, const std::string& certificate) {
  return Json{{"claim", name}, {"value", std::move(value)}, {"certificate", certificate}};
}

Json dim_result(const DimResult& d, const SyzygyEngine& engine) {
  Json j;
  switch (d.kind) {
    case DimResult::Kind::finite:
      j["value"] = d.value;
      j["certificate"] = "exhaustion";
      break;
    case DimResult::Kind::infinite: {
      j["value"] = "infinite";
      j["certificate"] = "recurrence-cycle";
      Json chain = Json::array();
      for (ClassId id : d.chain) chain.push_back(engine.registry().info(id).dims);
      j["chain_dims"] = chain;
      j["cycle_start"] = d.cycle_start;
      break;
    }
    case DimResult::Kind::unknown:
      j["value"] = nullptr;
      j["certificate"] = "budget";
      j["explored"] = d.value;
      break;
  }
  return j;
}

Json matrix(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string dims_text(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return "(" + s + ")";
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Algebra load_algebra(const std::string& path) {
  const std::string text = read_file(path);
  if (has_suffix(path, ".ord")) return presentation_from_valued_quiver(parse_order(text));
  return build_parsed(parse_algebra(text));
}

Side parse_side(const std::string& s) { return s == "right" ? Side::right : Side::left; }

struct Options {
  std::string algebra, module, side = "left", out, format = "json", probe, order_file;
  std::size_t budget = 24;
  bool dot = false;
  std::optional<std::size_t> gldim;
  std::vector<std::string> probes;
};

Json catalog_json(const SyzygyCatalog& c) {
  Json classes = Json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    const CatalogClass& k = c.classes[i];
    Json omega = Json::array();
    for (const auto& [j, mult] : c.omega[i]) omega.push_back(Json{{"class", j}, {"multiplicity", mult}});
    Json entry{{"index", i},
               {"dims", k.dims},
               {"first_degree", k.first_degree},
               {"projective", k.projective},
               {"explored", k.explored},
               {"contingency", c.contingency[i].describe()}};
    if (k.explored) entry["omega"] = omega;
    classes.push_back(entry);
  }
  Json degrees = Json::array();
  for (const auto& row : c.degrees) {
    Json r = Json::array();
    for (const auto& z : row) r.push_back(number(z));
    degrees.push_back(r);
  }
  return Json{{"side", to_string(c.side)},
              {"closed", c.closed},
              {"closure_degree", c.closed ? Json(c.closure_degree) : Json(nullptr)},
              {"classes", classes},
              {"degree_multiplicities", degrees}};
}

Json rep_json(const RepetitionIndex& r) {
  switch (r.kind) {
    case RepetitionIndex::Kind::finite:
      return claim("repetition index", r.value, "catalog-closure+recurrence-cycle");
    case RepetitionIndex::Kind::infinite:
      return claim("repetition index", "infinite", "catalog-closure");
    case RepetitionIndex::Kind::open:
      break;
  }
  Json j = claim("repetition index", "open_at_budget", "none");
  if (r.upper_bound) j["upper_bound"] = claim("repetition index at most", *r.upper_bound, "recurrence-cycle");
  return j;
}

Json findim_json(const FindimReport& r, const SyzygyEngine& probe_engine, const SyzygyEngine& other_engine) {
  Json tests = Json::array();
  for (const TestModuleReport& t : r.test_modules) {
    Json j{{"name", t.name},
           {"root_certificate", t.certificate},
           {"budget", t.budget},
           {"contains_top", t.embeds},
           {"classes", t.classes},
           {"closed", t.closed},
           {"syzygy_type", t.type.certified ? Json(claim("syzygy type", t.type.value, "exhaustion"))
                                            : Json(claim("syzygy type at least", t.type.value, "budget"))},
           {"repetition_index", rep_json(t.rep)}};
    if (t.contingency_bound) j["finite_contingency_bound"] = claim("contingency bound", *t.contingency_bound, "catalog-closure");
    if (t.syzygy_type_bound)
      j["syzygy_type_bound"] = Json{{"claim", "syzygy type bound"},
                                   {"value", t.syzygy_type_bound->first},
                                   {"degree", t.syzygy_type_bound->second},
                                   {"certificate", "catalog-closure"}};
    if (t.b_matrix_bound) j["b_matrix_bound"] = claim("B-matrix stabilization bound", *t.b_matrix_bound, "rowspace-inclusion");
    tests.push_back(j);
  }
  Json candidates = Json::array();
  for (const auto& c : r.upper_candidates) candidates.push_back(claim("upper bound", c.value, c.certificate));
  Json probes = Json::array();
  for (const auto& p : r.probes) probes.push_back(Json{{"name", p.name}, {"pdim", dim_result(p.pdim, probe_engine)}});
  Json j{{"side", to_string(r.side)},
         {"budget", r.budget},
         {"test_modules", tests},
         {"injective_dimension", dim_result(r.idim, other_engine)},
         {"upper_candidates", candidates}};
  j["upper"] = r.upper ? claim("big finitistic dimension at most", r.upper->value, r.upper->certificate)
                       : Json(nullptr);
  j["lower"] = Json{{"claim", "little finitistic dimension at least"},
                    {"value", r.lower},
                    {"certificate", "finite-resolution"},
                    {"witness", r.lower_witness}};
  j["exact"] = r.exact();
  j["probe_budget"] = r.probe_budget;
  j["probes"] = probes;
  return j;
}

Json range_json(const std::string& name, const DimRange& d, const std::string& certificate) {
  Json j{{"claim", name}, {"lower", d.lower}, {"upper", d.upper ? Json(*d.upper) : Json(nullptr)}};
  if (d.exact()) j["value"] = d.lower;
  j["certificate"] = certificate;
  return j;
}

Json header(const std::string& command, const Options& o) {
  Json j{{"tool", "syzygy"}, {"command", command}};
  Json inputs = Json::object();
  if (!o.algebra.empty()) inputs["algebra"] = o.algebra;
  if (!o.module.empty()) inputs["module"] = o.module;
  if (!o.order_file.empty()) inputs["order"] = o.order_file;
  j["inputs"] = inputs;
  j["budget"] = o.budget;
  return j;
}

struct Loaded {
  Algebra algebra;
  RepModule module;
};

Loaded load_pair(const Options& o) {
  Loaded l{load_algebra(o.algebra), {}};
  l.module = parse_module(read_file(o.module), l.algebra);
  return l;
}

void require_budget(const Options& o) {
  if (o.budget < 1) throw PreconditionViolation("this command needs --budget >= 1");
}

CommandResult cmd_resolve(const Options& o) {
  CommandResult r;
  Loaded l = load_pair(o);
  Workspace ws(l.algebra);
  SyzygyEngine& engine = ws.engine(l.module.side());
  ResolutionTrace t = resolve(engine, l.module, o.budget);
  Json j = header("resolve", o);
  j["side"] = to_string(l.module.side());
  Json degrees = Json::array();
  std::ostringstream summary;
  for (std::size_t k = 0; k < t.degrees.size(); ++k) {
    const ResolutionDegree& d = t.degrees[k];
    Json summands = Json::array();
    for (const auto& [id, mult] : d.summands)
      summands.push_back(Json{{"class", id},
                              {"dims", engine.registry().info(id).dims},
                              {"projective", engine.is_projective(id)},
                              {"multiplicity", number(mult)}});
    Json cover = Json::array();
    for (const auto& c : d.cover) cover.push_back(number(c));
    degrees.push_back(Json{{"degree", k}, {"dim", number(d.dim)}, {"cover", cover}, {"summands", summands}});
    summary << "Omega^" << k << ": dim " << d.dim.get_str() << ", " << d.summands.size() << " classes\n";
  }
  j["degrees"] = degrees;
  Json claims = Json::array();
  bool complete = false;
  if (t.terminated) {
    const std::size_t pd = t.degrees.size() >= 2 ? t.degrees.size() - 2 : 0;
    claims.push_back(claim("projective dimension", pd, "exhaustion"));
    summary << "resolution terminates: pdim " << pd << "\n";
    complete = true;
  } else if (o.budget >= 1) {
    DimResult d = pdim(engine, l.module, o.budget);
    if (d.kind == DimResult::Kind::infinite) {
      Json c = claim("projective dimension", "infinite", "recurrence-cycle");
      c["detail"] = dim_result(d, engine);
      claims.push_back(c);
      summary << "resolution is infinite: " << d.describe() << "\n";
      complete = true;
    }
  }
  if (!complete) summary << "open at budget " << o.budget << "\n";
  j["status"] = complete ? "complete" : "open_at_budget";
  j["claims"] = claims;
  r.exit_code = complete ? exit_complete : exit_open;
  r.report = j;
  r.summary = summary.str();
  return r;
}

CommandResult cmd_decompose(const Options& o) {
  CommandResult r;
  Loaded l = load_pair(o);
  Workspace ws(l.algebra);
  SyzygyEngine& engine = ws.engine(l.module.side());
  ClassMultiset ks = engine.decompose(l.module);
  Json j = header("decompose", o);
  j["side"] = to_string(l.module.side());
  j["dims"] = l.module.dims();
  Json summands = Json::array();
  std::ostringstream summary;
  std::size_t count = 0;
  for (const auto& [id, mult] : ks) {
    const auto& info = engine.registry().info(id);
    summands.push_back(Json{{"class", id},
                            {"dims", info.dims},
                            {"top", info.top},
                            {"socle", info.socle},
                            {"projective", info.projective},
                            {"multiplicity", mult}});
    summary << mult << " x " << dims_text(info.dims) << (info.projective ? " projective" : "") << "\n";
    count += mult;
  }
  j["summands"] = summands;
  j["status"] = "complete";
  j["claims"] = Json::array({claim("indecomposable summands", count, "trace-form-radical"),
                             claim("isomorphism classes", ks.size(), "trace-test")});
  r.report = j;
  r.summary = summary.str();
  return r;
}

CommandResult cmd_catalog(const Options& o, bool type_only) {
  require_budget(o);
  CommandResult r;
  Loaded l = load_pair(o);
  Workspace ws(l.algebra);
  SyzygyCatalog c = build_catalog(ws.engine(l.module.side()), l.module, o.budget);
  Json j = header(type_only ? "syzygy-type" : "rep-index", o);
  j["side"] = to_string(l.module.side());
  j["catalog"] = catalog_json(c);
  CountResult type = syzygy_type(c);
  RepetitionIndex rep = repetition_index(c);
  bool complete;
  std::ostringstream summary;
  if (type_only) {
    complete = type.certified;
    j["claims"] = Json::array({type.certified ? claim("syzygy type", type.value, "exhaustion")
                                              : claim("syzygy type at least", type.value, "budget")});
    summary << "syzygy type " << (type.certified ? "" : "at least ") << type.value << "\n";
  } else {
    complete = rep.kind != RepetitionIndex::Kind::open;
    j["claims"] = Json::array({rep_json(rep)});
    summary << "repetition index " << rep.describe() << "\n";
  }
  j["status"] = complete ? "complete" : "open_at_budget";
  r.exit_code = complete ? exit_complete : exit_open;
  r.report = j;
  r.summary = summary.str();
  return r;
}

CommandResult cmd_bmatrix(const Options& o) {
  require_budget(o);
  CommandResult r;
  Algebra a = load_algebra(o.algebra);
  Workspace ws(a);
  const bool top = o.module.empty();
  RepModule t = top ? semisimple_top(a, parse_side(o.side)) : parse_module(read_file(o.module), a);
  SyzygyCatalog c = build_catalog(ws.engine(t.side()), t, o.budget);
  Json j = header("bmatrix", o);
  j["root"] = top ? "semisimple top" : "module";
  j["side"] = to_string(t.side());
  j["catalog"] = catalog_json(c);
  if (!c.closed) {
    j["status"] = "open_at_budget";
    j["claims"] = Json::array();
    r.exit_code = exit_open;
    r.report = j;
    r.summary = "catalog open at budget " + std::to_string(o.budget) + "\n";
    return r;
  }
  BSystem b = build_bsystem(c);
  Json classes = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i)
    classes.push_back(Json{{"catalog_index", b.catalog_index[i]}, {"dims", b.classes[i].dims()}, {"top", b.p[i]}});
  j["classes"] = classes;
  j["b"] = matrix(b.b);
  Json claims = Json::array({claim("stabilization index", b.stabilization, "rowspace-inclusion"),
                             claim("B-matrix bound", stabilization_bound(b), "rowspace-inclusion")});
  std::ostringstream summary;
  summary << "B (" << b.size() << " classes), stabilization index " << b.stabilization << "\n" << b.b.to_string() << "\n";
  if (!o.probe.empty()) {
    RepModule m = parse_module(read_file(o.probe), a);
    std::vector<std::size_t> tau = tau_vector(b, m);
    claims.push_back(claim("tau", tau, "tensor-formula+tor1-crosscheck"));
    BDecision d = pdim_via_b(b, m, top);
    Json iterates = Json::array();
    for (const auto& v : d.iterates) {
      Json row = Json::array();
      for (const auto& z : v) row.push_back(number(z));
      iterates.push_back(row);
    }
    Json pd;
    switch (d.kind) {
      case BDecision::Kind::finite:
        pd = claim("projective dimension", d.value, "B-iterates");
        break;
      case BDecision::Kind::infinite:
        pd = claim("projective dimension", "infinite", "B-iterates");
        break;
      case BDecision::Kind::bound:
        pd = claim("projective dimension if finite", d.value, "B-iterates");
        break;
    }
    pd["iterates"] = iterates;
    claims.push_back(pd);
    summary << "tau " << dims_text(tau) << "\n"
            << "pdim via B: "
            << (d.kind == BDecision::Kind::infinite ? std::string("infinite")
                                                    : (d.kind == BDecision::Kind::finite ? "" : "if finite, ") +
                                                          std::to_string(d.value))
            << "\n";
  }
  j["claims"] = claims;
  j["status"] = "complete";
  r.report = j;
  r.summary = summary.str();
  return r;
}

CommandResult cmd_pdim(const Options& o) {
  require_budget(o);
  CommandResult r;
  Loaded l = load_pair(o);
  Workspace ws(l.algebra);
  SyzygyEngine& engine = ws.engine(l.module.side());
  DimResult d = pdim(engine, l.module, o.budget);
  Json j = header("pdim", o);
  j["side"] = to_string(l.module.side());
  Json c{{"claim", "projective dimension"}};
  c.update(dim_result(d, engine));
  j["claims"] = Json::array({c});
  const bool complete = d.kind != DimResult::Kind::unknown;
  j["status"] = complete ? "complete" : "open_at_budget";
  r.exit_code = complete ? exit_complete : exit_open;
  r.report = j;
  r.summary = "pdim " + d.describe() + "\n";
  return r;
}

CommandResult cmd_findim(const Options& o) {
  require_budget(o);
  CommandResult r;
  Algebra a = load_algebra(o.algebra);
  Workspace ws(a);
  const Side side = parse_side(o.side);
  std::vector<NamedModule> extra;
  for (const auto& p : o.probes) extra.emplace_back(p, parse_module(read_file(p), a));
  FindimReport f = findim_bounds(ws, side, o.budget, extra);
  Json j = header("findim", o);
  j["report"] = findim_json(f, ws.engine(side), ws.engine(flip(side)));
  j["status"] = f.upper ? "complete" : "open_at_budget";
  r.exit_code = f.upper ? exit_complete : exit_open;
  r.report = j;
  std::ostringstream summary;
  summary << to_string(side) << " finitistic dimension: at least " << f.lower << " (" << f.lower_witness << ")";
  if (f.upper) summary << ", at most " << f.upper->value << " (" << f.upper->certificate << ")";
  summary << "\n";
  r.summary = summary.str();
  return r;
}

Json valued_quiver_json(const ValuedQuiver& vq) {
  Json arrows = Json::array();
  for (const auto& a : vq.arrows)
    arrows.push_back(Json{{"name", a.name},
                          {"source", vq.vertices[a.source]},
                          {"target", vq.vertices[a.target]},
                          {"value", a.value}});
  return Json{{"vertices", vq.vertices}, {"arrows", arrows}};
}

CommandResult cmd_order_ingest(const Options& o) {
  CommandResult r;
  ValuedQuiver vq = parse_order(read_file(o.order_file));
  Algebra a = presentation_from_valued_quiver(vq);
  const Presentation& p = a.presentation();
  Json j = header("order ingest", o);
  j["valued_quiver"] = valued_quiver_json(vq);
  j["algebra_text"] = emit_algebra(p.quiver(), p.relations());
  const std::size_t checked = check_value_relations(vq, a, std::max<std::size_t>(vq.vertices.size() + 1, 3));
  const bool mult_one = has_multiplicity_one(a);
  j["claims"] = Json::array({claim("dimension of the satellite algebra", p.dim(), "normal-form-basis"),
                             claim("multiplicity one", mult_one, "dimension-vectors"),
                             claim("value relations hold", checked, "path-enumeration")});
  j["status"] = "complete";
  r.report = j;
  r.summary = emit_valued_quiver(vq) + "dim " + std::to_string(p.dim()) + "\n";
  return r;
}

CommandResult cmd_order_report(const Options& o) {
  require_budget(o);
  CommandResult r;
  ValuedQuiver vq = parse_order(read_file(o.order_file));
  OrderReport rep = order_report(vq, o.budget, o.gldim);
  Workspace& ws = *rep.workspace;
  Json j = header("order report", o);
  j["valued_quiver"] = valued_quiver_json(vq);
  j["algebra_dim"] = rep.algebra.presentation().dim();
  j["left"] = findim_json(rep.left, ws.left, ws.right);
  j["right"] = findim_json(rep.right, ws.right, ws.left);
  j["injective_dimensions"] = Json{{"left", dim_result(rep.idim.left, ws.right)},
                                   {"right", dim_result(rep.idim.right, ws.left)}};
  const std::string lcert = rep.gorenstein_value ? "gorenstein" : "findim-bounds";
  Json claims = Json::array({range_json("l fin dim of the satellite algebra", rep.lambda_left, lcert),
                             range_json("r fin dim of the satellite algebra", rep.lambda_right, lcert),
                             range_json("l fin dim of the order", rep.order_left, lcert + "+satellite-shift"),
                             range_json("r fin dim of the order", rep.order_right, lcert + "+satellite-shift")});
  if (rep.gorenstein_value)
    claims.push_back(claim("injective dimension of both regular modules", *rep.gorenstein_value, "exhaustion"));
  j["claims"] = claims;
  if (rep.asserted_gldim) {
    j["asserted_gldim"] = *rep.asserted_gldim;
    j["assertion_conflicts"] = rep.assertion_conflicts;
  }
  const bool exact = rep.order_left.exact() && rep.order_right.exact();
  j["status"] = exact ? "complete" : "open_at_budget";
  r.exit_code = exact ? exit_complete : exit_open;
  r.report = j;
  r.summary = "l fin dim O: " + rep.order_left.describe() + "\nr fin dim O: " + rep.order_right.describe() + "\n";
  for (const auto& c : rep.assertion_conflicts) r.summary += "conflict: " + c + "\n";
  return r;
}

CommandResult cmd_order_gldim(const Options& o) {
  require_budget(o);
  CommandResult r;
  ValuedQuiver vq = parse_order(read_file(o.order_file));
  OrderReport rep = order_report(vq, o.budget);
  std::vector<NamedModule> probes;
  for (const auto& p : o.probes) probes.emplace_back(p, parse_module(read_file(p), rep.algebra));
  if (probes.empty())
    for (Side side : {Side::left, Side::right})
      for (std::size_t v = 0; v < rep.algebra.vertex_count(); ++v)
        probes.emplace_back(std::string(to_string(side)) + " S" + rep.algebra.presentation().quiver().label(v),
                            simple(rep.algebra, v, side));
  GldimCertificate cert = gldim_certificate(rep, probes, o.budget);
  Json j = header("order gldim-cert", o);
  const bool infinite = cert.kind == GldimCertificate::Kind::infinite_certified;
  Json c = infinite ? claim("global dimension of the order", "infinite", "syzygy-mismatch")
                    : claim("global dimension of the order", "not refuted", "none");
  if (infinite) c["witness"] = cert.witness;
  c["fin_dim_bound"] = cert.fin_dim_bound;
  j["claims"] = Json::array({c});
  j["checks"] = cert.checks;
  j["status"] = "complete";
  r.report = j;
  r.summary = infinite ? "gl dim O infinite, witness " + cert.witness + "\n"
                       : "no probe refutes finite global dimension\n";
  return r;
}

CommandResult cmd_graph(const Options& o) {
  CommandResult r;
  Loaded l = load_pair(o);
  LayeredGraph g = layered_graph(l.module);
  const Quiver& q = l.module.quiver();
  Json j = header("graph", o);
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& n : g.nodes) nodes.push_back(Json{{"vertex", q.label(n.vertex)}, {"layer", n.layer}});
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"arrow", q.arrow(e.arrow).name}});
  j["side"] = to_string(l.module.side());
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["claims"] = Json::array({claim("radical layers", g.nodes.empty() ? 0 : g.nodes.back().layer + 1,
                                   "radical-series")});
  j["status"] = "complete";
  r.report = j;
  r.summary = g.to_text(q);
  if (o.dot) r.dot = g.to_dot(q);
  return r;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Syzygies, repetition indices and finitistic dimensions of finite-dimensional algebras", "syzygy"};
  app.require_subcommand(1);
  Options o;
  std::optional<std::size_t> gldim;

  auto common = [&](CLI::App* sub, bool module_required) {
    sub->add_option("--algebra", o.algebra, "algebra file (.alg, or .ord for a satellite algebra)")->required();
    auto* m = sub->add_option("--module", o.module, "module file (.mod)");
    if (module_required) m->required();
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "syzygy degree budget")->capture_default_str();
    sub->add_option("--out", o.out, "write the report here instead of standard output");
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* resolve_cmd = app.add_subcommand("resolve", "minimal projective resolution");
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Krull-Schmidt decomposition");
  CLI::App* rep_cmd = app.add_subcommand("rep-index", "repetition index");
  CLI::App* type_cmd = app.add_subcommand("syzygy-type", "syzygy type");
  CLI::App* pdim_cmd = app.add_subcommand("pdim", "projective dimension");
  CLI::App* graph_cmd = app.add_subcommand("graph", "layered radical graph");
  for (CLI::App* sub : {resolve_cmd, decompose_cmd, rep_cmd, type_cmd, pdim_cmd, graph_cmd}) {
    common(sub, true);
    output(sub);
  }
  graph_cmd->add_flag("--dot", o.dot, "emit DOT");

  CLI::App* bmatrix_cmd = app.add_subcommand("bmatrix", "B-matrix of a closed catalog");
  common(bmatrix_cmd, false);
  output(bmatrix_cmd);
  bmatrix_cmd->add_option("--side", o.side, "side of the semisimple top used as root when --module is absent")
      ->check(CLI::IsMember({"left", "right"}));
  bmatrix_cmd->add_option("--probe", o.probe, "module (other side) whose tau vector and pdim are computed");

  CLI::App* findim_cmd = app.add_subcommand("findim", "finitistic dimension bounds");
  common(findim_cmd, false);
  output(findim_cmd);
  findim_cmd->add_option("--side", o.side, "side of the modules")->check(CLI::IsMember({"left", "right"}));
  findim_cmd->add_option("--probe", o.probes, "extra lower-bound probes (.mod)");

  CLI::App* order_cmd = app.add_subcommand("order", "tiled classical orders");
  order_cmd->require_subcommand(1);
  CLI::App* ingest_cmd = order_cmd->add_subcommand("ingest", "valued quiver and satellite algebra");
  CLI::App* report_cmd = order_cmd->add_subcommand("report", "finitistic dimensions of the order");
  CLI::App* cert_cmd = order_cmd->add_subcommand("gldim-cert", "certify infinite global dimension");
  for (CLI::App* sub : {ingest_cmd, report_cmd, cert_cmd}) {
    sub->add_option("order", o.order_file, "order file (.ord)")->required();
    output(sub);
  }
  report_cmd->add_option("--gldim", gldim, "asserted global dimension of the order, cross-checked");
  cert_cmd->add_option("--probe", o.probes, "probe modules over the satellite algebra (.mod)");

  CommandResult r;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    r.summary = app.help();
    return r;
  } catch (const CLI::ParseError& e) {
    r.exit_code = exit_error;
    r.error = e.what();
    return r;
  }
  o.gldim = gldim;

  try {
    if (*resolve_cmd) r = cmd_resolve(o);
    else if (*decompose_cmd) r = cmd_decompose(o);
    else if (*rep_cmd) r = cmd_catalog(o, false);
    else if (*type_cmd) r = cmd_catalog(o, true);
    else if (*bmatrix_cmd) r = cmd_bmatrix(o);
    else if (*pdim_cmd) r = cmd_pdim(o);
    else if (*findim_cmd) r = cmd_findim(o);
    else if (*graph_cmd) r = cmd_graph(o);
    else if (*ingest_cmd) r = cmd_order_ingest(o);
    else if (*report_cmd) r = cmd_order_report(o);
    else if (*cert_cmd) r = cmd_order_gldim(o);
  } catch (const Error& e) {
    r = CommandResult{};
    r.exit_code = exit_error;
    r.error = e.what();
  }
  r.out_path = o.out;
  r.text = o.format == "text";
  return r;
}

int emit_result(const CommandResult& r) {
  if (!r.error.empty()) {
    std::cerr << r.error << "\n";
    return r.exit_code;
  }
  std::string body;
  if (!r.dot.empty()) body = r.dot;
  else if (r.text || r.report.is_null()) body = r.summary;
  else body = r.report.dump(2) + "\n";
  if (r.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(r.out_path);
    if (!out) {
      std::cerr << "cannot write " << r.out_path << "\n";
      return exit_error;
    }
    out << body;
    std::cout << r.summary;
  }
  return r.exit_code;
}

}  // namespace syzygy
