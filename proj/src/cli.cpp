#include "e8kit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "e8kit/descent.hpp"
#include "e8kit/jinv.hpp"
#include "e8kit/records.hpp"
#include "e8kit/rootsys.hpp"
#include "e8kit/verify.hpp"

namespace e8kit {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::ostream& out;
  std::ofstream file;

  Output(std::ostream& fallback, const std::string& path) : out(path.empty() ? fallback : file) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw InputError("cannot open output file " + path);
    }
  }
};

std::string describe(const QForm& q) {
  const auto inv = invariants(q);
  std::ostringstream ss;
  ss << "dim " << inv.dim << ", signature " << inv.signature << ", disc " << inv.disc << ", clifford " << inv.clifford.str();
  return ss.str();
}

void print_killing_text(std::ostream& out, const KillingReport& rep) {
  out << std::left;
  out << std::setw(16) << "redkill" << describe(rep.redkill) << "\n";
  out << std::setw(16) << "kappa" << describe(rep.kappa) << "\n";
  out << std::setw(16) << "kappa_i_level"
      << (rep.kappa_i_level == kILevelHyperbolic ? std::string("hyperbolic") : std::to_string(rep.kappa_i_level)) << "\n";
  out << std::setw(16) << "rost_zero" << (rep.rost_zero ? "true" : "false") << "\n";
  out << std::setw(16) << "signature" << rep.signature << "\n";
  out << std::setw(16) << "real_class" << to_string(rep.real_class) << "\n";
  out << std::setw(16) << "index_hint" << to_string(rep.index_hint) << "\n";
}

void print_tits_text(std::ostream& out, const TitsReport& rep) {
  const int level = i_level(rep.kappa);
  out << std::left;
  out << std::setw(16) << "redkill" << describe(rep.redkill) << "\n";
  out << std::setw(16) << "kappa" << describe(rep.kappa) << "\n";
  out << std::setw(16) << "kappa_i_level" << (level == kILevelHyperbolic ? std::string("hyperbolic") : std::to_string(level))
      << "\n";
  out << std::setw(16) << "rost15_zero" << (rep.rost15_zero ? "true" : "false") << "\n";
}

bool killing_ok(const KillingReport& rep) { return rep.kappa_consistent && rep.kappa_in_i5; }

// One report per batch line, computed in parallel and emitted in input order.
template <typename Input, typename Report, typename Compute, typename Valid, typename Text>
int run_batch(const std::vector<BatchLine<Input>>& lines, bool json, std::ostream& out, std::ostream& err, Compute compute,
              Valid valid, Text text) {
  std::vector<std::string> rendered(lines.size());
  std::vector<int> codes(lines.size(), kExitOk);
  const auto n = static_cast<std::ptrdiff_t>(lines.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& line = lines[i];
    nlohmann::ordered_json j;
    j["line"] = line.line;
    std::ostringstream ss;
    if (const auto* msg = std::get_if<std::string>(&line.value)) {
      codes[i] = kExitParse;
      j["error"] = *msg;
      ss << "# " << *msg << "\n";
    } else {
      try {
        const Report rep = compute(std::get<Input>(line.value));
        if (!valid(rep)) codes[i] = kExitInvariant;
        j["report"] = to_json(rep);
        ss << "# line " << line.line << "\n";
        text(ss, rep);
      } catch (const std::exception& e) {
        codes[i] = kExitInvariant;
        j["error"] = "line " + std::to_string(line.line) + ": " + e.what();
        ss << "# " << j["error"].get<std::string>() << "\n";
      }
    }
    rendered[i] = json ? j.dump() + "\n" : ss.str();
  }
  int code = kExitOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << rendered[i];
    if (codes[i] != kExitOk) {
      if (const auto* msg = std::get_if<std::string>(&lines[i].value)) err << *msg << "\n";
      code = std::max(code, codes[i]);
    }
  }
  return code;
}

int cmd_construct(const std::vector<std::string>& q, const std::string& c, const std::string& field, bool json,
                  const std::string& batch, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) throw InputError("cannot open batch file " + batch);
    Output o(out, out_path);
    return run_batch<E8Input, KillingReport>(
        read_e8_batch(in), json, o.out, err, [](const E8Input& e) { return killing_report(e); }, killing_ok,
        print_killing_text);
  }
  for (std::size_t i = 0; i < 4; ++i)
    if (q[i].empty()) throw InputError("missing --q" + std::to_string(i + 1));
  if (c.empty()) throw InputError("missing --c");
  E8Input in;
  try {
    in = parse_e8_record("q1=" + q[0] + " q2=" + q[1] + " q3=" + q[2] + " q4=" + q[3] + " c=" + c + " field=" + field);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto rep = killing_report(in);
  Output o(out, out_path);
  if (json)
    o.out << to_json(rep).dump(2) << "\n";
  else
    print_killing_text(o.out, rep);
  if (!killing_ok(rep)) {
    err << "invariant failure: kappa does not match its defining formula or lies outside I^5\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_tits(const std::string& g3, const std::string& p3, const std::string& p5, const std::string& field, bool json,
             const std::string& batch, const std::string& out_path, std::ostream& out, std::ostream& err) {
  const auto always = [](const TitsReport&) { return true; };
  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) throw InputError("cannot open batch file " + batch);
    Output o(out, out_path);
    return run_batch<TitsInput, TitsReport>(
        read_tits_batch(in), json, o.out, err, [](const TitsInput& t) { return tits_construction(t); }, always,
        print_tits_text);
  }
  if (g3.empty() || p3.empty() || p5.empty()) throw InputError("tits needs --gamma3, --phi3 and --phi5");
  TitsInput t;
  try {
    t = parse_tits_record("gamma3=" + g3 + " phi3=" + p3 + " phi5=" + p5 + " field=" + field);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto rep = tits_construction(t);
  Output o(out, out_path);
  if (json)
    o.out << to_json(rep).dump(2) << "\n";
  else
    print_tits_text(o.out, rep);
  return kExitOk;
}

int cmd_descent(std::int64_t a, std::int64_t c, std::ostream& out, std::ostream& err) {
  if (a == 0 || c == 0) throw InputError("zero symbol entry");
  if (square_class(Field::Q, a) == 1) throw InputError("a must not be a square");
  const QForm f = descent_form(plane_cocycle(a, c), antidiagonal_ones(2));
  const QForm want = scale(QForm(Field::Q, {1, -a}), 2 * c);
  const bool ok = witt_equal(f, want);
  out << std::left << std::setw(12) << "form" << to_string(f) << "\n";
  out << std::setw(12) << "expected" << to_string(want) << "\n";
  out << std::setw(12) << "witt_equal" << (ok ? "true" : "false") << "\n";
  if (!ok) {
    err << "invariant failure: descended form differs from <2c><1,-a>\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_crux(std::int64_t a, std::int64_t b, std::ostream& out, std::ostream& err) {
  if (a == 0 || b == 0) throw InputError("zero symbol entry");
  if (square_class(Field::Q, a) == 1) throw InputError("a must not be a square");
  const auto rep = crux_form(a, b);
  const bool matches = witt_equal(rep.form, crux_expected(a, b));
  out << std::left << std::setw(18) << "form" << to_string(rep.form) << "\n";
  out << std::setw(18) << "expected" << to_string(crux_expected(a, b)) << "\n";
  out << std::setw(18) << "preserves_planes" << (rep.preserves_planes ? "true" : "false") << "\n";
  out << std::setw(18) << "orthogonal" << (rep.orthogonal ? "true" : "false") << "\n";
  out << std::setw(18) << "involutive" << (rep.involutive ? "true" : "false") << "\n";
  out << std::setw(18) << "witt_index" << rep.witt_index << "\n";
  if (rep.witt_index != 4 || !matches || !rep.preserves_planes) {
    err << "invariant failure: crux form is not hyperbolic of the expected shape\n";
    return kExitInvariant;
  }
  return kExitOk;
}

SystemLabel parse_system(const std::string& s) {
  for (auto l : {SystemLabel::A1, SystemLabel::C4, SystemLabel::D4, SystemLabel::D8, SystemLabel::E8})
    if (s == to_string(l)) return l;
  throw InputError("unknown root system " + s);
}

EmbeddingTable parse_table(const std::string& s) {
  for (auto t : {EmbeddingTable::D8_in_E8, EmbeddingTable::A1C4_in_D8, EmbeddingTable::A1C4_in_E8, EmbeddingTable::PGL2x4_in_E8})
    if (s == to_string(t)) return t;
  throw InputError("unknown table " + s);
}

int cmd_roots(const std::string& system, const std::string& table, bool centralizer, std::ostream& out, std::ostream& err) {
  if (!table.empty()) {
    const auto map = embedding_table(parse_table(table));
    for (const auto& r : map.rows) out << std::left << std::setw(8) << r.label << format_vector(r.image) << "\n";
    const auto rep = verify_embedding(map);
    out << "pairings " << rep.pairs.size() << ", mismatches " << rep.mismatches() << "\n";
    for (std::size_t k = 0; k < map.components.size(); ++k)
      out << "rost_multiplier[" << to_string(map.components[k].source) << "] " << rost_multiplier(map, k).get_str() << "\n";
    if (!rep.ok()) {
      err << "invariant failure: table does not preserve coroot pairings\n";
      return kExitInvariant;
    }
    return kExitOk;
  }
  if (centralizer) {
    const RootSystem e8(SystemLabel::E8);
    std::vector<IVec> cw;
    for (const auto& r : embedding_table(EmbeddingTable::A1C4_in_E8).rows)
      if (r.component == 1) cw.push_back(r.image);
    const auto sub = centralizer_roots(e8, cw);
    out << "roots " << sub.roots.size() << ", type " << sub.type << "\n";
    for (const auto& s : sub.simple) out << "simple  " << format_vector(s) << "\n";
    out << "highest " << format_vector(sub.highest) << "\n";
    return kExitOk;
  }
  const RootSystem rs(parse_system(system));
  out << std::string(to_string(rs.label())) << ": rank " << rs.rank() << ", " << rs.roots().size() << " roots, highest "
      << format_vector(highest_root(rs)) << "\n";
  return kExitOk;
}

int cmd_appendix(int s, int r, int order, std::ostream& out) {
  if (order == 0) order = 2 << s;
  const auto res = search_equality(s, r, order);
  out << "s " << s << ", r " << r << ", order " << order << ", candidates " << res.candidates << "\n";
  for (const auto& j : res.solutions) {
    out << "solution (";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? "," : "") << j[i];
    out << ")\n";
  }
  out << "all_j1_at_least_s " << (res.all_j1_at_least_s ? "true" : "false") << "\n";
  return res.all_j1_at_least_s ? kExitOk : kExitInvariant;
}

int cmd_verify(const std::string& suite, bool json, std::ostream& out) {
  const auto results = run_suite(suite);
  const auto t = tally(results);
  if (json) {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results)
      j["results"].push_back({{"id", r.id}, {"status", std::string(to_string(r.status))}, {"details", r.details}});
    j["summary"] = {{"pass", t.pass}, {"fail", t.fail}, {"not_witnessed", t.not_witnessed}, {"skipped", t.skipped}};
    out << j.dump(2) << "\n";
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.id.size());
    for (const auto& r : results)
      out << std::left << std::setw(15) << to_string(r.status) << std::setw(static_cast<int>(width) + 2) << r.id << r.details
          << "\n";
    out << "pass " << t.pass << ", fail " << t.fail << ", not_witnessed " << t.not_witnessed << ", skipped " << t.skipped
        << "\n";
  }
  return t.fail == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt invariants of groups of type E8 over Q and R", args.empty() ? "e8kit" : args[0]};
  app.require_subcommand(1);

  std::vector<std::string> q(4);
  std::string c, field = "Q", batch, out_path, g3, p3, p5, suite = "all", system = "E8", table;
  bool json = false, centralizer = false;
  std::int64_t a = 0, b = 0, cc = 0;
  int s = 0, r = 0, order = 0;

  auto* construct = app.add_subcommand("construct", "reduced Killing form and kappa from four quaternion algebras and c");
  for (std::size_t i = 0; i < 4; ++i)
    construct->add_option("--q" + std::to_string(i + 1), q[i], "quaternion slots a,b");
  construct->add_option("--c", c, "scalar c");
  construct->add_option("--field", field, "Q or R")->check(CLI::IsMember({"Q", "R"}));
  construct->add_flag("--json", json, "JSON output");
  construct->add_option("--batch", batch, "file with one record per line");
  construct->add_option("--out", out_path, "write the report here");

  auto* tits = app.add_subcommand("tits", "reduced Killing form from Tits's construction");
  tits->add_option("--gamma3", g3, "3-Pfister slots");
  tits->add_option("--phi3", p3, "3-Pfister slots");
  tits->add_option("--phi5", p5, "5-Pfister slots extending phi3");
  tits->add_option("--field", field, "Q or R")->check(CLI::IsMember({"Q", "R"}));
  tits->add_flag("--json", json, "JSON output");
  tits->add_option("--batch", batch, "file with one record per line");
  tits->add_option("--out", out_path, "write the report here");

  auto* descent = app.add_subcommand("descent", "descend the hyperbolic plane along [[0,c],[1/c,0]] over Q(sqrt a)");
  descent->add_option("--a", a, "nonsquare a")->required();
  descent->add_option("--c", cc, "nonzero c")->required();

  auto* crux = app.add_subcommand("crux", "descend S_8 along the antidiagonal crux matrix");
  crux->add_option("--a", a, "nonsquare a")->required();
  crux->add_option("--b", b, "nonzero b")->required();

  auto* roots = app.add_subcommand("roots", "root systems, embedding tables and the C4 centralizer");
  roots->add_option("--system", system, "A1, C4, D4, D8 or E8");
  roots->add_option("--table", table, "D8_in_E8, A1C4_in_D8, A1C4_in_E8 or PGL2x4_in_E8");
  roots->add_flag("--centralizer", centralizer, "roots of E8 orthogonal to the C4 coroots");

  auto* appendix = app.add_subcommand("appendix", "search for J-invariants matching the PGL generating function");
  appendix->add_option("--s", s, "index exponent")->required()->check(CLI::Range(0, 20));
  appendix->add_option("--r", r, "number of entries")->required()->check(CLI::Range(1, 64));
  appendix->add_option("--order", order, "truncation order (default 2^(s+1))");

  auto* verify = app.add_subcommand("verify-paper", "run the named reproduction checks");
  verify->add_option("--suite", suite, "all, roots, chevalley, qform, descent, e8kill or appendix");
  verify->add_flag("--json", json, "JSON output");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (*construct) return cmd_construct(q, c, field, json, batch, out_path, out, err);
    if (*tits) return cmd_tits(g3, p3, p5, field, json, batch, out_path, out, err);
    if (*descent) return cmd_descent(a, cc, out, err);
    if (*crux) return cmd_crux(a, b, out, err);
    if (*roots) return cmd_roots(system, table, centralizer, out, err);
    if (*appendix) return cmd_appendix(s, r, order, out);
    if (*verify) {
      if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw InputError("unknown suite " + suite);
      return cmd_verify(suite, json, out);
    }
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitParse;
}

}  // namespace e8kit
