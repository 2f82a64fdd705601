#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "negacode/analysis.hpp"
#include "negacode/bch.hpp"
#include "negacode/code.hpp"
#include "negacode/error.hpp"
#include "negacode/mds.hpp"
#include "negacode/serialize.hpp"
#include "negacode/verify.hpp"

using namespace negacode;

namespace {

enum class Format { Text, Json, Tsv };

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json json;
  std::vector<Table> tables;
  std::vector<std::string> footer;
  int exit = 0;
};

struct Globals {
  bool json = false;
  bool tsv = false;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultDistanceBudget;
  std::uint64_t mds_budget = kDefaultMdsBudget;
  std::uint64_t field_bound = kDefaultFieldBound;

  Format format() const { return json ? Format::Json : tsv ? Format::Tsv : Format::Text; }
  DistanceOptions distance() const {
    DistanceOptions o;
    o.budget = budget;
    o.threads = threads;
    return o;
  }
};

void render(const Table& t, Format format, std::ostream& out) {
  if (format == Format::Tsv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return;
  }
  if (!t.title.empty()) out << t.title << '\n';
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

void emit(const Outcome& o, Format format) {
  if (format == Format::Json) {
    std::cout << o.json.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < o.tables.size(); ++i) {
    if (i && format == Format::Text) std::cout << '\n';
    render(o.tables[i], format, std::cout);
  }
  if (format == Format::Text)
    for (const auto& f : o.footer) std::cout << f << '\n';
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(std::int64_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }

template <class Range>
std::string joined(const Range& values, const char* sep = ",") {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : values) {
    out << (first ? "" : sep) << v;
    first = false;
  }
  return out.str();
}

std::string opt_str(const std::optional<std::uint64_t>& v) { return v ? str(*v) : "-"; }

Json command_json(const std::string& name) {
  Json j;
  j["command"] = name;
  return j;
}

// Library failures that mean the code disagrees with itself, not with the user.
int exit_code(const Error& e) {
  return e.code() == Errc::InternalInconsistency || e.code() == Errc::FormulaMismatch ? 1 : 2;
}

// ---- factor / cosets / reversible ----

struct FieldArgs {
  std::uint64_t q = 3;
  std::uint64_t n = 7;
};

Outcome cmd_factor(const FieldArgs& a, const Globals& g) {
  const auto ctx = make_context(field_of_order(a.q, g.field_bound), a.n, g.field_bound);
  const auto factors = factor_x_n_plus_1(ctx->system, ctx->ext);
  Outcome o;
  o.json = command_json("factor");
  o.json["q"] = a.q;
  o.json["n"] = a.n;
  o.json["m"] = ctx->system.m();
  Table t{"x^" + str(a.n) + "+1 over GF(" + str(a.q) + ")", {"leader", "degree", "self_reciprocal", "m_s"}, {}};
  Json list = Json::array();
  for (const auto& f : factors) {
    const bool sr = is_self_reciprocal(f.poly);
    Json j;
    j["leader"] = f.leader;
    j["degree"] = f.poly.degree();
    j["coefficients"] = to_json(f.poly);
    j["polynomial"] = to_string(f.poly);
    j["self_reciprocal"] = sr;
    list.push_back(std::move(j));
    t.rows.push_back({str(f.leader), std::to_string(f.poly.degree()), str(sr), to_string(f.poly)});
  }
  o.json["factors"] = std::move(list);
  o.tables.push_back(std::move(t));
  return o;
}

Outcome cmd_cosets(const FieldArgs& a, const Globals&) {
  const CosetSystem system(a.n, a.q);
  Outcome o;
  o.json = command_json("cosets");
  o.json.update(to_json(system));
  Table t{"cosets mod " + str(system.two_n()) + ", m = " + std::to_string(system.m()),
          {"leader", "size", "parity", "members"}, {}};
  for (const auto& [leader, members] : system.cosets())
    t.rows.push_back({str(leader), str(std::uint64_t{members.size()}), leader % 2 ? "odd" : "even", joined(members)});
  o.tables.push_back(std::move(t));
  o.footer.push_back("X = {" + joined(system.X()) + "}");
  o.footer.push_back("Y = {" + joined(system.Y()) + "}");
  return o;
}

Outcome cmd_reversible(const std::string& mode, const FieldArgs& a, const Globals& g) {
  const auto ctx = make_context(field_of_order(a.q, g.field_bound), a.n, g.field_bound);
  const auto codes = enumerate_reversible(ctx);
  Outcome o;
  o.json = command_json("reversible " + mode);
  o.json["q"] = a.q;
  o.json["n"] = a.n;
  if (mode == "count") {
    o.json["enumerated"] = codes.size();
    Json closed = nullptr;
    const unsigned m = ctx->system.m();
    const auto qm = checked_pow(a.q, m);
    if (qm && (*qm - 1) / 2 == a.n) {
      try {
        const auto rc = count_reversible_closed_form(a.q, m);
        closed = Json::object();
        closed["m"] = m;
        closed["exponent"] = rc.exponent;
        closed["count"] = rc.count.str();
      } catch (const Error&) {
      }
    }
    const bool agree = closed.is_null() || closed["count"] == std::to_string(codes.size());
    o.json["closed_form"] = closed;
    o.json["agrees"] = agree;
    Table t{"", {"q", "n", "enumerated", "closed_form"}, {}};
    t.rows.push_back({str(a.q), str(a.n), str(std::uint64_t{codes.size()}),
                      closed.is_null() ? "-" : closed["count"].get<std::string>()});
    o.tables.push_back(std::move(t));
    o.exit = agree ? 0 : 1;
    return o;
  }
  Json list = Json::array();
  Table t{"reversible negacyclic codes, n = " + str(a.n) + ", q = " + str(a.q),
          {"#", "k", "leaders", "generator"}, {}};
  std::size_t index = 0;
  for (const auto& c : codes) {
    list.push_back(to_json(c));
    t.rows.push_back({std::to_string(++index), str(c.k()), joined(c.leaders()), to_string(c.generator())});
  }
  o.json["count"] = codes.size();
  o.json["codes"] = std::move(list);
  o.tables.push_back(std::move(t));
  return o;
}

// ---- bch / sweep ----

struct FamilyArgs {
  std::string family;
  std::uint64_t q = 3;
  unsigned ell = 0, m = 0, t = 0, tau = 0;
};

std::pair<std::uint64_t, std::uint64_t> family_range(const FamilyArgs& a) {
  if (a.family == "sec4") return delta_range_4_4(a.q, a.ell);
  if (a.family == "sec52") return delta_range_5_2(a.q, a.m);
  if (a.family == "sec56" || a.family == "sec58") return delta_range_5_6(a.q, a.m);
  return delta_range_5_13(a.q, a.t, a.tau);
}

DimFormulaResult family_eval(const FamilyArgs& a, std::uint64_t delta, const DimOptions& opts) {
  if (a.family == "sec4") return dim_thm_4_4(a.q, a.ell, delta, opts);
  if (a.family == "sec52") return dim_thm_5_2(a.q, a.m, delta, opts);
  if (a.family == "sec56") return dim_thm_5_6(a.q, a.m, delta, opts);
  if (a.family == "sec58") return dim_thm_5_8(a.q, a.m, delta, opts);
  return dim_thm_5_13(a.q, a.t, a.tau, delta, opts);
}

// The BCH code each family's formula describes.
BchSpec family_code(const DimFormulaResult& r) {
  const auto d = static_cast<std::int64_t>(r.delta);
  if (r.family == "sec4") return {r.q, r.n, r.delta, 1};
  if (r.family == "sec56") return {r.q, r.n, r.delta + 1, 1};
  return {r.q, r.n, 2 * r.delta + 1, 1 - 2 * d};
}

Table key_values(const std::string& title, const Json& j) {
  Table t{title, {"field", "value"}, {}};
  for (const auto& [key, value] : j.items())
    t.rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  return t;
}

struct CodeArgs {
  std::uint64_t q = 3;
  std::uint64_t n = 0;
  std::uint64_t delta = 0;
  std::int64_t b = 1;
  std::string defining_set;
  std::string generator;
};

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    require(!item.empty() && item.find_first_not_of("0123456789 ") == std::string::npos, Errc::InvalidArgument,
            "bad list entry '" + item + "'");
    out.push_back(std::stoull(item));
  }
  return out;
}

NegacyclicCode build_code(const CodeArgs& a, const Globals& g) {
  const auto ctx = cached_context(a.q, a.n, g.field_bound);
  if (!a.generator.empty()) {
    const auto c = parse_list(a.generator);
    return from_generator(ctx, Poly(ctx->field, std::vector<Rep>(c.begin(), c.end())));
  }
  if (!a.defining_set.empty()) return from_defining_set(ctx, parse_list(a.defining_set));
  return bch_generator(ctx, a.delta, a.b);
}

// Exact distance when the budget allows it; null otherwise.
Json distance_or_null(const NegacyclicCode& code, const Globals& g) {
  if (code.is_zero_code()) return nullptr;
  try {
    return to_json(min_distance(code, g.distance()));
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    return nullptr;
  }
}

Json code_report(const NegacyclicCode& code, const Globals& g) {
  Json j = to_json(code);
  j["leaders"] = code.leaders();
  const bool trivial = code.is_zero_code() || code.is_full_code();
  j["bch_bound"] = trivial ? Json(nullptr) : Json(bch_bound(code));
  j["distance"] = distance_or_null(code, g);
  return j;
}

Outcome cmd_bch(const FamilyArgs& f, const CodeArgs& c, bool allow_out_of_range, const Globals& g) {
  Outcome o;
  o.json = command_json("bch");
  if (!f.family.empty()) {
    DimOptions opts;
    opts.allow_out_of_range = allow_out_of_range;
    opts.field_bound = g.field_bound;
    const auto r = family_eval(f, c.delta, opts);
    o.json["result"] = to_json(r);
    Json flat = to_json(r);
    Json aux = flat["aux"];
    flat.erase("aux");
    for (const auto& [key, value] : aux.items()) flat["aux." + key] = value;
    o.tables.push_back(key_values(r.family + " delta=" + str(r.delta), flat));
    o.exit = r.agrees ? 0 : 1;
    return o;
  }
  const auto code = build_code(c, g);
  o.json["b"] = c.b;
  o.json["delta"] = c.delta;
  o.json["code"] = code_report(code, g);
  o.tables.push_back(key_values("C(" + str(c.q) + "," + str(c.n) + "," + str(c.delta) + "," + str(c.b) + ")",
                                o.json["code"]));
  return o;
}

Outcome cmd_sweep(const FamilyArgs& f, std::uint64_t delta_max, bool with_distance, const Globals& g) {
  Outcome o;
  o.json = command_json("sweep");
  o.json["family"] = f.family;
  o.json["q"] = f.q;
  Table t{f.family + " q=" + str(f.q),
          {"delta", "n", "k", "oracle_k", "d_lb", "run", "d", "branch", "range", "agrees", "error"},
          {}};
  Json rows = Json::array();
  std::size_t errors = 0;
  bool mismatch = false;
  auto push_error = [&](Json delta, const Error& e) {
    Json row;
    row["delta"] = delta;
    row["result"] = nullptr;
    row["distance"] = nullptr;
    row["error"] = error_json(e);
    rows.push_back(std::move(row));
    t.rows.push_back({delta.is_null() ? "-" : delta.dump(), "-", "-", "-", "-", "-", "-", "-", "-", "-",
                      std::string(to_string(e.code()))});
    ++errors;
  };
  std::pair<std::uint64_t, std::uint64_t> range{0, 0};
  try {
    range = family_range(f);
  } catch (const Error& e) {
    push_error(nullptr, e);
  }
  const std::uint64_t hi = std::max(range.second, delta_max);
  for (std::uint64_t delta = range.first; range.first > 0 && delta <= hi; ++delta) {
    try {
      DimOptions opts;
      opts.allow_out_of_range = delta > range.second;
      opts.field_bound = g.field_bound;
      const auto r = family_eval(f, delta, opts);
      Json distance = nullptr;
      if (with_distance && !r.field_too_large && r.n <= DimOptions{}.polynomial_limit) {
        const auto spec = family_code(r);
        distance = distance_or_null(bch_generator(spec, g.field_bound), g);
      }
      mismatch = mismatch || !r.agrees;
      Json row;
      row["delta"] = delta;
      row["result"] = to_json(r);
      row["distance"] = distance;
      row["error"] = nullptr;
      rows.push_back(std::move(row));
      t.rows.push_back({str(delta), str(r.n), str(r.k), opt_str(r.oracle_k), str(r.d_lb), opt_str(r.run_bound),
                        distance.is_null() ? "-" : distance["d"].dump(), r.branch,
                        r.in_stated_range ? "stated" : "beyond", str(r.agrees), ""});
    } catch (const Error& e) {
      push_error(delta, e);
    }
  }
  o.json["rows"] = std::move(rows);
  o.tables.push_back(std::move(t));
  if (errors > 0 && errors == o.json["rows"].size())
    o.exit = 2;
  else if (mismatch)
    o.exit = 1;
  return o;
}

// ---- mds / distance / verify ----

Outcome report_outcome(const std::vector<VerifyReport>& reports) {
  Outcome o;
  o.json = command_json("verify");
  Json list = Json::array();
  bool ok = true;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    ok = ok && r.passed();
    Table t{"table " + r.table, {"row", "expected", "actual", "status", "note"}, {}};
    for (const auto& row : r.rows) t.rows.push_back({row.label, row.expected, row.actual, to_string(row.status), row.note});
    o.tables.push_back(std::move(t));
    o.footer.push_back(r.table + ": " + std::to_string(r.count(RowStatus::Pass)) + " pass, " +
                       std::to_string(r.count(RowStatus::Fail)) + " fail, " +
                       std::to_string(r.count(RowStatus::Flagged)) + " flagged");
  }
  o.json["passed"] = ok;
  o.json["reports"] = std::move(list);
  o.exit = ok ? 0 : 1;
  return o;
}

VerifyOptions verify_options(const Globals& g) {
  VerifyOptions v;
  v.threads = g.threads;
  v.distance_budget = g.budget;
  v.mds_budget = g.mds_budget;
  return v;
}

Outcome cmd_verify(const std::string& id, const Globals& g) {
  std::vector<VerifyReport> reports;
  if (id == "all")
    for (const auto& t : table_ids()) reports.push_back(verify_table(t, verify_options(g)));
  else
    reports.push_back(verify_table(id, verify_options(g)));
  return report_outcome(reports);
}

Outcome cmd_mds(const MdsSpec& spec, bool table, const Globals& g) {
  if (table) {
    auto o = report_outcome({verify_table("6.2", verify_options(g))});
    o.json["command"] = "mds --table";
    return o;
  }
  validate(spec);
  const auto app = applicability_check(spec);
  Outcome o;
  o.json = command_json("mds");
  o.json.update(to_json(spec, app));
  o.json["defining_set"] = build_defining_set(spec);
  if (!app.q_closed) {
    o.json["status"] = "FLAGGED";
    o.json["code"] = nullptr;
    o.json["mds"] = nullptr;
  } else {
    const auto c = construct_mds_lcd(spec, g.field_bound);
    o.json["status"] = "CONSTRUCTED";
    o.json["code"] = code_report(c.code, g);
    o.json["claimed_d"] = c.d;
    o.json["mds"] = certify_mds(c.code, g.mds_budget);
    o.json["hull_dim_matrix"] = hull_dim_matrix(c.code);
  }
  Json flat = o.json;
  flat.erase("code");
  flat.erase("command");
  if (!o.json["code"].is_null()) {
    flat["k"] = o.json["code"]["k"];
    flat["d"] = o.json["code"]["distance"].is_null() ? Json(nullptr) : o.json["code"]["distance"]["d"];
    flat["lcd"] = o.json["code"]["lcd"];
  }
  o.tables.push_back(key_values("q=" + str(spec.q) + " n=" + str(spec.n) + " rho=" + str(spec.rho), flat));
  return o;
}

Outcome cmd_distance(const CodeArgs& c, const Globals& g) {
  const auto code = build_code(c, g);
  Outcome o;
  o.json = command_json("distance");
  o.json["code"] = code_report(code, g);
  Json flat;
  flat["n"] = code.n();
  flat["k"] = code.k();
  flat["generator"] = to_string(code.generator());
  flat["bch_bound"] = o.json["code"]["bch_bound"];
  flat["d"] = o.json["code"]["distance"].is_null() ? Json("budget exceeded") : o.json["code"]["distance"]["d"];
  if (!o.json["code"]["distance"].is_null()) flat["side"] = o.json["code"]["distance"]["side"];
  o.tables.push_back(key_values("", flat));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible and LCD negacyclic codes over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--tsv", g.tsv, "tab-separated output")->excludes(json_flag);
  app.add_option("--threads", g.threads, "worker cap (0: all cores)");
  app.add_option("--budget", g.budget, "distance search budget")->envname("NEGACODE_BUDGET");
  app.add_option("--mds-budget", g.mds_budget, "submatrix checks for MDS certification");
  app.add_option("--field-bound", g.field_bound, "largest splitting field built");

  FieldArgs fa;
  auto* factor = app.add_subcommand("factor", "factor x^n+1 over GF(q)");
  factor->add_option("--n", fa.n)->required();
  factor->add_option("--q", fa.q)->required();

  auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets mod 2n");
  cosets->add_option("--n", fa.n)->required();
  cosets->add_option("--q", fa.q)->required();

  std::string rev_mode;
  auto* reversible = app.add_subcommand("reversible", "enumerate or count reversible codes");
  reversible->add_option("mode", rev_mode)->required()->check(CLI::IsMember({"list", "count"}));
  reversible->add_option("--n", fa.n)->required();
  reversible->add_option("--q", fa.q)->required();

  FamilyArgs famargs;
  CodeArgs ca;
  bool allow_out = false;
  const std::vector<std::string> families = {"sec4", "sec52", "sec56", "sec58", "sec513"};
  auto add_family_options = [&](CLI::App* sub) {
    sub->add_option("--ell", famargs.ell, "sec4: n = (q^l+1)/2");
    sub->add_option("--m", famargs.m, "sec52/56/58: n = (q^m-1)/(2(q-1))");
    sub->add_option("--t", famargs.t, "sec513");
    sub->add_option("--tau", famargs.tau, "sec513");
  };

  auto* bch = app.add_subcommand("bch", "a negacyclic BCH code, or a dimension formula with --family");
  bch->add_option("--family", famargs.family)->check(CLI::IsMember(families));
  bch->add_option("--q", ca.q)->required();
  bch->add_option("--n", ca.n);
  bch->add_option("--delta", ca.delta)->required();
  bch->add_option("--b", ca.b);
  bch->add_flag("--allow-out-of-range", allow_out, "evaluate delta beyond the stated range");
  add_family_options(bch);

  std::uint64_t delta_max = 0;
  bool no_distance = false;
  auto* sweep = app.add_subcommand("sweep", "one row per admissible delta");
  sweep->add_option("family", famargs.family)->required()->check(CLI::IsMember(families));
  sweep->add_option("--q", famargs.q)->required();
  sweep->add_option("--delta-max", delta_max, "extend past the stated range, flagged per row");
  sweep->add_flag("--no-distance", no_distance, "skip exact distances");
  add_family_options(sweep);

  MdsSpec ms;
  bool mds_table = false;
  auto* mds = app.add_subcommand("mds", "MDS LCD codes of length n | q-1");
  mds->add_option("--q", ms.q);
  mds->add_option("--n", ms.n);
  mds->add_option("--rho", ms.rho);
  mds->add_flag("--table", mds_table, "all rows of the published table");

  auto* distance = app.add_subcommand("distance", "exact minimum distance");
  distance->add_option("--q", ca.q)->required();
  distance->add_option("--n", ca.n)->required();
  distance->add_option("--delta", ca.delta, "BCH designed distance");
  distance->add_option("--b", ca.b);
  distance->add_option("--defining-set", ca.defining_set, "comma-separated odd residues");
  distance->add_option("--generator", ca.generator, "comma-separated ascending coefficients");

  std::string table_id;
  auto* verify = app.add_subcommand("verify", "recompute a published table");
  std::vector<std::string> ids = table_ids();
  ids.push_back("all");
  verify->add_option("table", table_id)->required()->check(CLI::IsMember(ids));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Outcome out;
  try {
    if (factor->parsed())
      out = cmd_factor(fa, g);
    else if (cosets->parsed())
      out = cmd_cosets(fa, g);
    else if (reversible->parsed())
      out = cmd_reversible(rev_mode, fa, g);
    else if (bch->parsed()) {
      famargs.q = ca.q;
      if (famargs.family.empty()) require(ca.n > 0, Errc::InvalidArgument, "--n or --family is required");
      out = cmd_bch(famargs, ca, allow_out, g);
    } else if (sweep->parsed())
      out = cmd_sweep(famargs, delta_max, !no_distance, g);
    else if (mds->parsed()) {
      if (!mds_table) require(ms.q > 0 && ms.n > 0, Errc::InvalidArgument, "--q and --n are required");
      out = cmd_mds(ms, mds_table, g);
    } else if (distance->parsed()) {
      require(ca.delta > 0 || !ca.defining_set.empty() || !ca.generator.empty(), Errc::InvalidArgument,
              "one of --delta, --defining-set, --generator is required");
      out = cmd_distance(ca, g);
    } else if (verify->parsed())
      out = cmd_verify(table_id, g);
  } catch (const Error& e) {
    if (g.format() == Format::Json)
      std::cout << error_json(e).dump(2) << '\n';
    else
      std::cerr << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  emit(out, g.format());
  return out.exit;
}
