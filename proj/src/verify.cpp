#include "negacode/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "negacode/bch.hpp"
#include "negacode/error.hpp"
#include "negacode/mds.hpp"

namespace negacode {
namespace {

std::string params(std::uint64_t n, std::uint64_t k) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "]";
}

std::string params(std::uint64_t n, std::uint64_t k, const std::string& d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]";
}

template <class Range>
std::string braces(const Range& values) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

VerifyRow compare(std::string label, std::string expected, std::string actual, std::string note = {}) {
  const auto status = expected == actual ? RowStatus::Pass : RowStatus::Fail;
  return {std::move(label), std::move(expected), std::move(actual), status, std::move(note)};
}

VerifyRow check(std::string label, std::string expected, std::string actual, bool ok, std::string note = {}) {
  return {std::move(label), std::move(expected), std::move(actual), ok ? RowStatus::Pass : RowStatus::Fail,
          std::move(note)};
}

DimOptions table_dim_options() {
  DimOptions o;
  o.allow_out_of_range = true;
  return o;
}

DistanceOptions distance_options(const VerifyOptions& opts) {
  DistanceOptions d;
  d.budget = opts.distance_budget;
  d.threads = opts.threads;
  return d;
}

std::string oracle_params(const DimFormulaResult& r) {
  return r.oracle_k ? params(r.n, *r.oracle_k) : std::string("none");
}

// Formula, constructive degree, and BCH run of the built defining set.
void dimension_rows(VerifyReport& report, const std::string& tag, const DimFormulaResult& r,
                    std::uint64_t expected_n, std::uint64_t expected_k) {
  const std::string note = r.in_stated_range ? "" : "delta outside the stated range";
  report.rows.push_back(compare(tag + " formula", params(expected_n, expected_k), params(r.n, r.k), note));
  report.rows.push_back(compare(tag + " constructive (" + to_string(r.oracle) + ")", params(expected_n, expected_k),
                                oracle_params(r)));
  const std::uint64_t run = r.run_bound.value_or(0);
  report.rows.push_back(check(tag + " bch run", "d >= " + std::to_string(r.d_lb), "run " + std::to_string(run),
                              run >= r.d_lb));
}

VerifyReport table_3_6(const VerifyOptions&) {
  VerifyReport report{"3.6", {}};
  const auto field = field_of_order(3);
  const auto ctx = make_context(field, 7);
  const auto& system = ctx->system;
  report.rows.push_back(compare("C_1", "{1,3,5,9,11,13}", braces(cyclotomic_coset(system, 1))));
  report.rows.push_back(compare("C_7", "{7}", braces(cyclotomic_coset(system, 7))));
  const auto m1 = ctx->minimal(1);
  const auto m7 = ctx->minimal(7);
  report.rows.push_back(compare("m_1", "x^6+2x^5+x^4+2x^3+x^2+2x+1", to_string(m1)));
  report.rows.push_back(compare("m_7", "x+1", to_string(m7)));
  report.rows.push_back(compare("m_1 m_7", "x^7+1", to_string(m1 * m7)));
  report.rows.push_back(compare("self-reciprocal m_1,m_7", "true,true",
                                std::string(is_self_reciprocal(m1) ? "true" : "false") + "," +
                                    (is_self_reciprocal(m7) ? "true" : "false")));
  report.rows.push_back(compare("X", "{1,7}", braces(system.X())));
  report.rows.push_back(compare("Y", "{1,7}", braces(system.Y())));
  report.rows.push_back(compare("reversible codes", "3", std::to_string(enumerate_reversible(ctx).size())));
  return report;
}

VerifyReport table_4_6(const VerifyOptions& opts) {
  VerifyReport report{"4.6", {}};
  struct Row {
    unsigned ell;
    std::uint64_t delta, n, k;
    std::vector<Residue> leaders;
  };
  const std::vector<Row> rows = {
      {3, 3, 14, 8, {1}},       {4, 3, 41, 33, {1}},      {5, 3, 122, 112, {1}},     {3, 4, 14, 2, {1, 5}},
      {4, 4, 41, 25, {1, 5}},   {4, 6, 41, 17, {1, 5, 7}}, {5, 6, 122, 92, {1, 5, 7}},
  };
  const auto dopts = table_dim_options();
  for (const auto& row : rows) {
    const std::string tag = "l=" + std::to_string(row.ell) + " delta=" + std::to_string(row.delta);
    const auto r = dim_thm_4_4(3, row.ell, row.delta, dopts);
    dimension_rows(report, tag, r, row.n, row.k);
    const auto code = bch_generator(cached_context(3, row.n), row.delta, 1);
    report.rows.push_back(compare(tag + " generator leaders", braces(row.leaders), braces(code.leaders())));
    if (row.n == 14) {
      const auto d = min_distance(code, distance_options(opts));
      const std::string claim = row.k == 8 ? "5" : "d>=7";
      const bool ok = row.k == 8 ? d.d == 5 : d.d >= 7;
      report.rows.push_back(check(tag + " exact distance", params(row.n, row.k, claim),
                                  params(row.n, row.k, std::to_string(d.d)), ok, to_string(d.side) + " search"));
    }
  }
  return report;
}

VerifyReport table_5_3(const VerifyOptions& opts) {
  VerifyReport report{"5.3", {}};
  struct Row {
    std::uint64_t q;
    unsigned m;
    std::uint64_t delta, n, k;
  };
  const std::vector<Row> rows = {{3, 4, 2, 20, 12}, {5, 4, 3, 78, 62}, {5, 4, 4, 78, 54}};
  const auto dopts = table_dim_options();
  for (const auto& row : rows) {
    const std::string tag = "(" + std::to_string(row.q) + "," + std::to_string(row.m) + "," +
                            std::to_string(row.delta) + ")";
    const auto r = dim_thm_5_2(row.q, row.m, row.delta, dopts);
    dimension_rows(report, tag, r, row.n, row.k);
    if (row.n == 20) {
      const auto code = bch_generator(cached_context(row.q, row.n), 2 * row.delta + 1,
                                      1 - 2 * static_cast<std::int64_t>(row.delta));
      const auto d = min_distance(code, distance_options(opts));
      report.rows.push_back(check(tag + " exact distance", params(row.n, row.k, "d>=5"),
                                  params(row.n, row.k, std::to_string(d.d)), d.d >= 5,
                                  to_string(d.side) + " search"));
    }
  }
  return report;
}

VerifyReport table_5_10(const VerifyOptions&) {
  VerifyReport report{"5.10", {}};
  struct Row {
    std::uint64_t q;
    unsigned m;
    std::uint64_t delta, n, k;
  };
  const std::vector<Row> rows = {{3, 6, 14, 182, 98}, {5, 4, 13, 78, 18}};
  const auto dopts = table_dim_options();
  for (const auto& row : rows) {
    const std::string tag = "(" + std::to_string(row.q) + "," + std::to_string(row.m) + "," +
                            std::to_string(row.delta) + ")";
    const auto r = dim_thm_5_8(row.q, row.m, row.delta, dopts);
    std::string note;
    if (!r.agrees) note = "formula and generator degree disagree";
    dimension_rows(report, tag, r, row.n, row.k);
    report.rows[report.rows.size() - 2].note = note;
  }
  return report;
}

VerifyReport table_5_14(const VerifyOptions&) {
  VerifyReport report{"5.14", {}};
  report.rows.push_back(compare("ord_656(3)", "8", std::to_string(mult_order(3, 656))));
  const auto dopts = table_dim_options();
  for (const auto& [delta, k] : {std::pair<std::uint64_t, std::uint64_t>{2, 312}, {3, 296}}) {
    const std::string tag = "(3,2,2," + std::to_string(delta) + ")";
    const auto r = dim_thm_5_13(3, 2, 2, delta, dopts);
    dimension_rows(report, tag, r, 328, k);
    report.rows.push_back(compare(tag + " generator degree", std::to_string(328 - k),
                                  r.oracle_k ? std::to_string(328 - *r.oracle_k) : std::string("none")));
  }
  return report;
}

VerifyReport table_6_2(const VerifyOptions& opts) {
  VerifyReport report{"6.2", {}};
  struct Row {
    std::uint64_t q, n, rho;
  };
  const std::vector<Row> rows = {
      {5, 4, 0},   {7, 6, 0},   {7, 6, 1},   {9, 4, 0},   {9, 8, 0},   {9, 8, 1},   {9, 8, 2},
      {11, 10, 0}, {11, 10, 1}, {11, 10, 2}, {11, 10, 3}, {13, 6, 0},  {13, 6, 1},  {13, 12, 0},
      {13, 12, 1}, {13, 12, 2}, {13, 12, 3}, {13, 12, 4}, {17, 4, 0},  {17, 8, 0},  {17, 8, 1},
      {17, 8, 2},  {17, 16, 0}, {17, 16, 1}, {17, 16, 2}, {17, 16, 3}, {17, 16, 4}, {17, 16, 5},
      {17, 16, 6},
  };
  for (const auto& row : rows) {
    const MdsSpec spec{row.q, row.n, row.rho};
    const std::string label = "q=" + std::to_string(row.q) + " n=" + std::to_string(row.n) +
                              " rho=" + std::to_string(row.rho);
    const std::uint64_t k = row.n - 2 * (row.rho + 1);
    const std::uint64_t d = 2 * row.rho + 3;
    const std::string expected = params(row.n, k, std::to_string(d)) + " MDS LCD";
    const auto app = applicability_check(spec);
    if (!app.q_closed) {
      const Residue a = app.witnesses.front();
      const Residue image = mul_mod(row.q, a, 2 * row.n);
      report.rows.push_back({label, expected, "S not closed under q", RowStatus::Flagged,
                             "witnesses " + braces(app.witnesses) + "; " + std::to_string(row.q) + "*" +
                                 std::to_string(a) + " = " + std::to_string(image) + " mod " +
                                 std::to_string(2 * row.n)});
      continue;
    }
    const auto c = construct_mds_lcd(spec);
    const bool mds = certify_mds(c.code, opts.mds_budget);
    const auto exact = min_distance(c.code, distance_options(opts));
    const auto hull = hull_dim_matrix(c.code);
    const bool lcd = is_lcd(c.code);
    std::string actual = params(c.code.n(), c.code.k(), std::to_string(exact.d));
    actual += mds ? " MDS" : " not-MDS";
    actual += lcd && hull == 0 ? " LCD" : " hull=" + std::to_string(hull);
    report.rows.push_back(compare(label, expected, actual));
  }
  return report;
}

using TableFn = std::function<VerifyReport(const VerifyOptions&)>;

const std::vector<std::pair<std::string, TableFn>>& tables() {
  static const std::vector<std::pair<std::string, TableFn>> all = {
      {"3.6", table_3_6},   {"4.6", table_4_6},   {"5.3", table_5_3},
      {"5.10", table_5_10}, {"5.14", table_5_14}, {"6.2", table_6_2},
  };
  return all;
}

}  // namespace

std::string to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Flagged: return "FLAGGED";
  }
  return "?";
}

bool VerifyReport::passed() const { return count(RowStatus::Fail) == 0; }

std::size_t VerifyReport::count(RowStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [status](const VerifyRow& r) { return r.status == status; }));
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : tables()) out.push_back(id);
    return out;
  }();
  return ids;
}

VerifyReport verify_table(const std::string& id, const VerifyOptions& opts) {
  for (const auto& [key, fn] : tables())
    if (key == id) return fn(opts);
  fail(Errc::InvalidArgument, "unknown table '" + id + "'");
}

}  // namespace negacode
