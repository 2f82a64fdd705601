#include "negacode/serialize.hpp"

namespace negacode {

Json to_json(const FiniteField& field) {
  Json j;
  j["p"] = field.characteristic();
  j["size"] = field.size();
  j["degree"] = field.degree();
  j["base_size"] = field.base_size();
  j["modulus"] = std::vector<Rep>(field.modulus().begin(), field.modulus().end());
  j["primitive"] = field.primitive();
  return j;
}

Json to_json(const Poly& f) { return f.coeffs(); }

Json to_json(const CosetSystem& system) {
  Json j;
  j["n"] = system.n();
  j["q"] = system.q();
  j["m"] = system.m();
  Json cosets = Json::object();
  for (const auto& [leader, members] : system.cosets()) cosets[std::to_string(leader)] = members;
  j["cosets"] = std::move(cosets);
  j["X"] = system.X();
  j["Y"] = system.Y();
  return j;
}

Json to_json(const NegacyclicCode& code) {
  Json j;
  j["q"] = code.q();
  j["n"] = code.n();
  j["k"] = code.k();
  j["generator"] = to_json(code.generator());
  j["defining_set"] = code.defining_set();
  j["reversible"] = is_reversible(code);
  j["lcd"] = is_lcd(code);
  j["hull_dim"] = hull_dim(code);
  return j;
}

Json to_json(const DimFormulaResult& r) {
  Json j;
  j["family"] = r.family;
  j["q"] = r.q;
  j["m"] = r.m;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["k"] = r.k;
  j["d_lb"] = r.d_lb;
  j["branch"] = r.branch;
  Json aux = Json::object();
  for (const auto& [key, value] : r.aux) aux[key] = value;
  j["aux"] = std::move(aux);
  j["oracle"] = to_string(r.oracle);
  j["oracle_k"] = r.oracle_k ? Json(*r.oracle_k) : Json(nullptr);
  j["run_bound"] = r.run_bound ? Json(*r.run_bound) : Json(nullptr);
  j["in_stated_range"] = r.in_stated_range;
  j["field_too_large"] = r.field_too_large;
  j["agrees"] = r.agrees;
  return j;
}

Json to_json(const DistanceResult& r) {
  Json j;
  j["d"] = r.d;
  j["side"] = to_string(r.side);
  j["work"] = r.work;
  return j;
}

Json to_json(const MdsSpec& spec, const Applicability& check) {
  Json j;
  j["q"] = spec.q;
  j["n"] = spec.n;
  j["rho"] = spec.rho;
  j["q_closed"] = check.q_closed;
  j["witnesses"] = check.witnesses;
  return j;
}

Json to_json(const VerifyReport& report) {
  Json j;
  j["table"] = report.table;
  j["passed"] = report.passed();
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["label"] = r.label;
    row["expected"] = r.expected;
    row["actual"] = r.actual;
    row["status"] = to_string(r.status);
    row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  return j;
}

}  // namespace negacode
