#include "ccs/report.hpp"

#include <cstdio>

namespace ccs {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json to_json(const BasisIndex& idx) {
  return json{{"lambda", idx.lambda},
              {"two_j", idx.two_j},
              {"m", idx.m},
              {"two_qa", idx.two_qa},
              {"two_qb", idx.two_qb}};
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exponents", e}, {"coeff", to_json(c)}});
  return terms;
}

json to_json(const McEstimate& e) {
  return json{{"estimate", to_json(e.value)},
              {"stderr", e.std_error},
              {"samples", e.samples},
              {"accepted", e.accepted}};
}

json to_json(const MatrixElementRow& row) {
  json targets = json::array();
  for (const auto& [idx, c] : row.targets)
    targets.push_back(json{{"index", to_json(idx)}, {"coeff", to_json(c)}});
  return json{{"source", to_json(row.source)}, {"targets", targets}};
}

json to_json(const FockVector& v) {
  json terms = json::array();
  for (const auto& [occ, a] : v.amps)
    terms.push_back(json{{"occ", occ}, {"amp", to_json(a)}});
  return json{{"modes", v.modes}, {"terms", terms}};
}

json& Report::add_row() {
  rows.push_back(json::object());
  return rows.back();
}

void Report::write_json(std::ostream& os) const {
  json out;
  out["schema"] = 1;
  out["command"] = command;
  out["pass"] = pass;
  for (const auto& [k, v] : meta.items()) out[k] = v;
  out["rows"] = rows;
  os << out.dump(2) << "\n";
}

namespace {

std::string csv_cell(const json& v) {
  if (v.is_number_float()) return fmt17(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

void Report::write_csv(std::ostream& os) const {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [k, v] : rows.front().items()) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << "\n";
  for (const auto& row : rows) {
    first = true;
    for (const auto& [k, v] : rows.front().items()) {
      os << (first ? "" : ",") << (row.contains(k) ? csv_cell(row.at(k)) : "");
      first = false;
    }
    os << "\n";
  }
}

void Report::write(std::ostream& os, const std::string& format) const {
  if (format == "csv")
    write_csv(os);
  else
    write_json(os);
}

}  // namespace ccs
