#ifndef CCS_REPORT_HPP
#define CCS_REPORT_HPP

#include <json.hpp>
#include <ostream>
#include <string>

#include "ccs/fock.hpp"
#include "ccs/generators.hpp"
#include "ccs/montecarlo.hpp"

namespace ccs {

using json = nlohmann::ordered_json;

std::string fmt17(double x);  // 17 significant digits, round-trip exact

json to_json(const BasisIndex& idx);
json to_json(cplx z);
json to_json(const Polynomial& p);
json to_json(const McEstimate& e);
json to_json(const MatrixElementRow& row);
json to_json(const FockVector& v);

/// One machine-readable run result: a flat row table plus metadata.
/// Identical inputs produce byte-identical serializations.
struct Report {
  std::string command;
  bool pass = true;
  json meta = json::object();
  std::vector<json> rows;

  json& add_row();

  void write_json(std::ostream& os) const;
  /// Flattens rows to CSV; columns are the keys of the first row, numbers
  /// printed with 17 significant digits.
  void write_csv(std::ostream& os) const;
  void write(std::ostream& os, const std::string& format) const;
};

}  // namespace ccs

#endif
