#include "report.hpp"

#include <sstream>

namespace cesaro::cli {

Json to_json(const BigRational& value) { return cesaro::to_string(value); }

Json to_json(const UniPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return coeffs;
}

Json to_json(const RealPoint& point) {
  if (const auto* r = std::get_if<BigRational>(&point)) return to_json(*r);
  if (std::holds_alternative<PlusInfinity>(point)) return "inf";
  const auto& root = std::get<IsolatedRoot>(point);
  Json j;
  j["root_of"] = to_json(root.poly);
  j["lo"] = to_json(root.lo);
  j["hi"] = to_json(root.hi);
  return j;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IdentityReport& report) {
  Json j;
  j["order"] = report.order;
  j["alpha"] = to_json(report.alpha);
  j["n_check"] = report.n_check;
  j["corner_provenance"] = to_string(report.provenance);
  j["corner_size"] = report.corner_size;
  j["corner_escalated"] = report.corner_escalated;
  j["telescope_escalations"] = report.telescope_escalations;
  j["compared_entries"] = report.compared_entries;
  j["status"] = report.verified() ? "verified" : "mismatch";
  if (report.mismatch) {
    j["mismatch"] = {{"i", report.mismatch->i},
                     {"j", report.mismatch->j},
                     {"lhs", to_json(report.mismatch->lhs)},
                     {"rhs", to_json(report.mismatch->rhs)}};
  } else {
    j["mismatch"] = nullptr;
  }
  j["corner"] = report.corner ? to_json(report.corner->corner()) : Json(nullptr);
  return j;
}

Json to_json(const AlphaRangeReport& report) {
  Json j;
  j["condition"] = report.condition;
  j["domain"] = report.domain.to_string();
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json cj;
    cj["kind"] = c.point ? "point" : "interval";
    cj["left"] = to_json(c.left);
    cj["left_closed"] = c.left_closed;
    cj["right"] = to_json(c.right);
    cj["right_closed"] = c.right_closed;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  j["extends_to_infinity"] = report.extends_to_infinity;
  j["text"] = report.to_string();
  return j;
}

Json to_json(const SymbolicMinorSet& set) {
  Json j;
  j["shifted"] = set.shifted;
  j["corner_size"] = set.corner_size;
  j["common_denominator"] = to_json(set.denominator);
  Json minors = Json::array();
  for (const auto& m : set.minors) {
    Json mj;
    mj["indices"] = m.indices;
    mj["leading"] = m.leading();
    mj["numerator"] = to_json(m.value.num);
    mj["denominator"] = to_json(m.value.den);
    mj["text"] = m.value.to_string();
    minors.push_back(std::move(mj));
  }
  j["minors"] = std::move(minors);
  return j;
}

Json to_json(const DefectReport& report) {
  Json j;
  j["order"] = report.order;
  j["alpha"] = to_json(report.alpha);
  j["section"] = report.section;
  j["tail_terms"] = report.tail_terms;
  j["max_bracket_width"] = to_json(report.max_bracket_width);
  j["sufficient_condition_holds"] = report.sufficient_condition_holds;
  j["label"] = report.label;
  Json approx;
  approx["min_eigenvalue"] = report.min_eigenvalue;
  approx["max_bracket_width"] = to_double(report.max_bracket_width);
  Json rows = Json::array();
  for (std::size_t r = 0; r < report.section; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < report.section; ++c) row.push_back(report.midpoint[r * report.section + c]);
    rows.push_back(std::move(row));
  }
  approx["midpoint_section"] = std::move(rows);
  j["approximate"] = std::move(approx);
  return j;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t n = 0; n < cells.size(); ++n) {
    if (n > 0) os << ',';
    os << csv_cell(cells[n]);
  }
  os << '\n';
}

}  // namespace

std::string render_csv(const Table& table) {
  std::ostringstream os;
  csv_line(os, table.header);
  for (const auto& row : table.rows) csv_line(os, row);
  return os.str();
}

}  // namespace cesaro::cli
