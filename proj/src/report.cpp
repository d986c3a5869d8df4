#include "cubicdio/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>
#include <vector>

namespace cubicdio {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

namespace {

Json optional_integer(const std::optional<Integer>& v) { return v ? integer_json(*v) : Json(nullptr); }

const char* stage_name(BudgetWarning::Stage s) { return s == BudgetWarning::Stage::Roots ? "roots" : "cofactor"; }

}  // namespace

Json solution_json(const Solution& s) {
  Json j;
  j["y0"] = integer_json(s.y0);
  j["x0"] = integer_json(s.x0);
  j["w0"] = optional_integer(s.w0);
  j["classification"] = to_string(s.classification);
  if (s.cofactor) {
    j["field_disc"] = optional_integer(s.cofactor->field_disc);
    j["r"] = optional_integer(s.cofactor->r);
    j["comment_holds"] = s.cofactor->comment_holds ? Json(*s.cofactor->comment_holds) : Json(nullptr);
  } else {
    j["field_disc"] = nullptr;
    j["r"] = nullptr;
    j["comment_holds"] = nullptr;
  }
  j["cardano"] = s.cardano ? Json(*s.cardano) : Json(nullptr);
  return j;
}

Json hypotheses_json(const HypothesisReport& h) {
  Json j;
  j["mod3"] = to_string(h.mod3.kind);
  j["vanishing_residues"] = h.mod3.vanishing_residues;
  j["simple_root_count"] = h.simple_root_count;
  if (h.irreducibility_witness) {
    j["irreducibility"] = {{"status", "ProvenBySpecialization"}, {"y_witness", integer_json(*h.irreducibility_witness)}};
  } else {
    j["irreducibility"] = {{"status", "Unknown"}};
  }
  j["obstruction"] = h.obstruction;
  j["passed"] = h.passed();
  j["violations"] = h.violations();
  j["warnings"] = h.warnings();
  return j;
}

Json summary_json(const SearchReport& r, const std::optional<std::string>& instance) {
  Json j;
  if (instance) j["instance"] = *instance;
  j["tested"] = r.tested_count;
  j["filter_pass"] = r.filter_pass_count;
  j["solutions"] = r.solution_count;
  j["rational_w_fraction"] = r.rational_w_fraction ? Json(*r.rational_w_fraction) : Json(nullptr);
  j["hypotheses"] = hypotheses_json(r.hypotheses);
  j["mode"] = to_string(r.mode);
  j["bound"] = r.bound;
  Json warnings = Json::array();
  for (const auto& w : r.budget_warnings) {
    warnings.push_back({{"y0", integer_json(w.y0)}, {"stage", stage_name(w.stage)}, {"message", w.message}});
  }
  j["budget_warnings"] = std::move(warnings);
  return j;
}

std::string render_json_lines(const SearchReport& r, const std::optional<std::string>& instance) {
  std::string out;
  for (const auto& s : r.solutions) out += solution_json(s).dump() + "\n";
  out += summary_json(r, instance).dump() + "\n";
  return out;
}

std::string render_hypotheses_text(const HypothesisReport& h) {
  std::ostringstream os;
  os << "mod 3 class of p:      " << to_string(h.mod3.kind);
  if (!h.mod3.vanishing_residues.empty()) {
    os << " {";
    for (std::size_t i = 0; i < h.mod3.vanishing_residues.size(); ++i) {
      os << (i ? "," : "") << h.mod3.vanishing_residues[i];
    }
    os << "}";
  }
  os << "\nsimple roots of D(y):  " << h.simple_root_count << "\nirreducibility:        ";
  if (h.irreducibility_witness) {
    os << "proven by specialization y = " << *h.irreducibility_witness;
  } else {
    os << "unknown";
  }
  os << "\nmod-3 obstruction:     " << (h.obstruction ? "yes" : "no") << "\n";
  for (const auto& v : h.violations()) os << "violation: " << v << "\n";
  for (const auto& w : h.warnings()) os << "warning: " << w << "\n";
  return os.str();
}

std::string render_table(const SearchReport& r) {
  const std::array<std::string, 8> header{"y0", "x0", "w0", "classification", "field_disc", "r", "comment", "cardano"};
  std::vector<std::array<std::string, 8>> rows;
  auto opt = [](const std::optional<Integer>& v) { return v ? v->get_str() : std::string("-"); };
  for (const auto& s : r.solutions) {
    std::array<std::string, 8> row;
    row[0] = s.y0.get_str();
    row[1] = s.x0.get_str();
    row[2] = opt(s.w0);
    row[3] = to_string(s.classification);
    row[4] = s.cofactor ? (s.cofactor->totally_reducible ? "split" : opt(s.cofactor->field_disc)) : "?";
    row[5] = s.cofactor ? opt(s.cofactor->r) : "?";
    row[6] = s.cofactor && s.cofactor->comment_holds ? (*s.cofactor->comment_holds ? "yes" : "no") : "-";
    if (s.cardano) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.12g", *s.cardano);
      row[7] = buf;
    } else {
      row[7] = "-";
    }
    rows.push_back(std::move(row));
  }
  std::array<std::size_t, 8> width{};
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::array<std::string, 8>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << cells[c] << std::string(width[c] - cells[c].size(), ' ');
    }
    os << "\n";
  };
  line(header);
  for (const auto& row : rows) line(row);
  os << "\nmode " << to_string(r.mode) << ", |y0| <= " << r.bound << ": tested " << r.tested_count
     << ", filter passes " << r.filter_pass_count << ", solutions " << r.solution_count << "\n";
  if (r.rational_w_fraction) os << "share of solutions with square -3D(y0): " << *r.rational_w_fraction << "\n";
  for (const auto& w : r.budget_warnings) {
    os << "budget warning at y0 = " << w.y0 << " (" << stage_name(w.stage) << "): " << w.message << "\n";
  }
  os << render_hypotheses_text(r.hypotheses);
  return os.str();
}

}  // namespace cubicdio
