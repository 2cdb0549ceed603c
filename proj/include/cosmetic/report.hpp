#ifndef COSMETIC_REPORT_HPP
#define COSMETIC_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosmetic/dealternation.hpp"
#include "cosmetic/ingest.hpp"
#include "cosmetic/obstruction.hpp"

namespace cosmetic {

using Json = nlohmann::ordered_json;

inline Json to_json(const LaurentPoly& p) { return Json(p.term_list()); }

inline Json to_json(const RationalBound& b) { return Json{{"exact", to_string(b.exact)}, {"floor", b.floor}}; }

inline Json to_json(const SlopeSet& s)
{
  Json slopes = Json::array();
  for (const auto& r : s.slopes) slopes.push_back(to_string(r));
  return slopes;
}

inline Json to_json(const WordInvariants& w)
{
  Json j;
  j["strands"] = w.strands;
  j["crossings"] = w.crossings;
  j["writhe"] = w.writhe;
  j["components"] = w.components;
  j["state_circles_a"] = w.circles_a;
  j["state_circles_b"] = w.circles_b;
  j["turaev_genus_diagram"] = w.turaev_genus;
  j["alternating_diagram"] = w.alternating_diagram;
  j["jones"] = w.jones ? to_json(*w.jones) : Json(nullptr);
  j["jones_span"] = w.jones_span ? Json(*w.jones_span) : Json(nullptr);
  if (!w.jones_error.empty()) j["jones_error"] = w.jones_error;
  j["bennequin_genus"] = w.bennequin_genus ? Json(*w.bennequin_genus) : Json(nullptr);
  j["dealternation_upper"] = w.dealternation_upper ? Json(*w.dealternation_upper) : Json(nullptr);
  return j;
}

inline Json to_json(const ObstructionReport& r)
{
  const auto& p = r.profile;
  Json j;
  j["name"] = p.name;
  Json inputs;
  inputs["g"] = r.profile_trusted ? Json(p.genus) : Json(nullptr);
  inputs["b"] = r.profile_trusted ? Json(p.braid_index) : Json(nullptr);
  if (p.thickness) inputs["th"] = *p.thickness;
  if (p.jones_span) inputs["span"] = *p.jones_span;
  if (p.word) {
    inputs["braid"] = p.word->braid.to_string();
    if (p.word->bands) inputs["bands"] = p.word->bands->to_string();
  }
  j["inputs"] = inputs;
  if (p.word) j["invariants"] = to_json(*p.word);
  Json bounds;
  bounds["lemma3"] = r.lemma3 ? to_json(*r.lemma3) : Json(nullptr);
  bounds["thm4"] = r.thm4 ? to_json(*r.thm4) : Json(nullptr);
  bounds["crossing"] = r.crossing ? Json(to_string(*r.crossing)) : Json(nullptr);
  j["bounds"] = bounds;
  Json constraints;
  constraints["eqn3"] = r.eqn3 ? Json(*r.eqn3) : Json(nullptr);
  if (r.eqn4) constraints["eqn4"] = *r.eqn4;
  j["constraints"] = constraints;
  j["th_upper"] = r.th_upper ? Json(*r.th_upper) : Json(nullptr);
  if (r.th_upper) j["th_source"] = r.th_source;
  j["verdict"] = Json{{"status", status_name(r.verdict.status)},
                      {"route", r.verdict.route},
                      {"slopes", to_json(r.verdict.slopes)},
                      {"unbounded", r.verdict.slopes.unbounded}};
  return j;
}

inline Json to_json(const BatchEntry& e)
{
  if (e.report) return to_json(*e.report);
  Json j;
  j["name"] = e.name;
  if (e.line > 0) j["line"] = e.line;
  j["error"] = e.error;
  return j;
}

inline Json to_json(const CostReport& c)
{
  Json j;
  j["n"] = c.word.strands();
  j["bands"] = c.word.to_string();
  j["shift"] = c.shift;
  j["wrap_count"] = c.wrap_count;
  j["pattern"] = pattern_name(c.pattern);
  Json per = Json::array();
  for (std::size_t k = 0; k < c.bands.size(); ++k) {
    const auto& b = c.word.bands()[k];
    per.push_back(Json{{"band", BandWord(c.word.strands(), {b}).to_string()},
                       {"cost", c.bands[k].cost},
                       {"word", c.bands[k].word.to_string()}});
  }
  j["per_band"] = per;
  j["total"] = c.total;
  j["formula"] = c.formula;
  return j;
}

inline std::string slopes_text(const SlopeSet& s)
{
  std::string out = "{";
  for (std::size_t k = 0; k < s.slopes.size(); ++k) out += (k ? ", " : "") + to_string(s.slopes[k]);
  if (s.unbounded) out += std::string(s.slopes.empty() ? "" : ", ") + "+-1/q for all q";
  return out + "}";
}

inline std::string to_text(const ObstructionReport& r)
{
  std::ostringstream os;
  const auto& p = r.profile;
  os << p.name << "\n";
  if (r.profile_trusted) os << "  g = " << p.genus << ", b = " << p.braid_index << "\n";
  else os << "  g, b: not supplied\n";
  if (p.word) {
    const auto& w = *p.word;
    os << "  braid: " << w.braid.to_string() << " (n = " << w.strands << ")\n";
    if (w.bands) os << "  bands: " << w.bands->to_string() << "\n";
    os << "  crossings " << w.crossings << ", writhe " << w.writhe << ", |s_A| " << w.circles_a << ", |s_B| "
       << w.circles_b << ", g_T(D) " << w.turaev_genus << (w.alternating_diagram ? ", alternating" : "") << "\n";
    if (w.jones) os << "  jones: " << w.jones->to_string() << "\n";
    if (w.jones_span) os << "  jones span: " << *w.jones_span << "\n";
    if (w.bennequin_genus) os << "  bennequin genus: " << *w.bennequin_genus << "\n";
    if (w.dealternation_upper) os << "  dealternation upper: " << *w.dealternation_upper << "\n";
  }
  if (r.lemma3) os << "  lemma3: " << to_string(r.lemma3->exact) << " (floor " << r.lemma3->floor << ")\n";
  if (r.thm4) os << "  thm4: " << to_string(r.thm4->exact) << " (floor " << r.thm4->floor << ")\n";
  if (r.crossing) os << "  crossing: " << to_string(*r.crossing) << "\n";
  if (r.eqn3) os << "  eqn3: " << *r.eqn3 << "\n";
  if (r.eqn4) os << "  eqn4: " << *r.eqn4 << "\n";
  if (r.th_upper) os << "  th_upper: " << *r.th_upper << " (" << r.th_source << ")\n";
  os << "  verdict: " << status_name(r.verdict.status) << "\n";
  os << "  route: " << r.verdict.route << "\n";
  os << "  slopes: " << slopes_text(r.verdict.slopes) << "\n";
  return os.str();
}

inline std::string to_text(const BatchEntry& e)
{
  if (e.report) return to_text(*e.report);
  return e.name + "\n  error: " + e.error + "\n";
}

inline std::string csv_quote(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline const char* csv_header() { return "name,status,th_upper,slopes,unbounded,route,error"; }

inline std::string to_csv_row(const BatchEntry& e)
{
  std::string row = csv_quote(e.name) + ",";
  if (!e.report) return row + ",,,,," + csv_quote(e.error);
  const auto& r = *e.report;
  std::string slopes;
  for (std::size_t k = 0; k < r.verdict.slopes.slopes.size(); ++k)
    slopes += (k ? " " : "") + to_string(r.verdict.slopes.slopes[k]);
  row += std::string(status_name(r.verdict.status)) + ",";
  row += (r.th_upper ? std::to_string(*r.th_upper) : std::string()) + ",";
  row += csv_quote(slopes) + ",";
  row += std::string(r.verdict.slopes.unbounded ? "true" : "false") + ",";
  row += csv_quote(r.verdict.route) + ",";
  return row;
}

} // namespace cosmetic

#endif // COSMETIC_REPORT_HPP
