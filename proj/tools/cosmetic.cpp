// Command-line front end: single-word analysis, the verdict gate, Jones
// polynomials, dealternation reports and CSV batch runs.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cosmetic/braid.hpp"
#include "cosmetic/dealternation.hpp"
#include "cosmetic/ingest.hpp"
#include "cosmetic/jones.hpp"
#include "cosmetic/obstruction.hpp"
#include "cosmetic/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRecordFailures = 1;
constexpr int kUsage = 2;

struct Globals {
  std::string format = "json";
  bool oracle = false;
  int max_crossings = 16;
  bool known_results = false;
  bool exact = false;
  unsigned jobs = 1;

  cosmetic::BatchOptions batch() const
  {
    cosmetic::BatchOptions o;
    o.limits.force_oracle = oracle;
    o.limits.max_crossings = max_crossings;
    o.gate.known_results = known_results;
    o.exact = exact;
    o.jobs = jobs;
    return o;
  }
};

int emit_entries(const std::vector<cosmetic::BatchEntry>& entries, const std::string& format, bool as_array)
{
  int failures = 0;
  for (const auto& e : entries) failures += e.ok() ? 0 : 1;
  if (format == "json") {
    if (as_array) {
      cosmetic::Json arr = cosmetic::Json::array();
      for (const auto& e : entries) arr.push_back(cosmetic::to_json(e));
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& e : entries) std::cout << cosmetic::to_json(e).dump(2) << "\n";
    }
  } else if (format == "csv") {
    std::cout << cosmetic::csv_header() << "\n";
    for (const auto& e : entries) std::cout << cosmetic::to_csv_row(e) << "\n";
  } else {
    for (const auto& e : entries) std::cout << cosmetic::to_text(e);
  }
  return failures ? kRecordFailures : kOk;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Purely cosmetic surgery obstructions from genus, braid index and braid words"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--oracle", g.oracle, "Force the state-sum bracket evaluator");
  app.add_option("--max-crossings", g.max_crossings, "Crossing limit of the state-sum evaluator")->check(CLI::Range(0, 30));
  app.add_flag("--known-results", g.known_results, "Treat braid index 3 as settled");
  app.add_flag("--exact", g.exact, "Trust word-derived genus and strand count as exact");
  app.add_option("--jobs", g.jobs, "Worker threads for batch runs")->check(CLI::Range(1u, 256u));

  std::string braid_text;
  std::optional<int> n;
  std::optional<long long> genus, braid_index, thickness, span;

  auto* analyze = app.add_subcommand("analyze", "Full report for one braid word");
  analyze->fallthrough();
  analyze->add_option("braid", braid_text, "Braid word, e.g. \"1 1 1\"")->required();
  analyze->add_option("--n", n, "Strand count");
  analyze->add_option("--g", genus, "Trusted genus");
  analyze->add_option("--b", braid_index, "Trusted braid index");
  analyze->add_option("--th", thickness, "Known thickness (or upper bound)");

  auto* gate_cmd = app.add_subcommand("gate", "Verdict from genus and braid index");
  gate_cmd->fallthrough();
  gate_cmd->add_option("--g", genus, "Genus")->required();
  gate_cmd->add_option("--b", braid_index, "Braid index")->required();
  gate_cmd->add_option("--th", thickness, "Thickness (or upper bound)");
  gate_cmd->add_option("--span", span, "Jones polynomial span");

  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a braid closure");
  jones_cmd->fallthrough();
  jones_cmd->add_option("braid", braid_text, "Braid word")->required();
  jones_cmd->add_option("--n", n, "Strand count");

  std::string bands_text;
  auto* dealt = app.add_subcommand("dealt", "Dealternation upper bound of a band word");
  dealt->fallthrough();
  dealt->add_option("--bands", bands_text, "Band word, e.g. \"(1,4) (1,2) (2,3)\"")->required();
  dealt->add_option("--n", n, "Strand count");

  std::string csv_path;
  auto* batch = app.add_subcommand("batch", "Run every row of a knot-table CSV");
  batch->fallthrough();
  batch->add_option("csv", csv_path, "CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gate_cmd) {
      cosmetic::KnotProfile p;
      p.name = "gate";
      p.genus = *genus;
      p.braid_index = *braid_index;
      p.thickness = thickness;
      p.jones_span = span;
      auto r = cosmetic::gate(p, g.batch().gate);
      return emit_entries({cosmetic::BatchEntry{p.name, 0, r, {}}}, g.format, false);
    }
    if (*analyze) {
      cosmetic::KnotRecord rec;
      rec.name = braid_text;
      rec.braid_text = braid_text;
      rec.strands = n;
      rec.genus = genus;
      rec.braid_index = braid_index;
      rec.thickness = thickness;
      cosmetic::validate(rec);
      if (!rec.error.empty()) throw std::invalid_argument(rec.error);
      auto entries = cosmetic::run_batch({rec}, g.batch());
      return emit_entries(entries, g.format, false);
    }
    if (*jones_cmd) {
      auto w = cosmetic::parse_braid(braid_text, n);
      auto opts = g.batch();
      auto v = cosmetic::jones(w, opts.limits);
      if (g.format == "text") {
        std::cout << v.to_string() << "\n";
      } else {
        cosmetic::Json j;
        j["braid"] = w.to_string();
        j["n"] = w.strands();
        j["variable"] = cosmetic::variable_name(v.variable());
        j["jones"] = cosmetic::to_json(v);
        j["text"] = v.to_string();
        j["span"] = cosmetic::closes_to_knot(w) ? cosmetic::Json(v.span()) : cosmetic::Json(nullptr);
        if (g.format == "csv") std::cout << "braid,jones,span\n" << w.to_string() << "," << v.to_string() << "," << j["span"].dump() << "\n";
        else std::cout << j.dump(2) << "\n";
      }
      return kOk;
    }
    if (*dealt) {
      auto b = cosmetic::parse_bands(bands_text, n);
      auto c = cosmetic::dealternation_upper_word(b);
      cosmetic::Json j = cosmetic::to_json(c);
      int genus_b = cosmetic::bennequin_genus(b);
      j["bennequin_genus"] = genus_b;
      j["thm4"] = cosmetic::to_json(cosmetic::thm4_bound(genus_b, b.strands()));
      if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "bands (shift " << c.shift << "): " << c.word.to_string() << "\n";
        std::cout << "pattern: " << cosmetic::pattern_name(c.pattern) << "\n";
        for (const auto& per : j["per_band"])
          std::cout << "  " << per["band"].get<std::string>() << " cost " << per["cost"].get<int>() << " via "
                    << per["word"].get<std::string>() << "\n";
        std::cout << "total: " << c.total << ", (n-3)k + r_1n: " << c.formula << ", thm4: "
                  << j["thm4"]["exact"].get<std::string>() << "\n";
      }
      return kOk;
    }
    if (*batch) {
      cosmetic::IngestResult in;
      try {
        in = cosmetic::ingest_csv(csv_path);
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
      }
      for (const auto& w : in.warnings) std::cerr << "warning: " << w << "\n";
      auto entries = cosmetic::run_batch(in.records, g.batch());
      return emit_entries(entries, g.format, true);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRecordFailures;
  }
  return kUsage;
}
