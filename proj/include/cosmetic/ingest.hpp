#ifndef COSMETIC_INGEST_HPP
#define COSMETIC_INGEST_HPP

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cosmetic/bennequin.hpp"
#include "cosmetic/braid.hpp"
#include "cosmetic/jones.hpp"
#include "cosmetic/obstruction.hpp"

namespace cosmetic {

struct KnotRecord {
  int line = 0; // 1-based line in the source file, 0 when built in memory
  std::string name;
  std::optional<std::string> braid_text;
  std::optional<std::string> bands_text;
  std::optional<int> strands;
  std::optional<long long> genus;
  std::optional<long long> braid_index;
  std::optional<long long> thickness;
  std::optional<long long> jones_span;

  std::optional<BraidWord> braid;
  std::optional<BandWord> bands;
  std::string error; // nonempty when the row failed validation
};

// Parse text fields, fill the parsed words and check the record invariants.
inline void validate(KnotRecord& r)
{
  try {
    if (r.name.empty()) throw std::invalid_argument("empty name");
    if (r.braid_text) r.braid = parse_braid(*r.braid_text, r.strands);
    if (r.bands_text) r.bands = parse_bands(*r.bands_text, r.strands);
    if (r.braid && r.bands && r.braid->strands() != r.bands->strands())
      throw std::invalid_argument("braid and band word disagree on strand count");
    if (!r.braid && !r.bands && !(r.genus && r.braid_index))
      throw std::invalid_argument("need a braid word, a band word, or both genus and braid_index");
    for (auto v : {r.genus, r.braid_index, r.thickness, r.jones_span})
      if (v && *v < 0) throw std::invalid_argument("numeric fields must be nonnegative");
  } catch (const std::exception& e) {
    r.error = e.what();
  }
}

struct IngestResult {
  std::vector<KnotRecord> records; // every data row, in file order; failed rows carry `error`
  std::vector<std::string> warnings;

  std::size_t error_count() const
  {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const KnotRecord& r) { return !r.error.empty(); }));
  }
};

namespace detail {

// One CSV record with RFC 4180 quoting; quoted fields may not span lines.
inline std::vector<std::string> split_csv_line(const std::string& line)
{
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          cur += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field");
  out.push_back(std::move(cur));
  return out;
}

inline std::string trim(const std::string& s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline long long parse_count(const std::string& field, const char* column)
{
  long long v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(std::string("column ") + column + ": malformed integer '" + field + "'");
  return v;
}

} // namespace detail

// Header row with any subset of name,braid,bands,n,genus,braid_index,thickness,jones_span.
inline IngestResult ingest_csv(std::istream& in)
{
  static const std::vector<std::string> known = {"name", "braid", "bands", "n", "genus", "braid_index", "thickness", "jones_span"};
  IngestResult out;
  std::string line;
  int lineno = 0;
  std::vector<int> column_of(known.size(), -1);
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    if (!have_header) {
      auto cols = detail::split_csv_line(line);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        auto name = detail::trim(cols[c]);
        auto it = std::find(known.begin(), known.end(), name);
        if (it == known.end()) out.warnings.push_back("ignoring unknown column '" + name + "'");
        else column_of[it - known.begin()] = static_cast<int>(c);
      }
      if (column_of[0] < 0) throw ParseError("CSV header has no 'name' column");
      have_header = true;
      continue;
    }
    KnotRecord r;
    r.line = lineno;
    try {
      auto cols = detail::split_csv_line(line);
      auto field = [&](int k) -> std::optional<std::string> {
        int c = column_of[k];
        if (c < 0 || c >= static_cast<int>(cols.size())) return std::nullopt;
        auto v = detail::trim(cols[c]);
        if (v.empty()) return std::nullopt;
        return v;
      };
      r.name = field(0).value_or("");
      r.braid_text = field(1);
      r.bands_text = field(2);
      if (auto v = field(3)) r.strands = static_cast<int>(detail::parse_count(*v, "n"));
      if (auto v = field(4)) r.genus = detail::parse_count(*v, "genus");
      if (auto v = field(5)) r.braid_index = detail::parse_count(*v, "braid_index");
      if (auto v = field(6)) r.thickness = detail::parse_count(*v, "thickness");
      if (auto v = field(7)) r.jones_span = detail::parse_count(*v, "jones_span");
      validate(r);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.records.push_back(std::move(r));
  }
  if (!have_header) throw ParseError("CSV input has no header row");
  return out;
}

inline IngestResult ingest_csv(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return ingest_csv(in);
}

struct BatchOptions {
  EvaluatorLimits limits;
  GateOptions gate;
  bool exact = false; // trust word-derived genus and strand count
  unsigned jobs = 1;
};

struct BatchEntry {
  std::string name;
  int line = 0;
  std::optional<ObstructionReport> report;
  std::string error;

  bool ok() const { return error.empty(); }
};

inline BatchEntry process_record(const KnotRecord& rec, const BatchOptions& opt)
{
  BatchEntry entry{rec.name, rec.line, std::nullopt, rec.error};
  if (!entry.ok()) return entry;
  try {
    KnotProfile p;
    p.name = rec.name;
    p.thickness = rec.thickness;
    p.jones_span = rec.jones_span;
    if (rec.braid || rec.bands) {
      BraidWord w = rec.braid ? *rec.braid : expand(*rec.bands);
      auto inv = measure_word(w, rec.bands, opt.limits);
      if (inv.components != 1)
        throw std::invalid_argument("closure has " + std::to_string(inv.components) + " components, not a knot");
      p.word = std::move(inv);
    }
    std::optional<long long> g = rec.genus;
    std::optional<long long> b = rec.braid_index;
    if (opt.exact && p.word) {
      if (!g && p.word->bennequin_genus) g = *p.word->bennequin_genus;
      if (!b) b = p.word->strands;
    }
    if (!g || !b) {
      if (g) p.genus = *g;
      if (b) p.braid_index = *b;
      entry.report = untrusted_report(p);
      return entry;
    }
    p.genus = *g;
    p.braid_index = *b;
    entry.report = gate(p, opt.gate);
  } catch (const std::exception& e) {
    entry.error = e.what();
    entry.report.reset();
  }
  return entry;
}

// Reports come back in input order whatever the worker count.
inline std::vector<BatchEntry> run_batch(const std::vector<KnotRecord>& records, const BatchOptions& opt = {})
{
  std::vector<BatchEntry> out(records.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(records.size())));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < records.size(); ++k) out[k] = process_record(records[k], opt);
    return out;
  }
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t k = t; k < records.size(); k += jobs) out[k] = process_record(records[k], opt);
    });
  }
  workers.clear();
  return out;
}

} // namespace cosmetic

#endif // COSMETIC_INGEST_HPP
