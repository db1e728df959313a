#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cumsub/analysis/discrepancy.hpp"
#include "cumsub/analysis/scan.hpp"
#include "cumsub/core.hpp"
#include "cumsub/solver.hpp"

namespace cumsub::io {

inline constexpr std::string_view kVersion = "0.1.0";

/// Ordered key/value parameters embedded in every output.
using Metadata = std::vector<std::pair<std::string, std::string>>;

inline std::string format_moves(std::span<const Action> moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moves[i]);
  }
  return out;
}

inline std::vector<Action> parse_moves(std::string_view text) {
  if (text.empty()) return {};
  const auto s = SubtractionSet::parse(text);
  return {s.actions().begin(), s.actions().end()};
}

/// "0", "-1", "+1"
inline std::string format_delta(std::int64_t d) { return d > 0 ? "+" + std::to_string(d) : std::to_string(d); }

/// "(33,28), 5,9" or "(0,0)" at terminal heaps.
inline std::string format_cell(const PositionSolution& p) {
  auto out = to_string(p.outcome);
  if (!p.pspe_moves.empty()) out += ", " + format_moves(p.pspe_moves);
  return out;
}

inline OutcomePair parse_pair(std::string_view text) {
  if (text.size() < 5 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("malformed outcome pair: " + std::string(text));
  const auto inner = text.substr(1, text.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("malformed outcome pair: " + std::string(text));
  return {std::stoull(std::string(inner.substr(0, comma))), std::stoull(std::string(inner.substr(comma + 1)))};
}

// --- CSV -------------------------------------------------------------------

inline std::string csv_field(std::string_view v) {
  if (v.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(v);
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(std::span<const std::string> fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

/// Splits CSV text into records. Lines starting with '#' outside quotes are
/// metadata and skipped.
inline std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, at_line_start = true, field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (at_line_start && c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    at_line_start = false;
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      field_started = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      field_started = true;
    } else if (c == '\r') {
    } else if (c == '\n') {
      if (field_started || !field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      field_started = false;
      at_line_start = true;
    } else {
      field += c;
      field_started = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (field_started || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string metadata_comment(const Metadata& meta) {
  std::string out;
  for (const auto& [k, v] : meta) out += "# " + k + "=" + v + "\n";
  return out;
}

inline nlohmann::json metadata_json(const Metadata& meta) {
  auto j = nlohmann::json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

// --- solve tables ------------------------------------------------------------

inline std::vector<std::string> solve_header(std::span<const Convention> convs) {
  std::vector<std::string> h{"heap"};
  for (Convention x : convs) {
    const std::string name(to_string(x));
    h.push_back(name);
    h.push_back(name + "_moves");
    if (x != Convention::FvF) {
      h.push_back(name + "_da");
      h.push_back(name + "_db");
    }
  }
  return h;
}

/// One row of the appendix-style layout; deltas are taken against FvF.
inline std::vector<std::string> solve_row(const SolveTable& t, std::span<const Convention> convs, Heap h) {
  std::vector<std::string> r{std::to_string(h)};
  const auto& base = t.outcome(Convention::FvF, h);
  for (Convention x : convs) {
    const auto& p = t.at(x, h);
    r.push_back(to_string(p.outcome));
    r.push_back(format_moves(p.pspe_moves));
    if (x != Convention::FvF) {
      const auto d = make_discrepancy(h, base, p.outcome);
      r.push_back(format_delta(d.d1));
      r.push_back(format_delta(d.d2));
    }
  }
  return r;
}

inline std::string render_solve_csv(const SolveTable& t, std::span<const Convention> convs, const Metadata& meta = {}) {
  std::string out = metadata_comment(meta);
  out += csv_row(solve_header(convs));
  for (Heap h = 0; h <= t.hmax(); ++h) out += csv_row(solve_row(t, convs, h));
  return out;
}

/// Plain-text table: outcome and moves share a cell, as in "(33,28), 5,9".
inline std::vector<std::vector<std::string>> solve_text_cells(const SolveTable& t, std::span<const Convention> convs) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"Heap"};
  for (Convention x : convs) {
    head.emplace_back(to_string(x));
    if (x != Convention::FvF) {
      head.emplace_back("δα");
      head.emplace_back("δβ");
    }
  }
  rows.push_back(std::move(head));
  for (Heap h = 0; h <= t.hmax(); ++h) {
    std::vector<std::string> r{std::to_string(h)};
    const auto& base = t.outcome(Convention::FvF, h);
    for (Convention x : convs) {
      const auto& p = t.at(x, h);
      r.push_back(format_cell(p));
      if (x != Convention::FvF) {
        const auto d = make_discrepancy(h, base, p.outcome);
        r.push_back(format_delta(d.d1));
        r.push_back(format_delta(d.d2));
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// Display width in code points, so the Greek headers align.
inline std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

inline std::string render_text_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], display_width(r[i]));
    }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += " | ";
      line += r[i];
      if (i + 1 < r.size()) line.append(width[i] - display_width(r[i]), ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline std::string render_solve_text(const SolveTable& t, std::span<const Convention> convs, const Metadata& meta = {}) {
  return metadata_comment(meta) + render_text_grid(solve_text_cells(t, convs));
}

inline nlohmann::json solve_json(const SolveTable& t, std::span<const Convention> convs, const Metadata& meta = {}) {
  nlohmann::json rows = nlohmann::json::array();
  for (Heap h = 0; h <= t.hmax(); ++h) {
    nlohmann::json row;
    row["heap"] = h;
    const auto& base = t.outcome(Convention::FvF, h);
    for (Convention x : convs) {
      const auto& p = t.at(x, h);
      const auto d = make_discrepancy(h, base, p.outcome);
      row[std::string(to_string(x))] = {{"o1", p.outcome.o1},
                                        {"o2", p.outcome.o2},
                                        {"moves", p.pspe_moves},
                                        {"d1", d.d1},
                                        {"d2", d.d2}};
    }
    rows.push_back(std::move(row));
  }
  return {{"meta", metadata_json(meta)}, {"rows", std::move(rows)}};
}

struct ParsedCell {
  OutcomePair outcome;
  std::vector<Action> moves;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
};

struct ParsedRow {
  Heap heap = 0;
  std::map<Convention, ParsedCell> cells;
};

/// Reads back render_solve_csv output.
inline std::vector<ParsedRow> parse_solve_csv(std::string_view text) {
  const auto records = parse_csv(text);
  if (records.empty() || records.front().empty() || records.front().front() != "heap")
    throw std::invalid_argument("solve CSV must start with a heap column");
  const auto& header = records.front();
  std::vector<ParsedRow> out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) throw std::invalid_argument("solve CSV row " + std::to_string(r) + " has wrong width");
    ParsedRow row;
    row.heap = std::stoull(rec[0]);
    for (std::size_t c = 1; c < header.size(); ++c) {
      const auto& name = header[c];
      const auto us = name.find('_');
      const Convention x = parse_convention(name.substr(0, us));
      auto& cell = row.cells[x];
      const auto suffix = us == std::string::npos ? std::string() : name.substr(us + 1);
      if (suffix.empty())
        cell.outcome = parse_pair(rec[c]);
      else if (suffix == "moves")
        cell.moves = parse_moves(rec[c]);
      else if (suffix == "da")
        cell.d1 = std::stoll(rec[c]);
      else if (suffix == "db")
        cell.d2 = std::stoll(rec[c]);
      else
        throw std::invalid_argument("unknown solve CSV column: " + name);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// --- scans and discrepancy tables ------------------------------------------

inline std::string render_scan_csv(std::span<const ScanPoint> points, const Metadata& meta = {}) {
  std::string out = metadata_comment(meta);
  const std::vector<std::string> head{"s3", "s2", "s1", "first_heap"};
  out += csv_row(head);
  for (const auto& p : points) {
    const auto& s = p.set;
    std::vector<std::string> r{s.size() >= 3 ? std::to_string(s.s3()) : std::string(), std::to_string(s.s2()),
                               std::to_string(s.s1()), p.first_heap ? std::to_string(*p.first_heap) : std::string()};
    out += csv_row(r);
  }
  return out;
}

inline std::string render_discrepancy_csv(std::span<const DiscrepancyRecord> recs, const Metadata& meta = {}) {
  std::string out = metadata_comment(meta);
  const std::vector<std::string> head{"heap", "d1", "d2", "diff_of_diff"};
  out += csv_row(head);
  for (const auto& d : recs) {
    std::vector<std::string> r{std::to_string(d.heap), format_delta(d.d1), format_delta(d.d2),
                               format_delta(d.diff_of_diff)};
    out += csv_row(r);
  }
  return out;
}

}  // namespace cumsub::io
