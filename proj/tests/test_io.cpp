#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cumsub/io.hpp"

using namespace cumsub;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string squash(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

// Compares the text-table cells against a transcription of a printed table.
// The golden header names are structural; only body cells are compared.
void expect_matches_golden(const SubtractionSet& s, std::span<const Convention> convs, const std::string& file) {
  const auto golden = io::parse_csv(read_file(std::string(CUMSUB_TEST_DATA) + "/" + file));
  ASSERT_GE(golden.size(), 2u);
  const Heap hmax = golden.size() - 2;
  const auto cells = io::solve_text_cells(solve(s, hmax), convs);
  ASSERT_EQ(cells.size(), golden.size());
  for (std::size_t r = 1; r < golden.size(); ++r) {
    ASSERT_EQ(cells[r].size(), golden[r].size()) << file << " row " << r;
    for (std::size_t c = 0; c < golden[r].size(); ++c)
      EXPECT_EQ(squash(cells[r][c]), squash(golden[r][c])) << file << " heap " << r - 1 << " column " << golden[0][c];
  }
}

}  // namespace

TEST(PrintedTables, ThreeFive) {
  const Convention convs[] = {Convention::FvF, Convention::AvA};
  const auto golden = io::parse_csv(read_file(std::string(CUMSUB_TEST_DATA) + "/table_3_5.csv"));
  const auto t = solve({3, 5}, golden.size() - 2);
  for (std::size_t r = 1; r < golden.size(); ++r) {
    const Heap h = r - 1;
    EXPECT_EQ(to_string(t.outcome(convs[0], h)), golden[r][1]) << h;
    EXPECT_EQ(to_string(t.outcome(convs[1], h)), golden[r][2]) << h;
    const auto d = make_discrepancy(h, t.outcome(convs[0], h), t.outcome(convs[1], h));
    EXPECT_EQ(io::format_delta(d.d1), golden[r][3]) << h;
    EXPECT_EQ(io::format_delta(d.d2), golden[r][4]) << h;
  }
}

TEST(PrintedTables, ThreeEightElevenThirteen) {
  expect_matches_golden({3, 8, 11, 13}, kAllConventions, "table_3_8_11_13.csv");
}

TEST(PrintedTables, FourFiveNine) { expect_matches_golden({4, 5, 9}, kAllConventions, "table_4_5_9.csv"); }

TEST(Format, Cells) {
  const auto t = solve({4, 5, 9}, 61);
  EXPECT_EQ(io::format_cell(t.at(Convention::FvF, 61)), "(33,28), 5,9");
  EXPECT_EQ(io::format_cell(t.at(Convention::FvF, 2)), "(0,0)");
  EXPECT_EQ(io::format_delta(0), "0");
  EXPECT_EQ(io::format_delta(-1), "-1");
  EXPECT_EQ(io::format_delta(2), "+2");
  EXPECT_EQ(io::parse_pair("(33,28)"), (OutcomePair{33, 28}));
  EXPECT_THROW(io::parse_pair("33,28"), std::invalid_argument);
}

TEST(Csv, QuotingAndComments) {
  const std::vector<std::string> fields{"plain", "a,b", "say \"hi\"", ""};
  const auto row = io::csv_row(fields);
  EXPECT_EQ(row, "plain,\"a,b\",\"say \"\"hi\"\"\",\r\n");
  const auto parsed = io::parse_csv("# tool=cumsub\n" + row + "x,y\n");
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0], fields);
  EXPECT_EQ(parsed[1], (std::vector<std::string>{"x", "y"}));
  EXPECT_THROW(io::parse_csv("\"open"), std::invalid_argument);
}

TEST(Csv, SolveRoundTrip) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::set<Action> acts;
    const auto n = 1 + rng() % 5;
    while (acts.size() < n) acts.insert(1 + rng() % 20);
    const SubtractionSet s(std::vector<Action>(acts.begin(), acts.end()));
    const auto t = solve(s, 120);
    const io::Metadata meta{{"set", s.to_string()}, {"hmax", "120"}};
    const auto rows = io::parse_solve_csv(io::render_solve_csv(t, kAllConventions, meta));
    ASSERT_EQ(rows.size(), 121u);
    for (const auto& row : rows)
      for (Convention x : kAllConventions) {
        const auto& cell = row.cells.at(x);
        const auto& p = t.at(x, row.heap);
        ASSERT_EQ(cell.outcome, p.outcome);
        ASSERT_EQ(cell.moves, p.pspe_moves);
        const auto d = make_discrepancy(row.heap, t.outcome(Convention::FvF, row.heap), p.outcome);
        ASSERT_EQ(cell.d1, d.d1);
        ASSERT_EQ(cell.d2, d.d2);
      }
  }
}

TEST(Csv, MetadataLeadsTheFile) {
  const Convention convs[] = {Convention::FvF};
  const auto text = io::render_solve_csv(solve({3, 5}, 3), convs, {{"tool", "cumsub"}, {"version", "0.1.0"}});
  EXPECT_EQ(text.rfind("# tool=cumsub\n# version=0.1.0\nheap,FvF,FvF_moves\r\n", 0), 0u);
}

TEST(Json, SolveShape) {
  const Convention convs[] = {Convention::FvF, Convention::FvA};
  const auto j = io::solve_json(solve({4, 5, 9}, 61), convs, {{"set", "4,5,9"}});
  EXPECT_EQ(j["meta"]["set"], "4,5,9");
  ASSERT_EQ(j["rows"].size(), 62u);
  const auto& r = j["rows"][61];
  EXPECT_EQ(r["heap"], 61);
  EXPECT_EQ(r["FvF"]["o1"], 33);
  EXPECT_EQ(r["FvF"]["moves"], (nlohmann::json{5, 9}));
  EXPECT_EQ(r["FvA"]["d1"], -1);
  EXPECT_EQ(r["FvA"]["d2"], 1);
  EXPECT_FALSE(r.contains("AvA"));
}

TEST(ScanCsv, Rows) {
  const std::vector<ScanPoint> pts{{{3, 5}, 14, Criterion::diff_of_diff}, {{4, 5, 9}, 24, Criterion::diff_of_diff}};
  const auto text = io::render_scan_csv(pts);
  const auto rows = io::parse_csv(text);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"s3", "s2", "s1", "first_heap"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"", "3", "5", "14"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"4", "5", "9", "24"}));
  EXPECT_NE(text.find("\r\n,3,5,14\r\n"), std::string::npos);
}

TEST(TextGrid, AlignsColumns) {
  const Convention convs[] = {Convention::FvF, Convention::AvA};
  const auto text = io::render_solve_text(solve({3, 5}, 15), convs);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("Heap | FvF", 0), 0u);
  const auto width = io::display_width(line);
  while (std::getline(in, line)) EXPECT_LE(io::display_width(line), width);
}
