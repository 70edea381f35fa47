#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <sstream>

#include "whitham/harness/experiments.hpp"
#include "whitham/symmetrize.hpp"
#include "whitham/trajectory_io.hpp"

using namespace whitham;

namespace {
Trajectory sample_run() {
  const Grid g(16, 5.0);
  const State P = to_physical(harness::reference_state(g, 0.1));
  SolveConfig c;
  c.T = 0.1;
  c.dt = 0.05;
  c.eta_bar = 1.0;
  return solve_direct(P.first, P.second, c);
}

std::uint64_t word_at(const std::string& bytes, std::size_t i) {
  std::uint64_t v = 0;
  for (int b = 7; b >= 0; --b) v = (v << 8) | static_cast<unsigned char>(bytes[8 * i + b]);
  return v;
}
}  // namespace

TEST(BinaryDump, RoundTripIsExact) {
  const Trajectory tr = sample_run();
  std::stringstream buf;
  write_binary_dump(buf, tr);
  const DumpContents d = read_binary_dump(buf);
  EXPECT_EQ(d.n, 16u);
  EXPECT_EQ(d.period, 5.0);
  EXPECT_EQ(d.N, 2u);
  EXPECT_EQ(d.representation, Representation::physical);
  EXPECT_EQ(d.eta_bar, 1.0);
  ASSERT_EQ(d.states.size(), tr.states.size());
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    EXPECT_EQ(std::memcmp(d.states[i].first.samples().data(), tr.states[i].first.samples().data(), 16 * 8), 0);
    EXPECT_EQ(std::memcmp(d.states[i].second.samples().data(), tr.states[i].second.samples().data(), 16 * 8), 0);
  }
}

TEST(BinaryDump, LittleEndianLayout) {
  const Trajectory tr = sample_run();
  std::stringstream buf;
  write_binary_dump(buf, tr);
  const std::string bytes = buf.str();
  ASSERT_EQ(bytes.size(), 8 * (5 + tr.states.size() * 32));
  EXPECT_EQ(word_at(bytes, 0), 16u);
  EXPECT_EQ(std::bit_cast<double>(word_at(bytes, 1)), 5.0);
  EXPECT_EQ(word_at(bytes, 2), 2u);
  EXPECT_EQ(word_at(bytes, 3), representation_tag(Representation::physical));
  EXPECT_EQ(std::bit_cast<double>(word_at(bytes, 4)), 1.0);
  // First payload sample: eta at x = 0, t = 0; u samples follow the n eta samples.
  EXPECT_EQ(std::bit_cast<double>(word_at(bytes, 5)), tr.states[0].first[0]);
  EXPECT_EQ(std::bit_cast<double>(word_at(bytes, 5 + 16 + 3)), tr.states[0].second[3]);
}

TEST(BinaryDump, TruncatedStreamThrows) {
  const Trajectory tr = sample_run();
  std::stringstream buf;
  write_binary_dump(buf, tr);
  std::string bytes = buf.str();
  bytes.resize(bytes.size() - 3);
  std::stringstream cut(bytes);
  EXPECT_ANY_THROW(read_binary_dump(cut));
}

TEST(TrajectoryCsv, HeaderAndPrecision) {
  const Trajectory tr = sample_run();
  std::stringstream out;
  write_trajectory_csv(out, tr);
  std::string header;
  std::getline(out, header);
  EXPECT_EQ(header, "time,eta_E0,eta_E1,eta_E2,u_E0,u_E1,u_E2");
  std::string row;
  std::getline(out, row);
  EXPECT_EQ(row.substr(0, 2), "0,");
  int lines = 1;
  while (std::getline(out, row)) ++lines;
  EXPECT_EQ(lines, static_cast<int>(tr.states.size()));
}

TEST(EnergyCsv, OneRowPerTime) {
  const Trajectory tr = sample_run();
  std::stringstream out;
  write_energy_csv(out, tr);
  std::string line;
  std::getline(out, line);
  EXPECT_EQ(line, "time,E0,E1,E2,total");
  int rows = 0;
  while (std::getline(out, line)) ++rows;
  EXPECT_EQ(rows, static_cast<int>(tr.states.size()));
}
