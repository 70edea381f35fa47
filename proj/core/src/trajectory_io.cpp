#include "whitham/trajectory_io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace whitham {
namespace {

void put_number(std::ostream& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  out.write(buf, ptr - buf);
}

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) return __builtin_bswap64(v);
  return v;
}

void put_word(std::ostream& out, std::uint64_t v) {
  const std::uint64_t le = to_little(v);
  out.write(reinterpret_cast<const char*>(&le), sizeof le);
}

void put_double(std::ostream& out, double v) { put_word(out, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_word(std::istream& in) {
  std::uint64_t le = 0;
  if (!in.read(reinterpret_cast<char*>(&le), sizeof le)) {
    throw std::runtime_error("binary dump is truncated");
  }
  return to_little(le);
}

double get_double(std::istream& in) { return std::bit_cast<double>(get_word(in)); }

const char* first_name(Representation r) {
  switch (r) {
    case Representation::symmetric: return "zeta";
    case Representation::physical: return "eta";
    case Representation::unidirectional: return "zero";
  }
  return "first";
}

}  // namespace

std::uint64_t representation_tag(Representation r) {
  switch (r) {
    case Representation::symmetric: return 0;
    case Representation::physical: return 1;
    case Representation::unidirectional: return 2;
  }
  throw std::invalid_argument("unknown representation");
}

void write_trajectory_csv(std::ostream& out, const Trajectory& tr) {
  const int N = tr.config.N;
  const char* a = tr.states.empty() ? "first" : first_name(tr.states.front().representation);
  out << "time";
  for (int k = 0; k <= N; ++k) out << ',' << a << "_E" << k;
  for (int k = 0; k <= N; ++k) out << ",u_E" << k;
  out << '\n';
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    put_number(out, tr.times[i]);
    for (const Field* f : {&tr.states[i].first, &tr.states[i].second}) {
      for (int k = 0; k <= N; ++k) {
        const double norm = derivative_l2_norm(*f, k);
        out << ',';
        put_number(out, norm * norm);
      }
    }
    out << '\n';
  }
}

void write_energy_csv(std::ostream& out, const Trajectory& tr) {
  out << EnergyReport::csv_header(tr.config.N) << '\n';
  for (const auto& e : tr.energy_series) out << e.csv_row() << '\n';
}

void write_binary_dump(std::ostream& out, const Trajectory& tr) {
  if (tr.states.empty()) throw std::invalid_argument("cannot dump an empty trajectory");
  const State& s0 = tr.states.front();
  put_word(out, s0.grid().size());
  put_double(out, s0.grid().period());
  put_word(out, static_cast<std::uint64_t>(tr.config.N));
  put_word(out, representation_tag(s0.representation));
  put_double(out, s0.eta_bar);
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    for (double v : tr.states[i].first.samples()) put_double(out, v);
    for (double v : tr.states[i].second.samples()) put_double(out, v);
  }
}

DumpContents read_binary_dump(std::istream& in) {
  DumpContents d;
  d.n = get_word(in);
  d.period = get_double(in);
  d.N = get_word(in);
  const std::uint64_t tag = get_word(in);
  d.eta_bar = get_double(in);
  if (tag > 2) throw std::runtime_error("unknown representation tag " + std::to_string(tag));
  d.representation = static_cast<Representation>(tag);
  const Grid grid(static_cast<int>(d.n), d.period);
  while (in.peek() != std::char_traits<char>::eof()) {
    Field a(grid);
    Field b(grid);
    for (auto& v : a.samples()) v = get_double(in);
    for (auto& v : b.samples()) v = get_double(in);
    d.states.emplace_back(std::move(a), std::move(b), d.representation, d.eta_bar);
  }
  return d;
}

}  // namespace whitham
