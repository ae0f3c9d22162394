// SPDX-License-Identifier: Apache-2.0
#include "oeq/signal/dataset.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iomanip>

static_assert(std::endian::native == std::endian::little, "container I/O assumes a little-endian host");

namespace oeq::signal {

namespace {
constexpr char kMagic[4] = {'O', 'E', 'Q', 'D'};

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}
}  // namespace

void write_dataset(const std::filesystem::path& path, const DatasetHeader& header, const SymbolFrame& frame) {
  frame.validate();
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("write_dataset: cannot open " + path.string());

  os.write(kMagic, 4);
  put(os, header.version);
  put(os, header.flags);
  put(os, header.constellation_order);
  put(os, header.symbol_rate);
  put(os, header.launch_power_dbm);
  put(os, header.config_digest);
  put(os, static_cast<std::uint64_t>(frame.size()));

  std::vector<double> record(8);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    record[0] = frame.tx_x[i].real();
    record[1] = frame.tx_x[i].imag();
    record[2] = frame.tx_y[i].real();
    record[3] = frame.tx_y[i].imag();
    record[4] = frame.rx_x[i].real();
    record[5] = frame.rx_x[i].imag();
    record[6] = frame.rx_y[i].real();
    record[7] = frame.rx_y[i].imag();
    os.write(reinterpret_cast<const char*>(record.data()), 8 * sizeof(double));
  }
  if (!os) throw FormatError("write_dataset: short write to " + path.string());
}

namespace {
DatasetHeader read_header_stream(std::istream& is, const std::filesystem::path& path) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw FormatError("read_dataset: bad magic in " + path.string());
  DatasetHeader h;
  h.version = get<std::uint32_t>(is);
  if (h.version != 1) throw FormatError("read_dataset: unsupported version " + std::to_string(h.version));
  h.flags = get<std::uint32_t>(is);
  h.constellation_order = get<std::uint32_t>(is);
  h.symbol_rate = get<double>(is);
  h.launch_power_dbm = get<double>(is);
  h.config_digest = get<std::uint64_t>(is);
  h.length = get<std::uint64_t>(is);
  if (!is) throw FormatError("read_dataset: truncated header in " + path.string());
  return h;
}
}  // namespace

LoadedDataset read_dataset(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("read_dataset: cannot open " + path.string());
  LoadedDataset out;
  out.header = read_header_stream(is, path);

  auto& f = out.frame;
  f.symbol_rate = out.header.symbol_rate;
  const std::size_t n = out.header.length;
  f.tx_x.resize(n);
  f.tx_y.resize(n);
  f.rx_x.resize(n);
  f.rx_y.resize(n);
  std::vector<double> record(8);
  for (std::size_t i = 0; i < n; ++i) {
    is.read(reinterpret_cast<char*>(record.data()), 8 * sizeof(double));
    f.tx_x[i] = {record[0], record[1]};
    f.tx_y[i] = {record[2], record[3]};
    f.rx_x[i] = {record[4], record[5]};
    f.rx_y[i] = {record[6], record[7]};
  }
  if (!is) throw FormatError("read_dataset: truncated payload in " + path.string());
  return out;
}

DatasetHeader read_dataset_header(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("read_dataset: cannot open " + path.string());
  return read_header_stream(is, path);
}

void export_dataset_csv(const std::filesystem::path& binary_path, const std::filesystem::path& csv_path) {
  auto ds = read_dataset(binary_path);
  std::ofstream os(csv_path, std::ios::trunc);
  if (!os) throw FormatError("export_dataset_csv: cannot open " + csv_path.string());
  os << "index,tx_x_re,tx_x_im,tx_y_re,tx_y_im,rx_x_re,rx_x_im,rx_y_re,rx_y_im\n";
  os << std::setprecision(17);
  const auto& f = ds.frame;
  for (std::size_t i = 0; i < f.size(); ++i) {
    os << i << ',' << f.tx_x[i].real() << ',' << f.tx_x[i].imag() << ',' << f.tx_y[i].real() << ','
       << f.tx_y[i].imag() << ',' << f.rx_x[i].real() << ',' << f.rx_x[i].imag() << ',' << f.rx_y[i].real() << ','
       << f.rx_y[i].imag() << '\n';
  }
}

}  // namespace oeq::signal
