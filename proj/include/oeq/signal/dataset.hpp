// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "oeq/signal/waveform.hpp"

namespace oeq::signal {

/// Versioned binary container for aligned tx/rx symbol sequences.
///
/// Layout (all little-endian):
///   magic "OEQD" | version u32 | flags u32 | constellation order u32 |
///   symbol_rate f64 | launch_power_dbm f64 | config_digest u64 | length u64 |
///   length records of 8 float64:
///     tx_x_re, tx_x_im, tx_y_re, tx_y_im, rx_x_re, rx_x_im, rx_y_re, rx_y_im
///
/// The same container stores teacher label sets (kFlagTeacherLabels): tx_*
/// holds the ground truth and rx_* the teacher predictions, aligned to the
/// frame positions the label windows cover (uncovered positions are zero).
struct DatasetHeader {
  std::uint32_t version = 1;
  std::uint32_t flags = 0;
  std::uint32_t constellation_order = 64;
  double symbol_rate = 0.0;
  double launch_power_dbm = 0.0;
  std::uint64_t config_digest = 0;
  std::uint64_t length = 0;

  static constexpr std::uint32_t kFlagTeacherLabels = 1u << 0;
};

void write_dataset(const std::filesystem::path& path, const DatasetHeader& header, const SymbolFrame& frame);

struct LoadedDataset {
  DatasetHeader header;
  SymbolFrame frame;
};

LoadedDataset read_dataset(const std::filesystem::path& path);

/// Header-only peek (cheap existence/compatibility checks).
DatasetHeader read_dataset_header(const std::filesystem::path& path);

/// Inspection export: one row per symbol with the 8 record fields.
void export_dataset_csv(const std::filesystem::path& binary_path, const std::filesystem::path& csv_path);

}  // namespace oeq::signal
