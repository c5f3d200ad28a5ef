#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "landau/diagnostics.hpp"
#include "landau/experiments.hpp"

namespace landau {

/// CRC-64/ECMA-182 (poly 0x42F0E1EBA9EA3693, no reflection, init/xorout 0).
std::uint64_t crc64(std::span<const unsigned char> bytes);
std::uint64_t crc64(const std::string& text);

/// Strict-schema JSON config. Unknown keys are rejected; every violation is
/// collected and reported in one error. "rho": "auto" derives
/// rho = max(2 kappa, 2 kappa + 2 gamma + 4, 2 zeta, nu).
ExperimentConfig parse_config(const std::filesystem::path& path);
ExperimentConfig parse_config_text(const std::string& text);

/// Canonical (defaults-filled, key-sorted) form of a config; written next to
/// every run's outputs so runs can be replayed exactly.
std::string canonical_config(const ExperimentConfig& cfg);

/// Snapshot = <base>.f64 (raw little-endian doubles, row-major) plus
/// <base>.json sidecar carrying the grid, time, format version and CRC-64.
void write_snapshot(const std::filesystem::path& base, const ScalarField& field, double time);
ScalarField read_snapshot(const std::filesystem::path& base, double* time_out = nullptr);

/// Fixed-header CSV, 17 significant digits, "nan" for disabled columns.
void write_timeseries(const std::filesystem::path& path, std::span<const DiagnosticsRow> rows);
std::vector<DiagnosticsRow> read_timeseries(const std::filesystem::path& path);

/// CLI commands; return process exit codes (0 ok, 2 config, 3 numerical, 4 I/O).
int cmd_simulate(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);
int cmd_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);
int cmd_diagnose(const std::filesystem::path& f_snapshot_base,
                 const std::filesystem::path& g_snapshot_base,  // empty = none
                 const std::vector<std::string>& functionals, std::string* table_out = nullptr);

}  // namespace landau
