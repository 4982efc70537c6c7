#pragma once

#include <filesystem>
#include <string>

#include "mpde/field.hpp"
#include "mpde/trajectory.hpp"
#include "mpde/window.hpp"

namespace mpde {

/// Little-endian binary field file: magic "MPDE", u32 format version, u32 n,
/// u32 N, f64 L, u32 representation flag (0 physical, 1 fourier), then N^n
/// complex values as interleaved f64 (re, im), row-major with axis 0 slowest.
inline constexpr std::uint32_t snapshot_version = 1;

void write_snapshot(const std::filesystem::path& path, const Field& f);
Field read_snapshot(const std::filesystem::path& path);

/// Provenance sidecar written next to `path` with extension ".json".
void write_sidecar(const std::filesystem::path& snapshot_path, const std::string& model,
                   double time, const std::string& parameters);

/// One snapshot file per stamp under `dir`, plus index.csv with header
/// stamp_index,time,file,l2_norm,m21_norm.
void write_trajectory(const std::filesystem::path& dir, const Trajectory& traj,
                      const WindowFamily& w);

}  // namespace mpde
