#pragma once

// Line-delimited JSON log of finished scan chunks.
//
//   {"chunk":C,"config":"<hex>","format":"berndenom-scan","limit":L,"version":1}
//   {"bound_violations":..,"checksum":"<hex>","digest":"<hex>","exceptional":[..],"hi":..,"lo":..,...}
//   ...
//   {"complete":true,"config":"<hex>"}
//
// The first line is the versioned header, one record follows per finished
// chunk (in completion order), and the final line is only written once every
// chunk is present. Each record carries a checksum over its own fields.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <map>
#include <mutex>
#include <string>

#include "berndenom/scanner.hpp"

namespace berndenom {

struct CheckpointConfig {
    std::uint64_t limit = 0;
    std::uint64_t chunk_size = 0;

    /// Hex digest binding a checkpoint to this configuration.
    std::string hash() const;
};

struct CheckpointState {
    std::map<std::uint64_t, ChunkSummary> chunks;  // keyed by lo
    bool complete = false;
};

inline constexpr int kCheckpointVersion = 1;

std::string chunk_record_checksum(const ChunkSummary& s);
std::string chunk_record_line(const ChunkSummary& s);
ChunkSummary parse_chunk_record(const std::string& line);

/// Reads a checkpoint. A missing file yields an empty state; an empty file
/// yields an empty state and a warning. Any malformed line, checksum
/// mismatch or configuration mismatch throws CheckpointError.
CheckpointState checkpoint_resume(const std::filesystem::path& path, const CheckpointConfig& config,
                                  std::ostream* warnings = nullptr);

/// Writes a full checkpoint (header, records in lo order, final line when
/// complete) through a temporary file and rename.
void checkpoint_save(const std::filesystem::path& path, const CheckpointConfig& config,
                     const CheckpointState& state);

/// Append-only writer used while a scan runs. Thread-safe.
class CheckpointWriter {
public:
    CheckpointWriter(const std::filesystem::path& path, CheckpointConfig config);

    void append(const ChunkSummary& s);
    void finish();

private:
    std::mutex mutex_;
    std::ofstream out_;
    CheckpointConfig config_;
};

}  // namespace berndenom
