#include "berndenom/checkpoint.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "berndenom/errors.hpp"

namespace berndenom {

namespace {

using nlohmann::json;

constexpr const char* kFormatName = "berndenom-scan";

std::uint64_t fnv1a(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::uint64_t parse_hex64(const std::string& s)
{
    if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw CheckpointError("checkpoint: bad hex field '" + s + "'");
    return std::stoull(s, nullptr, 16);
}

std::string header_line(const CheckpointConfig& config)
{
    json j = {{"format", kFormatName},
              {"version", kCheckpointVersion},
              {"limit", config.limit},
              {"chunk", config.chunk_size},
              {"config", config.hash()}};
    return j.dump();
}

std::string final_line(const CheckpointConfig& config)
{
    return json{{"complete", true}, {"config", config.hash()}}.dump();
}

}  // namespace

std::string CheckpointConfig::hash() const
{
    std::ostringstream os;
    os << kFormatName << '|' << kCheckpointVersion << '|' << limit << '|' << chunk_size;
    return hex64(fnv1a(os.str()));
}

std::string chunk_record_checksum(const ChunkSummary& s)
{
    std::ostringstream os;
    os << s.lo << '|' << s.hi << '|';
    for (std::uint64_t n : s.exceptional) os << n << ' ';
    os << '|' << s.omega_sum << '|' << s.omega_max << '|' << s.omega_max_at << '|'
       << s.bound_violations << '|' << s.digest;
    return hex64(fnv1a(os.str()));
}

std::string chunk_record_line(const ChunkSummary& s)
{
    json j = {{"lo", s.lo},
              {"hi", s.hi},
              {"exceptional", s.exceptional},
              {"omega_sum", s.omega_sum},
              {"omega_max", s.omega_max},
              {"omega_max_at", s.omega_max_at},
              {"bound_violations", s.bound_violations},
              {"digest", hex64(s.digest)},
              {"checksum", chunk_record_checksum(s)}};
    return j.dump();
}

ChunkSummary parse_chunk_record(const std::string& line)
{
    ChunkSummary s;
    std::string checksum;
    try {
        const json j = json::parse(line);
        s.lo = j.at("lo").get<std::uint64_t>();
        s.hi = j.at("hi").get<std::uint64_t>();
        s.exceptional = j.at("exceptional").get<std::vector<std::uint64_t>>();
        s.omega_sum = j.at("omega_sum").get<std::uint64_t>();
        s.omega_max = j.at("omega_max").get<std::uint32_t>();
        s.omega_max_at = j.at("omega_max_at").get<std::uint64_t>();
        s.bound_violations = j.at("bound_violations").get<std::uint64_t>();
        s.digest = parse_hex64(j.at("digest").get<std::string>());
        checksum = j.at("checksum").get<std::string>();
    } catch (const json::exception& e) {
        throw CheckpointError(std::string("checkpoint: malformed record: ") + e.what());
    }
    if (checksum != chunk_record_checksum(s))
        throw CheckpointError("checkpoint: checksum mismatch in record [" + std::to_string(s.lo) +
                              ", " + std::to_string(s.hi) + "]");
    return s;
}

CheckpointState checkpoint_resume(const std::filesystem::path& path, const CheckpointConfig& config,
                                  std::ostream* warnings)
{
    CheckpointState state;
    if (!std::filesystem::exists(path)) return state;
    std::ifstream in(path);
    if (!in) throw CheckpointError("checkpoint: cannot read " + path.string());

    std::string line;
    if (!std::getline(in, line) || line.empty()) {
        if (warnings)
            *warnings << "warning: checkpoint " << path.string() << " is empty; starting fresh\n";
        return state;
    }

    try {
        const json header = json::parse(line);
        if (header.at("format").get<std::string>() != kFormatName)
            throw CheckpointError("checkpoint: " + path.string() + " is not a scan checkpoint");
        if (header.at("version").get<int>() != kCheckpointVersion)
            throw CheckpointError("checkpoint: unsupported version in " + path.string());
        const auto limit = header.at("limit").get<std::uint64_t>();
        const auto chunk = header.at("chunk").get<std::uint64_t>();
        if (limit != config.limit || chunk != config.chunk_size)
            throw CheckpointError("checkpoint: " + path.string() + " was written for limit " +
                                  std::to_string(limit) + ", chunk " + std::to_string(chunk) +
                                  "; requested limit " + std::to_string(config.limit) + ", chunk " +
                                  std::to_string(config.chunk_size));
        if (header.at("config").get<std::string>() != config.hash())
            throw CheckpointError("checkpoint: configuration hash mismatch in " + path.string());
    } catch (const json::exception& e) {
        throw CheckpointError(std::string("checkpoint: malformed header: ") + e.what());
    }

    while (std::getline(in, line)) {
        if (state.complete)
            throw CheckpointError("checkpoint: data after the final line in " + path.string());
        if (line.find("\"complete\"") != std::string::npos) {
            try {
                const json j = json::parse(line);
                if (!j.at("complete").get<bool>() || j.at("config").get<std::string>() != config.hash())
                    throw CheckpointError("checkpoint: bad final line in " + path.string());
            } catch (const json::exception& e) {
                throw CheckpointError(std::string("checkpoint: malformed final line: ") + e.what());
            }
            state.complete = true;
            continue;
        }
        ChunkSummary s = parse_chunk_record(line);
        if (s.lo < 1 || s.lo > s.hi || s.hi > config.limit)
            throw CheckpointError("checkpoint: record range out of bounds");
        auto [it, inserted] = state.chunks.emplace(s.lo, s);
        if (!inserted && !(it->second == s))
            throw CheckpointError("checkpoint: conflicting records for chunk at " + std::to_string(s.lo));
    }
    return state;
}

void checkpoint_save(const std::filesystem::path& path, const CheckpointConfig& config,
                     const CheckpointState& state)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CheckpointError("checkpoint: cannot write " + tmp.string());
        out << header_line(config) << '\n';
        for (const auto& [lo, s] : state.chunks) out << chunk_record_line(s) << '\n';
        if (state.complete) out << final_line(config) << '\n';
        if (!out.flush()) throw CheckpointError("checkpoint: write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

CheckpointWriter::CheckpointWriter(const std::filesystem::path& path, CheckpointConfig config)
    : out_(path, std::ios::app), config_(config)
{
    if (!out_) throw CheckpointError("checkpoint: cannot append to " + path.string());
}

void CheckpointWriter::append(const ChunkSummary& s)
{
    std::lock_guard lock(mutex_);
    out_ << chunk_record_line(s) << '\n';
    out_.flush();
}

void CheckpointWriter::finish()
{
    std::lock_guard lock(mutex_);
    out_ << final_line(config_) << '\n';
    out_.flush();
}

}  // namespace berndenom
