#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace choicepa {

struct CheckpointRecord {
    std::string run_id;
    std::string model;
    std::uint32_t choices = 0;
    double alpha = 1.0;
    std::uint32_t trial = 0;
    std::uint64_t edges = 0;
    std::uint32_t max_degree = 0;
    std::vector<std::uint64_t> f; // F(1..kmax)
    std::uint64_t wall_ns = 0;    // segment time; not persisted

    bool same_data(const CheckpointRecord& o) const {
        return run_id == o.run_id && model == o.model && choices == o.choices && alpha == o.alpha &&
               trial == o.trial && edges == o.edges && max_degree == o.max_degree && f == o.f;
    }
};

// Columns: run_id,model,d,alpha,trial,j,max_degree,f_1..f_K. Header row first.
// Doubles use the shortest representation that parses back to the same value.
void write_csv(std::ostream& out, const std::vector<CheckpointRecord>& records, std::uint32_t kmax);
void write_csv_file(const std::string& path, const std::vector<CheckpointRecord>& records, std::uint32_t kmax);

// Throws IoError on malformed input (with line number) or unreadable file.
std::vector<CheckpointRecord> read_csv(std::istream& in);
std::vector<CheckpointRecord> read_csv_file(const std::string& path);

std::string format_double(double value);

} // namespace choicepa
