#include "choicepa/records.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "choicepa/errors.hpp"

namespace choicepa {

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<CheckpointRecord>& records, std::uint32_t kmax) {
    out << "run_id,model,d,alpha,trial,j,max_degree";
    for (std::uint32_t k = 1; k <= kmax; ++k) out << ",f_" << k;
    out << '\n';
    for (const auto& r : records) {
        out << r.run_id << ',' << r.model << ',' << r.choices << ',' << format_double(r.alpha) << ',' << r.trial
            << ',' << r.edges << ',' << r.max_degree;
        for (std::uint32_t k = 1; k <= kmax; ++k) out << ',' << (k <= r.f.size() ? r.f[k - 1] : 0);
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const std::vector<CheckpointRecord>& records, std::uint32_t kmax) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_csv(out, records, kmax);
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        cells.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return cells;
}

template <typename T>
T parse_number(std::string_view cell, std::size_t line_no, const char* column) {
    T value{};
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
        throw IoError("csv line " + std::to_string(line_no) + ": bad " + column + " value '" + std::string(cell) + "'");
    }
    return value;
}

} // namespace

std::vector<CheckpointRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("csv: missing header row");
    const auto header = split(line);
    if (header.size() < 8 || header[0] != "run_id" || header[5] != "j" || header[7] != "f_1") {
        throw IoError("csv: unexpected header '" + line + "'");
    }
    const std::size_t kmax = header.size() - 7;
    std::vector<CheckpointRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            throw IoError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                          " columns, got " + std::to_string(cells.size()));
        }
        CheckpointRecord r;
        r.run_id = std::string(cells[0]);
        r.model = std::string(cells[1]);
        r.choices = parse_number<std::uint32_t>(cells[2], line_no, "d");
        r.alpha = parse_number<double>(cells[3], line_no, "alpha");
        r.trial = parse_number<std::uint32_t>(cells[4], line_no, "trial");
        r.edges = parse_number<std::uint64_t>(cells[5], line_no, "j");
        r.max_degree = parse_number<std::uint32_t>(cells[6], line_no, "max_degree");
        r.f.resize(kmax);
        for (std::size_t k = 0; k < kmax; ++k) r.f[k] = parse_number<std::uint64_t>(cells[7 + k], line_no, "f");
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<CheckpointRecord> read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_csv(in);
}

} // namespace choicepa
