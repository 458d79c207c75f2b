#include "ske/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "ske/errors.hpp"

namespace ske {

std::string fmt_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        const auto b = field.find_first_not_of(" \t\r");
        const auto e = field.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? std::string()
                                                : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

MatrixFile read_decision_matrix_csv(std::istream& in) {
    std::string line;
    long long line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        header = split_csv_line(line);
        break;
    }
    if (header.size() < 3)
        throw input_error("matrix csv: header must be node,<criterion>,<criterion>,...");

    MatrixFile out;
    out.matrix.cols = static_cast<int>(header.size()) - 1;
    out.matrix.criterion_names.assign(header.begin() + 1, header.end());

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw input_error("matrix csv line " + std::to_string(line_no) +
                              ": expected " + std::to_string(header.size()) +
                              " fields");
        out.labels.push_back(fields[0]);
        for (size_t i = 1; i < fields.size(); ++i) {
            double v = 0.0;
            const auto& f = fields[i];
            auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
            if (ec != std::errc() || ptr != f.data() + f.size())
                throw input_error("matrix csv line " + std::to_string(line_no) +
                                  ": bad number \"" + f + "\"");
            out.matrix.values.push_back(v);
        }
    }
    out.matrix.rows = static_cast<int>(out.labels.size());
    if (out.matrix.rows == 0) throw input_error("matrix csv: no data rows");
    return out;
}

MatrixFile read_decision_matrix_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open matrix file: " + path);
    return read_decision_matrix_csv(in);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + path);
    out << content;
    if (!out) throw input_error("failed writing output file: " + path);
}

} // namespace ske
