#include "dimkit/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace dimkit {

std::string format_double(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

namespace {

bool parse_double(const std::string& token, double& out) {
    std::string t = token;
    // trim
    size_t a = t.find_first_not_of(" \t\r");
    size_t b = t.find_last_not_of(" \t\r");
    if (a == std::string::npos) return false;
    t = t.substr(a, b - a + 1);
    if (t == "inf" || t == "+inf") {
        out = std::numeric_limits<double>::infinity();
        return true;
    }
    if (t == "-inf") {
        out = -std::numeric_limits<double>::infinity();
        return true;
    }
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_row(const std::string& line, std::vector<double>& row) {
    row.clear();
    std::stringstream ss(line);
    std::string token;
    while (std::getline(ss, token, ',')) {
        double v;
        if (!parse_double(token, v)) return false;
        row.push_back(v);
    }
    return !row.empty();
}

}  // namespace

Matrix read_csv_matrix(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        if (!parse_row(line, row)) {
            if (first_content) {  // header line
                first_content = false;
                continue;
            }
            throw Error("CsvParse", "unparseable line: " + line);
        }
        first_content = false;
        if (!rows.empty() && row.size() != rows[0].size())
            throw Error("CsvParse", "ragged row with " +
                                        std::to_string(row.size()) +
                                        " fields, expected " +
                                        std::to_string(rows[0].size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("CsvParse", "no data rows");
    Matrix m(Index(rows.size()), Index(rows[0].size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[size_t(i)][size_t(j)];
    return m;
}

Matrix read_csv_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileOpen", "cannot open '" + path + "'");
    return read_csv_matrix(in);
}

void write_csv_matrix(std::ostream& out, const Matrix& m, bool header) {
    if (header) {
        for (Index j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << "y" << (j + 1);
        out << "\n";
    }
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << "\n";
    }
}

void write_csv_matrix_file(const std::string& path, const Matrix& m,
                           bool header) {
    std::ofstream out(path);
    if (!out) throw Error("FileOpen", "cannot open '" + path + "' for writing");
    write_csv_matrix(out, m, header);
}

Labels read_csv_labels_file(const std::string& path) {
    Matrix m = read_csv_matrix_file(path);
    if (m.cols() != 1)
        throw Error("CsvParse", "labels file must have exactly one column");
    Labels labels(size_t(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) labels[size_t(i)] = int(std::lround(m(i, 0)));
    return labels;
}

}  // namespace dimkit
