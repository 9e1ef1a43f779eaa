#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace hylab {

/// 17 significant digits, '.' decimal point, lossless double round-trip.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Minimal CSV emitter. Writes a header once and then rows; numeric cells
/// go through fmt_g17 so identical inputs give byte-identical files.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(const std::vector<std::string>& cols) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) out_ << ',';
            out_ << cols[i];
        }
        out_ << '\n';
    }

    CsvWriter& field(const std::string& s) {
        if (col_++) out_ << ',';
        out_ << s;
        return *this;
    }
    CsvWriter& field(double v) { return field(fmt_g17(v)); }
    CsvWriter& field(long long v) { return field(std::to_string(v)); }
    CsvWriter& field(int v) { return field(std::to_string(v)); }
    CsvWriter& field(bool v) { return field(std::string(v ? "1" : "0")); }

    void end_row() {
        out_ << '\n';
        col_ = 0;
    }

private:
    std::ostream& out_;
    int col_ = 0;
};

} // namespace hylab
