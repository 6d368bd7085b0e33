#include "hullmass/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hullmass {
namespace io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

// Next content line: comments and blank lines skipped. Returns false at EOF.
bool next_line(std::istream& in, std::string& out, std::size_t& line_no) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t last = raw.find_last_not_of(" \t\r");
        if (last == std::string::npos) continue;
        out = raw.substr(0, last + 1);
        return true;
    }
    return false;
}

unsigned header_field(const std::string& token, const char* key, std::size_t line_no) {
    std::string prefix = std::string(key) + "=";
    if (token.rfind(prefix, 0) != 0)
        fail(line_no, "expected '" + prefix + "<value>', got '" + token + "'");
    std::string value = token.substr(prefix.size());
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(value, &used);
        if (used != value.size() || v > 1u << 20) throw std::invalid_argument(value);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        fail(line_no, std::string("bad value for ") + key + ": '" + value + "'");
    }
}

}  // namespace

LinearCode load_code(std::istream& in, const FieldResolver& resolver) {
    std::size_t line_no = 0;
    std::string line;
    if (!next_line(in, line, line_no)) fail(line_no + 1, "missing header");
    std::istringstream header(line);
    std::string tq, tn, tk, extra;
    if (!(header >> tq >> tn >> tk)) fail(line_no, "header needs 'q=.. n=.. k=..'");
    if (header >> extra) fail(line_no, "unexpected trailing token '" + extra + "'");
    unsigned q = header_field(tq, "q", line_no);
    unsigned n = header_field(tn, "n", line_no);
    unsigned k = header_field(tk, "k", line_no);
    if (k > n) fail(line_no, "k exceeds n");

    const Field& f = resolver ? resolver(q) : Field::of_order(q);
    if (f.order() != q) fail(line_no, "resolver returned a field of the wrong order");

    std::vector<Elem> entries;
    entries.reserve(static_cast<std::size_t>(k) * n);
    for (unsigned row = 0; row < k; ++row) {
        if (!next_line(in, line, line_no))
            fail(line_no + 1, "expected " + std::to_string(k) + " rows, got " +
                                  std::to_string(row));
        std::istringstream ls(line);
        for (unsigned col = 0; col < n; ++col) {
            long v;
            if (!(ls >> v)) fail(line_no, "row has fewer than n=" + std::to_string(n) + " entries");
            if (v < 0 || v >= static_cast<long>(q))
                fail(line_no, "entry " + std::to_string(v) + " out of range [0," +
                                  std::to_string(q) + ")");
            entries.push_back(static_cast<Elem>(v));
        }
        std::string tail;
        if (ls >> tail) fail(line_no, "row has more than n entries");
    }
    if (next_line(in, line, line_no)) fail(line_no, "unexpected content after the last row");
    return LinearCode::from_rows(Matrix(f, k, n, std::move(entries)));
}

LinearCode load_code_file(const std::string& path, const FieldResolver& resolver) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return load_code(in, resolver);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_code(std::ostream& out, const Matrix& generator) {
    out << "q=" << generator.field().order() << " n=" << generator.cols()
        << " k=" << generator.rows() << "\n";
    for (std::size_t i = 0; i < generator.rows(); ++i) {
        for (std::size_t j = 0; j < generator.cols(); ++j) {
            if (j) out << ' ';
            out << generator.at(i, j);
        }
        out << "\n";
    }
}

}  // namespace io
}  // namespace hullmass
