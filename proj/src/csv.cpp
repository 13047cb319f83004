#include "gallagher/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gallagher/errors.hpp"

namespace gallagher::csv {

std::string format(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0) return "0";  // no "-0"
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw Error("csv: cannot format number");
    return std::string(buf.data(), end);
}

std::string format(long long value) {
    return std::to_string(value);
}

std::string row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool looks_numeric(std::string_view s) {
    s = trim(s);
    if (s.empty()) return false;
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(',', start);
        auto cell = trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        cells.emplace_back(cell);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return cells;
}

double parse_double(std::string_view text, std::string_view what) {
    text = trim(text);
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParameterDomainError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
    return v;
}

long long parse_int(std::string_view text, std::string_view what) {
    text = trim(text);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParameterDomainError("cannot parse integer " + std::string(what) + " from '" + std::string(text) + "'");
    return v;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterDomainError("cannot open '" + path + "'");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto cells = split(t);
        if (first && !looks_numeric(cells.front())) {
            first = false;
            continue;
        }
        first = false;
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace gallagher::csv
