#include "wel/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wel {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            out.push_back(field);
            field.clear();
        } else if (c != '\r' && c != ' ' && c != '\t') {
            field.push_back(c);
        }
    }
    out.push_back(field);
    return out;
}

double parse_number(const std::string& s, std::size_t row) {
    double v;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("row " + std::to_string(row) + ": bad number '" + s + "'");
    return v;
}

Observation parse_observation(const std::vector<std::string>& f, std::size_t start, std::size_t row) {
    const std::string& kind = f[start];
    auto need = [&](std::size_t k) {
        if (f.size() - start != k + 1)
            throw ParseError("row " + std::to_string(row) + ": '" + kind + "' needs " + std::to_string(k) +
                             " value(s)");
    };
    try {
        if (kind == "exact") {
            need(1);
            return Observation::exact(parse_number(f[start + 1], row));
        }
        if (kind == "right") {
            need(1);
            return Observation::right_censored(parse_number(f[start + 1], row));
        }
        if (kind == "left") {
            need(1);
            return Observation::left_censored(parse_number(f[start + 1], row));
        }
        if (kind == "interval") {
            need(2);
            return Observation::interval(parse_number(f[start + 1], row), parse_number(f[start + 2], row));
        }
    } catch (const NegativeTime&) {
        throw;
    } catch (const ParseError& e) {
        throw ParseError("row " + std::to_string(row) + ": " + e.what());
    }
    throw ParseError("row " + std::to_string(row) + ": unknown kind '" + kind + "'");
}

bool is_header(const std::vector<std::string>& f) {
    return !f.empty() && (f[0] == "kind" || f[0] == "sample");
}

} // namespace

std::vector<Observation> read_observations(std::istream& in, SampleScheme scheme,
                                           const std::string& source_name) {
    std::vector<Observation> out;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_row(line);
        if (row == 1 && is_header(f)) continue;
        Observation o = parse_observation(f, 0, row);
        if (!scheme_admits(scheme, o.kind))
            throw SchemeViolation(source_name + " row " + std::to_string(row) +
                                  ": kind not admitted by scheme '" + to_string(scheme) + "'");
        out.push_back(o);
    }
    return out;
}

std::vector<Observation> ingest_csv(const std::string& path, SampleScheme scheme) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_observations(in, scheme, path);
}

TwoSampleData ingest_csv_combined(const std::string& path, SampleScheme scheme_x, SampleScheme scheme_y) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    TwoSampleData data;
    data.scheme_x = scheme_x;
    data.scheme_y = scheme_y;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line[0] == '#') continue;
        auto f = split_row(line);
        if (row == 1 && is_header(f)) continue;
        if (f.size() < 2 || (f[0] != "x" && f[0] != "y"))
            throw ParseError("row " + std::to_string(row) + ": expected leading sample column in {x,y}");
        const bool is_x = f[0] == "x";
        Observation o = parse_observation(f, 1, row);
        SampleScheme s = is_x ? scheme_x : scheme_y;
        if (!scheme_admits(s, o.kind))
            throw SchemeViolation(path + " row " + std::to_string(row) + ": kind not admitted by scheme '" +
                                  to_string(s) + "'");
        (is_x ? data.sample_x : data.sample_y).push_back(o);
    }
    return data;
}

namespace {

// Shortest decimal form that round-trips; keeps write->ingest exact.
std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

} // namespace

void write_observations(std::ostream& out, const std::vector<Observation>& sample) {
    for (const auto& o : sample) {
        switch (o.kind) {
            case ObsKind::Exact: out << "exact," << fmt(o.lower) << "\n"; break;
            case ObsKind::RightCensored: out << "right," << fmt(o.lower) << "\n"; break;
            case ObsKind::LeftCensored: out << "left," << fmt(o.upper) << "\n"; break;
            case ObsKind::Interval:
                out << "interval," << fmt(o.lower) << "," << fmt(o.upper) << "\n";
                break;
        }
    }
}

void write_csv(const std::string& path, const std::vector<Observation>& sample) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_observations(out, sample);
}

} // namespace wel
