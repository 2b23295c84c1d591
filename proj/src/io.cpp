#include "trichi/io.hpp"

#include "json.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace trichi {

std::string format_sci(double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, 11);
    if (ec != std::errc{}) throw std::runtime_error("format_sci: conversion failed");
    return {buf, end};
}

double round_sci(double v) {
    const std::string s = format_sci(v);
    double out = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

void dump(const ordered_json& j, std::ostream& os) {
    os << j.dump() << '\n';
}

}  // namespace

void write_csv(const PhaseGrid& g, std::ostream& os) {
    os << "a_bar,b_bar,c_bar,chi,segment,in_triangle\n";
    for (const PhaseCell& c : g.cells) {
        os << format_sci(c.a_bar) << ',' << format_sci(c.b_bar) << ','
           << format_sci(c.c_bar) << ',' << format_sci(c.chi) << ','
           << c.segment << ',' << (c.in_triangle ? 1 : 0) << '\n';
    }
}

void write_json(const PhaseGrid& g, std::ostream& os) {
    ordered_json j;
    j["resolution"] = g.resolution;
    j["domain"] = to_string(g.domain);
    j["columns"] = {"a_bar", "b_bar", "c_bar", "chi", "segment", "in_triangle"};
    ordered_json cells = ordered_json::array();
    for (const PhaseCell& c : g.cells) {
        cells.push_back({round_sci(c.a_bar), round_sci(c.b_bar), round_sci(c.c_bar),
                         round_sci(c.chi), c.segment, c.in_triangle ? 1 : 0});
    }
    j["cells"] = std::move(cells);
    dump(j, os);
}

void write_csv(const std::vector<HistogramBin>& h, std::ostream& os) {
    os << "bin_lower,bin_upper,count\n";
    for (const HistogramBin& b : h) {
        os << format_sci(b.lower) << ',' << format_sci(b.upper) << ',' << b.count << '\n';
    }
}

void write_json(const std::vector<HistogramBin>& h, std::ostream& os) {
    ordered_json j;
    j["columns"] = {"bin_lower", "bin_upper", "count"};
    ordered_json rows = ordered_json::array();
    for (const HistogramBin& b : h) {
        rows.push_back({round_sci(b.lower), round_sci(b.upper), b.count});
    }
    j["rows"] = std::move(rows);
    dump(j, os);
}

void write_csv(const std::vector<ConfidenceRow>& rows, std::ostream& os) {
    os << "rel_error,chi_threshold\n";
    for (const ConfidenceRow& r : rows) {
        os << format_sci(r.rel_error) << ',' << format_sci(r.chi_threshold) << '\n';
    }
}

void write_json(const std::vector<ConfidenceRow>& rows, std::ostream& os) {
    ordered_json j;
    j["columns"] = {"rel_error", "chi_threshold"};
    ordered_json out = ordered_json::array();
    for (const ConfidenceRow& r : rows) {
        out.push_back({round_sci(r.rel_error), round_sci(r.chi_threshold)});
    }
    j["rows"] = std::move(out);
    dump(j, os);
}

}  // namespace trichi
