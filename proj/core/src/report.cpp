#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "alp/bench.hpp"

namespace alp {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<const char*, 17> kFields = {
    "method", "source", "target", "distance", "settled", "expanded", "reopened", "heuristic_evals", "subs",
    "muls",   "divs",   "s1",     "s2",       "s3",      "s4",       "s5",       "wall_time_ns"};

std::string format_double(double x) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, const char* name) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("bad ") + name + " '" + std::string(field) + "'");
    }
    return value;
}

void write_csv(std::span<const BenchRow> rows, std::ostream& out) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << to_string(r.method) << ',' << r.source << ',' << r.target << ',' << format_double(r.distance) << ','
            << r.settled << ',' << r.expanded << ',' << r.reopened << ',' << r.heuristic_evals << ',' << r.subs
            << ',' << r.muls << ',' << r.divs;
        for (auto s : r.scenarios) out << ',' << s;
        out << ',' << r.wall_time_ns << '\n';
    }
}

void write_json(std::span<const BenchRow> rows, std::ostream& out) {
    auto doc = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json o;
        o["method"] = to_string(r.method);
        o["source"] = r.source;
        o["target"] = r.target;
        if (std::isfinite(r.distance)) {
            o["distance"] = r.distance;
        } else {
            o["distance"] = nullptr;
        }
        o["settled"] = r.settled;
        o["expanded"] = r.expanded;
        o["reopened"] = r.reopened;
        o["heuristic_evals"] = r.heuristic_evals;
        o["subs"] = r.subs;
        o["muls"] = r.muls;
        o["divs"] = r.divs;
        for (std::size_t s = 0; s < 5; ++s) o[kFields[11 + s]] = r.scenarios[s];
        o["wall_time_ns"] = r.wall_time_ns;
        doc.push_back(std::move(o));
    }
    out << doc.dump(1) << '\n';
}

std::vector<BenchRow> read_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError(1, "empty report");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw ParseError(1, "unexpected CSV header");
    std::vector<BenchRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string_view> f;
        std::string_view rest = line;
        while (true) {
            auto comma = rest.find(',');
            f.push_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (f.size() != kFields.size()) throw ParseError(line_no, "expected 17 fields");
        BenchRow r;
        try {
            r.method = parse_method(std::string(f[0]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        r.source = parse_number<VertexId>(f[1], line_no, "source");
        r.target = parse_number<VertexId>(f[2], line_no, "target");
        r.distance = parse_number<double>(f[3], line_no, "distance");
        std::uint64_t* counters[] = {&r.settled, &r.expanded, &r.reopened, &r.heuristic_evals,
                                     &r.subs,    &r.muls,     &r.divs};
        for (std::size_t i = 0; i < 7; ++i) *counters[i] = parse_number<std::uint64_t>(f[4 + i], line_no, kFields[4 + i]);
        for (std::size_t s = 0; s < 5; ++s) r.scenarios[s] = parse_number<std::uint64_t>(f[11 + s], line_no, kFields[11 + s]);
        r.wall_time_ns = parse_number<std::uint64_t>(f[16], line_no, "wall_time_ns");
        rows.push_back(r);
    }
    return rows;
}

std::vector<BenchRow> read_json(std::istream& in) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON report: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError(0, "JSON report must be an array");
    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& o = doc[i];
        try {
            BenchRow r;
            r.method = parse_method(o.at("method").get<std::string>());
            r.source = o.at("source").get<VertexId>();
            r.target = o.at("target").get<VertexId>();
            r.distance = o.at("distance").is_null() ? kUnreached : o.at("distance").get<double>();
            r.settled = o.at("settled").get<std::uint64_t>();
            r.expanded = o.at("expanded").get<std::uint64_t>();
            r.reopened = o.at("reopened").get<std::uint64_t>();
            r.heuristic_evals = o.at("heuristic_evals").get<std::uint64_t>();
            r.subs = o.at("subs").get<std::uint64_t>();
            r.muls = o.at("muls").get<std::uint64_t>();
            r.divs = o.at("divs").get<std::uint64_t>();
            for (std::size_t s = 0; s < 5; ++s) r.scenarios[s] = o.at(kFields[11 + s]).get<std::uint64_t>();
            r.wall_time_ns = o.at("wall_time_ns").get<std::uint64_t>();
            rows.push_back(r);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(0, "row " + std::to_string(i) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError(0, "row " + std::to_string(i) + ": " + e.what());
        }
    }
    return rows;
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "json") return ReportFormat::json;
    throw std::invalid_argument("unknown report format '" + name + "'");
}

void emit_report(std::span<const BenchRow> rows, ReportFormat format, std::ostream& sink) {
    if (format == ReportFormat::csv) {
        write_csv(rows, sink);
    } else {
        write_json(rows, sink);
    }
    sink.flush();
    if (!sink) throw std::runtime_error("failed writing report");
}

std::vector<BenchRow> parse_report(std::istream& in, ReportFormat format) {
    return format == ReportFormat::csv ? read_csv(in) : read_json(in);
}

void write_summary(std::span<const MethodSummary> summary, std::ostream& out) {
    out << std::left << std::setw(10) << "method" << std::right << std::setw(9) << "queries" << std::setw(14)
        << "mean_settled" << std::setw(14) << "mean_reopened" << std::setw(14) << "mean_h_evals" << std::setw(16)
        << "mean_arith_ops" << "  scenarios(S1..S5)\n";
    const auto flags = out.flags();
    out << std::fixed << std::setprecision(2);
    for (const auto& s : summary) {
        out << std::left << std::setw(10) << to_string(s.method) << std::right << std::setw(9) << s.queries
            << std::setw(14) << s.mean_settled << std::setw(14) << s.mean_reopened << std::setw(14)
            << s.mean_heuristic_evals << std::setw(16) << s.mean_arithmetic << "  ";
        for (std::size_t i = 0; i < 5; ++i) out << (i ? "/" : "") << s.scenarios[i];
        out << '\n';
    }
    out.flags(flags);
}

}  // namespace alp
