#include "logspiral/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace logspiral {

namespace {

std::string number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// JSON has no inf/nan; they become null via nlohmann's default.
nlohmann::json observation_json(const Observation& o)
{
    return {{"input", o.input}, {"expected", o.expected}, {"actual", o.actual}, {"error", o.error}};
}

} // namespace

void write_text(std::ostream& os, std::span<const VerificationReport> reports)
{
    for (const VerificationReport& r : reports) {
        os << (r.passed ? "PASS " : "FAIL ") << r.check_name << " max_error=" << number(r.max_error())
           << " tolerance=" << number(r.tolerance) << " n=" << r.observations.size() << '\n';
        if (r.passed)
            continue;
        for (const Observation& o : r.observations) {
            if (o.error <= r.tolerance)
                continue;
            os << "  input=(";
            for (std::size_t i = 0; i < o.input.size(); ++i)
                os << (i ? "," : "") << number(o.input[i]);
            os << ") expected=" << number(o.expected) << " actual=" << number(o.actual)
               << " error=" << number(o.error) << '\n';
        }
    }
}

std::string to_json(std::span<const VerificationReport> reports, int indent)
{
    nlohmann::json doc;
    doc["reports"] = nlohmann::json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::json obs = nlohmann::json::array();
        for (const Observation& o : r.observations)
            obs.push_back(observation_json(o));
        doc["reports"].push_back({{"check_name", r.check_name},
                                  {"passed", r.passed},
                                  {"tolerance", r.tolerance},
                                  {"observations", std::move(obs)}});
    }
    doc["passed"] = all_passed(reports);
    return doc.dump(indent) + "\n";
}

bool all_passed(std::span<const VerificationReport> reports) noexcept
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.passed; });
}

} // namespace logspiral
