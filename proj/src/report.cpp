#include "hahn/report.hpp"

#include <algorithm>
#include <sstream>

namespace hahn {

std::string status_str(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
        return "skipped";
    }
    return {};
}

bool CheckReport::all_passed() const
{
    return failures() == 0;
}

std::size_t CheckReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.status == Status::fail; }));
}

const CheckEntry* CheckReport::find(const std::string& name) const
{
    for (const auto& e : entries)
        if (e.name == name)
            return &e;
    return nullptr;
}

void CheckReport::append(const CheckReport& other)
{
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

Json CheckReport::to_json() const
{
    Json checks = Json::array();
    for (const auto& e : entries) {
        Json j{{"axiom", e.name}, {"status", status_str(e.status)}, {"instances", e.instances}, {"seed", seed}};
        if (e.counterexample) {
            Json cx = e.counterexample->detail;
            cx["sample"] = e.counterexample->sample_index;
            j["counterexample"] = std::move(cx);
        }
        checks.push_back(std::move(j));
    }
    return Json{{"model", model},      {"group", group},          {"coeff", coeff},  {"seed", seed},
                {"samples", samples},  {"passed", all_passed()},  {"checks", checks}};
}

std::string CheckReport::to_text() const
{
    std::ostringstream out;
    out << "model " << model << " (group " << group << ", coeff " << coeff << ", seed " << seed << ", "
        << samples << " samples)\n";
    std::size_t width = 0;
    for (const auto& e : entries)
        width = std::max(width, e.name.size());
    for (const auto& e : entries) {
        out << "  " << e.name << std::string(width - e.name.size() + 2, ' ') << status_str(e.status) << "  "
            << e.instances << " instances\n";
        if (e.counterexample) {
            Json cx = e.counterexample->detail;
            cx["sample"] = e.counterexample->sample_index;
            out << "    counterexample: " << cx.dump() << '\n';
        }
    }
    const std::size_t failed = failures();
    if (failed == 0)
        out << "all " << entries.size() << " checks passed\n";
    else
        out << failed << " of " << entries.size() << " checks failed\n";
    return out.str();
}

} // namespace hahn
