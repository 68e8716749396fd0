#include "eisen/report.hpp"

#include <stdexcept>

namespace eisen {

using nlohmann::json;

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Flagged: return "flagged";
    }
    return "fail";
}

Status status_from_string(const std::string& s) {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "flagged") return Status::Flagged;
    throw std::invalid_argument("unknown status '" + s + "'");
}

void Report::conclude(bool pass, bool flagged) {
    if (flagged)
        status = Status::Flagged;
    else
        status = pass ? Status::Pass : Status::Fail;
    if (status == Status::Pass && !counterexamples.empty())
        throw std::logic_error("report '" + task + "' passes but lists counterexamples");
}

void to_json(json& j, const Report& r) {
    json ces = json::array();
    for (const auto& c : r.counterexamples)
        ces.push_back({{"location", c.location}, {"expected", c.expected}, {"actual", c.actual}});
    j = json{{"task", r.task},         {"anchor", r.anchor},   {"level", r.level},
             {"parameters", r.parameters}, {"status", to_string(r.status)}, {"result", r.result},
             {"rows", r.rows},         {"counterexamples", ces}, {"wall_time", r.wall_time}};
}

void from_json(const json& j, Report& r) {
    j.at("task").get_to(r.task);
    j.at("anchor").get_to(r.anchor);
    j.at("level").get_to(r.level);
    r.parameters = j.at("parameters");
    r.status = status_from_string(j.at("status").get<std::string>());
    r.result = j.at("result");
    r.rows = j.at("rows");
    r.counterexamples.clear();
    for (const auto& c : j.at("counterexamples"))
        r.counterexamples.push_back({c.at("location").get<std::string>(), c.at("expected"), c.at("actual")});
    j.at("wall_time").get_to(r.wall_time);
}

json reports_document(const std::vector<Report>& reports) {
    return json{{"schema", kReportSchema}, {"reports", reports}};
}

std::vector<Report> reports_from_document(const json& doc) {
    if (doc.at("schema").get<int>() != kReportSchema)
        throw std::invalid_argument("unsupported report schema " + doc.at("schema").dump());
    return doc.at("reports").get<std::vector<Report>>();
}

int exit_code(const std::vector<Report>& reports) {
    bool flagged = false;
    for (const auto& r : reports) {
        if (r.status == Status::Fail) return 1;
        flagged = flagged || r.status == Status::Flagged;
    }
    return flagged ? 3 : 0;
}

}  // namespace eisen
