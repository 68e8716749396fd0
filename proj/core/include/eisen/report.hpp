#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace eisen {

enum class Status { Pass, Fail, Flagged };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Counterexample {
    std::string location;
    nlohmann::json expected;
    nlohmann::json actual;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// Outcome of one verification task. A passing report carries no counterexamples.
struct Report {
    std::string task;
    std::string anchor;  // what the task checks, in words
    long level = 0;
    nlohmann::json parameters = nlohmann::json::object();
    Status status = Status::Fail;
    nlohmann::json result = nlohmann::json::object();  // headline numbers
    nlohmann::json rows = nlohmann::json::array();     // per-identity outcomes, stable order
    std::vector<Counterexample> counterexamples;
    double wall_time = 0;

    // Sets the status; throws std::logic_error for a pass with counterexamples.
    void conclude(bool pass, bool flagged = false);

    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

inline constexpr int kReportSchema = 1;

// {"schema": 1, "reports": [...]}
nlohmann::json reports_document(const std::vector<Report>& reports);
// Throws on an unknown schema version.
std::vector<Report> reports_from_document(const nlohmann::json& doc);

// 0 if every report passes, 1 if any fails, otherwise 3 when something is flagged.
int exit_code(const std::vector<Report>& reports);

}  // namespace eisen
