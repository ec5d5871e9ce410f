#ifndef GENIUS_REPORT_HPP
#define GENIUS_REPORT_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace genius {

extern const char* const kToolVersion;

enum class Status { pass, fail, inconclusive };

std::string to_string(Status s);
Status parse_status(const std::string& s);

/// One JSON-lines record. `detail` carries check-specific data (fitted
/// functions, census statistics, F_i) and is omitted when null.
struct CheckReport {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Status status = Status::pass;
    std::optional<std::string> witness;
    long long elapsed_ms = 0;
    std::optional<std::uint64_t> seed;
    std::string tool_version = kToolVersion;
    nlohmann::ordered_json detail;

    nlohmann::ordered_json to_json() const;
    static CheckReport from_json(const nlohmann::ordered_json& j);
    /// Single line, no trailing newline. Throws std::logic_error when a
    /// failing report has no witness.
    std::string to_line() const;
};

/// 0 if everything passed, 1 if anything failed, 3 if nothing failed but
/// something was inconclusive.
int exit_code_for(const std::vector<Status>& statuses);

/// Serializes report lines from any number of threads.
class ReportWriter {
public:
    explicit ReportWriter(std::ostream& out) : out_(out) {}
    void write(const CheckReport& r);
    const std::vector<Status>& statuses() const { return statuses_; }

private:
    std::ostream& out_;
    std::mutex mu_;
    std::vector<Status> statuses_;
};

}  // namespace genius

#endif
