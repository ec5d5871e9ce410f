#include "genius/report.hpp"

#include <stdexcept>

namespace genius {

const char* const kToolVersion = GENIUS_VERSION;

std::string to_string(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::inconclusive:
            return "inconclusive";
    }
    return "?";
}

Status parse_status(const std::string& s) {
    if (s == "pass") {
        return Status::pass;
    }
    if (s == "fail") {
        return Status::fail;
    }
    if (s == "inconclusive") {
        return Status::inconclusive;
    }
    throw std::invalid_argument("unknown status '" + s + "'");
}

nlohmann::ordered_json CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = params;
    j["status"] = to_string(status);
    j["witness"] = witness ? nlohmann::ordered_json(*witness) : nlohmann::ordered_json(nullptr);
    j["elapsed_ms"] = elapsed_ms;
    j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
    j["tool_version"] = tool_version;
    if (!detail.is_null()) {
        j["detail"] = detail;
    }
    return j;
}

CheckReport CheckReport::from_json(const nlohmann::ordered_json& j) {
    CheckReport r;
    r.check = j.at("check").get<std::string>();
    r.params = j.at("params");
    r.status = parse_status(j.at("status").get<std::string>());
    if (!j.at("witness").is_null()) {
        r.witness = j.at("witness").get<std::string>();
    }
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    if (!j.at("seed").is_null()) {
        r.seed = j.at("seed").get<std::uint64_t>();
    }
    r.tool_version = j.at("tool_version").get<std::string>();
    if (j.contains("detail")) {
        r.detail = j.at("detail");
    }
    return r;
}

std::string CheckReport::to_line() const {
    if (status == Status::fail && !witness) {
        throw std::logic_error("report '" + check + "' fails without a witness");
    }
    return to_json().dump();
}

int exit_code_for(const std::vector<Status>& statuses) {
    bool inconclusive = false;
    for (Status s : statuses) {
        if (s == Status::fail) {
            return 1;
        }
        inconclusive = inconclusive || s == Status::inconclusive;
    }
    return inconclusive ? 3 : 0;
}

void ReportWriter::write(const CheckReport& r) {
    const std::string line = r.to_line();
    std::lock_guard lock(mu_);
    out_ << line << '\n';
    out_.flush();
    statuses_.push_back(r.status);
}

}  // namespace genius
