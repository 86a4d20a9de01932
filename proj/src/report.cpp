#include "delcoh/report.hpp"

#include "delcoh/simplicial/complex.hpp"

#include <json.hpp>

namespace delcoh {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "?";
}

Status VerificationReport::status() const {
    if (!skip_reason.empty()) return Status::Skip;
    for (const auto& c : checks)
        if (c.status == Status::Fail) return Status::Fail;
    return Status::Pass;
}

std::size_t VerificationReport::count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (c.status == s) ++n;
    return n;
}

std::string VerificationReport::to_text() const {
    std::string out = title + ": " + delcoh::to_string(status()) + "\n";
    for (const auto& [k, v] : parameters) out += "  " + k + " = " + v + "\n";
    if (!skip_reason.empty()) out += "  skipped: " + skip_reason + "\n";
    for (const auto& c : checks) {
        out += "  [" + delcoh::to_string(c.status) + "] " + c.kind + " " + c.label;
        if (!c.invariants.empty()) out += "  {" + c.invariants + "}";
        for (const auto& [k, v] : c.details) out += "  " + k + "=" + v;
        if (!c.witness_digest.empty()) out += "  witnesses#" + c.witness_digest;
        out += "\n";
        if (!c.message.empty()) out += "      " + c.message + "\n";
    }
    out += "  summary: " + std::to_string(count(Status::Pass)) + " pass, " + std::to_string(count(Status::Fail)) +
           " fail, " + std::to_string(count(Status::Skip)) + " skip\n";
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["title"] = title;
    j["status"] = delcoh::to_string(status());
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    if (!skip_reason.empty()) j["skip_reason"] = skip_reason;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["kind"] = c.kind;
        cj["label"] = c.label;
        cj["status"] = delcoh::to_string(c.status);
        if (!c.invariants.empty()) cj["invariants"] = c.invariants;
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.details) d[k] = v;
        cj["details"] = d;
        cj["witnesses"] = c.witnesses;
        if (!c.witness_digest.empty()) cj["witness_digest"] = c.witness_digest;
        if (!c.message.empty()) cj["message"] = c.message;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skip", count(Status::Skip)}};
    return j.dump(2) + "\n";
}

void WitnessLog::add(const std::string& w) {
    ++count_;
    if (first_.size() < keep_) first_.push_back(w);
    all_ += w;
    all_ += '\n';
}

void WitnessLog::store(CheckReport& r) const {
    r.witnesses = first_;
    r.witness_digest = count_ ? simplicial::fnv1a_hex(all_) : "";
    r.detail("witnesses", count_);
}

}  // namespace delcoh
