#pragma once

#include <string>
#include <utility>
#include <vector>

namespace delcoh {

enum class Status { Pass, Fail, Skip };

std::string to_string(Status s);

// Outcome of one check: exactness at a node, well-definedness of a map,
// commutativity of a square, injectivity or surjectivity of a vertical map.
struct CheckReport {
    std::string kind;   // "node", "map", "square", ...
    std::string label;
    Status status = Status::Pass;
    std::string invariants;  // group invariants when the node is finitely generated
    std::vector<std::pair<std::string, std::string>> details;  // ordered counters
    std::vector<std::string> witnesses;  // first few witnesses, serialized
    std::string witness_digest;          // hash over all witnesses
    std::string message;                 // first failure, if any

    void fail(const std::string& why) {
        if (status != Status::Fail) message = why;
        status = Status::Fail;
    }
    void detail(const std::string& key, const std::string& value) { details.emplace_back(key, value); }
    void detail(const std::string& key, std::size_t value) { details.emplace_back(key, std::to_string(value)); }
};

struct VerificationReport {
    std::string title;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<CheckReport> checks;
    std::string skip_reason;  // nonempty when the whole verification was skipped

    Status status() const;
    std::size_t count(Status s) const;
    std::string to_text() const;
    std::string to_json() const;
};

// Collects witness strings: keeps the first `keep` and hashes all of them.
class WitnessLog {
public:
    explicit WitnessLog(std::size_t keep = 3) : keep_(keep) {}
    void add(const std::string& w);
    void store(CheckReport& r) const;
    std::size_t size() const { return count_; }

private:
    std::size_t keep_;
    std::size_t count_ = 0;
    std::vector<std::string> first_;
    std::string all_;
};

}  // namespace delcoh
