#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "algcat/catcheck.hpp"

namespace algcat {

/// Ordered key/value report rendered either as `key: value` lines or JSON.
class Report {
public:
    void set(const std::string& key, nlohmann::ordered_json value);
    void add_verdict(const Verdict& v, bool with_timing);

    /// Adds "timestamp" (UTC, ISO 8601) as the first key.
    void stamp();

    const nlohmann::ordered_json& data() const noexcept { return data_; }
    std::string text() const;
    std::string json() const;

private:
    nlohmann::ordered_json data_ = nlohmann::ordered_json::object();
};

}  // namespace algcat
