#include "algcat/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace algcat {

void Report::set(const std::string& key, nlohmann::ordered_json value) { data_[key] = std::move(value); }

void Report::add_verdict(const Verdict& v, bool with_timing) {
    nlohmann::ordered_json j{{"name", v.name}, {"pass", v.pass}};
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (with_timing) j["elapsed_ms"] = v.elapsed_ms;
    data_["verdicts"].push_back(std::move(j));
}

void Report::stamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    nlohmann::ordered_json stamped{{"timestamp", buf}};
    stamped.update(data_);
    data_ = std::move(stamped);
}

namespace {

std::string scalar(const nlohmann::ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

std::string Report::text() const {
    std::ostringstream os;
    for (const auto& [key, value] : data_.items()) {
        if (key == "verdicts") {
            for (const auto& v : value) {
                os << "verdict: " << (v["pass"].get<bool>() ? "PASS " : "FAIL ") << v["name"].get<std::string>();
                if (v.contains("witness")) os << " -- " << v["witness"].get<std::string>();
                if (v.contains("elapsed_ms")) os << " (" << static_cast<long>(v["elapsed_ms"].get<double>()) << " ms)";
                os << '\n';
            }
        } else if (value.is_array() && !value.empty() && value.front().is_string()) {
            for (const auto& item : value) os << key << ": " << scalar(item) << '\n';
        } else {
            os << key << ": " << scalar(value) << '\n';
        }
    }
    return os.str();
}

std::string Report::json() const { return data_.dump(2) + "\n"; }

}  // namespace algcat
