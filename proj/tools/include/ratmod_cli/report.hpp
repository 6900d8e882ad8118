#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ratmod::cli {

struct RingEntry {
    std::string left, right, value;
    friend bool operator==(const RingEntry&, const RingEntry&) = default;
};

struct RingSummary {
    std::vector<std::string> basis;
    std::vector<int> degrees;
    // Nonzero products of positive-degree basis classes.
    std::vector<RingEntry> products;
    friend bool operator==(const RingSummary&, const RingSummary&) = default;
};

struct MasseySummary {
    std::vector<std::string> triple;
    bool defined = false;
    int degree = 0;
    std::string representative;
    std::vector<std::string> indeterminacy;
    bool nontrivial = false;
    std::string reason;
    friend bool operator==(const MasseySummary&, const MasseySummary&) = default;
};

struct PresentationSummary {
    bool pass = false;
    std::vector<std::string> violations;
    std::vector<std::size_t> presented_dims;  // dense from degree 0
    std::vector<std::size_t> ring_dims;
    friend bool operator==(const PresentationSummary&, const PresentationSummary&) = default;
};

struct Report {
    std::string command;
    std::map<std::string, std::string> arguments;
    std::string status = "ok";  // ok, usage, axiom, hypothesis, internal
    int exit_code = 0;
    std::vector<std::size_t> betti;
    std::vector<std::string> basis;  // model basis with degrees, "name:degree"
    std::optional<RingSummary> ring;
    std::optional<PresentationSummary> presentation_check;
    std::vector<MasseySummary> massey;
    std::vector<std::string> violations;
    std::vector<std::string> hypotheses_assumed;
    std::vector<std::string> details;
    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const RingEntry& e);
void from_json(const nlohmann::json& j, RingEntry& e);
void to_json(nlohmann::json& j, const RingSummary& r);
void from_json(const nlohmann::json& j, RingSummary& r);
void to_json(nlohmann::json& j, const MasseySummary& m);
void from_json(const nlohmann::json& j, MasseySummary& m);
void to_json(nlohmann::json& j, const PresentationSummary& p);
void from_json(const nlohmann::json& j, PresentationSummary& p);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

std::string dump(const Report& r);
Report parse_report(const std::string& text);

}  // namespace ratmod::cli
