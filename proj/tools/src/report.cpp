#include "ratmod_cli/report.hpp"

namespace ratmod::cli {

using nlohmann::json;

void to_json(json& j, const RingEntry& e) { j = json{{"left", e.left}, {"right", e.right}, {"value", e.value}}; }

void from_json(const json& j, RingEntry& e)
{
    j.at("left").get_to(e.left);
    j.at("right").get_to(e.right);
    j.at("value").get_to(e.value);
}

void to_json(json& j, const RingSummary& r)
{
    j = json{{"basis", r.basis}, {"degrees", r.degrees}, {"products", r.products}};
}

void from_json(const json& j, RingSummary& r)
{
    j.at("basis").get_to(r.basis);
    j.at("degrees").get_to(r.degrees);
    j.at("products").get_to(r.products);
}

void to_json(json& j, const MasseySummary& m)
{
    j = json{{"triple", m.triple},
             {"defined", m.defined},
             {"degree", m.degree},
             {"representative", m.representative},
             {"indeterminacy", m.indeterminacy},
             {"nontrivial", m.nontrivial},
             {"reason", m.reason}};
}

void from_json(const json& j, MasseySummary& m)
{
    j.at("triple").get_to(m.triple);
    j.at("defined").get_to(m.defined);
    j.at("degree").get_to(m.degree);
    j.at("representative").get_to(m.representative);
    j.at("indeterminacy").get_to(m.indeterminacy);
    j.at("nontrivial").get_to(m.nontrivial);
    j.at("reason").get_to(m.reason);
}

void to_json(json& j, const PresentationSummary& p)
{
    j = json{{"pass", p.pass},
             {"violations", p.violations},
             {"presented_dims", p.presented_dims},
             {"ring_dims", p.ring_dims}};
}

void from_json(const json& j, PresentationSummary& p)
{
    j.at("pass").get_to(p.pass);
    j.at("violations").get_to(p.violations);
    j.at("presented_dims").get_to(p.presented_dims);
    j.at("ring_dims").get_to(p.ring_dims);
}

void to_json(json& j, const Report& r)
{
    j = json{{"command", json{{"name", r.command}, {"arguments", r.arguments}}},
             {"status", r.status},
             {"exit_code", r.exit_code},
             {"betti", r.betti},
             {"basis", r.basis},
             {"massey", r.massey},
             {"violations", r.violations},
             {"hypotheses_assumed", r.hypotheses_assumed},
             {"details", r.details}};
    j["ring"] = r.ring ? json(*r.ring) : json(nullptr);
    j["presentation_check"] = r.presentation_check ? json(*r.presentation_check) : json(nullptr);
}

void from_json(const json& j, Report& r)
{
    j.at("command").at("name").get_to(r.command);
    j.at("command").at("arguments").get_to(r.arguments);
    j.at("status").get_to(r.status);
    j.at("exit_code").get_to(r.exit_code);
    j.at("betti").get_to(r.betti);
    j.at("basis").get_to(r.basis);
    j.at("massey").get_to(r.massey);
    j.at("violations").get_to(r.violations);
    j.at("hypotheses_assumed").get_to(r.hypotheses_assumed);
    j.at("details").get_to(r.details);
    r.ring = j.at("ring").is_null() ? std::nullopt : std::optional<RingSummary>(j.at("ring").get<RingSummary>());
    r.presentation_check = j.at("presentation_check").is_null()
                               ? std::nullopt
                               : std::optional<PresentationSummary>(j.at("presentation_check").get<PresentationSummary>());
}

std::string dump(const Report& r) { return json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return json::parse(text).get<Report>(); }

}  // namespace ratmod::cli
