#pragma once

// JSON encoding of the reports. Every numeric field is an exact integer and
// key order is fixed, so identical runs serialize to identical bytes.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "poledefect/corpus.hpp"
#include "poledefect/invariants.hpp"
#include "poledefect/rank.hpp"
#include "poledefect/series.hpp"

namespace poledefect {

using Json = nlohmann::ordered_json;

inline constexpr const char* defect_schema = "poledefect.defect/1";
inline constexpr const char* hodge_schema = "poledefect.hodge/1";
inline constexpr const char* corpus_schema = "poledefect.corpus/1";

inline Json to_json(const RankReport& r) {
    Json per = Json::array();
    for (const auto& pr : r.per_prime) per.push_back({{"prime", pr.prime}, {"rank", pr.rank}});
    return {{"per_prime", per},
            {"consensus", r.consensus},
            {"agreed", r.agreed},
            {"exact_rank", r.exact_rank ? Json(*r.exact_rank) : Json(nullptr)},
            {"certified", r.certified}};
}

inline Json to_json(const BlockSummary& b) {
    return {{"rows", b.rows}, {"cols", b.cols}, {"nonzeros", b.nonzeros}, {"rank", to_json(b.rank)}};
}

inline Json to_json(const PhiDegrees& g) {
    return {{"m", g.m},
            {"d", g.d},
            {"kk", g.kk},
            {"lower_source", g.lower_source},
            {"upper_source", g.upper_source},
            {"lower_target", g.lower_target},
            {"upper_target", g.upper_target}};
}

inline Json to_json(const E2Report& e) {
    return {{"kk", e.kk},
            {"degrees", to_json(e.degrees)},
            {"blocks", {{"A", to_json(e.A)}, {"B", to_json(e.B)}, {"full", to_json(e.full)}}},
            {"mu", e.mu},
            {"gamma", e.gamma},
            {"nu", e.nu},
            {"rank_d1", e.rank_d1},
            {"dim_n2", e.dim_n2},
            {"warnings", e.warnings}};
}

inline Json to_json(const IhReport& ih) {
    Json j = {{"h3_smooth", ih.h3_smooth}, {"gr2_smooth", ih.gr2_smooth}, {"dim_ih3", ih.dim_ih3}};
    j["gr2_ih3"] = ih.gr2_ih3 ? Json(*ih.gr2_ih3) : Json(nullptr);
    if (ih.inequality)
        j["inequality"] = {{"defect", ih.inequality->defect},
                           {"bound", ih.inequality->bound},
                           {"satisfied", ih.inequality->satisfied}};
    else
        j["inequality"] = nullptr;
    j["sigma"] = ih.sigma;
    j["notes"] = ih.notes;
    return j;
}

inline Json config_json(const RankConfig& cfg) {
    return {{"primes", cfg.primes}, {"exact", cfg.exact}, {"dense_threshold", cfg.dense_threshold}};
}

inline Json input_json(const Polynomial& f, unsigned d) {
    return {{"variables", f.variables()}, {"m", f.variable_count()}, {"d", d}, {"terms", f.size()}};
}

inline Json defect_json(const Polynomial& f, const DefectReport& rep, const RankConfig& cfg,
                        const std::optional<IhReport>& ih = std::nullopt) {
    Json j;
    j["schema"] = defect_schema;
    j["mode"] = "defect";
    j["input"] = input_json(f, rep.d);
    j["rank_config"] = config_json(cfg);
    j["defect"] = rep.defect;
    j["gamma"] = rep.e2.gamma;
    j["mu2"] = rep.mu2;
    j["e2"] = to_json(rep.e2);
    j["hypotheses"] = rep.hypotheses;
    j["warnings"] = rep.warnings;
    j["ih"] = ih ? to_json(*ih) : Json(nullptr);
    return j;
}

/// Output for gradings or variable counts where defect() does not apply.
inline Json e2_json(const Polynomial& f, unsigned d, const E2Report& e2, const RankConfig& cfg) {
    Json j;
    j["schema"] = defect_schema;
    j["mode"] = "e2_piece";
    j["input"] = input_json(f, d);
    j["rank_config"] = config_json(cfg);
    j["defect"] = nullptr;
    j["gamma"] = e2.gamma;
    j["mu2"] = nullptr;
    j["e2"] = to_json(e2);
    j["hypotheses"] = Json::array();
    j["warnings"] = e2.warnings;
    j["ih"] = nullptr;
    return j;
}

inline Json hodge_json(const SmoothFiberInvariants& s) {
    Json row = Json::array();
    for (const auto& h : s.hodge_prim) row.push_back(detail::to_int64(h));
    return {{"schema", hodge_schema},
            {"n", s.n},
            {"d", s.d},
            {"euler", detail::to_int64(s.euler)},
            {"hodge_prim", row},
            {"symmetric", s.symmetric()},
            {"middle_betti", detail::to_int64(s.middle_betti())}};
}

inline Json corpus_json(const std::vector<FixtureResult>& results) {
    Json rows = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed();
        rows.push_back({{"name", r.fixture->name},
                        {"d", r.report.d},
                        {"gamma", r.report.e2.gamma},
                        {"expected_gamma", r.fixture->gamma},
                        {"defect", r.report.defect},
                        {"expected_defect", r.fixture->defect},
                        {"passed", r.passed()}});
    }
    return {{"schema", corpus_schema}, {"fixtures", rows}, {"passed", all}};
}

} // namespace poledefect
