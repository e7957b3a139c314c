#pragma once

#include <algorithm>
#include <chrono>
#include <future>
#include <string>
#include <vector>

#include "poledefect/expression.hpp"
#include "poledefect/fixtures.hpp"
#include "poledefect/invariants.hpp"

namespace poledefect {

struct FixtureResult {
    const Fixture* fixture = nullptr;
    DefectReport report;
    double seconds = 0;

    bool passed() const {
        return report.defect == fixture->defect && report.e2.gamma == fixture->gamma && report.d == fixture->d;
    }
};

inline HomogeneousForm fixture_form(const Fixture& fx) {
    return HomogeneousForm(parse_expression(fx.expression, default_variables()));
}

inline FixtureResult run_fixture(const Fixture& fx, const RankConfig& cfg = {}) {
    const auto start = std::chrono::steady_clock::now();
    FixtureResult r;
    r.fixture = &fx;
    r.report = defect(fixture_form(fx), cfg);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct CorpusOptions {
    std::string filter;     // substring of the fixture name
    bool skip_slow = false; // drop d = 6
    unsigned jobs = 1;
};

inline std::vector<const Fixture*> select_fixtures(const CorpusOptions& opt) {
    std::vector<const Fixture*> out;
    for (const auto& fx : published_fixtures()) {
        if (!opt.filter.empty() && fx.name.find(opt.filter) == std::string::npos) continue;
        if (opt.skip_slow && fx.slow()) continue;
        out.push_back(&fx);
    }
    std::sort(out.begin(), out.end(), [](const Fixture* a, const Fixture* b) { return a->name < b->name; });
    return out;
}

/// Results are ordered by fixture name whatever the completion order.
inline std::vector<FixtureResult> run_corpus(const CorpusOptions& opt, const RankConfig& cfg = {}) {
    const auto selected = select_fixtures(opt);
    std::vector<FixtureResult> results(selected.size());
    const unsigned jobs = std::max(1u, opt.jobs);
    for (std::size_t begin = 0; begin < selected.size(); begin += jobs) {
        const std::size_t end = std::min(selected.size(), begin + jobs);
        std::vector<std::future<FixtureResult>> batch;
        for (std::size_t i = begin; i < end; ++i)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                       [fx = selected[i], &cfg] { return run_fixture(*fx, cfg); }));
        for (std::size_t i = begin; i < end; ++i) results[i] = batch[i - begin].get();
    }
    return results;
}

} // namespace poledefect
