// Shared plumbing for the acceptance binaries: criterion bookkeeping with
// one PASS/FAIL/SKIP line per criterion, and the dataset-equivalent network
// scales used throughout.
#pragma once

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netres/generators.hpp"
#include "netres/harness.hpp"

namespace acceptance {

enum class Outcome { Pass, Fail, Skip };

class Reporter {
public:
    void detail(const std::string& line) { std::printf("    %s\n", line.c_str()); }

    void fail(const std::string& line) {
        failed_ = true;
        detail("violation: " + line);
    }

    void skip(const std::string& line) {
        skipped_ = true;
        detail("skip: " + line);
    }

    bool failed() const { return failed_; }
    bool skipped() const { return skipped_; }

private:
    bool failed_ = false;
    bool skipped_ = false;
};

class Suite {
public:
    // body returns true when the criterion holds; reporter.fail() also marks
    // it failed, reporter.skip() marks it skipped when nothing failed
    void criterion(int id, const std::string& title, const std::function<bool(Reporter&)>& body) {
        if (only_ && *only_ != id) return;
        std::printf("criterion %d: %s\n", id, title.c_str());
        Reporter reporter;
        bool ok = false;
        try {
            ok = body(reporter);
        } catch (const std::exception& e) {
            reporter.fail(std::string("exception: ") + e.what());
        }
        Outcome outcome;
        if (reporter.failed() || !ok) {
            outcome = Outcome::Fail;
        } else if (reporter.skipped()) {
            outcome = Outcome::Skip;
        } else {
            outcome = Outcome::Pass;
        }
        const char* word = outcome == Outcome::Pass   ? "PASS"
                           : outcome == Outcome::Fail ? "FAIL"
                                                      : "SKIP";
        std::printf("%s criterion %d: %s\n", word, id, title.c_str());
        if (outcome == Outcome::Fail) any_failed_ = true;
        if (outcome == Outcome::Skip) any_skipped_ = true;
        ++ran_;
    }

    void select(int id) { only_ = id; }

    // 0 all pass, 1 any failure, 77 nothing failed but something skipped
    int exit_code() const {
        if (ran_ == 0) return 1;  // bad --criterion selector
        if (any_failed_) return 1;
        if (any_skipped_) return 77;
        return 0;
    }

private:
    std::optional<int> only_;
    bool any_failed_ = false;
    bool any_skipped_ = false;
    int ran_ = 0;
};

inline std::optional<int> parse_criterion_flag(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--criterion") return std::stoi(argv[i + 1]);
    }
    return std::nullopt;
}

struct NetworkScale {
    const char* name;
    std::uint32_t nodes;
    std::size_t edges;
    double p_triad;  // per-scale calibration of the Holme-Kim model
};

// the four real-network scales the experiments are matched to
inline const std::vector<NetworkScale>& scales() {
    static const std::vector<NetworkScale> table = {
        {"blog", 1222, 16714, 0.97},
        {"twitter", 2492, 17658, 0.85},
        {"epinions", 2000, 48720, 1.0},
        {"author", 3621, 9461, 0.75},
    };
    return table;
}

inline const std::vector<netres::GeneratorModel>& models() {
    static const std::vector<netres::GeneratorModel> table = {
        netres::GeneratorModel::Random,
        netres::GeneratorModel::SmallWorld,
        netres::GeneratorModel::ScaleFree,
        netres::GeneratorModel::SmallWorldScaleFree,
    };
    return table;
}

inline netres::SourceSpec equivalent_source(const NetworkScale& scale,
                                            netres::GeneratorModel model) {
    netres::GeneratorSpec spec;
    spec.model = model;
    spec.nodes = scale.nodes;
    spec.target_edges = scale.edges;
    spec.p_triad = scale.p_triad;
    const std::string name =
        std::string(scale.name) + "-" + netres::model_name(model);
    return netres::SourceSpec{name, spec};
}

inline std::string fmt(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.4f", v);
    return buffer;
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace acceptance
