#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace gyro {

/// Fixed-width double rendering used by witnesses and CSV output:
/// 17 significant digits round-trip exactly.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// One counterexample: the stringified input tuple and how far it missed.
struct Witness {
    std::vector<std::string> inputs;
    double violation = 0.0;
};

/// Outcome of a single property check. pass is true iff the maximum
/// observed violation stayed within tolerance; witnesses hold the first
/// few failing tuples (never empty when pass is false).
struct CheckReport {
    static constexpr std::size_t kMaxWitnesses = 5;

    std::string name;
    bool pass = true;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double max_violation = 0.0;
    std::uint64_t failure_count = 0;
    std::vector<Witness> witnesses;

    template <class WitnessFn>
    void record(double violation, WitnessFn&& make_inputs) {
        if (violation > max_violation) max_violation = violation;
        if (!(violation <= tolerance)) { // NaN counts as a failure
            ++failure_count;
            pass = false;
            if (witnesses.size() < kMaxWitnesses)
                witnesses.push_back({make_inputs(), violation});
        }
    }
};

/// A named bundle of checks (one per axiom, per level, ...).
struct CheckSuite {
    std::string name;
    std::vector<CheckReport> checks;

    void add(CheckReport r) { checks.push_back(std::move(r)); }

    bool pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.pass; });
    }

    double max_violation() const {
        double worst = 0.0;
        for (const CheckReport& c : checks) worst = std::max(worst, c.max_violation);
        return worst;
    }

    /// Flatten into a single report; witnesses keep their check's name as
    /// the first input entry.
    CheckReport summary() const {
        CheckReport s;
        s.name = name;
        for (const CheckReport& c : checks) {
            s.pass = s.pass && c.pass;
            s.samples += c.samples;
            s.failure_count += c.failure_count;
            s.max_violation = std::max(s.max_violation, c.max_violation);
            s.tolerance = std::max(s.tolerance, c.tolerance);
            for (const Witness& w : c.witnesses) {
                if (s.witnesses.size() >= CheckReport::kMaxWitnesses) break;
                Witness tagged = w;
                tagged.inputs.insert(tagged.inputs.begin(), c.name);
                s.witnesses.push_back(std::move(tagged));
            }
        }
        return s;
    }
};

} // namespace gyro
