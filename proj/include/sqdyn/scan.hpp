#pragma once

#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "sqdyn/fpoly.hpp"

namespace sqdyn::scan {

enum class Space { All, Monic };

struct Checks {
    bool classification = true;
    bool weil = false;
    bool orbit_bounds = false;
    bool run_bounds = false;
    /// Per-f maxima of the orbit and run ratios, without per-point bound rows.
    bool ratios = false;
};

struct ScanConfig {
    std::string field = "7";
    unsigned degree = 2;
    Space space = Space::Monic;
    /// 0 scans the whole space; otherwise a seeded sample without replacement.
    std::uint64_t sample = 0;
    std::uint64_t seed = 0;
    Checks checks;
    /// Oracle depth for the classification cross-check; 0 disables the oracle.
    unsigned depth = 0;
    std::uint64_t budget = fpoly::kDefaultDegreeBudget;
    /// Fixed window length; 0 sweeps 1..max(choose_L(q, d), 3).
    unsigned L = 0;
    unsigned workers = 1;
};

struct ScanOutput {
    std::string jsonl;
    std::string csv;
    nlohmann::ordered_json summary;
    /// Some inequality that must hold failed, or classifier and oracle disagree.
    bool internal_failure = false;
};

ScanOutput run_scan(const ScanConfig& config);
/// Writes scan.jsonl, scan.csv and summary.json into `dir` (created if needed).
void write_scan(const ScanOutput& out, const std::string& dir);

nlohmann::ordered_json config_json(const ScanConfig& config);
Checks parse_checks(const std::string& list);
Space parse_space(const std::string& name);

std::uint64_t space_size(std::uint64_t q, unsigned degree, Space space);
fpoly::Poly poly_at(const ff::FieldPtr& field, unsigned degree, Space space, std::uint64_t index);

/// Uniform integer in [0, n) by rejection on a mt19937_64 stream.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);
/// `count` distinct indices from [0, total), ascending. Returns every index
/// when count >= total.
std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t count, std::uint64_t seed);

/// Runs fn(i) for i in [0, n) on `workers` threads. fn must only write to
/// per-index storage.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; !failed && (i = next++) < n;) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace sqdyn::scan
