#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "heraldsim/kernels.hpp"

namespace heraldsim {

enum class OutputFormat { csv, json };

/// Fully deterministic run description.  divisions_M = 0 or span_T = 0
/// select the per-photon-number default grid (1 photon: M=800, T=10;
/// 2 photons: M=100, T=4).
struct RunConfig {
    int photons = 1;
    JitterShape jitter_shape = JitterShape::gaussian;
    std::vector<double> B_values;        // sorted, >= 0; B = 0 -> delta path
    double span_T = 0.0;
    int divisions_M = 0;
    double detection_time_tc = 0.0;
    OutputFormat output_format = OutputFormat::csv;
    std::string output_path;             // empty -> stdout
    int modes_to_emit = 2;

    /// Fills defaulted grid fields; returns the resolved copy.
    RunConfig resolved() const;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Named configurations matching the published grids:
/// fig3/fig4 (mode tables, M=800, T=10, B in {0.05, 0.25, 1.0}) and
/// fig5a/fig5b/fig6a/fig6b (sweeps; 1 photon M=800 T=10, 2 photons
/// M=100 T=4).  Throws std::invalid_argument for unknown names.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

struct SweepRecord {
    double B = 0.0;
    double purity = 0.0;
    double fidelity = 0.0;
    std::array<double, 5> lambda_top{};  // zero-padded when M < 5
    double overlap_r = 0.0;
};

struct ModeTable {
    double B = 0.0;
    std::vector<double> t;
    std::vector<std::vector<double>> modes;  // modes[k][j], k < modes_to_emit
    std::vector<double> r_norm;
};

struct SweepResult {
    RunConfig config;                    // resolved configuration echo
    std::vector<SweepRecord> records;    // one per B, ascending
    std::vector<ModeTable> mode_tables;  // one per B, ascending
    std::string kernel_path;             // "closed-form" or "delta-exact" or both
    std::string oracle_check;            // "passed" or "skipped"
};

/// Mode table for a single B value (columns t, f1..fk, r_norm).
ModeTable run_modes(const RunConfig& cfg, double B);

/// Full sweep over cfg.B_values: per-B purity/fidelity/top eigenvalues
/// plus mode tables, with a small built-in closed-form-vs-quadrature
/// spot check recorded in the provenance fields.
SweepResult run_sweep(const RunConfig& cfg);

struct OracleCheck {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool all_passed() const;
};

struct ValidateConfig {
    std::vector<int> tensor_sizes{8, 16, 20};
    bool inject_gaussian_fault = false;  // prove the checks catch a bad term
};

/// Runs every oracle suite: closed forms against adaptive quadrature for
/// both jitter shapes (including region-boundary continuity) and the
/// two-photon closed forms against the dense tensor reference.
OracleReport validate_oracles(const ValidateConfig& cfg);

// Serialization.  Floating-point fields are written with round-trip
// precision; identical configs produce byte-identical output.
void write_sweep_csv(const SweepResult& result, std::ostream& out);
void write_modes_csv(const ModeTable& table, std::ostream& out);
void write_sweep_json(const SweepResult& result, std::ostream& out);
void write_modes_json(const SweepResult& result, std::ostream& out);

}  // namespace heraldsim
