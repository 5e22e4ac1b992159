#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tspread/borel.hpp"
#include "tspread/classify.hpp"
#include "tspread/ideal.hpp"
#include "tspread/sorted_graph.hpp"
#include "tspread/spread_word.hpp"

namespace tspread {

/// Every t-spread word of degree d with last index <= max_last_index, each
/// exactly once, in lexicographic order of index sequences.
inline std::vector<SpreadWord> enumerate_spread_words(int d, int t, int max_last_index) {
    if (d < 1) throw std::invalid_argument("enumerate_spread_words: d must be >= 1");
    if (t < 0) throw std::invalid_argument("enumerate_spread_words: t must be >= 0");
    if (max_last_index < (d - 1) * t + 1)
        throw std::invalid_argument("enumerate_spread_words: infeasible max_last_index");
    std::vector<SpreadWord> out;
    std::vector<int> word(d);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == d) {
            out.emplace_back(word, t);
            return;
        }
        int lo = k == 0 ? 1 : word[k - 1] + t;
        int hi = max_last_index - (d - 1 - k) * t; // leave room for the tail
        for (int j = lo; j <= hi; ++j) {
            word[k] = j;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Configuration of the exhaustive cross-validation sweep.
struct SweepConfig {
    static constexpr int kAutoMaxIndex = -1;

    int t_min = 1, t_max = 3;
    int d_min = 1, d_max = 5;
    int max_last_index = kAutoMaxIndex; // kAutoMaxIndex: (d-1)t + 6 per slice
    bool run_direct = true;
    bool run_chordal = true;
    bool run_closed_form = true;
    bool run_intro_variant = true;
    int power_check_k = 3; // 0 disables the mu(I^k) formula check

    int max_index_for(int d, int t) const {
        return max_last_index == kAutoMaxIndex ? (d - 1) * t + 6 : max_last_index;
    }

    void validate() const {
        if (t_min <= t_max && (t_min < 1 || t_max > 10))
            throw std::invalid_argument("SweepConfig: t range must lie in [1, 10]");
        if (d_min <= d_max && (d_min < 1 || d_max > 8))
            throw std::invalid_argument("SweepConfig: d range must lie in [1, 8]");
        if (power_check_k < 0)
            throw std::invalid_argument("SweepConfig: power_check_k must be >= 0");
        for (int t = t_min; t <= t_max; ++t)
            for (int d = d_min; d <= d_max; ++d)
                if (max_index_for(d, t) < (d - 1) * t + 1)
                    throw std::invalid_argument(
                        "SweepConfig: max_last_index infeasible for d=" + std::to_string(d) +
                        ", t=" + std::to_string(t));
    }
};

/// One instance whose checks did not all come out clean. Expected to never
/// occur; each record carries everything needed to audit the claim.
struct MismatchRecord {
    std::vector<int> indices;
    int t = 0;
    std::vector<std::string> reasons;
    std::optional<bool> direct;
    std::optional<bool> chordal;
    std::optional<bool> closed_form;
    std::string certificate_kind; // empty when no graph certificate exists
    std::vector<std::string> certificate_vertices;
};

struct IntroDiscrepancy {
    std::vector<int> indices;
    int t = 0;
    bool truth = false;
    bool intro_verdict = false;

    friend bool operator==(const IntroDiscrepancy&, const IntroDiscrepancy&) = default;
};

struct SweepResult {
    long long instances_checked = 0;
    long long agreements = 0;
    std::vector<MismatchRecord> mismatches;
    std::vector<IntroDiscrepancy> intro_discrepancies;
    std::map<std::string, long long> case_label_counts;
    double elapsed_seconds = 0.0;
};

/// Run the sweep: for every enumerated word, cross-check the generator-set
/// oracle, sortability, the enabled Freiman methods, the certificate checker
/// and (for Freiman instances) the mu(I^k) formula. Failures are collected,
/// never thrown, so one divergence cannot mask others. Verdict divergences of
/// the literal six-case summary are expected and recorded separately.
inline SweepResult run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();
    SweepResult result;

    for (int t = cfg.t_min; t <= cfg.t_max; ++t) {
        for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
            for (const SpreadWord& u : enumerate_spread_words(d, t, cfg.max_index_for(d, t))) {
                ++result.instances_checked;
                std::vector<std::string> reasons;

                GeneratorSet gens = borel_gens(u);
                if (!(gens == borel_gens_direct(u))) reasons.push_back("oracle-mismatch");
                const bool sortable = is_sortable(gens);
                if (!sortable) reasons.push_back("not-sortable");

                std::optional<FreimanVerdict> direct;
                if (cfg.run_direct) direct = is_freiman_direct(gens);

                std::optional<bool> chordal;
                std::string cert_kind;
                std::vector<std::string> cert_vertices;
                if (cfg.run_chordal && sortable) {
                    SortedGraph graph = build_sorted_graph(gens);
                    ChordalityCertificate cert = is_chordal(graph);
                    chordal = cert.chordal();
                    if (!verify_certificate(graph, cert))
                        reasons.push_back("certificate-rejected");
                    cert_kind = cert.chordal() ? "perfect-elimination-ordering" : "induced-cycle";
                    for (int v : cert.chordal() ? cert.ordering : cert.cycle)
                        cert_vertices.push_back(graph.vertex(v).str());
                }

                std::optional<ClassificationResult> closed;
                if (cfg.run_closed_form) {
                    closed = classify_closed_form(u);
                    ++result.case_label_counts[closed->case_label];
                }

                std::vector<bool> verdicts;
                if (direct) verdicts.push_back(direct->is_freiman);
                if (chordal) verdicts.push_back(*chordal);
                if (closed) verdicts.push_back(closed->is_freiman);
                for (size_t i = 1; i < verdicts.size(); ++i)
                    if (verdicts[i] != verdicts.front()) {
                        reasons.push_back("method-disagreement");
                        break;
                    }

                if (cfg.run_intro_variant && !verdicts.empty()) {
                    const bool truth = verdicts.front();
                    ClassificationResult intro = classify_intro_variant(u);
                    if (intro.is_freiman != truth)
                        result.intro_discrepancies.push_back(
                            {u.indices(), t, truth, intro.is_freiman});
                }

                if (cfg.power_check_k >= 1 && direct && direct->is_freiman) {
                    for (int k = 1; k <= cfg.power_check_k; ++k) {
                        if (power_gens(gens, k).size() !=
                            predicted_mu_power(direct->mu, direct->ell, k)) {
                            reasons.push_back("power-formula-k" + std::to_string(k));
                            break;
                        }
                    }
                }

                if (reasons.empty()) {
                    ++result.agreements;
                } else {
                    MismatchRecord rec;
                    rec.indices = u.indices();
                    rec.t = t;
                    rec.reasons = std::move(reasons);
                    if (direct) rec.direct = direct->is_freiman;
                    rec.chordal = chordal;
                    if (closed) rec.closed_form = closed->is_freiman;
                    rec.certificate_kind = std::move(cert_kind);
                    rec.certificate_vertices = std::move(cert_vertices);
                    result.mismatches.push_back(std::move(rec));
                }
            }
        }
    }

    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

} // namespace tspread
