#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cyclo/algebra.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/reports.hpp"

namespace cyclo {

enum class OutputFormat { Text, Json, Csv };
OutputFormat format_from_name(const std::string& name);

// JSON-shaped algebra definition: {"dim": N, "labels": [...], "unit": [...],
// "entries": [[i, j, k, num, den], ...]} with 0-based indices; b_i b_j contains
// (num/den) b_k. Unit coefficients are integers or "num/den" strings.
Algebra load_algebra_file(const std::filesystem::path& path);

// On-disk store for computed differentials, keyed by algebra content hash,
// kind, degree, and normalization. Writes go through a temp file and rename.
class DiffCache {
public:
    explicit DiffCache(std::filesystem::path dir);
    std::optional<RationalMatrix> load(const std::string& key) const;
    void store(const std::string& key, const RationalMatrix& m) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

std::string render_homology_report(const HomologyReport& rep, OutputFormat format);
HomologyReport parse_homology_report_json(const std::string& text);

std::string render_sbi_certificate(const SBICertificate& cert, OutputFormat format);

} // namespace cyclo
