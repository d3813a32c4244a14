#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dio/families.hpp"
#include "dio/wire.hpp"

namespace dio {

/// One embedded record: everything a published instance claims, stored to be
/// re-derived and re-checked, never trusted. Two kinds: "family-record"
/// (triple, field, printed model, points, torsion, pipeline parameters) and
/// "curve-dossier" (one curve's torsion across several fields).
struct CorpusEntry {
    std::string id;
    std::string kind;
    std::string label;
    wire::json data; // full fixture document, schema as under fixtures/
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct EntryReport {
    std::string id;
    std::vector<CheckResult> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

const std::vector<CorpusEntry>& corpus_entries();
std::vector<std::string> corpus_ids();

EntryReport verify_entry(const CorpusEntry& entry);

/// Runs every entry (or just `only`), deterministically ordered by id.
/// Per-entry failures are recorded, never thrown.
std::vector<EntryReport> verify_corpus(const std::optional<std::string>& only = std::nullopt);

/// Same, reading fixture documents from a directory of *.json files.
std::vector<EntryReport> verify_corpus_dir(const std::string& dir,
                                           const std::optional<std::string>& only = std::nullopt);

wire::json report_to_json(const std::vector<EntryReport>& reports);

} // namespace dio
