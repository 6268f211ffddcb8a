#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vecap {

// Flags a record can pick up while moving through the pipeline. Stored as
// free-form strings in the JSONL schema; these are the ones we set.
inline constexpr const char * kFlagRefusalFallback = "refusal_fallback";
inline constexpr const char * kFlagAltTruncated    = "alttext_truncated";
inline constexpr const char * kFlagFailed          = "failed";

// One image-text sample. alt_texts holds the raw crawled captions (one image
// can carry several), vec the caption generated from the image alone, vecap
// the fused caption.
struct ImageTextRecord {
    std::string record_id;
    std::string image_ref;  // opaque; never dereferenced here
    std::vector<std::string> alt_texts;
    std::optional<std::vector<double>> alt_scores;  // precomputed CLIP sims, for HCS
    std::optional<std::string> vec;
    std::optional<std::string> vecap;
    std::set<std::string> flags;

    bool operator==(const ImageTextRecord &) const = default;
};

// Returns a reason string if the record violates an invariant, else nullopt.
// Invariants: non-empty record_id; at least one alt_text, all non-empty after
// trimming; alt_scores (if present) aligned with alt_texts; vecap implies vec.
std::optional<std::string> validate_record(const ImageTextRecord & rec);

}  // namespace vecap
