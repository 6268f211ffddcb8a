#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vecap/matrix.hpp"
#include "vecap/record.hpp"

namespace vecap {

// ---------------------------------------------------------------------------
// JSONL record shards
//
// One JSON object per line, UTF-8, '\n' terminated. A well-formed file ends
// with '\n'; a missing terminal newline marks a partial (aborted) write and
// the trailing fragment is reported as malformed.
// ---------------------------------------------------------------------------

struct MalformedLine {
    std::size_t line_no = 0;  // 1-based
    std::string reason;
};

struct ReadStats {
    std::size_t lines = 0;     // physical lines seen
    std::size_t records = 0;   // valid records yielded
    std::vector<MalformedLine> malformed;
    bool unterminated_tail = false;  // file did not end with '\n'
};

// Streaming reader: malformed lines are skipped and counted, never fatal.
// Only I/O failure (unopenable file) throws.
class RecordReader {
  public:
    explicit RecordReader(const std::filesystem::path & path);

    // Next valid record in file order, or nullopt at end of file.
    std::optional<ImageTextRecord> next();

    const ReadStats & stats() const { return stats_; }

  private:
    std::ifstream in_;
    ReadStats stats_;
};

std::vector<ImageTextRecord> read_records(const std::filesystem::path & path,
                                          ReadStats * stats = nullptr);

// Validates every record up front (throws Error before touching the file),
// then writes them in order. Returns the count written.
std::size_t write_records(const std::filesystem::path & path,
                          std::span<const ImageTextRecord> records);

std::string record_to_json_line(const ImageTextRecord & rec);
// Throws Error with a parse/validation reason.
ImageTextRecord record_from_json_line(const std::string & line);

// ---------------------------------------------------------------------------
// Embedding matrices
//
// Binary layout: magic "VECAPEMB" | u32 count | u32 dim | count*dim f32,
// all little-endian, row-major, no padding. Bit-exact round-trip.
// ---------------------------------------------------------------------------

inline constexpr char kEmbeddingMagic[8] = {'V', 'E', 'C', 'A', 'P', 'E', 'M', 'B'};

struct EmbeddingMatrix {
    std::uint32_t count = 0;
    std::uint32_t dim = 0;
    std::vector<float> data;  // row-major, count * dim

    bool is_normalized(float tol = 1e-5f) const;

    Matrix to_matrix() const;
    static EmbeddingMatrix from_matrix(const Matrix & m);
};

EmbeddingMatrix read_embeddings(const std::filesystem::path & path);
void write_embeddings(const EmbeddingMatrix & m, const std::filesystem::path & path);

}  // namespace vecap
