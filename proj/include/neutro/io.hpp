#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "neutro/neutrosophic.hpp"

namespace neutro::io {

enum class Schema { pair, triplet };
enum class Format { csv, jsonl };

// Ingestion clamp: inputs missing [0,1] by at most this much are pulled back
// (measurement noise), counted in RecordBatch::clamped_values. Worse misses
// raise OutOfRange.
inline constexpr double kIngestClampTol = 1e-9;

// A parsed or generated batch of inputs. Exactly one of `pairs`/`triplets` is
// populated, matching `schema`; `lines` holds the 1-based source line of each
// row and is strictly increasing.
struct RecordBatch {
  Schema schema = Schema::triplet;
  std::vector<BifuzzyPair> pairs;
  std::vector<NeutrosophicTriplet> triplets;
  std::vector<std::size_t> lines;
  std::size_t ignored_columns = 0;  // header columns (CSV) or keys (JSONL) not consumed
  std::size_t clamped_values = 0;   // inputs pulled back onto [0,1]

  std::size_t size() const noexcept {
    return schema == Schema::pair ? pairs.size() : triplets.size();
  }
};

struct PairResult {
  BifuzzyPair input;
  PentaIndexes indexes;
};

struct TripletResult {
  NeutrosophicTriplet input;
  DecaIndexes indexes;
  EntropyTriad triad;
};

// Shortest decimal rendering that parses back to the identical double.
std::string render_double(double value);

// Reads a batch from `in`. CSV needs a header naming the fields (mu,nu or
// mu,omega,nu; case-insensitive, any column order); JSONL expects one flat
// object per line. Blank lines are skipped. Throws MalformedRow / OutOfRange /
// EmptyInput.
RecordBatch parse_records(std::istream& in, Format format, Schema schema,
                          double clamp_tol = kIngestClampTol);

// Uniform lattice over the unit square/cube with the given spacing, in
// lexicographic order. Requires 1/step to be an integer (within 1e-9); the
// lattice has (1/step + 1)^d points. Throws InvalidStep.
RecordBatch generate_grid(Schema schema, double step);

// Writes header plus one row per result; returns the number of data rows.
// CSV columns (triplet): mu,omega,nu,t,t_w,f,f_w,c,n,s,u,a,h,entropy,
// neutro_entropy,anti_entropy. CSV columns (pair): mu,nu,truth,falsity,
// ambiguity,ignorance,contradiction. JSONL uses the same field names.
// Throws SinkFailure if the stream goes bad.
std::size_t write_results(std::span<const TripletResult> rows, Format format, std::ostream& out);
std::size_t write_results(std::span<const PairResult> rows, Format format, std::ostream& out);

}  // namespace neutro::io
