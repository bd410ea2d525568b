#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/search.hpp"

namespace dioph {

enum class Verdict { HoldsUpToBound, Refuted };

const char* to_string(Verdict v);

struct ClaimReport {
  std::string claim_id;
  std::string statement;
  SearchConfig config;
  Verdict verdict = Verdict::HoldsUpToBound;
  Verdict expected = Verdict::HoldsUpToBound;
  std::vector<CatalogEntry> witnesses;
  std::vector<PointSetRecord> pointset_witnesses;
  std::vector<ApexPair> pair_witnesses;
  std::uint64_t visited = 0;
  std::chrono::duration<double> elapsed{0};
  std::string note;  // discrepancies and remarks; empty when there are none
};

struct ClaimInfo {
  std::string id;
  std::string statement;
};

const std::vector<ClaimInfo>& registered_claims();

bool is_registered_claim(const std::string& id);

// Runs the claim's search with every distance bounded by dmax (for the
// collinear claims, dmax bounds a). Throws std::invalid_argument for an
// unknown id or dmax < 1.
ClaimReport verify_claim(const std::string& claim_id, std::int64_t dmax, int threads = 1);

// Reads a side-2 quadrilateral in the shape of the Pell family: some side XY
// of length 2, a vertex P with |PX| = |PY|, and a vertex M with
// |MX| - |MY| = +-1. Returns b = min(|MX|, |MY|) and c = |MP|, or nothing
// when no relabeling has that shape.
struct Side2Parameters {
  std::int64_t b = 0;
  std::int64_t c = 0;
};

std::optional<Side2Parameters> side2_parameters(const QuadDistances& q);

// (2b + 1)^2 - 12c^2 == 1.
bool satisfies_side2_pell(const Side2Parameters& p);

// Pairs predicted by the closed form b = a(k^2 - off^2) / (2a*off - k^2),
// restricted to positive integers b and 2a > k.
std::vector<ApexPair> collinear_formula_pairs(std::int64_t k, std::int64_t cd_offset, std::int64_t amax);

}  // namespace dioph
