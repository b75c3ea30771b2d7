#pragma once

// OEIS b-file cross-checks for the type B and D Stirling triangles.

#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirbd/bigint.hpp"

namespace stirbd::oeis {

// Lines "index value"; '#' starts a comment. Comments of the form
// "# key: value" are collected as metadata.
struct BFile {
  std::vector<std::pair<long, BigInt>> terms;
  std::map<std::string, std::string> metadata;
};

// Throws Error(ParseError) on a malformed data line.
BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::string& path);

struct SequenceInfo {
  std::string id;          // "A039755"
  std::string triangle;    // "S_B" or "S_D"
};

// Only A039755 (S_B) and A039760 (S_D). Throws Error(BadIndex) otherwise.
const SequenceInfo& sequence(const std::string& id);

// Row-major T(n, k), 0 <= k <= n <= nmax.
std::vector<BigInt> linearize(const std::string& id, int nmax);

struct Comparison {
  std::size_t compared = 0;
  std::optional<long> first_mismatch;  // b-file index
  BigInt expected = 0;                 // computed value at the mismatch
  BigInt found = 0;                    // b-file value at the mismatch
  bool matched() const noexcept { return !first_mismatch.has_value() && compared > 0; }
};

// Walks the b-file terms in order against the computed prefix, stopping at
// whichever ends first. Indices must be consecutive.
Comparison compare(const BFile& bfile, const std::vector<BigInt>& computed);

struct FetchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Base URL from STIRBD_OEIS_URL, default https://oeis.org.
std::string base_url();
std::string bfile_path(const std::string& id);  // "/A039755/b039755.txt"

// Throws FetchError on any transport or HTTP failure.
std::string fetch_bfile(const std::string& id);

}  // namespace stirbd::oeis
