#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjstat/algebra/bigint.hpp"

namespace adjstat {

/// Parsed "index value" pairs with strictly increasing indices.
struct BFile {
  std::vector<std::pair<std::int64_t, BigInt>> entries;

  friend bool operator==(const BFile&, const BFile&) = default;
};

/// Blank lines and lines starting with '#' are skipped. Any other line must
/// hold exactly two integers. Throws ParseError with the 1-based line number.
BFile parse_bfile(const std::string& text);
BFile read_bfile(const std::string& path);
std::string render_bfile(const BFile& b);

/// A computed sequence g(0), g(1), ..., g(count-1).
using SequenceGenerator = std::function<std::vector<BigInt>(std::size_t count)>;

struct CheckSpec {
  std::string id;
  std::string generator;
  /// b-file index = generator index + shift.
  std::int64_t shift = 0;
  std::size_t length = 20;
};

struct Mismatch {
  std::int64_t index;
  BigInt expected;
  BigInt computed;
};

struct ReconcileReport {
  std::string id;
  std::string generator;
  std::int64_t shift = 0;
  std::size_t requested = 0;
  std::size_t compared = 0;
  bool incomplete = false;
  std::vector<Mismatch> mismatches;

  bool pass() const { return !incomplete && compared > 0 && mismatches.empty(); }
};

/// Registered generator names: "avoid-k3-s2", "avoid-k4-s2", "avoid-k5-s2"
/// (a_n(0) for the signed difference) and "antidiagonal-s1" (w_{n,k} read by
/// anti-diagonals n+k = 0, 1, ..., n ascending within each).
std::vector<std::string> generator_names();
const SequenceGenerator& generator(const std::string& name);

/// a_n(0), n < count, for alphabet k and difference s.
std::vector<BigInt> avoid_sequence(int k, int s, std::size_t count);
/// First `count` terms of the anti-diagonal reading of w_{n,k}, the number
/// of words in [k]^n without an adjacent a(a+1); w_{n,0} = δ_{n,0}.
std::vector<BigInt> antidiagonal_s1(std::size_t count);

/// Default check for a known sequence id ("A007070", "A200676", "A277666").
std::optional<CheckSpec> default_check(const std::string& id);

/// Compare generator terms with the b-file over indices shift..shift+length-1.
ReconcileReport reconcile(const CheckSpec& spec, const BFile& bfile);

std::string report_to_json(const ReconcileReport& r, int indent = 2);

}  // namespace adjstat
