#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace adjstat {

/// One part of a (2^m - 1)-color composition: its size and the nonempty set
/// of colored (circled) cells, 1-based and strictly increasing.
struct Part {
  int size = 1;
  std::vector<int> colored;

  friend bool operator==(const Part&, const Part&) = default;
};

struct ColoredComposition {
  std::vector<Part> parts;

  int total() const;
  friend bool operator==(const ColoredComposition&, const ColoredComposition&) = default;
};

/// Throws InvalidComposition on an empty composition, a part of size < 1, or
/// a colored set that is empty, unsorted or out of range.
void validate_composition(const ColoredComposition& c);

/// Operations over {1,2,3,4}, with 4 never directly after a 2 or 3.
using ManeuverSeq = std::vector<int>;

/// Throws InvalidSequence on a letter outside 1..4 or a 4 following 2 or 3.
void validate_maneuvers(std::span<const int> m);

/// Replay of a composition of n+1 as n maneuvers. Each part is read as
/// a uncircled cells, its first circled cell, then the remaining cells.
/// Every part after the first opens with 1; then come a copies of 4 and one
/// 2 (circled) or 3 (uncircled) for each remaining cell.
ManeuverSeq composition_to_maneuvers(const ColoredComposition& c);
ColoredComposition maneuvers_to_composition(std::span<const int> m);

/// Calls visit for every colored composition of `total`, parts in
/// lexicographic order of sizes and colorings.
void for_each_colored_composition(int total, const std::function<void(const ColoredComposition&)>& visit);

/// 4-ary words avoiding adjacent 2-4 and 3-4.
bool is_v_word(std::span<const int> w);
/// 4-ary words avoiding adjacent 1-3 and 2-4.
bool is_w_word(std::span<const int> w);

/// The maneuver sequence read as a word; throws InvalidSequence if invalid.
std::vector<int> maneuvers_to_v_word(std::span<const int> m);

/// Replace each maximal 1^d 3 by 3 4^d. Throws InvalidWord outside V_n.
std::vector<int> v_to_w(std::span<const int> w);
/// Replace each 3 4^d (maximal run of 4s) by 1^d 3. Throws InvalidWord
/// outside W_n.
std::vector<int> w_to_v(std::span<const int> w);

enum class Piece { kSquare, kDomino };
using Tiling = std::vector<Piece>;

int tiling_length(const Tiling& t);

/// Calls visit for every square-and-domino tiling of length n.
void for_each_tiling(int n, const std::function<void(const Tiling&)>& visit);

/// 3-ary, avoids adjacent 1-3, no levels, starts with 2 (when nonempty).
bool is_jpp_word(std::span<const int> w);

/// Overline disjoint 21 and 32 factors greedily from the right; overlined
/// pairs become dominoes, other letters squares. Throws InvalidWord unless
/// is_jpp_word(w).
Tiling jpp_to_tiling(std::span<const int> w);
std::vector<int> tiling_to_jpp(const Tiling& t);

std::string word_to_string(std::span<const int> w);
/// Digits 1..9 only; throws InvalidWord otherwise.
std::vector<int> word_from_string(const std::string& s);
/// "S" and "D" per piece, e.g. "SDS".
std::string tiling_to_string(const Tiling& t);
std::string composition_to_string(const ColoredComposition& c);

}  // namespace adjstat
