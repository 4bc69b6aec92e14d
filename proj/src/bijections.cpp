#include "adjstat/bijections/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "adjstat/errors.hpp"

namespace adjstat {

namespace {

bool has_pair(std::span<const int> w, int a, int b) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == a && w[i + 1] == b) return true;
  }
  return false;
}

bool letters_in(std::span<const int> w, int k) {
  return std::all_of(w.begin(), w.end(), [k](int a) { return a >= 1 && a <= k; });
}

/// Emit the body of a part: a copies of 4, then 2/3 for each cell after the
/// first circled one.
void emit_part_body(const Part& p, ManeuverSeq& out) {
  const int first = p.colored.front();
  for (int i = 1; i < first; ++i) out.push_back(4);
  std::size_t next = 1;
  for (int cell = first + 1; cell <= p.size; ++cell) {
    if (next < p.colored.size() && p.colored[next] == cell) {
      out.push_back(2);
      ++next;
    } else {
      out.push_back(3);
    }
  }
}

Part parse_part_body(std::span<const int> seg) {
  Part p;
  std::size_t i = 0;
  while (i < seg.size() && seg[i] == 4) ++i;
  const int a = static_cast<int>(i);
  p.colored.push_back(a + 1);
  int cell = a + 1;
  for (; i < seg.size(); ++i) {
    ++cell;
    if (seg[i] == 2) {
      p.colored.push_back(cell);
    } else if (seg[i] != 3) {
      throw InvalidSequence("unexpected maneuver " + std::to_string(seg[i]) + " inside a part");
    }
  }
  p.size = cell;
  return p;
}

void tiling_rec(int remaining, Tiling& cur, const std::function<void(const Tiling&)>& visit) {
  if (remaining == 0) {
    visit(cur);
    return;
  }
  cur.push_back(Piece::kSquare);
  tiling_rec(remaining - 1, cur, visit);
  cur.pop_back();
  if (remaining >= 2) {
    cur.push_back(Piece::kDomino);
    tiling_rec(remaining - 2, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

int ColoredComposition::total() const {
  int t = 0;
  for (const auto& p : parts) t += p.size;
  return t;
}

void validate_composition(const ColoredComposition& c) {
  if (c.parts.empty()) throw InvalidComposition("composition has no parts");
  for (const auto& p : c.parts) {
    if (p.size < 1) throw InvalidComposition("part size must be >= 1");
    if (p.colored.empty()) throw InvalidComposition("part of size " + std::to_string(p.size) + " has no colored cell");
    for (std::size_t i = 0; i < p.colored.size(); ++i) {
      const int v = p.colored[i];
      if (v < 1 || v > p.size) throw InvalidComposition("colored cell out of range");
      if (i > 0 && v <= p.colored[i - 1]) throw InvalidComposition("colored cells must be strictly increasing");
    }
  }
}

void validate_maneuvers(std::span<const int> m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || m[i] > 4) throw InvalidSequence("maneuver " + std::to_string(m[i]) + " is not in 1..4");
    if (i > 0 && m[i] == 4 && (m[i - 1] == 2 || m[i - 1] == 3)) {
      throw InvalidSequence("4 follows " + std::to_string(m[i - 1]) + " at position " + std::to_string(i));
    }
  }
}

ManeuverSeq composition_to_maneuvers(const ColoredComposition& c) {
  validate_composition(c);
  ManeuverSeq out;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i > 0) out.push_back(1);
    emit_part_body(c.parts[i], out);
  }
  return out;
}

ColoredComposition maneuvers_to_composition(std::span<const int> m) {
  validate_maneuvers(m);
  ColoredComposition c;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= m.size(); ++i) {
    if (i == m.size() || m[i] == 1) {
      c.parts.push_back(parse_part_body(m.subspan(start, i - start)));
      start = i + 1;
    }
  }
  return c;
}

void for_each_colored_composition(int total, const std::function<void(const ColoredComposition&)>& visit) {
  if (total < 1) throw std::invalid_argument("composition total must be >= 1");
  ColoredComposition cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      visit(cur);
      return;
    }
    for (int size = 1; size <= remaining; ++size) {
      for (unsigned mask = 1; mask < (1u << size); ++mask) {
        Part p;
        p.size = size;
        for (int b = 0; b < size; ++b) {
          if (mask & (1u << b)) p.colored.push_back(b + 1);
        }
        cur.parts.push_back(std::move(p));
        rec(remaining - size);
        cur.parts.pop_back();
      }
    }
  };
  rec(total);
}

bool is_v_word(std::span<const int> w) { return letters_in(w, 4) && !has_pair(w, 2, 4) && !has_pair(w, 3, 4); }

bool is_w_word(std::span<const int> w) { return letters_in(w, 4) && !has_pair(w, 1, 3) && !has_pair(w, 2, 4); }

std::vector<int> maneuvers_to_v_word(std::span<const int> m) {
  validate_maneuvers(m);
  return {m.begin(), m.end()};
}

std::vector<int> v_to_w(std::span<const int> w) {
  if (!is_v_word(w)) throw InvalidWord(word_to_string(w) + " is not a 4-ary word avoiding 2-4 and 3-4");
  std::vector<int> out;
  out.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 1) {
      out.push_back(w[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j] == 1) ++j;
    const std::size_t d = j - i;
    if (j < w.size() && w[j] == 3) {
      out.push_back(3);
      out.insert(out.end(), d, 4);
      i = j + 1;
    } else {
      out.insert(out.end(), d, 1);
      i = j;
    }
  }
  return out;
}

std::vector<int> w_to_v(std::span<const int> w) {
  if (!is_w_word(w)) throw InvalidWord(word_to_string(w) + " is not a 4-ary word avoiding 1-3 and 2-4");
  std::vector<int> out;
  out.reserve(w.size());
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] != 3) {
      out.push_back(w[i++]);
      continue;
    }
    std::size_t j = i + 1;
    while (j < w.size() && w[j] == 4) ++j;
    out.insert(out.end(), j - i - 1, 1);
    out.push_back(3);
    i = j;
  }
  return out;
}

int tiling_length(const Tiling& t) {
  int n = 0;
  for (const auto p : t) n += (p == Piece::kSquare) ? 1 : 2;
  return n;
}

void for_each_tiling(int n, const std::function<void(const Tiling&)>& visit) {
  if (n < 0) throw std::invalid_argument("tiling length must be >= 0");
  Tiling cur;
  tiling_rec(n, cur, visit);
}

bool is_jpp_word(std::span<const int> w) {
  if (!letters_in(w, 3) || has_pair(w, 1, 3)) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) return false;
  }
  return w.empty() || w[0] == 2;
}

Tiling jpp_to_tiling(std::span<const int> w) {
  if (!is_jpp_word(w)) throw InvalidWord(word_to_string(w) + " is not in J''");
  Tiling t;
  auto i = static_cast<long>(w.size()) - 1;
  while (i >= 0) {
    if (i >= 1) {
      const int a = w[static_cast<std::size_t>(i - 1)];
      const int b = w[static_cast<std::size_t>(i)];
      if ((a == 2 && b == 1) || (a == 3 && b == 2)) {
        t.push_back(Piece::kDomino);
        i -= 2;
        continue;
      }
    }
    t.push_back(Piece::kSquare);
    i -= 1;
  }
  std::reverse(t.begin(), t.end());
  return t;
}

std::vector<int> tiling_to_jpp(const Tiling& t) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(tiling_length(t)));
  for (const auto p : t) {
    if (p == Piece::kSquare) {
      if (w.empty()) {
        w.push_back(2);
      } else {
        // An uncovered pair is one of 12, 23, 31.
        const int prev = w.back();
        w.push_back(prev == 1 ? 2 : prev == 2 ? 3 : 1);
      }
    } else {
      int first = 2;
      if (!w.empty()) {
        // The domino starts with 2 or 3; only one of them may follow prev.
        const int prev = w.back();
        first = (prev == 2) ? 3 : 2;
      }
      w.push_back(first);
      w.push_back(first == 2 ? 1 : 2);
    }
  }
  if (!is_jpp_word(w) || jpp_to_tiling(w) != t) {
    throw InternalInvariantViolation("tiling " + tiling_to_string(t) + " does not decode to a J'' word");
  }
  return w;
}

std::string word_to_string(std::span<const int> w) {
  std::string s;
  s.reserve(w.size());
  for (const int a : w) s += (a >= 0 && a <= 9) ? static_cast<char>('0' + a) : '?';
  return s;
}

std::vector<int> word_from_string(const std::string& s) {
  std::vector<int> w;
  w.reserve(s.size());
  for (const char ch : s) {
    if (ch < '1' || ch > '9') throw InvalidWord("letter '" + std::string(1, ch) + "' is not a digit 1..9");
    w.push_back(ch - '0');
  }
  return w;
}

std::string tiling_to_string(const Tiling& t) {
  std::string s;
  for (const auto p : t) s += (p == Piece::kSquare) ? 'S' : 'D';
  return s;
}

std::string composition_to_string(const ColoredComposition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i > 0) s += " + ";
    s += std::to_string(c.parts[i].size) + "{";
    for (std::size_t j = 0; j < c.parts[i].colored.size(); ++j) {
      if (j > 0) s += ",";
      s += std::to_string(c.parts[i].colored[j]);
    }
    s += "}";
  }
  return s;
}

}  // namespace adjstat
