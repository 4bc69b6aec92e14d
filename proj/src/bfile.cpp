#include "adjstat/oeis/bfile.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "adjstat/errors.hpp"
#include "adjstat/kary/adjacency.hpp"

namespace adjstat {

namespace {

bool parse_integer(const std::string& tok, BigInt& out) {
  if (tok.empty()) return false;
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) return false;
  for (std::size_t j = i; j < tok.size(); ++j) {
    if (tok[j] < '0' || tok[j] > '9') return false;
  }
  return out.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) == 0;
}

const std::map<std::string, SequenceGenerator>& registry() {
  static const std::map<std::string, SequenceGenerator> reg = {
      {"avoid-k3-s2", [](std::size_t n) { return avoid_sequence(3, 2, n); }},
      {"avoid-k4-s2", [](std::size_t n) { return avoid_sequence(4, 2, n); }},
      {"avoid-k5-s2", [](std::size_t n) { return avoid_sequence(5, 2, n); }},
      {"antidiagonal-s1", [](std::size_t n) { return antidiagonal_s1(n); }},
  };
  return reg;
}

}  // namespace

BFile parse_bfile(const std::string& text) {
  BFile b;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, v, extra;
    fields >> a >> v;
    if (v.empty() || (fields >> extra)) throw ParseError(line_no, "expected \"index value\"");
    BigInt idx;
    BigInt val;
    if (!parse_integer(a, idx)) throw ParseError(line_no, "index '" + a + "' is not an integer");
    if (!parse_integer(v, val)) throw ParseError(line_no, "value '" + v + "' is not an integer");
    if (!idx.fits_slong_p()) throw ParseError(line_no, "index out of range");
    const std::int64_t i = idx.get_si();
    if (!b.entries.empty() && i <= b.entries.back().first) {
      throw ParseError(line_no, "index " + a + " does not increase");
    }
    b.entries.emplace_back(i, std::move(val));
  }
  return b;
}

BFile read_bfile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open b-file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_bfile(ss.str());
}

std::string render_bfile(const BFile& b) {
  std::string out;
  for (const auto& [i, v] : b.entries) out += std::to_string(i) + " " + v.get_str() + "\n";
  return out;
}

std::vector<std::string> generator_names() {
  std::vector<std::string> names;
  for (const auto& [name, g] : registry()) names.push_back(name);
  return names;
}

const SequenceGenerator& generator(const std::string& name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown generator '" + name + "'");
  return it->second;
}

std::vector<BigInt> avoid_sequence(int k, int s, std::size_t count) {
  if (k < 1 || s < 1) throw std::invalid_argument("k and s must be >= 1");
  std::vector<BigInt> a;
  a.reserve(count);
  if (count == 0) return a;
  a.push_back(BigInt(1));
  // a_{n,i}(0) = a_{n-1}(0) - a_{n-1,i-s}(0) for i > s.
  const auto ku = static_cast<std::size_t>(k);
  const auto su = static_cast<std::size_t>(s);
  std::vector<BigInt> row(ku, BigInt(1));
  for (std::size_t n = 1; n < count; ++n) {
    if (n > 1) {
      std::vector<BigInt> next(ku);
      for (std::size_t i = 0; i < ku; ++i) next[i] = (i < su) ? a[n - 1] : BigInt(a[n - 1] - row[i - su]);
      row = std::move(next);
    }
    BigInt total(0);
    for (const auto& v : row) total += v;
    a.push_back(std::move(total));
  }
  return a;
}

std::vector<BigInt> antidiagonal_s1(std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  if (count == 0) return out;
  std::size_t last = 0;  // last anti-diagonal needed
  while ((last + 1) * (last + 2) / 2 < count) ++last;
  std::vector<std::vector<BigInt>> cols(last + 1);  // cols[k][n] = w_{n,k}
  cols[0].assign(last + 1, BigInt(0));
  cols[0][0] = 1;
  for (std::size_t k = 1; k <= last; ++k) cols[k] = avoid_sequence(static_cast<int>(k), 1, last + 1);
  for (std::size_t d = 0; d <= last; ++d) {
    for (std::size_t n = 0; n <= d && out.size() < count; ++n) out.push_back(cols[d - n][n]);
  }
  return out;
}

std::optional<CheckSpec> default_check(const std::string& id) {
  if (id == "A007070") return CheckSpec{id, "avoid-k4-s2", 0, 20};
  if (id == "A200676") return CheckSpec{id, "avoid-k5-s2", 3, 20};
  if (id == "A277666") return CheckSpec{id, "antidiagonal-s1", 0, 20};
  return std::nullopt;
}

ReconcileReport reconcile(const CheckSpec& spec, const BFile& bfile) {
  if (spec.length < 1) throw std::invalid_argument("compare length must be >= 1");
  ReconcileReport r;
  r.id = spec.id;
  r.generator = spec.generator;
  r.shift = spec.shift;
  r.requested = spec.length;
  const auto computed = generator(spec.generator)(spec.length);
  std::map<std::int64_t, const BigInt*> by_index;
  for (const auto& [i, v] : bfile.entries) by_index[i] = &v;
  for (std::size_t g = 0; g < spec.length; ++g) {
    const std::int64_t idx = static_cast<std::int64_t>(g) + spec.shift;
    const auto it = by_index.find(idx);
    if (it == by_index.end()) {
      r.incomplete = true;
      continue;
    }
    ++r.compared;
    if (*it->second != computed[g]) r.mismatches.push_back({idx, *it->second, computed[g]});
  }
  return r;
}

std::string report_to_json(const ReconcileReport& r, int indent) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["generator"] = r.generator;
  j["shift"] = r.shift;
  j["requested"] = r.requested;
  j["compared"] = r.compared;
  j["incomplete"] = r.incomplete;
  j["pass"] = r.pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : r.mismatches) {
    arr.push_back({{"index", m.index}, {"expected", m.expected.get_str()}, {"computed", m.computed.get_str()}});
  }
  j["mismatches"] = arr;
  return j.dump(indent);
}

}  // namespace adjstat
