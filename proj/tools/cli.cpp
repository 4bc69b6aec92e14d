#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "adjstat/abs/abs_adjacency.hpp"
#include "adjstat/bijections/bijections.hpp"
#include "adjstat/errors.hpp"
#include "adjstat/fib/fib_words.hpp"
#include "adjstat/kary/adjacency.hpp"
#include "adjstat/oeis/bfile.hpp"
#include "adjstat/partitions/partitions.hpp"
#include "adjstat/verify/verify.hpp"
#include "adjstat/words/oracle.hpp"

namespace adjstat::cli {

namespace {

/// Raised for bad flag combinations detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "json";
  std::string out_path;
};

struct Result {
  std::string text;
  int code = kExitOk;
};

std::string render(const Table& t, const Output& o) { return o.format == "csv" ? to_csv(t) : to_json(t); }

std::string check_cell(bool ok) { return ok ? "ok" : "mismatch"; }

std::optional<BigRational> parse_q(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return BigRational::parse(s);
}

EnumerationLimits limits_from(std::uint64_t cap) {
  EnumerationLimits l;
  if (cap > 0) l.max_objects = cap;
  return l;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (const char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

// ---- dist -----------------------------------------------------------------

struct DistArgs {
  std::string stat;
  int k = 0;
  int s = 0;
  std::string n = "0..8";
  std::string q;
  bool verify = false;
  std::uint64_t cap = 0;
};

Result cmd_dist(const DistArgs& a, const Output& o) {
  const auto [lo, hi] = parse_range(a.n);
  const auto q = parse_q(a.q);
  const auto top = static_cast<std::size_t>(hi);
  std::vector<QPoly> rec;
  std::optional<std::vector<QPoly>> closed;
  std::optional<std::vector<BigRational>> closed_at_q;
  if (a.stat == "mu") {
    const KSParams p = KSParams::make(a.k, a.s);
    rec = a_table(p, top).totals;
    closed = gf_A(p).series(top);
  } else {
    const BTable bt = b_table(a.k, a.s, top);
    rec = bt.totals;
    if (bt.regime == AbsRegime::kSmall) {
      closed = gf_B_small(a.k, a.s).series(top);
    } else if (bt.regime == AbsRegime::kTrivial) {
      closed = RatFunc<QPoly>(XQPoly::one(), XQPoly{QPoly::one(), QPoly::constant(BigInt(-a.k))}).series(top);
    } else if (q && !(*q == BigRational(1))) {
      closed_at_q = gf_B_large(a.k, a.s, *q).series(top);
    }
  }

  Table t;
  t.command = "dist";
  t.columns = {"n", "dist"};
  if (q) t.columns.push_back("value");
  if (a.verify) {
    t.columns.push_back("oracle");
    t.columns.push_back("closed_form");
  }
  bool all_ok = true;
  for (int n = lo; n <= hi; ++n) {
    const auto i = static_cast<std::size_t>(n);
    std::vector<Cell> row{std::to_string(n), poly_cell(rec[i])};
    if (q) row.emplace_back(rec[i].evaluate(*q).to_string());
    if (a.verify) {
      try {
        const QPoly oracle = (a.stat == "mu") ? distribution_mu(a.k, a.s, n, limits_from(a.cap))
                                              : distribution_nu(a.k, a.s, n, limits_from(a.cap));
        const bool ok = oracle == rec[i];
        all_ok = all_ok && ok;
        row.emplace_back(check_cell(ok));
      } catch (const EnumerationTooLarge&) {
        row.emplace_back(std::string("cap exceeded"));
      }
      if (closed) {
        const bool ok = (*closed)[i] == rec[i];
        all_ok = all_ok && ok;
        row.emplace_back(check_cell(ok));
      } else if (closed_at_q) {
        const bool ok = (*closed_at_q)[i] == rec[i].evaluate(*q);
        all_ok = all_ok && ok;
        row.emplace_back(check_cell(ok));
      } else {
        row.emplace_back(std::string("n/a"));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return {render(t, o), all_ok ? kExitOk : kExitCheckFailed};
}

// ---- totals ---------------------------------------------------------------

struct TotalsArgs {
  bool words = false;
  bool partitions = false;
  bool fib = false;
  int k = 0;
  int s = 0;
  std::string n = "1..8";
  bool verify = false;
};

Result cmd_totals(const TotalsArgs& a, const Output& o) {
  const int modes = int(a.words) + int(a.partitions) + int(a.fib);
  if (modes != 1) throw UsageError("choose exactly one of --words, --partitions, --fib");
  const auto [lo, hi] = parse_range(a.n);
  if (lo < 1) throw UsageError("totals need n >= 1");
  Table t;
  t.command = "totals";
  bool all_ok = true;
  if (a.fib) {
    t.columns = {"n", "levels", "ascents", "descents"};
    for (int n = lo; n <= hi; ++n) {
      const JTotals j = totals(n);
      t.rows.push_back({std::to_string(n), to_string(j.lev), to_string(j.asc), to_string(j.des)});
    }
    return {render(t, o), kExitOk};
  }
  t.columns = {"n", "total"};
  if (a.verify) t.columns.push_back("oracle");
  for (int n = lo; n <= hi; ++n) {
    BigInt v;
    BigInt oracle;
    if (a.words) {
      v = total_occurrences(KSParams::make(a.k, a.s), n);
      if (a.verify) oracle = total_mu(a.k, a.s, n);
    } else if (a.k > 0) {
      v = (n >= a.k + 1) ? total_pnk(n, a.k, a.s) : BigInt(0);
      if (a.verify) {
        const QPoly d = p_dist_oracle(n, a.k, a.s);
        oracle = 0;
        for (std::size_t i = 1; i < d.size(); ++i) oracle += d.coeffs()[i] * BigInt(static_cast<unsigned long>(i));
      }
    } else {
      v = q_total(n, a.s);
      if (a.verify) oracle = p_total_oracle(n, a.s);
    }
    std::vector<Cell> row{std::to_string(n), to_string(v)};
    if (a.verify) {
      all_ok = all_ok && oracle == v;
      row.emplace_back(check_cell(oracle == v));
    }
    t.rows.push_back(std::move(row));
  }
  return {render(t, o), all_ok ? kExitOk : kExitCheckFailed};
}

// ---- avoid / gap / partition-dist -----------------------------------------

Result cmd_avoid(int k, int s, const std::string& range, const Output& o) {
  const auto [lo, hi] = parse_range(range);
  const auto a = avoid_count(KSParams::make(k, s), static_cast<std::size_t>(hi));
  Table t;
  t.command = "avoid";
  t.columns = {"n", "count"};
  for (int n = lo; n <= hi; ++n) t.rows.push_back({std::to_string(n), to_string(a[static_cast<std::size_t>(n)])});
  return {render(t, o), kExitOk};
}

Result cmd_gap(int k, int s, int r, const std::string& range, bool verify, std::uint64_t cap, const Output& o) {
  const auto [lo, hi] = parse_range(range);
  const KSParams p = KSParams::make(k, s);
  Table t;
  t.command = "gap";
  t.columns = {"n", "dist"};
  if (verify) t.columns.push_back("oracle");
  bool all_ok = true;
  for (int n = lo; n <= hi; ++n) {
    const QPoly d = gap_distribution(p, r, n);
    std::vector<Cell> row{std::to_string(n), poly_cell(d)};
    if (verify) {
      try {
        const bool ok = distribution_gap(k, s, r, n, limits_from(cap)) == d;
        all_ok = all_ok && ok;
        row.emplace_back(check_cell(ok));
      } catch (const EnumerationTooLarge&) {
        row.emplace_back(std::string("cap exceeded"));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return {render(t, o), all_ok ? kExitOk : kExitCheckFailed};
}

Result cmd_partition_dist(int k, int s, const std::string& range, std::uint64_t cap, const Output& o) {
  const auto [lo, hi] = parse_range(range);
  std::optional<std::vector<QPoly>> closed;
  if (s == 1 && k >= 2) {
    closed = gf_P_s1(k).series(static_cast<std::size_t>(hi));
  } else if (s >= 2 && k >= s + 1) {
    closed = gf_P(k, s).series(static_cast<std::size_t>(hi));
  }
  Table t;
  t.command = "partition-dist";
  t.columns = {"n", "dist", "closed_form"};
  bool all_ok = true;
  for (int n = lo; n <= hi; ++n) {
    std::vector<Cell> row{std::to_string(n)};
    std::optional<QPoly> oracle;
    try {
      oracle = p_dist_oracle(n, k, s, limits_from(cap));
    } catch (const EnumerationTooLarge&) {
    }
    if (oracle) {
      row.emplace_back(poly_cell(*oracle));
    } else if (closed) {
      row.emplace_back(poly_cell((*closed)[static_cast<std::size_t>(n)]));
    } else {
      row.emplace_back(std::string("cap exceeded"));
    }
    if (!closed) {
      row.emplace_back(std::string("n/a"));
    } else if (!oracle) {
      row.emplace_back(std::string("cap exceeded"));
    } else {
      const bool ok = (*closed)[static_cast<std::size_t>(n)] == *oracle;
      all_ok = all_ok && ok;
      row.emplace_back(check_cell(ok));
    }
    t.rows.push_back(std::move(row));
  }
  return {render(t, o), all_ok ? kExitOk : kExitCheckFailed};
}

// ---- verify ---------------------------------------------------------------

Result cmd_verify(const std::string& suite, int kmax, int nmax, const std::string& bfile_dir, const Output& o) {
  static const std::vector<std::string> known = {"kary", "fib", "abs", "partitions", "bijections", "algebra", "oeis"};
  std::vector<std::string> run;
  if (suite == "all") {
    run = known;
  } else if (std::find(known.begin(), known.end(), suite) != known.end()) {
    run = {suite};
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  std::vector<SuiteReport> reports;
  for (const auto& name : run) {
    if (name == "kary") {
      reports.push_back(check_three_way(kmax, std::min(4, kmax - 1), nmax));
      reports.push_back(check_avoidance(std::max(nmax, 12), nmax));
      reports.push_back(check_word_totals(kmax, std::min(4, kmax - 1), nmax));
      reports.push_back(check_gap(3, std::min(4, kmax), nmax));
    } else if (name == "fib") {
      reports.push_back(check_fib(nmax, 20, 12, 15));
    } else if (name == "abs") {
      reports.push_back(check_abs(kmax, 3, nmax, 12, 20, 6));
    } else if (name == "partitions") {
      reports.push_back(check_partitions(nmax, nmax + 1, 4));
    } else if (name == "bijections") {
      reports.push_back(check_bijections(nmax, nmax + 2));
    } else if (name == "algebra") {
      reports.push_back(check_algebra(12, 4, 10, 12));
    } else {
      std::optional<std::string> dir = bfile_dir.empty() ? bfile_dir_from_env() : std::optional(bfile_dir);
      reports.push_back(check_oeis(dir, 20));
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();

  std::string text;
  if (o.format == "csv") {
    text = "suite,check,params,pass,detail\n";
    for (const auto& r : reports) {
      if (r.skipped) text += csv_escape(r.suite) + ",,,skipped," + csv_escape(r.skip_reason) + "\n";
      for (const auto& c : r.checks) {
        text += csv_escape(r.suite) + "," + csv_escape(c.name) + "," + csv_escape(c.params) + "," +
                (c.pass ? "true" : "false") + "," + csv_escape(c.detail) + "\n";
      }
    }
  } else {
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["pass"] = ok;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(suite_to_json(r, -1)));
    j["suites"] = arr;
    text = j.dump(2) + "\n";
  }
  return {text, ok ? kExitOk : kExitCheckFailed};
}

// ---- bijection ------------------------------------------------------------

ColoredComposition parse_composition(const std::string& text) {
  // Parts "size{c1,c2,...}" joined by '+', spaces ignored.
  std::string s;
  for (const char c : text) {
    if (c != ' ') s += c;
  }
  ColoredComposition comp;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto brace = s.find('{', pos);
    const auto close = s.find('}', pos);
    if (brace == std::string::npos || close == std::string::npos || close < brace) {
      throw UsageError("composition parts look like 3{1,3}+1{1}");
    }
    Part p;
    p.size = std::stoi(s.substr(pos, brace - pos));
    std::stringstream cells(s.substr(brace + 1, close - brace - 1));
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      if (!cell.empty()) p.colored.push_back(std::stoi(cell));
    }
    comp.parts.push_back(std::move(p));
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '+') throw UsageError("expected '+' between composition parts");
      ++pos;
    }
  }
  validate_composition(comp);
  return comp;
}

struct BijectionArgs {
  std::string v_to_w;
  std::string w_to_v;
  std::string maneuvers;
  std::string composition;
  std::string jpp;
  std::string tiling;
};

Tiling parse_tiling(const std::string& s) {
  Tiling t;
  for (const char c : s) {
    if (c == 'S' || c == 's') {
      t.push_back(Piece::kSquare);
    } else if (c == 'D' || c == 'd') {
      t.push_back(Piece::kDomino);
    } else {
      throw UsageError("tiling letters are S (square) and D (domino)");
    }
  }
  return t;
}

Result cmd_bijection(const BijectionArgs& a, const Output& o) {
  const int given = int(!a.v_to_w.empty()) + int(!a.w_to_v.empty()) + int(!a.maneuvers.empty()) +
                    int(!a.composition.empty()) + int(!a.jpp.empty()) + int(!a.tiling.empty());
  if (given != 1) throw UsageError("give exactly one bijection input");
  Table t;
  t.command = "bijection";
  t.columns = {"stage", "value"};
  const auto add = [&t](const std::string& stage, const std::string& value) { t.rows.push_back({stage, value}); };
  if (!a.v_to_w.empty()) {
    const auto w = word_from_string(a.v_to_w);
    add("v-word", a.v_to_w);
    add("w-word", word_to_string(v_to_w(w)));
  } else if (!a.w_to_v.empty()) {
    const auto w = word_from_string(a.w_to_v);
    add("w-word", a.w_to_v);
    add("v-word", word_to_string(w_to_v(w)));
  } else if (!a.maneuvers.empty() || !a.composition.empty()) {
    ManeuverSeq m;
    ColoredComposition c;
    if (!a.composition.empty()) {
      c = parse_composition(a.composition);
      m = composition_to_maneuvers(c);
    } else {
      m = a.maneuvers == "-" ? ManeuverSeq{} : word_from_string(a.maneuvers);
      c = maneuvers_to_composition(m);
    }
    add("composition", composition_to_string(c));
    add("maneuvers", word_to_string(m));
    const auto v = maneuvers_to_v_word(m);
    add("v-word", word_to_string(v));
    add("w-word", word_to_string(v_to_w(v)));
  } else if (!a.jpp.empty()) {
    const auto w = word_from_string(a.jpp);
    add("word", a.jpp);
    add("tiling", tiling_to_string(jpp_to_tiling(w)));
  } else {
    const Tiling tl = parse_tiling(a.tiling);
    add("tiling", tiling_to_string(tl));
    add("word", word_to_string(tiling_to_jpp(tl)));
  }
  return {render(t, o), kExitOk};
}

// ---- oeis-check -----------------------------------------------------------

struct OeisArgs {
  std::string bfile;
  std::string id;
  std::string generator;
  std::int64_t shift = 0;
  bool shift_set = false;
  std::size_t length = 0;
};

Result cmd_oeis(const OeisArgs& a, const Output& o) {
  CheckSpec spec;
  if (auto d = default_check(a.id)) spec = *d;
  spec.id = a.id;
  if (!a.generator.empty()) spec.generator = a.generator;
  if (spec.generator.empty()) throw UsageError("unknown id '" + a.id + "'; pass --generator");
  if (a.shift_set) spec.shift = a.shift;
  if (!std::filesystem::is_regular_file(a.bfile)) throw UsageError("no b-file at " + a.bfile);
  const BFile b = read_bfile(a.bfile);
  if (a.length > 0) {
    spec.length = a.length;
  } else {
    std::size_t available = 0;
    for (const auto& e : b.entries) {
      if (e.first >= spec.shift) ++available;
    }
    spec.length = std::max<std::size_t>(available, 1);
  }
  const ReconcileReport r = reconcile(spec, b);
  std::string text;
  if (o.format == "csv") {
    text = "index,expected,computed\n";
    for (const auto& m : r.mismatches) {
      text += std::to_string(m.index) + "," + m.expected.get_str() + "," + m.computed.get_str() + "\n";
    }
    text += "# compared=" + std::to_string(r.compared) + " incomplete=" + (r.incomplete ? "true" : "false") +
            " pass=" + (r.pass() ? "true" : "false") + "\n";
  } else {
    text = report_to_json(r) + "\n";
  }
  return {text, r.pass() ? kExitOk : kExitCheckFailed};
}

void add_output_flags(CLI::App* sub, Output& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

}  // namespace

PolyCell poly_cell(const QPoly& p, const std::string& var) {
  PolyCell c{var, {}};
  for (const auto& v : p.coeffs()) c.coeffs.push_back(v.get_str());
  if (c.coeffs.empty()) c.coeffs.push_back("0");
  return c;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  j["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json row;
    for (std::size_t i = 0; i < r.size() && i < t.columns.size(); ++i) {
      if (const auto* s = std::get_if<std::string>(&r[i])) {
        row[t.columns[i]] = *s;
      } else {
        const auto& p = std::get<PolyCell>(r[i]);
        row[t.columns[i]] = {{"var", p.var}, {"coeffs", p.coeffs}};
      }
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_escape(t.columns[i]);
  out += "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ",";
      if (const auto* s = std::get_if<std::string>(&r[i])) {
        out += csv_escape(*s);
      } else {
        const auto& p = std::get<PolyCell>(r[i]);
        std::string joined;
        for (std::size_t k = 0; k < p.coeffs.size(); ++k) joined += (k ? ";" : "") + p.coeffs[k];
        out += joined;
      }
    }
    out += "\n";
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size() || v < 0) throw std::invalid_argument("bad");
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument("bad");
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument("bad");
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("range '" + text + "' must look like 3 or 0..8 with 0 <= lo <= hi");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const CLI::Range kPositive(1, std::numeric_limits<int>::max());
  CLI::App app{"Adjacency statistics on words and set partitions, computed exactly", "adjstat"};
  app.require_subcommand(1);

  Output o;
  DistArgs dist;
  auto* sub_dist = app.add_subcommand("dist", "Distribution of a(a+s) (mu) or a(a+-s) (nu) on k-ary words");
  sub_dist->add_option("--stat", dist.stat, "mu or nu")->required()->check(CLI::IsMember({"mu", "nu"}));
  sub_dist->add_option("--k", dist.k, "Alphabet size")->required()->check(kPositive);
  sub_dist->add_option("--s", dist.s, "Difference")->required()->check(kPositive);
  sub_dist->add_option("--n", dist.n, "Length or range a..b");
  sub_dist->add_option("--q", dist.q, "Specialize q to a rational p/q");
  sub_dist->add_flag("--verify", dist.verify, "Compare with enumeration and the closed form");
  sub_dist->add_option("--cap", dist.cap, "Enumeration cap");
  add_output_flags(sub_dist, o);

  TotalsArgs tot;
  auto* sub_tot = app.add_subcommand("totals", "Total number of occurrences");
  sub_tot->add_flag("--words", tot.words, "k-ary words, a(a+s)");
  sub_tot->add_flag("--partitions", tot.partitions, "Set partitions, a(a+s); with --k restrict to k blocks");
  sub_tot->add_flag("--fib", tot.fib, "Levels, ascents, descents on 3-ary words avoiding 1-3");
  sub_tot->add_option("--k", tot.k, "Alphabet size or block count");
  sub_tot->add_option("--s", tot.s, "Difference");
  sub_tot->add_option("--n", tot.n, "Length or range a..b");
  sub_tot->add_flag("--verify", tot.verify, "Compare with enumeration");
  add_output_flags(sub_tot, o);

  int av_k = 0, av_s = 0;
  std::string av_n = "0..12";
  auto* sub_avoid = app.add_subcommand("avoid", "Number of k-ary words with no a(a+s)");
  sub_avoid->add_option("--k", av_k, "Alphabet size")->required()->check(kPositive);
  sub_avoid->add_option("--s", av_s, "Difference")->required()->check(kPositive);
  sub_avoid->add_option("--n", av_n, "Length or range a..b");
  add_output_flags(sub_avoid, o);

  int pd_k = 0, pd_s = 0;
  std::string pd_n = "0..8";
  std::uint64_t pd_cap = 0;
  auto* sub_pd = app.add_subcommand("partition-dist", "Distribution of a(a+s) on set partitions with k blocks");
  sub_pd->add_option("--k", pd_k, "Block count")->required()->check(kPositive);
  sub_pd->add_option("--s", pd_s, "Difference")->required()->check(kPositive);
  sub_pd->add_option("--n", pd_n, "Length or range a..b");
  sub_pd->add_option("--cap", pd_cap, "Enumeration cap");
  add_output_flags(sub_pd, o);

  int gp_k = 0, gp_s = 0, gp_r = 1;
  std::string gp_n = "0..8";
  bool gp_verify = false;
  std::uint64_t gp_cap = 0;
  auto* sub_gap = app.add_subcommand("gap", "Distribution of w[i+r]-w[i] = s on k-ary words");
  sub_gap->add_option("--k", gp_k, "Alphabet size")->required()->check(kPositive);
  sub_gap->add_option("--s", gp_s, "Difference")->required()->check(kPositive);
  sub_gap->add_option("--r", gp_r, "Gap")->required()->check(kPositive);
  sub_gap->add_option("--n", gp_n, "Length or range a..b");
  sub_gap->add_flag("--verify", gp_verify, "Compare with enumeration");
  sub_gap->add_option("--cap", gp_cap, "Enumeration cap");
  add_output_flags(sub_gap, o);

  std::string vf_suite = "all";
  int vf_kmax = 6, vf_nmax = 8;
  std::string vf_dir;
  auto* sub_verify = app.add_subcommand("verify", "Run cross-validation suites");
  sub_verify->add_option("--suite", vf_suite, "kary, fib, abs, partitions, bijections, algebra, oeis or all");
  sub_verify->add_option("--kmax", vf_kmax, "Largest alphabet")->check(CLI::Range(2, 8));
  sub_verify->add_option("--nmax", vf_nmax, "Largest length")->check(CLI::Range(1, 12));
  sub_verify->add_option("--bfile-dir", vf_dir, "Directory with b007070.txt, b200676.txt, b277666.txt");
  add_output_flags(sub_verify, o);

  BijectionArgs bj;
  auto* sub_bij = app.add_subcommand("bijection", "Run one of the bijections on an input");
  sub_bij->add_option("--v-to-w", bj.v_to_w, "4-ary word avoiding 2-4 and 3-4");
  sub_bij->add_option("--w-to-v", bj.w_to_v, "4-ary word avoiding 1-3 and 2-4");
  sub_bij->add_option("--maneuvers", bj.maneuvers, "Maneuver sequence, e.g. 142 ('-' for empty)");
  sub_bij->add_option("--composition", bj.composition, "Colored composition, e.g. 2{1,2}+1{1}");
  sub_bij->add_option("--jpp", bj.jpp, "3-ary word starting with 2, no levels, avoiding 1-3");
  sub_bij->add_option("--tiling", bj.tiling, "Tiling as S/D letters");
  add_output_flags(sub_bij, o);

  OeisArgs oe;
  auto* sub_oeis = app.add_subcommand("oeis-check", "Reconcile a computed sequence with a local b-file");
  sub_oeis->add_option("--bfile", oe.bfile, "Path to the b-file")->required();
  sub_oeis->add_option("--id", oe.id, "Sequence id, e.g. A007070")->required();
  sub_oeis->add_option("--generator", oe.generator, "Generator name (default from id)");
  auto* shift_opt = sub_oeis->add_option("--shift", oe.shift, "b-file index of generator term 0");
  sub_oeis->add_option("--length", oe.length, "Terms to compare (default: all available)");
  add_output_flags(sub_oeis, o);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  oe.shift_set = shift_opt->count() > 0;

  Result res;
  try {
    if (sub_dist->parsed()) {
      res = cmd_dist(dist, o);
    } else if (sub_tot->parsed()) {
      res = cmd_totals(tot, o);
    } else if (sub_avoid->parsed()) {
      res = cmd_avoid(av_k, av_s, av_n, o);
    } else if (sub_pd->parsed()) {
      res = cmd_partition_dist(pd_k, pd_s, pd_n, pd_cap, o);
    } else if (sub_gap->parsed()) {
      res = cmd_gap(gp_k, gp_s, gp_r, gp_n, gp_verify, gp_cap, o);
    } else if (sub_verify->parsed()) {
      res = cmd_verify(vf_suite, vf_kmax, vf_nmax, vf_dir, o);
    } else if (sub_bij->parsed()) {
      res = cmd_bijection(bj, o);
    } else {
      res = cmd_oeis(oe, o);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidWord& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSequence& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidComposition& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const WrongRegime& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }

  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return kExitUsage;
    }
    f << res.text;
  } else {
    out << res.text;
  }
  return res.code;
}

}  // namespace adjstat::cli
