#include "stirbd/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "stirbd/bijections.hpp"
#include "stirbd/error.hpp"
#include "stirbd/geometry.hpp"
#include "stirbd/identities.hpp"
#include "stirbd/oeis.hpp"
#include "stirbd/partitions.hpp"
#include "stirbd/text.hpp"

namespace stirbd::cli {

namespace {

using text::json;

// Thrown for flag combinations CLI11 cannot express on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { md, csv, json };

struct Common {
  std::string format;
  std::uint64_t cap = 0;
  bool allow_large = false;

  Format resolved(Format fallback) const {
    if (format.empty()) return fallback;
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    return Format::md;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  sub->add_option("--cap", c.cap, "enumeration cap (raising it needs --allow-large)");
  sub->add_flag("--allow-large", c.allow_large, "acknowledge a cap above the default");
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void render(const Table& t, Format f, std::ostream& out) {
  if (f == Format::csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return;
  }
  auto line = [&](const std::vector<std::string>& cells) {
    out << '|';
    for (std::size_t i = 0; i < t.header.size(); ++i) out << ' ' << (i < cells.size() ? cells[i] : "") << " |";
    out << '\n';
  };
  line(t.header);
  out << '|';
  for (std::size_t i = 0; i < t.header.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& r : t.rows) line(r);
}

std::string status_word(const VerificationReport& r) {
  if (!r.asserted) return "REPORT";
  return r.passed() ? "PASS" : "FAIL";
}

// ---------------------------------------------------------------------------
// tables

struct TablesArgs {
  std::string which;
  std::string kind = "B";
  int nmin = 0;
  int nmax = 6;
  int m = 2;
  int rmax = -1;
};

int cmd_tables(const TablesArgs& a, const Common& c, std::ostream& out) {
  if (a.nmin < 0 || a.nmax < a.nmin) throw UsageError("need 0 <= --nmin <= --nmax");
  if (a.kind == "G" && a.m < 2) throw UsageError("--m must be at least 2");
  const bool stirling_table = a.which == "stirling";
  std::vector<std::vector<BigInt>> rows;
  std::size_t width = 0;
  for (int n = a.nmin; n <= a.nmax; ++n) {
    std::vector<BigInt> row;
    if (stirling_table) {
      const auto kind = a.kind == "A"   ? StirlingKind::classicalA
                        : a.kind == "B" ? StirlingKind::B
                        : a.kind == "D" ? StirlingKind::D
                        : a.kind == "G" ? StirlingKind::G
                                        : StirlingKind::Bstar;
      const int top = kind == StirlingKind::Bstar ? 2 * n : n;
      for (int r = 0; r <= top; ++r) row.push_back(stirling(kind, n, r, a.m));
    } else {
      const auto kind = a.kind == "A"   ? EulerianKind::A
                        : a.kind == "B" ? EulerianKind::B
                        : a.kind == "D" ? EulerianKind::D
                        : a.kind == "G" ? EulerianKind::G
                                        : EulerianKind::FlagB;
      row = eulerian_row(kind, n, a.m);
      const std::size_t top = kind == EulerianKind::FlagB ? 2 * n + 1 : n + 1;
      if (row.size() < top) row.resize(top, 0);
    }
    if (a.rmax >= 0 && row.size() > static_cast<std::size_t>(a.rmax) + 1) row.resize(a.rmax + 1);
    width = std::max(width, row.size());
    rows.push_back(std::move(row));
  }

  const char* col = stirling_table ? "r" : "k";
  const auto f = c.resolved(Format::md);
  if (f == Format::json) {
    json doc{{"table", a.which}, {"kind", a.kind}};
    if (a.kind == "G") doc["m"] = a.m;
    json jrows = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      json values = json::array();
      for (const auto& v : rows[i]) values.push_back(big_json(v));
      jrows.push_back({{"n", a.nmin + static_cast<int>(i)}, {"values", values}});
    }
    doc["rows"] = jrows;
    out << doc.dump(2) << '\n';
    return kOk;
  }
  Table t;
  if (f == Format::csv) {
    t.header = {"n", col, "value"};
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t r = 0; r < rows[i].size(); ++r)
        t.rows.push_back({std::to_string(a.nmin + i), std::to_string(r), rows[i][r].str()});
  } else {
    out << "## " << (stirling_table ? "Stirling" : "Eulerian") << " numbers, kind " << a.kind;
    if (a.kind == "G") out << ", m=" << a.m;
    out << "\n\n";
    t.header = {std::string("n \\ ") + col};
    for (std::size_t r = 0; r < width; ++r) t.header.push_back(std::to_string(r));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::vector<std::string> cells{std::to_string(a.nmin + i)};
      for (const auto& v : rows[i]) cells.push_back(v.str());
      t.rows.push_back(std::move(cells));
    }
  }
  render(t, f, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string identity;
  int n = -1;
  int nmin = -1;
  int nmax = -1;
  int m = 0;
};

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"thm-1.1", "thm-1.2", "thm-4.1", "thm-4.2",  "cor-4.3", "cor-4.4",
                                              "eq-4",    "thm-5.1", "thm-5.3", "thm-6.9", "thm-6.10", "thm-6.11-report"};
  return names;
}

std::vector<VerificationReport> run_identity(const VerifyArgs& a) {
  const auto& id = a.identity;
  const bool basis = id == "thm-1.2" || id == "thm-5.1" || id == "thm-5.3";
  int nmax = id == "thm-6.9" || id == "thm-6.11-report" ? 4 : id == "thm-6.10" ? 5 : basis ? 8 : 6;
  int nmin = id == "thm-6.11-report" ? 1 : 0;
  if (a.nmax >= 0) nmax = a.nmax;
  if (a.nmin >= 0) nmin = a.nmin;
  if (a.n >= 0) nmin = nmax = a.n;
  if (nmin < 0 || nmax < nmin) throw UsageError("need 0 <= --nmin <= --nmax");
  std::vector<int> colors{2, 3, 4};
  if (a.m != 0) {
    if (a.m < 2) throw UsageError("--m must be at least 2");
    colors = {a.m};
  }

  std::vector<VerificationReport> out;
  if (id == "thm-1.1") out.push_back(verify_stirling_eulerian(IdentityKind::A, nmin, nmax));
  else if (id == "thm-4.1") out.push_back(verify_stirling_eulerian(IdentityKind::B, nmin, nmax));
  else if (id == "thm-4.2") out.push_back(verify_stirling_eulerian(IdentityKind::D, nmin, nmax));
  else if (id == "thm-6.11-report") out.push_back(verify_stirling_eulerian(IdentityKind::Flag, nmin, nmax));
  else if (id == "eq-4") out.push_back(verify_inversion(EulerianKind::A, nmin, nmax));
  else if (id == "cor-4.3") out.push_back(verify_inversion(EulerianKind::B, nmin, nmax));
  else if (id == "cor-4.4") out.push_back(verify_inversion(EulerianKind::D, nmin, nmax));
  else if (id == "thm-1.2") out.push_back(verify_basis(FallingKind::classical, nmin, nmax));
  else if (id == "thm-5.1") out.push_back(verify_basis(FallingKind::B, nmin, nmax));
  else if (id == "thm-5.3") out.push_back(verify_basis(FallingKind::D, nmin, nmax));
  else if (id == "thm-6.9")
    for (int m : colors) out.push_back(verify_stirling_eulerian(IdentityKind::G, nmin, nmax, m));
  else if (id == "thm-6.10")
    for (int m : colors) out.push_back(verify_basis(FallingKind::G, nmin, nmax, m));
  return out;
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  const auto reports = run_identity(a);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  const auto f = c.resolved(Format::md);

  if (f == Format::json) {
    json doc{{"identity", a.identity}, {"passed", passed}, {"reports", json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(text::to_json(r));
    out << doc.dump(2) << '\n';
    return passed ? kOk : kFailure;
  }

  std::vector<std::string> keys;
  for (const auto& r : reports)
    for (const auto& inst : r.instances)
      for (const auto& [k, v] : inst.params)
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  auto row_of = [&](const Instance& inst) {
    std::vector<std::string> cells;
    for (const auto& k : keys) {
      auto it = std::find_if(inst.params.begin(), inst.params.end(), [&](const auto& p) { return p.first == k; });
      cells.push_back(it == inst.params.end() ? "" : it->second);
    }
    cells.insert(cells.end(), {inst.lhs, inst.rhs, to_string(inst.status), inst.note});
    return cells;
  };

  if (f == Format::csv) {
    Table t;
    t.header = {"identity"};
    t.header.insert(t.header.end(), keys.begin(), keys.end());
    t.header.insert(t.header.end(), {"lhs", "rhs", "status", "note"});
    for (const auto& r : reports)
      for (const auto& inst : r.instances) {
        auto cells = row_of(inst);
        cells.insert(cells.begin(), r.identity);
        t.rows.push_back(std::move(cells));
      }
    render(t, f, out);
    return passed ? kOk : kFailure;
  }

  for (const auto& r : reports) {
    out << "## " << r.identity << " (" << r.range << ")\n\n";
    Table t;
    t.header = keys;
    t.header.insert(t.header.end(), {"lhs", "rhs", "status", "note"});
    for (const auto& inst : r.instances) t.rows.push_back(row_of(inst));
    render(t, f, out);
    out << '\n'
        << r.identity << ' ' << r.range << ": " << status_word(r) << " (" << r.count(InstanceStatus::match)
        << " match, " << r.count(InstanceStatus::mismatch) << " mismatch, " << r.count(InstanceStatus::skipped)
        << " skipped)\n\n";
  }
  out << a.identity << ": " << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// forward / inverse

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json read_document(std::istream& in) {
  const auto body = slurp(in);
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("input is not a JSON document: ") + e.what());
  }
}

struct BijectionArgs {
  std::string kind;
  std::optional<std::string> perm;
  std::optional<std::string> spots;
  std::optional<std::string> partition;
};

OrderedSignedPartition forward_transform(PartitionKind kind, const SignedPermutation& p, const SpotSet& spots) {
  return kind == PartitionKind::B ? b_procedure(p, spots) : d_procedure(p, spots);
}

int cmd_forward(const BijectionArgs& a, const Common& c, std::istream& in, std::ostream& out) {
  text::PermutationDocument doc;
  if (a.perm) {
    if (a.kind.empty()) throw UsageError("--perm needs --kind");
    doc.kind = text::partition_kind_from(a.kind);
    doc.permutation = text::parse_signed_permutation(*a.perm);
    doc.spots = a.spots ? text::parse_spots(*a.spots) : SpotSet{};
  } else {
    doc = text::permutation_from_json(read_document(in));
    if (!a.kind.empty() && text::partition_kind_from(a.kind) != doc.kind)
      throw UsageError("--kind disagrees with the document kind");
  }
  const auto lambda = forward_transform(doc.kind, doc.permutation, doc.spots);
  if (c.resolved(Format::json) == Format::md) {
    out << text::format(lambda) << '\n';
  } else {
    out << text::to_json(lambda).dump() << '\n';
  }
  return kOk;
}

int cmd_inverse(const BijectionArgs& a, const Common& c, std::istream& in, std::ostream& out) {
  OrderedSignedPartition lambda;
  if (a.partition) {
    if (a.kind.empty()) throw UsageError("--partition needs --kind");
    lambda = text::parse_ordered(text::partition_kind_from(a.kind), *a.partition);
  } else {
    const auto doc = read_document(in);
    lambda = text::ordered_from_json(doc);
    if (!a.kind.empty() && text::partition_kind_from(a.kind) != lambda.kind())
      throw UsageError("--kind disagrees with the document kind");
  }
  const bool md = c.resolved(Format::json) == Format::md;
  if (lambda.kind() == PartitionKind::B) {
    const auto pre = b_inverse(lambda);
    auto doc = text::to_json(PartitionKind::B, pre.permutation, pre.artificial);
    doc["unreachable"] = false;
    if (md) out << text::format(pre.permutation) << " spots=[" << text::format_spots(pre.artificial) << "]\n";
    else out << doc.dump() << '\n';
    return kOk;
  }
  const auto result = d_inverse(lambda);
  if (const auto* pre = std::get_if<Preimage>(&result)) {
    auto doc = text::to_json(PartitionKind::D, pre->permutation, pre->artificial);
    doc["unreachable"] = false;
    if (md) out << text::format(pre->permutation) << " spots=[" << text::format_spots(pre->artificial) << "]\n";
    else out << doc.dump() << '\n';
    return kOk;
  }
  const auto& u = std::get<UnreachableForm>(result);
  json doc{{"type", "unreachable"},
           {"kind", "D"},
           {"n", lambda.rank()},
           {"unreachable", true},
           {"first_block_singleton", u.first_block_singleton},
           {"negative_parity_odd", u.negative_parity_odd},
           {"partition", text::to_json(u.witness)}};
  if (md) out << "unreachable: " << text::format(u.witness) << '\n';
  else out << doc.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// roundtrip

struct RoundtripArgs {
  std::string kind = "B";
  int n = 5;
  int samples = 1000;
  std::uint64_t seed = 20240601;
};

int cmd_roundtrip(const RoundtripArgs& a, const Common& c, std::ostream& out) {
  if (a.n < 1 || a.samples < 0) throw UsageError("need --n >= 1 and --samples >= 0");
  const auto kind = text::partition_kind_from(a.kind);
  if (kind == PartitionKind::D && a.n < 2) throw UsageError("kind D round trips need --n >= 2");
  const auto flavor = kind == PartitionKind::B ? Flavor::B : Flavor::D;
  std::mt19937_64 rng(a.seed);
  std::bernoulli_distribution coin(0.5);
  int failures = 0;
  std::string first_failure;
  for (int s = 0; s < a.samples; ++s) {
    std::vector<int> w(a.n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    int negatives = 0;
    for (auto& v : w)
      if (coin(rng)) v = -v, ++negatives;
    if (kind == PartitionKind::D && negatives % 2 == 1) w.back() = -w.back();
    const SignedPermutation p(w);
    const auto descents = descent_set(p, flavor);
    SpotSet spots;
    for (int gap = 0; gap < a.n; ++gap)
      if (!descents.contains(gap) && coin(rng)) spots.push_back(gap);

    // Through the structured documents, as a piped forward | inverse would.
    const auto lambda_doc = text::to_json(forward_transform(kind, p, spots));
    const auto lambda = text::ordered_from_json(json::parse(lambda_doc.dump()));
    std::optional<Preimage> back;
    if (kind == PartitionKind::B) {
      back = b_inverse(lambda);
    } else if (auto r = d_inverse(lambda); std::holds_alternative<Preimage>(r)) {
      back = std::get<Preimage>(r);
    }
    if (!back || back->permutation != p || back->artificial != spots) {
      if (failures++ == 0) first_failure = text::format(p) + " spots=[" + text::format_spots(spots) + "]";
    }
  }
  const auto f = c.resolved(Format::md);
  if (f == Format::json) {
    json doc{{"kind", a.kind}, {"n", a.n},       {"samples", a.samples}, {"seed", a.seed},
             {"failures", failures}, {"passed", failures == 0}};
    if (failures) doc["first_failure"] = first_failure;
    out << doc.dump(2) << '\n';
  } else if (f == Format::csv) {
    out << "kind,n,samples,seed,failures\n" << a.kind << ',' << a.n << ',' << a.samples << ',' << a.seed << ','
        << failures << '\n';
  } else {
    out << "roundtrip kind=" << a.kind << " n=" << a.n << " samples=" << a.samples << " seed=" << a.seed << ": "
        << (a.samples - failures) << " ok, " << failures << " failed\n";
    if (failures) out << "first failure: " << first_failure << '\n';
  }
  return failures == 0 ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// census

struct CensusArgs {
  std::string kind = "B";
  int n = 2;
  int m = 3;
  int t = 5;
};

int cmd_census(const CensusArgs& a, const Common& c, std::ostream& out) {
  const std::uint64_t cap = c.cap ? c.cap : kDefaultCensusCap;
  const auto f = c.resolved(Format::md);
  Table t;
  t.header = {"partition", "classes", "points", "expected"};
  bool ok = true;
  BigInt expected_free;
  json doc;

  auto expected_cell = [&](const BigInt& got, const std::optional<BigInt>& want) {
    if (!want) return std::string("-");
    if (got != *want) ok = false;
    return want->str();
  };

  if (a.kind == "G") {
    const auto r = torus_census(a.n, a.m, a.t, cap);
    const int x = a.m * a.t + 1;
    expected_free = falling_factorial(FallingKind::G, a.n, 0, a.m)(x);
    for (const auto& pc : r.counts) {
      const BigInt want = falling_factorial(FallingKind::G, pc.partition.orbit_count(), 0, a.m)(x);
      t.rows.push_back({text::format(pc.partition), std::to_string(pc.partition.orbit_count()), pc.count.str(),
                        expected_cell(pc.count, want)});
    }
    ok = ok && r.free_points == expected_free && r.total == power(x, a.n);
    doc = text::to_json(r);
    if (f == Format::md)
      out << "## Torus census m=" << a.m << " t=" << a.t << " n=" << a.n << " (x=" << x << ")\n\n";
    t.rows.push_back({"total", "", r.total.str(), power(x, a.n).str()});
    t.rows.push_back({"free", "", r.free_points.str(), expected_free.str()});
  } else {
    const auto kind = a.kind == "B" ? ArrangementKind::B : ArrangementKind::D;
    const auto r = census(kind, a.n, a.m, cap);
    const int x = 2 * a.m + 1;
    expected_free = kind == ArrangementKind::B ? falling_factorial(FallingKind::B, a.n)(x)
                                               : falling_factorial(FallingKind::D, a.n, a.n)(x);
    for (const auto& pc : r.counts) {
      std::optional<BigInt> want;
      if (kind == ArrangementKind::B) want = falling_factorial(FallingKind::B, pc.partition.pair_count())(x);
      t.rows.push_back({text::format(pc.partition), std::to_string(pc.partition.pair_count()), pc.count.str(),
                        expected_cell(pc.count, want)});
    }
    ok = ok && r.free_points == expected_free && r.total == power(x, a.n);
    doc = text::to_json(r);
    if (f == Format::md)
      out << "## Cube census kind " << a.kind << " n=" << a.n << " (x=" << x << ")\n\n";
    t.rows.push_back({"total", "", r.total.str(), power(x, a.n).str()});
    t.rows.push_back({"free", "", r.free_points.str(), expected_free.str()});
    if (kind == ArrangementKind::D) t.rows.push_back({"missing", "", r.missing_points.str(), "-"});
  }

  if (f == Format::json) {
    doc["expected_free_points"] = big_json(expected_free);
    doc["consistent"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    render(t, f, out);
    if (f == Format::md) out << '\n' << (ok ? "consistent" : "INCONSISTENT") << '\n';
  }
  return ok ? kOk : kFailure;
}

// ---------------------------------------------------------------------------
// oeis

struct OeisArgs {
  std::string seq;
  std::string fixture;
  bool fetch = false;
  int nmax = 6;
};

int cmd_oeis(const OeisArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  if (a.fixture.empty() == !a.fetch) throw UsageError("give exactly one of --fixture PATH or --fetch");
  if (a.nmax < 0) throw UsageError("--nmax must be non-negative");
  oeis::sequence(a.seq);
  oeis::BFile bfile;
  std::string source;
  if (a.fetch) {
    std::istringstream body(oeis::fetch_bfile(a.seq));
    bfile = oeis::parse_bfile(body);
    source = oeis::base_url() + oeis::bfile_path(a.seq);
  } else {
    std::ifstream probe(a.fixture);
    if (!probe) throw UsageError("cannot open fixture " + a.fixture);
    bfile = oeis::parse_bfile(probe);
    source = a.fixture;
  }
  const auto computed = oeis::linearize(a.seq, a.nmax);
  const auto cmp = oeis::compare(bfile, computed);
  if (cmp.compared < computed.size())
    err << "warning: b-file holds only " << cmp.compared << " of " << computed.size() << " terms for n <= " << a.nmax
        << '\n';
  const bool ok = cmp.matched() && cmp.compared == computed.size();

  const auto f = c.resolved(Format::md);
  if (f == Format::json) {
    json doc{{"sequence", a.seq}, {"source", source}, {"nmax", a.nmax}, {"compared", cmp.compared}, {"match", ok}};
    if (auto it = bfile.metadata.find("linearization"); it != bfile.metadata.end()) doc["linearization"] = it->second;
    if (cmp.first_mismatch) {
      doc["first_mismatch"] = *cmp.first_mismatch;
      doc["expected"] = big_json(cmp.expected);
      doc["found"] = big_json(cmp.found);
    }
    out << doc.dump(2) << '\n';
  } else if (f == Format::csv) {
    out << "sequence,compared,match,first_mismatch,expected,found\n"
        << a.seq << ',' << cmp.compared << ',' << (ok ? "true" : "false") << ','
        << (cmp.first_mismatch ? std::to_string(*cmp.first_mismatch) : "") << ','
        << (cmp.first_mismatch ? cmp.expected.str() : "") << ',' << (cmp.first_mismatch ? cmp.found.str() : "")
        << '\n';
  } else {
    out << a.seq << " (" << oeis::sequence(a.seq).triangle << ", n <= " << a.nmax << ") against " << source << ": ";
    if (cmp.first_mismatch)
      out << "mismatch at index " << *cmp.first_mismatch << ": b-file has " << cmp.found << ", computed "
          << cmp.expected << '\n';
    else
      out << (ok ? "match" : "incomplete") << " (" << cmp.compared << " terms)\n";
  }
  return ok ? kOk : kFailure;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::BadIndex:
    case ErrorCode::SizeOverflow:
    case ErrorCode::InvalidColorCount:
      return kUsage;
    default:
      return kFailure;
  }
}

struct CapReset {
  ~CapReset() {
    set_group_cap(0);
    set_partition_cap(0);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type B/D/G Stirling and Eulerian numbers: tables, identity checks, bijections, censuses"};
  app.name("stirbd");
  app.require_subcommand(1);

  Common common;

  TablesArgs tables;
  auto* t = app.add_subcommand("tables", "print a Stirling or Eulerian triangle");
  t->add_option("which", tables.which, "stirling or eulerian")->required()->check(CLI::IsMember({"stirling", "eulerian"}));
  t->add_option("--kind", tables.kind)->check(CLI::IsMember({"A", "B", "D", "G", "Bstar"}));
  t->add_option("--nmin", tables.nmin);
  t->add_option("--n,--nmax", tables.nmax);
  t->add_option("--m", tables.m, "colors for kind G");
  t->add_option("--r,--rmax", tables.rmax, "last column");
  add_common(t, common);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check an identity over a range");
  v->add_option("--identity", verify.identity)->required()->check(CLI::IsMember(identity_names()));
  v->add_option("--n", verify.n, "single rank");
  v->add_option("--nmin", verify.nmin);
  v->add_option("--nmax", verify.nmax);
  v->add_option("--m", verify.m, "colors (default: 2, 3 and 4)");
  add_common(v, common);

  BijectionArgs fwd;
  auto* f = app.add_subcommand("forward", "B- or D-procedure on a permutation and artificial spots");
  f->add_option("--kind", fwd.kind)->check(CLI::IsMember({"B", "D"}));
  f->add_option("--perm", fwd.perm, "window, e.g. \"-2,3,5,1,-4\"");
  f->add_option("--spots", fwd.spots, "artificial separator gaps, e.g. \"0,2\"");
  add_common(f, common);

  BijectionArgs inv;
  auto* i = app.add_subcommand("inverse", "recover the permutation and spots from an ordered partition");
  i->add_option("--kind", inv.kind)->check(CLI::IsMember({"B", "D"}));
  i->add_option("--partition", inv.partition, "block sequence, e.g. \"[{-1},{1},{2},{-2}]\"");
  add_common(i, common);

  RoundtripArgs rt;
  auto* r = app.add_subcommand("roundtrip", "random forward/inverse round trips through the JSON documents");
  r->add_option("--kind", rt.kind)->check(CLI::IsMember({"B", "D"}));
  r->add_option("--n", rt.n);
  r->add_option("--samples", rt.samples);
  r->add_option("--seed", rt.seed);
  add_common(r, common);

  CensusArgs cen;
  auto* cs = app.add_subcommand("census", "lattice point census of the B/D cube or the colored torus");
  cs->add_option("--kind", cen.kind)->check(CLI::IsMember({"B", "D", "G"}));
  cs->add_option("--n", cen.n);
  cs->add_option("--m", cen.m, "half-width h (x = 2h+1) for B/D, colors for G");
  cs->add_option("--t", cen.t, "points per colored arc (x = m t + 1)");
  add_common(cs, common);

  OeisArgs oe;
  auto* o = app.add_subcommand("oeis", "compare a computed triangle with an OEIS b-file");
  o->add_option("--seq", oe.seq)->required()->check(CLI::IsMember({"A039755", "A039760"}));
  auto* fixture = o->add_option("--fixture", oe.fixture, "local b-file");
  o->add_flag("--fetch", oe.fetch, "download the b-file (base URL from STIRBD_OEIS_URL)")->excludes(fixture);
  o->add_option("--n,--nmax", oe.nmax);
  add_common(o, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  CapReset reset;
  try {
    if (common.cap != 0) {
      const std::uint64_t default_cap = cs->parsed() ? kDefaultCensusCap : kDefaultColoredCap;
      if (common.cap > default_cap && !common.allow_large)
        throw UsageError("--cap above the default " + std::to_string(default_cap) + " needs --allow-large");
      set_group_cap(common.cap);
      set_partition_cap(common.cap);
    }
    if (t->parsed()) return cmd_tables(tables, common, out);
    if (v->parsed()) return cmd_verify(verify, common, out);
    if (f->parsed()) return cmd_forward(fwd, common, in, out);
    if (i->parsed()) return cmd_inverse(inv, common, in, out);
    if (r->parsed()) return cmd_roundtrip(rt, common, out);
    if (cs->parsed()) return cmd_census(cen, common, out);
    if (o->parsed()) return cmd_oeis(oe, common, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const oeis::FetchError& e) {
    err << "fetch failed: " << e.what() << '\n';
    return kFetch;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::SizeOverflow) err << "raise the limit with --cap N --allow-large\n";
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace stirbd::cli
