#include "stirbd/text.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "stirbd/error.hpp"

namespace stirbd::text {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

int parse_int(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    parse_error("not an integer: '" + std::string(token) + "'");
  return value;
}

template <class T, class F>
std::string join(const std::vector<T>& items, const char* sep, F&& render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += render(items[i]);
  }
  return out;
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::vector<int> int_array(const json& j, const char* field) {
  if (!j.contains(field)) return {};
  if (!j.at(field).is_array()) parse_error(std::string("field '") + field + "' must be an array");
  std::vector<int> out;
  for (const auto& v : j.at(field)) {
    if (!v.is_number_integer()) parse_error(std::string("field '") + field + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<SignedBlock> block_array(const json& j) {
  if (!j.contains("blocks") || !j.at("blocks").is_array()) parse_error("document needs a 'blocks' array");
  std::vector<SignedBlock> out;
  for (const auto& b : j.at("blocks")) {
    if (!b.is_array()) parse_error("each block must be an array");
    SignedBlock block;
    for (const auto& v : b) {
      if (!v.is_number_integer()) parse_error("block entries must be integers");
      block.push_back(v.get<int>());
    }
    out.push_back(std::move(block));
  }
  return out;
}

int required_int(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) parse_error(std::string("document needs integer '") + field + "'");
  return j.at(field).get<int>();
}

PartitionKind kind_field(const json& j) {
  if (!j.contains("kind") || !j.at("kind").is_string()) parse_error("document needs a 'kind' string");
  return partition_kind_from(j.at("kind").get<std::string>());
}

}  // namespace

std::vector<int> parse_int_list(std::string_view s) {
  s = trim(s);
  std::vector<int> out;
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

SignedPermutation parse_signed_permutation(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  return SignedPermutation(parse_int_list(s));
}

ColoredPermutation parse_colored_permutation(std::string_view s, int colors) {
  s = trim(s);
  std::vector<ColoredEntry> entries;
  if (!s.empty()) {
    while (true) {
      const auto comma = s.find(',');
      const auto token = trim(s.substr(0, comma));
      const auto caret = token.find('^');
      if (caret == std::string_view::npos) {
        entries.push_back({parse_int(token), 0});
      } else {
        entries.push_back({parse_int(token.substr(0, caret)), parse_int(token.substr(caret + 1))});
      }
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
  }
  return ColoredPermutation(colors, std::move(entries));
}

SpotSet parse_spots(std::string_view s) {
  auto spots = parse_int_list(s);
  std::sort(spots.begin(), spots.end());
  return spots;
}

std::vector<SignedBlock> parse_block_list(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') parse_error("unbalanced brackets");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<SignedBlock> out;
  while (true) {
    s = trim(s);
    if (s.empty()) break;
    if (s.front() == ',') {
      s.remove_prefix(1);
      continue;
    }
    if (s.front() != '{') parse_error("expected '{' in block list");
    const auto close = s.find('}');
    if (close == std::string_view::npos) parse_error("unterminated block");
    out.push_back(parse_int_list(s.substr(1, close - 1)));
    s.remove_prefix(close + 1);
  }
  return out;
}

OrderedSignedPartition parse_ordered(PartitionKind kind, std::string_view s, int n) {
  const auto blocks = parse_block_list(s);
  if (n < 0) {
    n = 0;
    for (const auto& b : blocks)
      for (int v : b) n = std::max(n, std::abs(v));
  }
  return OrderedSignedPartition::from_blocks(kind, n, blocks);
}

std::string format(const SignedPermutation& p) {
  std::vector<int> w(p.window().begin(), p.window().end());
  return join(w, ",", [](int v) { return std::to_string(v); });
}

std::string format(const ColoredPermutation& p) {
  std::vector<ColoredEntry> e(p.entries().begin(), p.entries().end());
  return join(e, ",", [](const ColoredEntry& c) { return std::to_string(c.value) + "^" + std::to_string(c.color); });
}

std::string format_spots(const SpotSet& s) {
  return join(s, ",", [](int v) { return std::to_string(v); });
}

std::string format(const SignedBlock& b) {
  return "{" + join(b, ",", [](int v) { return std::to_string(v); }) + "}";
}

std::string format(const ColoredBlock& b) {
  return "{" + join(b, ",", [](const ColoredEntry& c) { return std::to_string(c.value) + "^" + std::to_string(c.color); }) +
         "}";
}

std::string format(const SignedPartition& p) {
  std::vector<std::string> parts;
  if (p.has_zero_block()) parts.push_back("Z" + format(SignedBlock(p.zero_support())));
  for (const auto& c : p.pairs()) parts.push_back(format(c));
  if (parts.empty()) return "{}";
  return join(parts, " | ", [](const std::string& s) { return s; });
}

std::string format(const ColoredPartition& p) {
  std::vector<std::string> parts;
  if (p.has_zero_block()) parts.push_back("Z" + format(SignedBlock(p.zero_support())));
  for (const auto& c : p.orbits()) parts.push_back(format(c));
  if (parts.empty()) return "{}";
  return join(parts, " | ", [](const std::string& s) { return s; });
}

std::string format(const OrderedSignedPartition& p) {
  const auto blocks = p.blocks();
  return "[" + join(blocks, ",", [](const SignedBlock& b) { return format(b); }) + "]";
}

char kind_letter(PartitionKind kind) { return kind == PartitionKind::B ? 'B' : 'D'; }

PartitionKind partition_kind_from(std::string_view letter) {
  if (letter == "B" || letter == "b") return PartitionKind::B;
  if (letter == "D" || letter == "d") return PartitionKind::D;
  parse_error("kind must be B or D, got '" + std::string(letter) + "'");
}

json to_json(PartitionKind kind, const SignedPermutation& p, const SpotSet& spots) {
  return json{{"type", "permutation"},
              {"kind", std::string(1, kind_letter(kind))},
              {"n", p.size()},
              {"window", std::vector<int>(p.window().begin(), p.window().end())},
              {"spots", spots},
              {"text", format(p)}};
}

json to_json(const OrderedSignedPartition& p) {
  return json{{"type", "ordered_partition"},
              {"kind", std::string(1, kind_letter(p.kind()))},
              {"n", p.rank()},
              {"has_zero_block", p.has_zero_block()},
              {"pairs", p.pair_count()},
              {"blocks", p.blocks()},
              {"text", format(p)}};
}

json to_json(const SignedPartition& p) {
  return json{{"type", "partition"},
              {"kind", std::string(1, kind_letter(p.kind()))},
              {"n", p.rank()},
              {"zero_support", p.zero_support()},
              {"blocks", p.pairs()},
              {"text", format(p)}};
}

json to_json(const ColoredPartition& p) {
  json blocks = json::array();
  for (const auto& orbit : p.orbits()) {
    json b = json::array();
    for (const auto& e : orbit) b.push_back({e.value, e.color});
    blocks.push_back(std::move(b));
  }
  return json{{"type", "partition"},  {"kind", "G"},         {"n", p.rank()},
              {"m", p.colors()},      {"zero_support", p.zero_support()},
              {"blocks", blocks},     {"text", format(p)}};
}

json to_json(const VerificationReport& r) {
  json instances = json::array();
  for (const auto& inst : r.instances) {
    json params = json::object();
    for (const auto& [k, v] : inst.params) params[k] = v;
    json item{{"params", params}, {"lhs", inst.lhs}, {"rhs", inst.rhs}, {"status", to_string(inst.status)}};
    if (!inst.note.empty()) item["note"] = inst.note;
    instances.push_back(std::move(item));
  }
  return json{{"identity", r.identity},
              {"range", r.range},
              {"asserted", r.asserted},
              {"passed", r.passed()},
              {"matched", r.count(InstanceStatus::match)},
              {"mismatched", r.count(InstanceStatus::mismatch)},
              {"skipped", r.count(InstanceStatus::skipped)},
              {"instances", instances}};
}

json to_json(const CensusResult& c) {
  json counts = json::array();
  for (const auto& pc : c.counts)
    counts.push_back({{"partition", format(pc.partition)}, {"pairs", pc.partition.pair_count()}, {"count", big_json(pc.count)}});
  return json{{"kind", c.kind == ArrangementKind::B ? "B" : "D"},
              {"n", c.n},
              {"x", big_json(c.x)},
              {"counts", counts},
              {"free_points", big_json(c.free_points)},
              {"missing_points", big_json(c.missing_points)},
              {"total", big_json(c.total)}};
}

json to_json(const TorusCensusResult& c) {
  json counts = json::array();
  for (const auto& pc : c.counts)
    counts.push_back({{"partition", format(pc.partition)}, {"classes", pc.partition.orbit_count()}, {"count", big_json(pc.count)}});
  return json{{"kind", "G"},
              {"n", c.n},
              {"m", c.colors},
              {"t", c.magnitudes},
              {"x", big_json(c.x)},
              {"counts", counts},
              {"free_points", big_json(c.free_points)},
              {"total", big_json(c.total)}};
}

PermutationDocument permutation_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("permutation document must be an object");
  PermutationDocument out;
  out.kind = kind_field(doc);
  if (!doc.contains("window")) parse_error("permutation document needs 'window'");
  out.permutation = SignedPermutation(int_array(doc, "window"));
  out.spots = int_array(doc, "spots");
  std::sort(out.spots.begin(), out.spots.end());
  return out;
}

OrderedSignedPartition ordered_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("ordered partition document must be an object");
  return OrderedSignedPartition::from_blocks(kind_field(doc), required_int(doc, "n"), block_array(doc));
}

SignedPartition partition_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("partition document must be an object");
  const auto kind = kind_field(doc);
  const int n = required_int(doc, "n");
  std::vector<SignedBlock> raw;
  SignedBlock zero;
  for (int v : int_array(doc, "zero_support")) {
    zero.push_back(v);
    zero.push_back(-v);
  }
  if (!zero.empty()) raw.push_back(std::move(zero));
  for (auto& c : block_array(doc)) {
    raw.push_back(negate_block(c));
    raw.push_back(std::move(c));
  }
  return validate_signed(kind, n, raw);
}

ColoredPartition colored_partition_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("partition document must be an object");
  const int n = required_int(doc, "n");
  const int m = required_int(doc, "m");
  std::vector<ColoredBlock> raw;
  ColoredBlock zero;
  for (int v : int_array(doc, "zero_support"))
    for (int z = 0; z < m; ++z) zero.push_back({v, z});
  if (!zero.empty()) raw.push_back(std::move(zero));
  if (!doc.contains("blocks") || !doc.at("blocks").is_array()) parse_error("document needs a 'blocks' array");
  for (const auto& b : doc.at("blocks")) {
    ColoredBlock block;
    for (const auto& e : b) {
      if (!e.is_array() || e.size() != 2) parse_error("colored entries are [value, color] pairs");
      block.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    }
    for (int s = 0; s < m; ++s) raw.push_back(shift_block(block, s, m));
  }
  return validate_colored(n, m, raw);
}

}  // namespace stirbd::text
