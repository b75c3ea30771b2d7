#include "stirbd/oeis.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "httplib.h"
#include "stirbd/error.hpp"
#include "stirbd/partitions.hpp"

namespace stirbd::oeis {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      const auto comment = trim(line.substr(hash + 1));
      const auto colon = comment.find(':');
      if (colon != std::string::npos && colon > 0 && comment.find(' ') > colon)
        out.metadata[comment.substr(0, colon)] = trim(comment.substr(colon + 1));
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream fields(line);
    long index = 0;
    std::string value, extra;
    if (!(fields >> index >> value) || (fields >> extra))
      throw Error(ErrorCode::ParseError, "b-file line " + std::to_string(line_no) + " is not 'index value'");
    try {
      out.terms.emplace_back(index, BigInt(value));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "b-file line " + std::to_string(line_no) + " has a bad value");
    }
  }
  return out;
}

BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open b-file " + path);
  return parse_bfile(in);
}

const SequenceInfo& sequence(const std::string& id) {
  static const SequenceInfo b{"A039755", "S_B"};
  static const SequenceInfo d{"A039760", "S_D"};
  if (id == b.id) return b;
  if (id == d.id) return d;
  throw Error(ErrorCode::BadIndex, "unsupported sequence " + id + " (expected A039755 or A039760)");
}

std::vector<BigInt> linearize(const std::string& id, int nmax) {
  const auto kind = sequence(id).triangle == "S_B" ? StirlingKind::B : StirlingKind::D;
  std::vector<BigInt> out;
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k) out.push_back(stirling(kind, n, k));
  return out;
}

Comparison compare(const BFile& bfile, const std::vector<BigInt>& computed) {
  Comparison c;
  if (bfile.terms.empty()) return c;
  const long offset = bfile.terms.front().first;
  for (std::size_t i = 0; i < bfile.terms.size() && i < computed.size(); ++i) {
    const auto& [index, value] = bfile.terms[i];
    if (index != offset + static_cast<long>(i))
      throw Error(ErrorCode::ParseError, "b-file indices are not consecutive at " + std::to_string(index));
    ++c.compared;
    if (value != computed[i]) {
      c.first_mismatch = index;
      c.expected = computed[i];
      c.found = value;
      break;
    }
  }
  return c;
}

std::string base_url() {
  const char* env = std::getenv("STIRBD_OEIS_URL");
  std::string url = env && *env ? env : "https://oeis.org";
  while (!url.empty() && url.back() == '/') url.pop_back();
  return url;
}

std::string bfile_path(const std::string& id) {
  sequence(id);
  return "/" + id + "/b" + id.substr(1) + ".txt";
}

std::string fetch_bfile(const std::string& id) {
  const auto path = bfile_path(id);
  const auto base = base_url();
  try {
    httplib::Client client(base);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) throw FetchError("fetching " + base + path + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200) throw FetchError("fetching " + base + path + " returned HTTP " + std::to_string(res->status));
    return res->body;
  } catch (const FetchError&) {
    throw;
  } catch (const std::exception& e) {
    throw FetchError("fetching " + base + path + " failed: " + e.what());
  }
}

}  // namespace stirbd::oeis
