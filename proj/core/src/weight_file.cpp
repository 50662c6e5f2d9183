#include "bngap/weight_file.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bngap {

namespace {

[[noreturn]] void fail(const std::string& what, int line) {
  throw WeightParseError(what + " at line " + std::to_string(line));
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) fail("malformed integer", line);
  return value;
}

double parse_weight(const std::string& tok, int line) {
  double value = 0.0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) fail("malformed weight", line);
  if (!std::isfinite(value)) fail("malformed weight", line);
  if (value < 0.0) fail("negative weight", line);
  return value;
}

}  // namespace

WeightFile parse_weight_file(const std::string& text) {
  WeightFile wf;
  bool have_n = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& tag = tokens[0];
    if (tag == "n") {
      if (have_n) fail("duplicate n header", line_no);
      if (tokens.size() != 2) fail("malformed n header", line_no);
      const int n = parse_int(tokens[1], line_no);
      if (n < 1 || n > max_rank) fail("n out of range", line_no);
      wf.n = n;
      have_n = true;
    } else if (tag == "T") {
      if (!have_n) fail("weight line before n header", line_no);
      if (tokens.size() != 4) fail("malformed transposition line", line_no);
      const int i = parse_int(tokens[1], line_no);
      const int j = parse_int(tokens[2], line_no);
      if (i < 1 || j < 1 || i > wf.n || j > wf.n || i >= j)
        fail("transposition index out of range", line_no);
      wf.transpositions[{i, j}] += parse_weight(tokens[3], line_no);
    } else if (tag == "D") {
      if (!have_n) fail("weight line before n header", line_no);
      if (tokens.size() != 3) fail("malformed diagonal line", line_no);
      const std::string& bits = tokens[1];
      if (static_cast<int>(bits.size()) != wf.n)
        fail("bitstring length mismatch", line_no);
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1')
          mask |= std::uint32_t{1} << j;
        else if (bits[j] != '0')
          fail("malformed bitstring", line_no);
      }
      wf.diagonals[mask] += parse_weight(tokens[2], line_no);
    } else {
      fail("unknown directive", line_no);
    }
  }
  if (!have_n) throw WeightParseError("missing n header");
  return wf;
}

std::string format_weight_file(const WeightFile& wf,
                               const std::vector<std::string>& comments) {
  check_rank(wf.n);
  std::string out;
  for (const std::string& c : comments) out += "# " + c + "\n";
  out += "n " + std::to_string(wf.n) + "\n";
  char buf[64];
  for (const auto& [ij, w] : wf.transpositions) {
    std::snprintf(buf, sizeof(buf), "T %d %d %.17g", ij.first, ij.second, w);
    out += buf;
    out += '\n';
  }
  for (const auto& [mask, w] : wf.diagonals) {
    std::snprintf(buf, sizeof(buf), "D %s %.17g",
                  to_bitstring(SubsetMask(wf.n, mask)).c_str(), w);
    out += buf;
    out += '\n';
  }
  return out;
}

GroupRingElement to_element(const WeightFile& wf) {
  check_rank(wf.n);
  std::map<SubsetMask, double> diagonals;
  for (const auto& [mask, w] : wf.diagonals)
    diagonals.emplace(SubsetMask(wf.n, mask), w);
  return build_weight_element(wf.n, wf.transpositions, diagonals);
}

WeightFile to_weight_file(const WitnessSpec& spec) {
  WeightFile wf;
  wf.n = spec.n;
  wf.transpositions = spec.transposition_weights;
  for (const auto& [set, w] : spec.diagonal_weights)
    wf.diagonals[set.bits] = w;
  return wf;
}

}  // namespace bngap
