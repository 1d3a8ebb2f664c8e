#include "hyperdisc/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hyperdisc {

namespace {

[[noreturn]] void fail(std::string_view name, int line, const std::string& msg) {
  throw input_error(std::string(name) + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_int(std::string_view tok, std::string_view name, int line,
              const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.begin(), tok.end(), value);
  if (ec != std::errc{} || ptr != tok.end())
    fail(name, line, std::string("expected ") + what + ", got '" +
                         std::string(tok) + "'");
  return value;
}

double parse_double(std::string_view tok, std::string_view name, int line) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.begin(), tok.end(), value);
  if (ec != std::errc{} || ptr != tok.end() || !std::isfinite(value))
    fail(name, line, "expected a finite weight, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Weighting parse_weighting_text(std::string_view text, std::string_view name) {
  std::vector<double> weights;
  std::vector<bool> listed;
  int n = -1, k = -1;
  int line_no = 0;
  std::size_t pos = 0;
  std::vector<int> verts;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (n < 0) {  // header
      if (tokens.size() != 2)
        fail(name, line_no, "header must be 'n k'");
      n = parse_int(tokens[0], name, line_no, "vertex count n");
      k = parse_int(tokens[1], name, line_no, "arity k");
      try {
        Weighting probe(n, k);
        weights.assign(probe.weights().size(), 0.0);
      } catch (const input_error& e) {
        fail(name, line_no, e.what());
      }
      listed.assign(weights.size(), false);
      continue;
    }

    if (static_cast<int>(tokens.size()) != k + 1)
      fail(name, line_no, "expected " + std::to_string(k) +
                              " vertices and a weight (" +
                              std::to_string(k + 1) + " tokens), got " +
                              std::to_string(tokens.size()));
    verts.clear();
    for (int t = 0; t < k; ++t) {
      int v = parse_int(tokens[t], name, line_no, "a vertex");
      if (v < 1 || v > n)
        fail(name, line_no, "vertex " + std::to_string(v) +
                                " outside [1, " + std::to_string(n) + "]");
      verts.push_back(v - 1);
    }
    for (int t = 1; t < k; ++t)
      if (verts[t] <= verts[t - 1])
        fail(name, line_no, "vertices must be strictly increasing");
    double weight = parse_double(tokens[k], name, line_no);
    std::int64_t r = rank_kset(verts, n);
    if (listed[static_cast<std::size_t>(r)])
      fail(name, line_no, "edge listed twice");
    listed[static_cast<std::size_t>(r)] = true;
    weights[static_cast<std::size_t>(r)] = weight;
  }
  if (n < 0)
    throw input_error(std::string(name) + ": missing 'n k' header");
  return Weighting(n, k, std::move(weights));
}

Weighting parse_weighting(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_weighting_text(buf.str(), path.string());
}

void write_weighting(const Weighting& w, std::ostream& out) {
  out << w.n() << ' ' << w.k() << '\n';
  char num[64];
  for_each_kset(w.n(), w.k(), [&](std::span<const int> f, std::int64_t r) {
    const double x = w[r];
    if (x == 0.0 && !std::signbit(x)) return;
    for (int v : f) out << (v + 1) << ' ';
    auto [end, ec] = std::to_chars(num, num + sizeof num, x);
    out.write(num, end - num);
    out << '\n';
  });
}

void write_weighting(const Weighting& w, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw input_error("cannot write '" + path.string() + "'");
  write_weighting(w, out);
  out.flush();
  if (!out)
    throw input_error("failed while writing '" + path.string() + "'");
}

}  // namespace hyperdisc
