#include "hypermatch/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hypermatch/errors.hpp"

namespace hypermatch {
namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + i)
      throw ParseError("line " + std::to_string(line_no) + ": expected an unsigned integer");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

KGraph parse_kgraph(std::string_view text) {
  bool have_header = false;
  std::uint32_t k = 0, n = 0;
  std::vector<Vertex> flat;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    auto nums = parse_numbers(line, line_no);
    if (nums.empty()) continue;
    if (!have_header) {
      if (nums.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": header must be \"k n\"");
      k = static_cast<std::uint32_t>(nums[0]);
      n = static_cast<std::uint32_t>(nums[1]);
      if (k == 0) throw ParseError("uniformity must be positive");
      have_header = true;
      continue;
    }
    if (nums.size() != k)
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(k) + " vertices");
    for (std::size_t j = 0; j < k; ++j) {
      if (nums[j] < 1 || nums[j] > n) throw ParseError("line " + std::to_string(line_no) + ": vertex out of range");
      if (j > 0 && nums[j] <= nums[j - 1]) throw ParseError("line " + std::to_string(line_no) + ": vertices not strictly ascending");
      flat.push_back(static_cast<Vertex>(nums[j]));
    }
  }
  if (!have_header) throw ParseError("missing \"k n\" header");
  try {
    return KGraph::from_flat(n, k, std::move(flat));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

KGraph read_kgraph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_kgraph(text);
}

KGraph load_kgraph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_kgraph(in);
}

void write_kgraph(std::ostream& out, const KGraph& h) {
  out << h.k() << ' ' << h.n() << '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out << ' ';
      out << e[j];
    }
    out << '\n';
  }
}

std::string serialize(const KGraph& h) {
  std::ostringstream out;
  write_kgraph(out, h);
  return out.str();
}

}  // namespace hypermatch
