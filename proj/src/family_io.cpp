#include "crossint/family_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crossint {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("family file line " + std::to_string(line) + ": " + what);
}

int parse_int(std::string_view s, int line) {
  s = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    fail(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::optional<int> parse_header(std::string_view s, char key, int line) {
  if (s.size() < 2 || s[0] != key || s[1] != '=') return std::nullopt;
  return parse_int(s.substr(2), line);
}

}  // namespace

Family read_family(std::istream& in) {
  std::optional<int> n;
  std::optional<int> k;
  bool k_allowed = true;
  std::vector<SetWord> members;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    if (!n) {
      n = parse_header(s, 'n', line);
      if (!n) fail(line, "expected 'n=<int>' header");
      if (*n < 0 || *n > kMaxGround) fail(line, "n must be in [0, 64]");
      continue;
    }
    if (k_allowed) {
      k_allowed = false;
      if ((k = parse_header(s, 'k', line))) continue;
    }
    if (s == "{}") {
      members.emplace_back();
      continue;
    }
    std::vector<int> elems;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto comma = s.find(',', pos);
      const auto end = comma == std::string_view::npos ? s.size() : comma;
      elems.push_back(parse_int(s.substr(pos, end - pos), line));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    for (std::size_t i = 1; i < elems.size(); ++i)
      if (elems[i] <= elems[i - 1]) fail(line, "elements must be strictly increasing");
    try {
      members.push_back(SetWord::make(elems, *n));
    } catch (const std::invalid_argument& e) {
      fail(line, e.what());
    }
  }
  if (!n) throw std::runtime_error("family file: missing 'n=<int>' header");
  try {
    return Family::from_distinct(*n, std::move(members), k);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("family file: ") + e.what());
  }
}

Family parse_family(const std::string& text) {
  std::istringstream in(text);
  return read_family(in);
}

void write_family(std::ostream& out, const Family& f, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "n=" << f.n() << '\n';
  if (f.uniformity()) out << "k=" << *f.uniformity() << '\n';
  for (SetWord s : f) out << s.to_string() << '\n';
}

std::string format_family(const Family& f, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_family(out, f, comments);
  return out.str();
}

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_family(in);
}

void save_family(const std::string& path, const Family& f,
                 const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_family(out, f, comments);
}

}  // namespace crossint
