#include "posetlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "posetlab/cubes.hpp"
#include "posetlab/errors.hpp"

namespace posetlab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Content lines with comments ('#' to end of line) and blanks removed.
std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number for " + what + ", got '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

struct Query {
  std::string name;
  std::map<std::string, std::string> params;

  explicit Query(const std::string& source) {
    auto q = source.find('?');
    name = source.substr(0, q);
    if (q == std::string::npos) return;
    for (const auto& kv : split(source.substr(q + 1), '&')) {
      if (kv.empty()) continue;
      auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw ParseError("expected key=value in '" + kv + "'");
      params[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
    }
  }

  std::string get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
      throw ParseError("'" + name + "' requires parameter '" + key + "'");
    return it->second;
  }

  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }

  long long get_int(const std::string& key) const {
    return parse_int(get(key), key);
  }
};

std::uint64_t parse_subset(const std::string& s, int ground) {
  if (s == "-") return 0;
  std::uint64_t mask = 0;
  for (const auto& part : split(s, ',')) {
    long long e = parse_int(trim(part), "a set element");
    if (e < 0 || e >= ground)
      throw ParseError("element " + std::to_string(e) +
                       " outside the ground set");
    mask |= 1ull << e;
  }
  return mask;
}

std::string subset_csv(std::uint64_t mask) {
  if (!mask) return "-";
  std::string out;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    if (!out.empty()) out += ',';
    out += std::to_string(__builtin_ctzll(m));
  }
  return out;
}

}  // namespace

Poset parse_poset_text(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty poset description");
  const std::string& head = lines.front();
  if (head.rfind("n=", 0) != 0)
    throw ParseError("poset description must start with 'n=<count>'");
  long long n = parse_int(head.substr(2), "n");
  if (n < 0 || n > Poset::kHardCapacity)
    throw ParseError("poset size out of range");
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto lt = lines[i].find('<');
    if (lt == std::string::npos)
      throw ParseError("expected a cover pair 'i<j', got '" + lines[i] + "'");
    long long a = parse_int(trim(lines[i].substr(0, lt)), "a cover pair");
    long long b = parse_int(trim(lines[i].substr(lt + 1)), "a cover pair");
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ParseError("cover pair element outside [0, n) in '" + lines[i] +
                       "'");
    covers.emplace_back(int(a), int(b));
  }
  return poset_from_covers(int(n), covers, {}, std::max<int>(int(n), 1));
}

std::string serialize_poset(const Poset& p) {
  std::ostringstream out;
  out << "n=" << p.size() << "\n";
  auto cov = p.covers();
  std::sort(cov.begin(), cov.end());
  for (auto [a, b] : cov) out << a << "<" << b << "\n";
  return out.str();
}

Poset poset_from_source(const std::string& source) {
  Query q(source);
  if (q.name == "bm") {
    long long m = q.get_int("m"), r = q.get_int("r");
    auto spec = CubeSpec::up_to(int(m), int(r));
    return build_cube(spec, std::max(spec.element_count(), 1));
  }
  if (q.name == "blev") {
    long long m = q.get_int("m");
    std::vector<int> levels;
    for (const auto& part : split(q.get("levels"), ','))
      levels.push_back(int(parse_int(trim(part), "levels")));
    auto spec = CubeSpec::at_levels(int(m), levels);
    return build_cube(spec, std::max(spec.element_count(), 1));
  }
  if (q.name == "chain") return chain(int(q.get_int("n")));
  if (q.name == "antichain") return antichain(int(q.get_int("n")));
  if (q.name == "powerset") {
    long long m = q.get_int("m");
    if (m < 0 || m > 12) throw InvalidSpec("powerset order must lie in [0, 12]");
    return powerset(int(m), std::max(1 << m, 1));
  }
  if (source.find('?') != std::string::npos)
    throw ParseError("unknown poset constructor '" + q.name + "'");
  return parse_poset_text(read_file(source));
}

SetMapping parse_set_mapping(const std::string& text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty set-mapping description");
  std::istringstream head(lines.front());
  std::string ntok, rtok;
  head >> ntok >> rtok;
  if (ntok.rfind("N=", 0) != 0 || rtok.rfind("r=", 0) != 0)
    throw ParseError("set-mapping description must start with 'N=<n> r=<r>'");
  long long n = parse_int(ntok.substr(2), "N");
  long long r = parse_int(rtok.substr(2), "r");
  if (n < 1 || n > 64) throw ParseError("ground set size must lie in [1, 64]");
  if (r < 1 || r > n) throw ParseError("order must lie in [1, N]");
  SetMapping f{int(n), int(r)};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto arrow = lines[i].find("->");
    if (arrow == std::string::npos)
      throw ParseError("expected 'X -> Y', got '" + lines[i] + "'");
    std::uint64_t key = parse_subset(trim(lines[i].substr(0, arrow)), int(n));
    std::uint64_t val = parse_subset(trim(lines[i].substr(arrow + 2)), int(n));
    if (__builtin_popcountll(key) > r)
      throw ParseError("key larger than the order in '" + lines[i] + "'");
    f.set(key, val);
  }
  return f;
}

std::string serialize_set_mapping(const SetMapping& f) {
  std::ostringstream out;
  out << "N=" << f.ground() << " r=" << f.order() << "\n";
  for (const auto& [key, val] : f.entries())
    out << subset_csv(key) << " -> " << subset_csv(val) << "\n";
  return out.str();
}

SetMapping mapping_from_source(const std::string& source) {
  Query q(source);
  if (q.name == "cyclic") {
    return cyclic_shift_mapping(int(q.get_int("n")), int(q.get_int("r")),
                                int(parse_int(q.get("shift", "1"), "shift")));
  }
  if (q.name == "block")
    return block_smallest_mapping(int(q.get_int("n")), int(q.get_int("r")));
  if (q.name == "random") {
    return random_mapping(
        int(q.get_int("n")), int(q.get_int("r")),
        parse_double(q.get("density", "0.5"), "density"),
        std::uint64_t(parse_int(q.get("seed", "1"), "seed")));
  }
  if (source.find('?') != std::string::npos)
    throw ParseError("unknown mapping constructor '" + q.name + "'");
  return parse_set_mapping(read_file(source));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string subset_label(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    if (!first) out += ',';
    out += std::to_string(__builtin_ctzll(m));
    first = false;
  }
  return out + "}";
}

}  // namespace posetlab
