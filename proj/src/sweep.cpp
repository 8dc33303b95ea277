#include "idd/sweep.hpp"

#include "idd/classify.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include <omp.h>

namespace idd {

namespace {

std::pair<int, int> field(const std::ssub_match& lo, const std::ssub_match& hi, int line) {
  const int a = std::stoi(lo.str());
  const int b = hi.matched ? std::stoi(hi.str()) : a;
  if (b < a) throw GridParseError(line, "empty range " + lo.str() + ".." + hi.str());
  return {a, b};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<AlgebraSpec> parse_grid(const std::string& text) {
  static const std::regex ranged(R"(K(\d+)(?:\.\.(\d+))?:(inf@)?(\d+)(?:\.\.(\d+))?:(-?\d+)(?:\.\.(-?\d+))?,(-?\d+)(?:\.\.(-?\d+))?)");
  std::vector<AlgebraSpec> out;
  std::set<std::string> seen;
  auto push = [&](const AlgebraSpec& s) {
    if (seen.insert(s.to_string()).second) out.push_back(s);
  };
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (s.find("..") == std::string::npos) {
      try {
        push(AlgebraSpec::parse(s));
      } catch (const SpecParseError& e) {
        throw GridParseError(line, e.what());
      }
      continue;
    }
    std::smatch m;
    if (!std::regex_match(s, m, ranged)) throw GridParseError(line, "malformed grid entry '" + s + "'");
    const auto [k0, k1] = field(m[1], m[2], line);
    const bool inf = m[3].matched;
    const auto [n0, n1] = field(m[4], m[5], line);
    const auto [a0, a1] = field(m[6], m[7], line);
    const auto [b0, b1] = field(m[8], m[9], line);
    for (int k = k0; k <= k1; ++k)
      for (int n = n0; n <= n1; ++n)
        for (int a = a0; a <= a1; ++a)
          for (int b = b0; b <= b1; ++b)
            if (n >= k) push(inf ? AlgebraSpec::window(k, n, a, b) : AlgebraSpec::finite(k, n, a, b));
  }
  return out;
}

std::vector<AlgebraSpec> read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grid file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_grid(text.str());
}

SweepResult run_sweep(const std::vector<AlgebraSpec>& grid, const SweepOptions& options) {
  if (options.out_path.empty()) throw std::invalid_argument("sweep needs an output path");
  const std::string manifest_path = options.out_path + ".manifest";
  const std::string partial_path = options.out_path + ".partial";

  std::set<std::string> done;
  {
    std::ifstream manifest(manifest_path);
    for (std::string line; std::getline(manifest, line);)
      if (!line.empty()) done.insert(line);
  }
  std::map<std::string, Json> records;
  {
    std::ifstream partial(partial_path);
    for (std::string line; std::getline(partial, line);) {
      if (line.empty()) continue;
      Json j = Json::parse(line, nullptr, false);
      // A torn last line from an interrupted write is recomputed.
      if (j.is_discarded() || !j.contains("spec")) continue;
      const std::string spec = j["spec"].get<std::string>();
      if (done.count(spec)) records[spec] = std::move(j);
    }
  }

  std::vector<AlgebraSpec> todo;
  for (const auto& s : grid)
    if (!records.count(s.to_string())) todo.push_back(s);

  SweepResult result;
  result.resumed = static_cast<int>(grid.size() - todo.size());
  std::ofstream manifest(manifest_path, std::ios::app);
  std::ofstream partial(partial_path, std::ios::app);
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
  const std::size_t batch = static_cast<std::size_t>(std::max(1, options.batch));
  for (std::size_t start = 0; start < todo.size(); start += batch) {
    const std::size_t end = std::min(todo.size(), start + batch);
    std::vector<Json> out(end - start);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = start; i < end; ++i) out[i - start] = to_json(assess(todo[i], options.seed));
    for (std::size_t i = start; i < end; ++i) {
      const std::string spec = todo[i].to_string();
      partial << out[i - start].dump() << '\n';
      records[spec] = std::move(out[i - start]);
    }
    partial.flush();
    for (std::size_t i = start; i < end; ++i) manifest << todo[i].to_string() << '\n';
    manifest.flush();
    result.computed += static_cast<int>(end - start);
  }

  Json list = Json::array();
  for (const auto& s : grid) list.push_back(records.at(s.to_string()));
  result.document = {{"config", {{"points", grid.size()}, {"seed", options.seed}}}, {"records", list}};
  std::ofstream final_out(options.out_path, std::ios::trunc);
  final_out << render_json(result.document);
  if (!final_out) throw std::runtime_error("cannot write " + options.out_path);
  return result;
}

}  // namespace idd
