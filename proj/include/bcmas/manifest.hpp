#pragma once

// Multi-agent manifest: a flat key = value file.
//
//   agents     = [a = sumo_a.bc, b = sumo_b.bc]
//   conflict   = sumo_env.bc
//   resolution = sumo_resolve.bc
//   stage      = union          % or global
//
// Paths are relative to the manifest. `%` and `#` start comments.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcmas/compose.hpp"
#include "bcmas/error.hpp"
#include "bcmas/grounder.hpp"

namespace bcmas {

enum class Stage { union_stage, global_stage };

struct Manifest {
  std::vector<std::pair<std::string, std::string>> agents;
  std::optional<std::string> conflict;
  std::optional<std::string> resolution;
  Stage stage = Stage::union_stage;
};

namespace detail {

inline std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Manifest parse_manifest(const std::string& text, const std::string& base_dir = ".") {
  namespace fs = std::filesystem;
  auto resolve = [&](const std::string& p) { return (fs::path(base_dir) / p).lexically_normal().string(); };
  Manifest m;
  bool have_agents = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto cut = line.find_first_of("%#");
    if (cut != std::string::npos) line.resize(cut);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError({line_no, 1}, "expected 'key = value'");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (key == "agents") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        throw ParseError({line_no, 1}, "agents must be a bracketed list");
      for (const auto& item : split_top_level(value.substr(1, value.size() - 2))) {
        auto e2 = item.find('=');
        if (e2 == std::string::npos) throw ParseError({line_no, 1}, "agent entry must be 'name = file'");
        std::string name = detail::trim(item.substr(0, e2));
        std::string file = detail::trim(item.substr(e2 + 1));
        if (name.empty() || file.empty()) throw ParseError({line_no, 1}, "agent entry must be 'name = file'");
        for (const auto& [n, f] : m.agents)
          if (n == name) throw ParseError({line_no, 1}, "agent '" + name + "' listed twice");
        m.agents.emplace_back(name, resolve(file));
      }
      have_agents = true;
    } else if (key == "conflict") {
      m.conflict = resolve(value);
    } else if (key == "resolution") {
      m.resolution = resolve(value);
    } else if (key == "stage") {
      if (value == "union")
        m.stage = Stage::union_stage;
      else if (value == "global")
        m.stage = Stage::global_stage;
      else
        throw ParseError({line_no, 1}, "stage must be 'union' or 'global'");
    } else {
      throw ParseError({line_no, 1}, "unknown key '" + key + "'");
    }
  }
  if (!have_agents || m.agents.empty()) throw ParseError({line_no, 1}, "manifest lists no agents");
  return m;
}

inline Manifest load_manifest(const std::string& path) {
  auto dir = std::filesystem::path(path).parent_path().string();
  return parse_manifest(read_file(path), dir.empty() ? "." : dir);
}

inline MasSpec load_mas(const Manifest& m) {
  MasSpec spec;
  for (const auto& [name, file] : m.agents) spec.agents.emplace(name, load_description(file, {name + "_"}));
  if (m.conflict) spec.conflict = load_description(*m.conflict, {"c_"});
  if (m.resolution) spec.resolution = load_description(*m.resolution, {"r_"});
  return spec;
}

// U for the union stage, M for the global stage.
inline ActionDescription build_stage(const Manifest& m, std::optional<Stage> stage = std::nullopt,
                                     const AbPolicy& policy = {}) {
  MasSpec spec = load_mas(m);
  ActionDescription u = compose_union(spec, policy);
  if (stage.value_or(m.stage) == Stage::union_stage) return u;
  return compose_global(u, spec.resolution, policy);
}

}  // namespace bcmas
