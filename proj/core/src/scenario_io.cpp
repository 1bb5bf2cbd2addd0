#include "bandit_lab/scenario_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

#include "bandit_lab/error.hpp"
#include "json.hpp"

namespace bandit_lab {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t limit = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

std::vector<double> number_array(const json& node, const std::string& where) {
  if (!node.is_array()) fail(where + " must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number())
      fail(where + "[" + std::to_string(i) + "] must be a number");
    out.push_back(node[i].get<double>());
  }
  return out;
}

ArmModel parse_arm(const json& node, std::size_t index) {
  const std::string where = "arms[" + std::to_string(index) + "]";
  if (!node.is_object()) fail(where + " must be an object");
  if (!node.contains("transition")) fail(where + " is missing \"transition\"");
  if (!node.contains("rewards")) fail(where + " is missing \"rewards\"");

  const json& rows = node["transition"];
  if (!rows.is_array() || rows.empty()) fail(where + ".transition must be a non-empty matrix");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd p(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto row = number_array(rows[static_cast<std::size_t>(r)],
                                  where + ".transition[" + std::to_string(r) + "]");
    if (static_cast<Eigen::Index>(row.size()) != n)
      fail(where + ".transition row " + std::to_string(r) + " has " +
           std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    for (Eigen::Index c = 0; c < n; ++c) p(r, c) = row[static_cast<std::size_t>(c)];
  }
  std::vector<double> rewards = number_array(node["rewards"], where + ".rewards");
  std::vector<std::string> labels;
  if (node.contains("states")) {
    const json& states = node["states"];
    if (!states.is_array()) fail(where + ".states must be an array of strings");
    for (const auto& s : states) {
      if (!s.is_string()) fail(where + ".states must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
  }
  try {
    return ArmModel(TransitionMatrix(std::move(p)), std::move(rewards), std::move(labels));
  } catch (const Error& e) {
    throw e.with_arm(index);
  }
}

void append_number(std::string& out, double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  out.append(buffer, end);
  out.push_back(';');
}

}  // namespace

Scenario parse_scenario_json(std::string_view text, std::string fallback_name) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("malformed scenario document at " + line_column(text, e.byte));
  }
  if (!doc.is_object()) fail("scenario document must be a JSON object");
  std::string name = std::move(fallback_name);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  if (!doc.contains("arms") || !doc["arms"].is_array() || doc["arms"].empty())
    fail("\"arms\" must be a non-empty array");
  std::vector<ArmModel> arms;
  for (std::size_t i = 0; i < doc["arms"].size(); ++i) arms.push_back(parse_arm(doc["arms"][i], i));
  return Scenario(std::move(name), std::move(arms));
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open scenario file " + path.string());
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_scenario_json(text, path.stem().string());
}

Scenario resolve_scenario(std::string_view name_or_path) {
  if (auto builtin = find_builtin_scenario(name_or_path)) return std::move(*builtin);
  const std::filesystem::path path{std::string(name_or_path)};
  if (!std::filesystem::exists(path))
    throw Error(ErrorCode::InvalidArgument,
                "unknown scenario '" + std::string(name_or_path) +
                    "' (expected S1, S2, or a scenario file)");
  return load_scenario_file(path);
}

std::string scenario_hash(const Scenario& scenario) {
  std::string canonical;
  for (const auto& arm : scenario.arms()) {
    canonical += "arm;";
    const auto& p = arm.transition().matrix();
    for (Eigen::Index r = 0; r < p.rows(); ++r)
      for (Eigen::Index c = 0; c < p.cols(); ++c) append_number(canonical, p(r, c));
    canonical += "rewards;";
    for (double r : arm.rewards()) append_number(canonical, r);
  }
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << hash;
  return out.str();
}

}  // namespace bandit_lab
