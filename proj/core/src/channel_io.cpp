#include "renyi/channel_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "renyi/errors.hpp"

namespace renyi {
namespace {

double parse_number(std::string_view text, std::size_t row) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  double value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("not a decimal number: '" + std::string(text) + "'", row);
  }
  return value;
}

std::string shortest(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

BinaryChannel build(std::vector<LikelihoodPair> pairs, std::vector<std::string> labels) {
  for (std::size_t row = 0; row < pairs.size(); ++row) {
    if (!(pairs[row].w0 >= 0) || !(pairs[row].w1 >= 0)) {
      throw ParseError("likelihoods must be non-negative", row);
    }
  }
  try {
    return BinaryChannel(std::move(pairs), std::move(labels));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

BinaryChannel parse_shorthand(std::string_view source) {
  const auto colon = source.find(':');
  const std::string_view family = source.substr(0, colon);
  const double value = parse_number(source.substr(colon + 1), ParseError::npos);
  if (!(value >= 0 && value <= 1)) {
    throw ParseError("channel parameter outside [0,1] in '" + std::string(source) + "'");
  }
  return family == "bsc" ? make_bsc(value) : make_bec(value);
}

}  // namespace

BinaryChannel parse_channel_json(std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!document.is_object() || !document.contains("outputs") || !document["outputs"].is_array()) {
    throw ParseError("expected an object with an \"outputs\" array");
  }
  std::vector<LikelihoodPair> pairs;
  std::vector<std::string> labels;
  bool any_label = false;
  const auto& outputs = document["outputs"];
  for (std::size_t row = 0; row < outputs.size(); ++row) {
    const auto& entry = outputs[row];
    if (!entry.is_object() || !entry.contains("w0") || !entry.contains("w1") ||
        !entry["w0"].is_number() || !entry["w1"].is_number()) {
      throw ParseError("each output needs numeric \"w0\" and \"w1\"", row);
    }
    pairs.push_back({entry["w0"].get<double>(), entry["w1"].get<double>()});
    if (entry.contains("label")) {
      if (!entry["label"].is_string()) {
        throw ParseError("\"label\" must be a string", row);
      }
      labels.push_back(entry["label"].get<std::string>());
      any_label = true;
    } else {
      labels.emplace_back();
    }
  }
  if (!any_label) {
    labels.clear();
  }
  return build(std::move(pairs), std::move(labels));
}

BinaryChannel parse_channel_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  std::vector<LikelihoodPair> pairs;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.find_first_not_of(" \t") == std::string::npos) {
      continue;
    }
    if (!header_seen) {
      std::string compact;
      for (char ch : line) {
        if (ch != ' ' && ch != '\t') compact.push_back(ch);
      }
      if (compact != "w0,w1") {
        throw ParseError("CSV header must be 'w0,w1'");
      }
      header_seen = true;
      continue;
    }
    const std::size_t row = pairs.size();
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError("expected exactly two columns", row);
    }
    const std::string_view view(line);
    pairs.push_back({parse_number(view.substr(0, comma), row),
                     parse_number(view.substr(comma + 1), row)});
  }
  if (!header_seen) {
    throw ParseError("empty CSV channel file");
  }
  return build(std::move(pairs), {});
}

BinaryChannel load_channel(std::string_view source) {
  if (source.starts_with("bsc:") || source.starts_with("bec:")) {
    return parse_shorthand(source);
  }
  const std::filesystem::path path{std::string(source)};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open channel file '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (path.extension() == ".csv") {
    return parse_channel_csv(text);
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_channel_json(text);
  }
  return parse_channel_csv(text);
}

std::string serialize_channel(const BinaryChannel& channel, ChannelFormat format) {
  std::ostringstream out;
  if (format == ChannelFormat::csv) {
    out << "w0,w1\n";
    for (const auto& pair : channel.outputs()) {
      out << shortest(pair.w0) << ',' << shortest(pair.w1) << '\n';
    }
    return out.str();
  }
  // Written by hand so the numbers use the same shortest round-trip form.
  out << "{\"outputs\":[";
  const auto labels = channel.labels();
  for (std::size_t y = 0; y < channel.size(); ++y) {
    if (y > 0) out << ',';
    out << "{\"w0\":" << shortest(channel[y].w0) << ",\"w1\":" << shortest(channel[y].w1);
    if (!labels.empty()) {
      out << ",\"label\":" << nlohmann::json(labels[y]).dump();
    }
    out << '}';
  }
  out << "]}\n";
  return out.str();
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path temporary = path;
  temporary += ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write '" + temporary.string() + "'");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      throw std::runtime_error("short write to '" + temporary.string() + "'");
    }
  }
  std::filesystem::rename(temporary, path);
}

void save_channel(const std::filesystem::path& path, const BinaryChannel& channel,
                  ChannelFormat format) {
  write_file_atomically(path, serialize_channel(channel, format));
}

}  // namespace renyi
