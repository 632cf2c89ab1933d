#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "renyi/channels.hpp"

namespace renyi {

enum class ChannelFormat { json, csv };

/// Resolves "bsc:<p>", "bec:<eps>", or a path to a JSON/CSV channel file.
/// Files ending in .csv are read as CSV; everything else is sniffed (a
/// leading '{' means JSON).
BinaryChannel load_channel(std::string_view source);

BinaryChannel parse_channel_json(std::string_view text);
BinaryChannel parse_channel_csv(std::string_view text);

/// Shortest decimal text that reads back to the identical double.
std::string serialize_channel(const BinaryChannel& channel, ChannelFormat format);

/// Writes through a temporary file and renames it into place.
void save_channel(const std::filesystem::path& path, const BinaryChannel& channel,
                  ChannelFormat format);

/// Atomic text write (temporary sibling + rename).
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace renyi
