#pragma once

#include <map>
#include <string>

namespace seedgo {

// Flat `key=value` text files written beside every output artifact so a run
// can be reproduced from the artifact alone.
using Manifest = std::map<std::string, std::string>;

std::string manifest_to_text(const Manifest& m);
Manifest manifest_from_text(const std::string& text);
void write_manifest(const std::string& path, const Manifest& m);
Manifest read_manifest(const std::string& path);
bool file_exists(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace seedgo
