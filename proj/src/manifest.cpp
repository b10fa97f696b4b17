#include "seedgo/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace seedgo {

std::string manifest_to_text(const Manifest& m) {
  std::string out;
  for (const auto& [key, value] : m) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

Manifest manifest_from_text(const std::string& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("bad manifest line: " + line);
    }
    m[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return m;
}

bool file_exists(const std::string& path) {
  return std::filesystem::exists(path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_manifest(const std::string& path, const Manifest& m) {
  write_text_file(path, manifest_to_text(m));
}

Manifest read_manifest(const std::string& path) {
  return manifest_from_text(read_text_file(path));
}

}  // namespace seedgo
