#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "flownet/json_io.hpp"

namespace flownet::cmd {

/// One input document: a role ("network", "chain", ...), where it came from,
/// and its raw bytes.
struct Document {
  std::string role;
  std::string path;
  std::string text;
  std::optional<std::string> read_error;
};

/// Reads a file; a missing or unreadable file becomes an InputError at run time.
Document read_document(std::string role, const std::string& path);
Document inline_document(std::string role, std::string text);

std::string sha256_hex(std::string_view bytes);

struct Options {
  /// Overrides the ring of the inputs when set.
  std::optional<Ring> ring;
  std::optional<std::set<std::string>> external_override;
  std::size_t degree = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

struct RunResult {
  io::Json report;
  int exit_code = 0;
  std::string summary;  // one line for humans

  /// The report as written to the output: two-space indented JSON and a newline.
  std::string text() const;
};

RunResult basis(const Document& network, const Options& opts);
RunResult obstruction(const Document& network, const Options& opts);
RunResult check(const Document& network, const Document& chain, const Options& opts);
RunResult solve2(const Document& network, const Document& gram, const Document& potential, const Options& opts);
/// With no network, runs `opts.count` random networks starting at `opts.seed`.
RunResult oracle(const std::optional<Document>& network, const Options& opts);
RunResult cover(const Document& network, const Document& covering, const Options& opts);
RunResult colim(const Document& category, const Document& functor, const Options& opts);

}  // namespace flownet::cmd
