#pragma once

#include <stdexcept>
#include <string>

namespace weakmix {

/// Operands from different scalar fields were combined.
class FieldMismatch : public std::logic_error {
public:
  explicit FieldMismatch(const std::string& what) : std::logic_error(what) {}
};

/// Malformed text or JSON input. `path` points at the offending node.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string path, const std::string& msg)
      : std::runtime_error(path.empty() ? msg : path + ": " + msg),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

/// A search routine was invoked while searches are disabled.
class SearchDisabled : public std::logic_error {
public:
  explicit SearchDisabled(const std::string& what) : std::logic_error(what) {}
};

}  // namespace weakmix
