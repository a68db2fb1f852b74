#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace interdep {

enum class Errc {
  invalid_argument,
  same_node,
  adjacent_pair,
  too_small,
  disconnected,
  classes_not_connected,
  stub_mismatch,
  empty_set,
  limit_exceeded,
  parse,
  io,
  give_up,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::same_node: return "same_node";
    case Errc::adjacent_pair: return "adjacent_pair";
    case Errc::too_small: return "too_small";
    case Errc::disconnected: return "disconnected";
    case Errc::classes_not_connected: return "classes_not_connected";
    case Errc::stub_mismatch: return "stub_mismatch";
    case Errc::empty_set: return "empty_set";
    case Errc::limit_exceeded: return "limit_exceeded";
    case Errc::parse: return "parse";
    case Errc::io: return "io";
    case Errc::give_up: return "give_up";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, std::string msg) { throw Error(code, std::move(msg)); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace interdep
