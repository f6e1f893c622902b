#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "bilv/errors.hpp"

namespace bilv {

enum class VarKind : uint8_t { X = 0, B = 1, Lam = 2, Mu = 3, Nu = 4 };

// Packed variable identifier. The packed code realizes the global order
// x1 < x2 < ... < b-pairs in lex order < lam < mu < nu as plain integer
// comparison. b-variables are stored with i < j only.
class VarId {
 public:
  static VarId x(int i) {
    if (i < 1 || i > 0xff) throw DomainViolation("x index out of range");
    return VarId((0u << 16) | static_cast<uint32_t>(i));
  }
  static VarId b(int i, int j) {
    if (i < 1 || j < 1 || i > 0xff || j > 0xff) throw DomainViolation("b index out of range");
    if (i >= j) throw DomainViolation("b pair must have i < j");
    return VarId((1u << 16) | (static_cast<uint32_t>(i) << 8) | static_cast<uint32_t>(j));
  }
  static VarId lam() { return VarId(2u << 16); }
  static VarId mu() { return VarId(3u << 16); }
  static VarId nu() { return VarId(4u << 16); }

  VarKind kind() const { return static_cast<VarKind>(code_ >> 16); }
  int x_index() const { return static_cast<int>(code_ & 0xff); }
  int b_i() const { return static_cast<int>((code_ >> 8) & 0xff); }
  int b_j() const { return static_cast<int>(code_ & 0xff); }

  std::string name() const {
    switch (kind()) {
      case VarKind::X: return "x" + std::to_string(x_index());
      case VarKind::B: return "b_" + std::to_string(b_i()) + "_" + std::to_string(b_j());
      case VarKind::Lam: return "lam";
      case VarKind::Mu: return "mu";
      case VarKind::Nu: return "nu";
    }
    return "?";
  }

  // Inverse of name(); nullopt when the string is not a variable name.
  static std::optional<VarId> parse(const std::string& s) {
    if (s == "lam") return lam();
    if (s == "mu") return mu();
    if (s == "nu") return nu();
    auto parse_int = [](const std::string& t) -> std::optional<int> {
      if (t.empty() || t.size() > 3) return std::nullopt;
      int v = 0;
      for (char c : t) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + (c - '0');
      }
      if (v < 1 || v > 0xff) return std::nullopt;
      return v;
    };
    if (s.size() >= 2 && s[0] == 'x') {
      auto i = parse_int(s.substr(1));
      if (!i) return std::nullopt;
      return x(*i);
    }
    if (s.size() >= 5 && s.rfind("b_", 0) == 0) {
      auto sep = s.find('_', 2);
      if (sep == std::string::npos) return std::nullopt;
      auto i = parse_int(s.substr(2, sep - 2));
      auto j = parse_int(s.substr(sep + 1));
      if (!i || !j || *i >= *j) return std::nullopt;
      return b(*i, *j);
    }
    return std::nullopt;
  }

  uint32_t code() const { return code_; }
  auto operator<=>(const VarId&) const = default;

 private:
  explicit VarId(uint32_t code) : code_(code) {}
  uint32_t code_;
};

}  // namespace bilv
