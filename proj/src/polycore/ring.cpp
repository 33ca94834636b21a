#include "clfree/ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace clfree {

const Ring& Ring::get(const std::vector<std::string>& vars) {
  if (vars.size() > kMaxVars) throw std::invalid_argument("too many ring variables");
  static std::mutex mu;
  static std::map<std::vector<std::string>, std::unique_ptr<Ring>> table;
  std::lock_guard lock(mu);
  auto& slot = table[vars];
  if (!slot) slot.reset(new Ring(vars));
  return *slot;
}

const Ring& Ring::xyz() {
  static const Ring& r = get({"x", "y", "z"});
  return r;
}
const Ring& Ring::xy() {
  static const Ring& r = get({"x", "y"});
  return r;
}
const Ring& Ring::xz() {
  static const Ring& r = get({"x", "z"});
  return r;
}
const Ring& Ring::yz() {
  static const Ring& r = get({"y", "z"});
  return r;
}
const Ring& Ring::st() {
  static const Ring& r = get({"s", "t"});
  return r;
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

bool Ring::single_letter_names() const {
  for (const auto& v : vars_)
    if (v.size() != 1) return false;
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace clfree
