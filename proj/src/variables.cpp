#include <charp/variables.hpp>

#include <algorithm>
#include <cctype>

namespace charp {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  auto head = [](char c) { return std::isalpha(std::uint8_t(c)) || c == '_'; };
  auto tail = [](char c) { return std::isalnum(std::uint8_t(c)) || c == '_'; };
  if (!head(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

} // namespace

VariableSet::VariableSet(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw UsageError("at most " + std::to_string(kMaxVars) +
                     " variables supported, got " + std::to_string(names.size()));
  }
  for (const auto& n : names) {
    if (!valid_name(n)) throw UsageError("invalid variable name '" + n + "'");
    if (std::count(names.begin(), names.end(), n) > 1) {
      throw UsageError("duplicate variable name '" + n + "'");
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return std::size_t(it - names_->begin());
}

VariableSet VariableSet::extended(const std::vector<std::string>& more) const {
  std::vector<std::string> all = *names_;
  all.insert(all.end(), more.begin(), more.end());
  return VariableSet(std::move(all));
}

std::string VariableSet::fresh_name(const std::string& hint) const {
  std::string n = hint;
  while (index_of(n)) n += "_";
  return n;
}

VariableSet VariableSet::with_front(const std::string& hint, std::string* chosen) const {
  std::string n = fresh_name(hint);
  if (chosen) *chosen = n;
  std::vector<std::string> all;
  all.reserve(size() + 1);
  all.push_back(n);
  all.insert(all.end(), names_->begin(), names_->end());
  return VariableSet(std::move(all));
}

} // namespace charp
