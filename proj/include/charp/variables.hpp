#ifndef CHARP_VARIABLES_HPP
#define CHARP_VARIABLES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <charp/errors.hpp>

namespace charp {

// Fixed upper bound on ambient variables; keeps monomials flat and cheap.
inline constexpr std::size_t kMaxVars = 12;

/// Ordered list of distinct variable names. The declared order fixes the
/// precedence x1 > x2 > ... used by the monomial orders. Copies are cheap
/// (shared immutable storage).
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// New set with `more` appended at the end.
  VariableSet extended(const std::vector<std::string>& more) const;
  /// New set with one fresh variable at the front; `hint` gets underscores
  /// appended until it avoids every existing name.
  VariableSet with_front(const std::string& hint, std::string* chosen = nullptr) const;
  /// Fresh name derived from `hint` that clashes with nothing in the set.
  std::string fresh_name(const std::string& hint) const;

  bool operator==(const VariableSet& o) const {
    return names_ == o.names_ || *names_ == *o.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

} // namespace charp

#endif // CHARP_VARIABLES_HPP
