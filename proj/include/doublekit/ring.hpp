// Polynomial rings Q[v1..vn] with a fixed graded reverse lexicographic order.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doublekit {

// Value type: two PolyRing objects denote the same ring exactly when their
// variable lists coincide.  Copies share the underlying name table.
class PolyRing {
public:
  PolyRing() = default;  // empty ring Q[] (constants only)
  explicit PolyRing(std::vector<std::string> variables);

  std::size_t arity() const { return vars_ ? vars_->size() : 0; }
  const std::vector<std::string>& vars() const;
  const std::string& var_name(std::size_t i) const;
  std::optional<std::size_t> var_index(std::string_view name) const;

  bool operator==(const PolyRing& other) const;
  bool operator!=(const PolyRing& other) const { return !(*this == other); }

private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

}  // namespace doublekit
