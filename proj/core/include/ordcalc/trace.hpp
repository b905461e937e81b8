#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// One derivation step: which rule fired, its stable anchor id, the ordinals
// it consumed and the ordinal it produced (canonical renderings).
struct TraceStep {
  std::string rule;
  std::string anchor;
  std::vector<std::string> inputs;
  std::string output;
};

using Trace = std::vector<TraceStep>;

inline void trace_step(Trace* trace, std::string rule, std::string anchor,
                       std::vector<std::string> inputs, std::string output) {
  if (!trace) return;
  trace->push_back({std::move(rule), std::move(anchor), std::move(inputs), std::move(output)});
}

// A computed invariant: either a concrete ordinal with a non-empty
// derivation, or an explicit "outside covered theory" outcome with the
// offending subexpression named in the reason.
class InvariantResult {
 public:
  static InvariantResult known(Ordinal value, Trace derivation) {
    InvariantResult r;
    r.value_ = std::move(value);
    r.derivation_ = std::move(derivation);
    return r;
  }
  static InvariantResult unknown(std::string reason, Trace derivation = {}) {
    InvariantResult r;
    r.reason_ = std::move(reason);
    r.derivation_ = std::move(derivation);
    return r;
  }

  bool is_known() const { return value_.has_value(); }
  const Ordinal& value() const { return *value_; }
  const std::string& reason() const { return reason_; }
  const Trace& derivation() const { return derivation_; }

 private:
  std::optional<Ordinal> value_;
  std::string reason_;
  Trace derivation_;
};

}  // namespace ordcalc
