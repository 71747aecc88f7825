#pragma once

#include "ecm/count_vector.hpp"
#include "ecm/scalar.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace ecm {

/// Closed-form weight rule for models with infinite support.
using WeightRule = std::function<Scalar(const CountVector&)>;

class HeightOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Edge coloring model: `colors` colors and a weight for every count vector.
///
/// Lookup precedence is table entry, then rule, then default. A model may be
/// defined only up to a maximum height (e.g. a rotated model materialized to a
/// finite arity); asking for a higher count vector throws HeightOverflow.
class EdgeModel {
 public:
  EdgeModel(std::string name, unsigned colors, ScalarKind kind);

  const std::string& name() const { return name_; }
  unsigned colors() const { return colors_; }
  ScalarKind kind() const { return kind_; }

  const Scalar& default_weight() const { return default_; }
  const std::map<CountVector, Scalar>& table() const { return table_; }
  bool has_rule() const { return static_cast<bool>(rule_); }
  const std::string& rule_name() const { return rule_name_; }
  std::optional<unsigned> max_height() const { return max_height_; }

  void set_default(Scalar value);
  void set_weight(const CountVector& v, Scalar value);
  void set_rule(std::string description, WeightRule rule);
  void set_max_height(unsigned h) { max_height_ = h; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Recipe that rebuilds this model, e.g. "builtin perfect_matchings";
  /// empty for hand-built models.
  const std::string& builtin_spec() const { return builtin_; }
  void set_builtin_spec(std::string spec) { builtin_ = std::move(spec); }

  Scalar weight(const CountVector& v) const;

 private:
  void check_length(const CountVector& v) const;
  void check_kind(const Scalar& s) const;

  std::string name_;
  unsigned colors_;
  ScalarKind kind_;
  Scalar default_;
  std::map<CountVector, Scalar> table_;
  WeightRule rule_;
  std::string rule_name_;
  std::optional<unsigned> max_height_;
  std::string builtin_;
};

}  // namespace ecm
