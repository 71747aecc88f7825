#include "ecm/edge_model.hpp"

namespace ecm {

EdgeModel::EdgeModel(std::string name, unsigned colors, ScalarKind kind)
    : name_(std::move(name)), colors_(colors), kind_(kind), default_(Scalar::zero(kind)) {}

void EdgeModel::check_length(const CountVector& v) const {
  if (v.size() != colors_)
    throw std::invalid_argument("count vector " + v.to_string() + " has length " + std::to_string(v.size()) +
                                ", model '" + name_ + "' has " + std::to_string(colors_) + " colors");
}

void EdgeModel::check_kind(const Scalar& s) const {
  if (s.kind() != kind_) throw ScalarKindMismatch(s.kind(), kind_);
}

void EdgeModel::set_default(Scalar value) {
  check_kind(value);
  default_ = std::move(value);
}

void EdgeModel::set_weight(const CountVector& v, Scalar value) {
  check_length(v);
  check_kind(value);
  table_.insert_or_assign(v, std::move(value));
}

void EdgeModel::set_rule(std::string description, WeightRule rule) {
  rule_name_ = std::move(description);
  rule_ = std::move(rule);
}

Scalar EdgeModel::weight(const CountVector& v) const {
  check_length(v);
  if (max_height_ && v.height() > *max_height_)
    throw HeightOverflow("model '" + name_ + "' is only defined up to height " + std::to_string(*max_height_) +
                         ", asked for " + v.to_string());
  if (auto it = table_.find(v); it != table_.end()) return it->second;
  if (rule_) {
    Scalar s = rule_(v);
    check_kind(s);
    return s;
  }
  return default_;
}

}  // namespace ecm
