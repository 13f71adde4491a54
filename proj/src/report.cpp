#include "inrl/report.hpp"

#include <stdexcept>

namespace inrl {

Check& Report::add(std::string name, Witness failure, std::vector<std::string> labels) {
  Check c;
  c.name = std::move(name);
  c.passed = !failure.has_value();
  if (failure) c.witness = std::move(*failure);
  c.labels = std::move(labels);
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const noexcept {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

const Check* Report::find(std::string_view name) const noexcept {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed(std::string_view name) const {
  if (const auto* c = find(name)) return c->passed;
  throw std::out_of_range("no check named '" + std::string(name) + "'");
}

const Check* Report::first_failure() const noexcept {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::vector<const Check*> Report::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(&c);
  return out;
}

std::string format_witness(const Check& check, const FiniteInRL& alg) {
  static const char* const fallback[] = {"x", "y", "z", "w", "u", "v"};
  std::string out;
  for (std::size_t i = 0; i < check.witness.size(); ++i) {
    if (i) out += ' ';
    if (i < check.labels.size())
      out += check.labels[i];
    else if (i < std::size(fallback))
      out += fallback[i];
    else
      out += "t" + std::to_string(i);
    out += '=';
    const Elem e = check.witness[i];
    out += e < alg.size() ? alg.name(e) : "#" + std::to_string(e);
  }
  return out;
}

}  // namespace inrl
