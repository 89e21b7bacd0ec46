#include "symclass/json_io.hpp"

#include <charconv>
#include <string>

#include "symclass/error.hpp"

namespace symclass {

Json to_json(const Isotypic& a) {
  Json j = Json::object();
  for (const auto& [k, m] : a.terms())
    j[std::to_string(k)] = m;
  return j;
}

Isotypic isotypic_from_json(const Json& j) {
  if (!j.is_object())
    throw DomainError("isotypic JSON must be an object");
  Isotypic out;
  for (const auto& [key, value] : j.items()) {
    int order = -1;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), order);
    if (ec != std::errc() || ptr != key.data() + key.size() || order < 0)
      throw DomainError("bad harmonic order '" + key + "'");
    if (!value.is_number_unsigned())
      throw DomainError("multiplicity of order " + key + " must be a non-negative integer");
    out.add(order, value.get<Multiplicity>());
  }
  return out;
}

Json to_json(const ClassSet& classes) {
  Json j = Json::array();
  for (const auto& c : classes)
    j.push_back(c.name());
  return j;
}

ClassSet class_set_from_json(const Json& j) {
  if (!j.is_array())
    throw DomainError("class list JSON must be an array");
  ClassSet out;
  for (const auto& item : j) {
    if (!item.is_string())
      throw DomainError("class names must be strings");
    out.insert(SubgroupClass::parse(item.get<std::string>()));
  }
  return out;
}

Json closed_form_json(ClosedForm form) {
  switch (form) {
  case ClosedForm::SymmetricSpace:
    return "S";
  case ClosedForm::GenericSpace:
    return "G";
  case ClosedForm::None:
    break;
  }
  return nullptr;
}

Json to_json(const ClassReport& report) {
  Json j;
  j["expr"] = report.expr.str();
  j["isotypic"] = to_json(report.isotypic);
  j["order"] = report.order;
  j["classes"] = to_json(report.classes);
  j["count"] = report.count();
  j["even_harmonic"] = report.even_harmonic;
  j["closed_form"] = closed_form_json(report.closed_form);
  return j;
}

Json to_json(const PairReport& report) {
  Json j;
  j["pair"] = Json::array({report.a.name(), report.b.name()});
  j["expected"] = to_json(report.expected);
  j["observed"] = to_json(report.observed);
  j["missing"] = to_json(report.missing);
  j["violations"] = to_json(report.violations);
  return j;
}

Json to_json(const TableReport& report) {
  Json j;
  j["max_n"] = report.max_n;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["table"] = std::string(to_string(report.table));
  j["pair_count"] = report.pairs.size();
  j["violation_count"] = report.violation_count();
  j["missing_count"] = report.missing_count();
  Json pairs = Json::array();
  for (const auto& p : report.pairs)
    pairs.push_back(to_json(p));
  j["pairs"] = std::move(pairs);
  return j;
}

} // namespace symclass
