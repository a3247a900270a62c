#include "ybe/common.hpp"

#include <algorithm>

namespace ybe {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotExactFactorization: return "NotExactFactorization";
    case ErrorCode::CompatibilityViolated: return "CompatibilityViolated";
    case ErrorCode::NotAbelianImage: return "NotAbelianImage";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotStrongLeftIdeal: return "NotStrongLeftIdeal";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NoInverseCarrier: return "NoInverseCarrier";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), _code(code) {}

void fail(ErrorCode code, std::string const& what) { throw Error(code, what); }

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.passed; });
}

Check const* Report::first_failure() const {
  for (auto const& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

Check const* Report::find(std::string_view name) const {
  for (auto const& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void Report::add(std::string name, bool passed, std::vector<Element> witness) {
  checks.push_back(Check{std::move(name), passed, std::move(witness)});
}

void Report::append(Report const& other, std::string_view prefix) {
  for (auto const& c : other.checks) {
    checks.push_back(Check{std::string(prefix) + c.name, c.passed, c.witness});
  }
}

std::string format_witness(std::span<Element const> witness) {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(witness[i]);
  }
  return out;
}

std::vector<Element> sorted_unique(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace ybe
