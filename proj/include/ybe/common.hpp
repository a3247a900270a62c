#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ybe {

// Group elements are indices 0..n-1; index 0 is always the identity.
using Element = std::uint32_t;

// Row-major n x m table of element indices.
using Table = std::vector<Element>;

enum class ErrorCode {
  InvalidArgument,
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  NotPrime,
  NotHomomorphism,
  NotAutomorphism,
  CapExceeded,
  NotExactFactorization,
  CompatibilityViolated,
  NotAbelianImage,
  ConstructionFailed,
  NotStrongLeftIdeal,
  NotTransitive,
  NotRegular,
  SizeMismatch,
  NoInverseCarrier,
  InternalConsistency,
  ParseError,
  UnknownExample,
  SearchExhausted,
  PreconditionFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what);

  ErrorCode code() const noexcept { return _code; }

 private:
  ErrorCode _code;
};

[[noreturn]] void fail(ErrorCode code, std::string const& what);

// One verified property. `witness` holds the first offending indices when
// `passed` is false (its meaning is given by the check's name).
struct Check {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const;
  Check const* first_failure() const;
  Check const* find(std::string_view name) const;
  void add(std::string name, bool passed, std::vector<Element> witness = {});
  void append(Report const& other, std::string_view prefix = {});
};

std::string format_witness(std::span<Element const> witness);

// Sorted, duplicate-free index set.
std::vector<Element> sorted_unique(std::vector<Element> xs);

}  // namespace ybe
