#pragma once

#include <stdexcept>
#include <string>

namespace picketlab {

struct InvalidPartition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EntryOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct NotSemisimpleSubmodule : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInSn : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when two verification routes return different values.  The routes
// compute provably equal quantities, so a disagreement is a code defect.
struct RouteDisagreement : std::logic_error {
  using std::logic_error::logic_error;
};

class TableauError : public std::domain_error {
 public:
  enum class Kind { NotIncreasing, NotHorizontalStrip, LatticeViolation };

  TableauError(Kind kind, int level, int index, const std::string& msg)
      : std::domain_error(msg), kind_(kind), level_(level), index_(index) {}

  Kind kind() const { return kind_; }
  int level() const { return level_; }  // the failing step l in the chain
  int index() const { return index_; }  // row i (strip) or cutoff h (lattice)

 private:
  Kind kind_;
  int level_;
  int index_;
};

}  // namespace picketlab
