/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HITCHIN_ERROR_HPP
#define HITCHIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hitchin {

enum class ErrKind {
  context,        // mismatched or incomplete variable context
  shape,          // matrix shape violation
  domain,         // degenerate or out-of-domain argument
  membership,     // Lie-algebra membership failure
  specialization, // specialization does not cover all base symbols
  localization,   // undeclared denominator needed on an overlap
  not_commuting,  // nonvanishing bracket in a commuting tuple
  construction,   // postcondition failed while building an object
  resource,       // computation budget exceeded
  parse,          // malformed input
};

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrKind kind() const noexcept { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace hitchin

#endif
