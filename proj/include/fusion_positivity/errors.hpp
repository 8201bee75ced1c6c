#pragma once

#include <stdexcept>
#include <string>

namespace fpos {

// Every failure raised by the library derives from Error so callers (the CLI in
// particular) can map the whole family to a single exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LabelError : public Error {        // label unknown to the datum or malformed
 public:
  using Error::Error;
};
class DomainError : public Error {       // parameter outside its admissible range
 public:
  using Error::Error;
};
class ArityError : public Error {        // wrong number of modules
 public:
  using Error::Error;
};
class PartitionError : public Error {    // malformed F-curve block structure
 public:
  using Error::Error;
};
class ClosureError : public Error {      // label subset not closed under dual/fusion
 public:
  using Error::Error;
};
class PreconditionError : public Error { // documented hypothesis of a closed form violated
 public:
  using Error::Error;
};
class ResourceError : public Error {     // enumeration exceeds the configured cap
 public:
  using Error::Error;
};
class ConfigurationError : public Error {  // incomplete label map and similar setup faults
 public:
  using Error::Error;
};

}  // namespace fpos
