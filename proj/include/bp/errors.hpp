#pragma once

#include <stdexcept>
#include <string>

namespace bp {

// Base for all domain errors. `name()` is the stable machine-readable
// identifier used in CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define BP_DEFINE_ERROR(Type)                              \
  class Type : public Error {                              \
   public:                                                 \
    explicit Type(const std::string& what)                 \
        : Error(#Type, what) {}                            \
  }

BP_DEFINE_ERROR(SyntaxError);
BP_DEFINE_ERROR(IndexError);
BP_DEFINE_ERROR(NotAKnot);
BP_DEFINE_ERROR(SingularMatrix);
BP_DEFINE_ERROR(DegenerateShape);
BP_DEFINE_ERROR(DegenerateInput);
BP_DEFINE_ERROR(DegenerateTetrahedron);
BP_DEFINE_ERROR(ObstructionMismatch);
BP_DEFINE_ERROR(InconsistentColoring);
BP_DEFINE_ERROR(NotParabolicOnBoundary);
BP_DEFINE_ERROR(NoSolutionFound);
BP_DEFINE_ERROR(GenericityExhausted);
BP_DEFINE_ERROR(PathNotRecorded);

#undef BP_DEFINE_ERROR

}  // namespace bp
