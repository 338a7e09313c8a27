#pragma once

#include <stdexcept>
#include <string>

namespace rmcut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RMCUT_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

RMCUT_DEFINE_ERROR(DegenerateInput);
RMCUT_DEFINE_ERROR(DegenerateHull);
RMCUT_DEFINE_ERROR(InternalError);
RMCUT_DEFINE_ERROR(NoBracket);
RMCUT_DEFINE_ERROR(NotAnEdge);
RMCUT_DEFINE_ERROR(NotAPath);
RMCUT_DEFINE_ERROR(TooLarge);
RMCUT_DEFINE_ERROR(DisconnectedDual);
RMCUT_DEFINE_ERROR(NotSpanning);
RMCUT_DEFINE_ERROR(CyclicCut);
RMCUT_DEFINE_ERROR(ParseError);

#undef RMCUT_DEFINE_ERROR

/// No admissible radially monotone connection exists for `vertex`.
/// `best_tau` is the smallest worst-turn angle among the rejected candidates
/// (infinity when there were no candidates at all).
class NoRmConnection : public Error {
 public:
  NoRmConnection(unsigned vertex, double best_tau)
      : Error("no radially monotone connection for vertex " +
              std::to_string(vertex)),
        vertex_(vertex),
        best_tau_(best_tau) {}

  unsigned vertex() const { return vertex_; }
  double best_tau() const { return best_tau_; }

 private:
  unsigned vertex_;
  double best_tau_;
};

}  // namespace rmcut
