#ifndef SEMU_ERRORS_HPP_
#define SEMU_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace semu {

/* Failure taxonomy. Input-shaped problems map to exit code 2 at the CLI,
 * broken internal invariants map to exit code 3. Verification findings are
 * not errors: they are collected into a report and yield exit code 1. */
enum class Err {
  Parse,                   /* malformed document or unusable field value */
  CrossingDrawing,         /* straight-line drawing has forbidden contacts */
  DuplicateCoordinate,     /* two vertices share exact coordinates */
  DanglingEdge,            /* edge endpoint is not a declared vertex */
  DisconnectedInduced,     /* induced subgraph is not connected */
  NotOuterBounded,         /* bounded-component preconditions do not hold */
  DisconnectedPart,        /* contraction part is not connected */
  EmptyRegion,             /* region with no vertices */
  DisconnectedRegion,      /* region not connected in the base graph */
  GeneralPosition,         /* scene violates general position */
  ResampleLimit,           /* generator gave up finding a valid sample */
  PartialClustering,       /* clustering does not cover the vertex set */
  UnknownRegion,           /* region id absent from the region set */
  MissingTrace,            /* a check needs instrumentation data */
  TooLarge,                /* exhaustive oracle refused oversized input */
  EmptyRegionSet,          /* region set with no regions */
  SupportMismatch,         /* region support differs from the vertex set */
  Precondition,            /* caller broke an internal contract */
  Internal                 /* invariant the implementation relies on broke */
};

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

const char* err_name(Err k);

/* CLI exit code for an error kind: 2 for bad input, 3 for internal bugs. */
int exit_code_for(Err k);

[[noreturn]] inline void fail(Err k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool ok, Err k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

}  // namespace semu

#endif  // SEMU_ERRORS_HPP_
