#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gbx/polynomial.hpp"

namespace gbx {

enum class Phase { Buchberger, Minimalize, Reduce };

std::string_view phase_name(Phase phase);

// Basis indices in trace events are positions in the Buchberger-phase basis
// (insertion order, 0-based); they stay stable across all three phases.
namespace event {

struct SPairConsidered {
  std::size_t i, j;
  Polynomial s_poly;
};
struct RemainderComputed {
  std::size_t i, j;
  Polynomial remainder;
};
struct GeneratorAdded {
  std::size_t index;
  Polynomial polynomial;
  Phase phase;
};
struct GeneratorRemoved {
  std::size_t index;
  std::size_t divisor_index;  // member whose leading monomial divides LM(index)
  std::string reason;
};
struct PartialReduction {
  std::size_t target;
  Monomial reduced;      // the non-leading monomial eliminated
  std::size_t divisor;   // member whose leading term cancelled it
  Polynomial result;     // h_p
};
struct PassCompleted {
  std::size_t pass;
  std::size_t added;
};

}  // namespace event

using TraceEventData = std::variant<event::SPairConsidered, event::RemainderComputed, event::GeneratorAdded,
                                    event::GeneratorRemoved, event::PartialReduction, event::PassCompleted>;

struct TraceEvent {
  Phase phase;
  TraceEventData data;
};

using Trace = std::vector<TraceEvent>;

// One line per event, e.g. "[buchberger] S(g1,g2) = 1/2*x+3/4*y-1/4*z".
std::string format_event_text(const TraceEvent& e);
// One JSON object per event on a single line, keys sorted.
std::string format_event_json(const TraceEvent& e);

std::string format_trace_text(const Trace& trace);
std::string format_trace_json(const Trace& trace);

}  // namespace gbx
