#include "gbx/trace.hpp"

#include "json.hpp"

#include "gbx/textio.hpp"

namespace gbx {

namespace {

std::string g(std::size_t index) { return "g" + std::to_string(index + 1); }

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::Buchberger: return "buchberger";
    case Phase::Minimalize: return "minimalize";
    case Phase::Reduce: return "reduce";
  }
  return "unknown";
}

std::string format_event_text(const TraceEvent& e) {
  std::string body = std::visit(
      overloaded{
          [](const event::SPairConsidered& ev) {
            return "S(" + g(ev.i) + "," + g(ev.j) + ") = " + print_polynomial(ev.s_poly);
          },
          [](const event::RemainderComputed& ev) {
            return "REM(S(" + g(ev.i) + "," + g(ev.j) + "), G') = " + print_polynomial(ev.remainder);
          },
          [](const event::GeneratorAdded& ev) {
            return "add " + g(ev.index) + " = " + print_polynomial(ev.polynomial);
          },
          [](const event::GeneratorRemoved& ev) {
            return "remove " + g(ev.index) + ": " + ev.reason;
          },
          [](const event::PartialReduction& ev) {
            return g(ev.target) + ": reduce term " + print_monomial(ev.reduced) + " by " + g(ev.divisor) +
                   " -> h_p = " + print_polynomial(ev.result);
          },
          [](const event::PassCompleted& ev) {
            return "pass " + std::to_string(ev.pass) + " complete, " + std::to_string(ev.added) + " added";
          },
      },
      e.data);
  return "[" + std::string(phase_name(e.phase)) + "] " + body;
}

std::string format_event_json(const TraceEvent& e) {
  nlohmann::json j;
  j["phase"] = phase_name(e.phase);
  std::visit(overloaded{
                 [&](const event::SPairConsidered& ev) {
                   j["event"] = "spair";
                   j["i"] = ev.i + 1;
                   j["j"] = ev.j + 1;
                   j["poly"] = print_polynomial(ev.s_poly);
                 },
                 [&](const event::RemainderComputed& ev) {
                   j["event"] = "remainder";
                   j["i"] = ev.i + 1;
                   j["j"] = ev.j + 1;
                   j["poly"] = print_polynomial(ev.remainder);
                 },
                 [&](const event::GeneratorAdded& ev) {
                   j["event"] = "added";
                   j["index"] = ev.index + 1;
                   j["poly"] = print_polynomial(ev.polynomial);
                 },
                 [&](const event::GeneratorRemoved& ev) {
                   j["event"] = "removed";
                   j["index"] = ev.index + 1;
                   j["divisor"] = ev.divisor_index + 1;
                   j["reason"] = ev.reason;
                 },
                 [&](const event::PartialReduction& ev) {
                   j["event"] = "partial_reduction";
                   j["target"] = ev.target + 1;
                   j["divisor"] = ev.divisor + 1;
                   j["monomial"] = print_monomial(ev.reduced);
                   j["poly"] = print_polynomial(ev.result);
                 },
                 [&](const event::PassCompleted& ev) {
                   j["event"] = "pass_completed";
                   j["pass"] = ev.pass;
                   j["added"] = ev.added;
                 },
             },
             e.data);
  return j.dump();
}

std::string format_trace_text(const Trace& trace) {
  std::string out;
  for (const auto& e : trace) out += format_event_text(e) + "\n";
  return out;
}

std::string format_trace_json(const Trace& trace) {
  std::string out;
  for (const auto& e : trace) out += format_event_json(e) + "\n";
  return out;
}

}  // namespace gbx
