#pragma once

#include <string>
#include <vector>

#include "firefight/graph.hpp"

namespace firefight {

// Unplaced firefighters are forfeited when the fire spreads. The exact solver
// follows the same rule so online and offline profits are comparable.
inline constexpr bool kFirefightersCarryOver = false;

struct Instance {
  Graph graph;
  std::vector<int> sequence;  // f_1, f_2, ...; zero beyond the end
  std::string name;

  int firefighters(int round) const {
    return round >= 1 && round <= static_cast<int>(sequence.size()) ? sequence[static_cast<std::size_t>(round - 1)]
                                                                      : 0;
  }
  int num_vertices() const { return graph.num_vertices(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class VertexStatus { Available, Protected, Burned };

struct TraceEntry {
  int time_label = 0;  // 1-based, contiguous
  int round = 0;
  Vertex vertex = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

using Trace = std::vector<TraceEntry>;

struct ScheduledProtection {
  int round = 0;
  Vertex vertex = 0;

  friend bool operator==(const ScheduledProtection&, const ScheduledProtection&) = default;
};

using ProtectionSchedule = std::vector<ScheduledProtection>;

ProtectionSchedule schedule_from_trace(const Trace& trace);

class GameState {
 public:
  explicit GameState(Instance instance);

  const Instance& instance() const { return instance_; }
  int round() const { return round_; }
  VertexStatus status(Vertex v) const { return status_[static_cast<std::size_t>(v)]; }
  const Trace& trace() const { return trace_; }
  int firefighters_left() const { return instance_.firefighters(round_) - placed_this_round_; }
  int num_burned() const;

  VertexSet burned() const;
  VertexSet protected_vertices() const;

  // Throws VertexUnavailable or NoFirefighterLeft.
  void protect(Vertex v);
  // One synchronous fire step, then the next round begins.
  void spread();
  bool is_finished() const;
  // Throws GameNotFinished.
  int profit() const;

  // Burned vertices contracted into a single root (local id 0), saved vertices
  // dropped, parallel edges collapsed.
  Subgraph reduced_view() const;

 private:
  Instance instance_;
  std::vector<VertexStatus> status_;
  int round_ = 1;
  int placed_this_round_ = 0;
  Trace trace_;
};

GameState new_game(Instance instance);

struct ReplayResult {
  int profit = 0;
  GameState final_state;
};

// Applies the schedule round by round, spreading between rounds, until the
// game is over. Throws InvalidSchedule on any illegal placement.
ReplayResult replay(const Instance& instance, const ProtectionSchedule& schedule);

}  // namespace firefight
