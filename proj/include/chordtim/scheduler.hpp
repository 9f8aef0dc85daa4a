#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chordtim/errors.hpp"
#include "chordtim/rational.hpp"
#include "chordtim/region.hpp"
#include "chordtim/topology.hpp"

namespace chordtim {

/// One time-sharing slot: a group of mutually orthogonal messages served
/// together for a fraction `weight` of the time.
struct ScheduleSlot {
  std::vector<Message> messages;  // canonical order
  Rational weight;

  friend bool operator==(const ScheduleSlot&, const ScheduleSlot&) = default;
};

struct Schedule {
  std::vector<ScheduleSlot> slots;
  Rational total_weight;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// No orthogonal-access schedule reaches the requested rates: the cheapest
/// fractional cover needs `required_time` > 1.
class InfeasibleSchedule : public Error {
public:
  InfeasibleSchedule(const std::string& what, Rational required_time, bool chordal)
      : Error(what), required_time_(std::move(required_time)), chordal_(chordal) {}
  [[nodiscard]] const Rational& required_time() const { return required_time_; }
  [[nodiscard]] Rational gap() const { return required_time_ - Rational(1); }
  [[nodiscard]] bool chordal() const { return chordal_; }

private:
  Rational required_time_;
  bool chordal_;
};

inline constexpr std::size_t kDefaultScheduleLimit = 24;

/// Minimum total time needed to cover `r` by time sharing over maximal
/// independent sets of the conflict graph (fractional weighted colouring).
Rational min_cover_time(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r,
                        std::size_t limit = kDefaultScheduleLimit);

/// Time-sharing schedule delivering exactly `r`. Solves the covering LP
/// exactly, then strips over-delivery by splitting slots, merges equal
/// groups and sorts slots by group. Throws InfeasibleSchedule when the
/// cover needs more than unit time, ValidationError on negative or
/// unknown rates, SizeLimitExceeded above `limit` messages.
Schedule schedule(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r,
                  std::size_t limit = kDefaultScheduleLimit);

/// Reason the schedule is invalid, or empty when it is valid: every group
/// pairwise orthogonal (distinct sources and destinations, no cross
/// channels), weights positive, total equal to their sum and at most 1,
/// every message served at least its requested rate, and no message
/// outside `ms`.
std::optional<std::string> check_schedule(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r,
                                          const Schedule& s);
bool verify_schedule(const TopologyGraph& g, const MessageSet& ms, const RateTuple& r, const Schedule& s);

/// Per-message delivered rate.
RateTuple delivered_rates(const Schedule& s);

/// One-shot schedule for an integral vertex: its support, served for the
/// whole unit of time. The origin yields an empty schedule.
Schedule corner_point_schedule(const TopologyGraph& g, const MessageSet& ms, const PolytopeVertex& v);

/// Largest sum rate any orthogonal-access schedule can deliver, computed as
/// an exact LP over maximal independent sets.
Rational lp_max_sum_rate(const TopologyGraph& g, const MessageSet& ms, std::size_t limit = kDefaultScheduleLimit);

}  // namespace chordtim
