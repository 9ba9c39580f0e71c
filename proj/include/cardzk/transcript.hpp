#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cardzk/errors.hpp"

namespace cardzk {

// One public event of a protocol run, exactly what the verifier observes.
// faces stays empty when nothing is shown (hidden placements, shuffles).
struct Event {
  enum class Kind { Place, Shuffle, Reveal, Decision };

  Kind kind = Kind::Place;
  std::string location;
  std::vector<std::string> faces;
  std::string note;
};

std::string event_kind_name(Event::Kind kind);

// Hidden permutations of one shuffle, kept outside the public record.
struct SealedShuffle {
  std::string location;
  std::vector<int> p;
  std::vector<int> q;
};

// The ordered public record of one run, with an optional sealed side-channel
// of hidden shuffle permutations for test harnesses only.
class Transcript {
 public:
  explicit Transcript(bool record_hidden = false)
      : record_hidden_(record_hidden) {}

  void place(std::string location, std::vector<std::string> faces = {},
             std::string note = {});
  void shuffle(std::string location, std::string note);
  void reveal(std::string location, std::vector<std::string> faces);
  void decide(bool accept, std::string failing_location = {});
  void seal(std::string location, std::vector<int> p, std::vector<int> q);

  const std::vector<Event>& events() const { return events_; }
  const std::vector<SealedShuffle>& sealed() const { return sealed_; }
  bool recording_hidden() const { return record_hidden_; }

  bool decided() const { return decided_; }
  bool accepted() const { return decided_ && accepted_; }
  const std::string& failing_location() const { return failing_location_; }

  // Serialization is stable: same events give byte-identical output.
  // Sealed data is included only when the transcript recorded it and the
  // caller explicitly asks.
  nlohmann::ordered_json to_json(bool include_sealed = false) const;
  std::string to_text(bool include_sealed = false) const;

 private:
  void append(Event e);

  std::vector<Event> events_;
  std::vector<SealedShuffle> sealed_;
  bool record_hidden_;
  bool decided_ = false;
  bool accepted_ = false;
  std::string failing_location_;
};

}  // namespace cardzk
