#include "cardzk/transcript.hpp"

namespace cardzk {

std::string event_kind_name(Event::Kind kind) {
  switch (kind) {
    case Event::Kind::Place:
      return "place";
    case Event::Kind::Shuffle:
      return "shuffle";
    case Event::Kind::Reveal:
      return "reveal";
    case Event::Kind::Decision:
      return "decision";
  }
  return "?";
}

void Transcript::append(Event e) {
  if (decided_)
    throw ProtocolOrderError("transcript already holds its decision");
  events_.push_back(std::move(e));
}

void Transcript::place(std::string location, std::vector<std::string> faces,
                       std::string note) {
  append({Event::Kind::Place, std::move(location), std::move(faces),
          std::move(note)});
}

void Transcript::shuffle(std::string location, std::string note) {
  append({Event::Kind::Shuffle, std::move(location), {}, std::move(note)});
}

void Transcript::reveal(std::string location, std::vector<std::string> faces) {
  append({Event::Kind::Reveal, std::move(location), std::move(faces), {}});
}

void Transcript::decide(bool accept, std::string failing_location) {
  append({Event::Kind::Decision, failing_location, {},
          accept ? "accept" : "reject"});
  decided_ = true;
  accepted_ = accept;
  failing_location_ = std::move(failing_location);
}

void Transcript::seal(std::string location, std::vector<int> p,
                      std::vector<int> q) {
  if (!record_hidden_) return;
  sealed_.push_back({std::move(location), std::move(p), std::move(q)});
}

nlohmann::ordered_json Transcript::to_json(bool include_sealed) const {
  nlohmann::ordered_json events = nlohmann::ordered_json::array();
  for (const Event& e : events_) {
    nlohmann::ordered_json obj;
    obj["type"] = event_kind_name(e.kind);
    if (!e.location.empty()) obj["location"] = e.location;
    if (!e.faces.empty()) obj["faces"] = e.faces;
    if (!e.note.empty()) obj["note"] = e.note;
    events.push_back(std::move(obj));
  }
  nlohmann::ordered_json out;
  out["events"] = std::move(events);
  if (include_sealed && record_hidden_) {
    nlohmann::ordered_json sealed = nlohmann::ordered_json::array();
    for (const SealedShuffle& s : sealed_) {
      nlohmann::ordered_json obj;
      obj["location"] = s.location;
      obj["p"] = s.p;
      obj["q"] = s.q;
      sealed.push_back(std::move(obj));
    }
    out["sealed"] = std::move(sealed);
  }
  return out;
}

std::string Transcript::to_text(bool include_sealed) const {
  return to_json(include_sealed).dump(2) + "\n";
}

}  // namespace cardzk
