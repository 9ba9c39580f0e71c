#include "cardzk/deck.hpp"

namespace cardzk {

std::string face_label(const CardFace& face) {
  switch (face.kind) {
    case Suit::Club:
      return "club";
    case Suit::Heart:
      return "heart";
    case Suit::Mark:
      return std::to_string(face.mark_value);
  }
  return "?";
}

Card make_club(UidSource& uids) {
  return Card({Suit::Club, 0}, uids.next());
}

Card make_heart(UidSource& uids) {
  return Card({Suit::Heart, 0}, uids.next());
}

Card make_mark(int value, UidSource& uids) {
  if (value < 1) throw RangeError("marking value must be >= 1");
  return Card({Suit::Mark, value}, uids.next());
}

Sequence encode(int x, int y, UidSource& uids) {
  if (y < 1) throw RangeError("encoding width must be >= 1");
  if (x < 1 || x > y)
    throw RangeError("cannot encode " + std::to_string(x) + " with width " +
                     std::to_string(y));
  Sequence seq;
  seq.reserve(static_cast<size_t>(y));
  for (int pos = 1; pos <= y; ++pos)
    seq.push_back(pos == x ? make_heart(uids) : make_club(uids));
  return seq;
}

namespace {

int heart_position(const Sequence& seq, bool sealed) {
  int found = 0;
  int hearts = 0;
  for (size_t i = 0; i < seq.size(); ++i) {
    const CardFace& f = sealed ? seq[i].face_sealed() : seq[i].face();
    if (f.kind == Suit::Mark)
      throw MalformedSequenceError("marking card inside an encoding sequence");
    if (f.kind == Suit::Heart) {
      ++hearts;
      found = static_cast<int>(i) + 1;
    }
  }
  if (hearts != 1)
    throw MalformedSequenceError("expected exactly one heart, found " +
                                 std::to_string(hearts));
  return found;
}

}  // namespace

int decode(const Sequence& seq) {
  return heart_position(seq, false);
}

int decode_sealed(const Sequence& seq) {
  return heart_position(seq, true);
}

}  // namespace cardzk
