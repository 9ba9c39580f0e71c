#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cardzk/errors.hpp"

namespace cardzk {

enum class Suit : uint8_t { Club, Heart, Mark };
enum class Orientation : uint8_t { FaceUp, FaceDown };

struct CardFace {
  Suit kind = Suit::Club;
  int mark_value = 0;  // >= 1 iff kind == Mark

  bool operator==(const CardFace&) const = default;
};

// Human-readable face label used in transcripts: "club", "heart", or the
// marking value as a decimal string.
std::string face_label(const CardFace& face);

// Hands out identifiers that stay unique within one table setup.
class UidSource {
 public:
  uint32_t next() { return ++last_; }
  uint32_t issued() const { return last_; }

 private:
  uint32_t last_ = 0;
};

// A physical card. The uid never changes across flips, moves, or shuffles.
// All cards share an identical back: while face-down, the face is reachable
// only through face_sealed(), which protocol code must never call — it exists
// for test oracles and the hidden half of the shuffle machinery.
class Card {
 public:
  Card(CardFace face, uint32_t uid)
      : face_(face), uid_(uid), orientation_(Orientation::FaceDown) {}

  const CardFace& face() const {
    if (orientation_ == Orientation::FaceDown)
      throw VisibilityError("card is face-down");
    return face_;
  }

  const CardFace& face_sealed() const { return face_; }

  Orientation orientation() const { return orientation_; }
  bool face_down() const { return orientation_ == Orientation::FaceDown; }
  void flip_up() { orientation_ = Orientation::FaceUp; }
  void flip_down() { orientation_ = Orientation::FaceDown; }

  uint32_t uid() const { return uid_; }

 private:
  CardFace face_;
  uint32_t uid_;
  Orientation orientation_;
};

using Sequence = std::vector<Card>;

Card make_club(UidSource& uids);
Card make_heart(UidSource& uids);
Card make_mark(int value, UidSource& uids);

// E_y(x): y face-down encoding cards, all clubs except a heart at the x-th
// position from the left (1-indexed).
Sequence encode(int x, int y, UidSource& uids);

// Inverse of encode over face-up cards: the 1-indexed heart position.
// Throws VisibilityError on any face-down card and MalformedSequenceError
// unless there is exactly one heart.
int decode(const Sequence& seq);

// decode without the visibility check. Test oracles only.
int decode_sealed(const Sequence& seq);

}  // namespace cardzk
