#include <doctest.h>

#include <set>

#include "cardzk/deck.hpp"

using namespace cardzk;

namespace {

std::vector<Suit> suits(const Sequence& seq) {
  std::vector<Suit> out;
  for (const Card& c : seq) out.push_back(c.face_sealed().kind);
  return out;
}

}  // namespace

TEST_CASE("encode produces the documented sequences") {
  UidSource uids;
  CHECK(suits(encode(1, 3, uids)) ==
        std::vector<Suit>{Suit::Heart, Suit::Club, Suit::Club});
  CHECK(suits(encode(3, 4, uids)) ==
        std::vector<Suit>{Suit::Club, Suit::Club, Suit::Heart, Suit::Club});
  CHECK(suits(encode(1, 1, uids)) == std::vector<Suit>{Suit::Heart});
}

TEST_CASE("encode deals face-down cards with fresh uids") {
  UidSource uids;
  Sequence seq = encode(2, 5, uids);
  std::set<uint32_t> seen;
  for (const Card& c : seq) {
    CHECK(c.face_down());
    CHECK(seen.insert(c.uid()).second);
  }
  CHECK(uids.issued() == 5);
}

TEST_CASE("encode rejects out-of-range values") {
  UidSource uids;
  CHECK_THROWS_AS(encode(0, 3, uids), RangeError);
  CHECK_THROWS_AS(encode(4, 3, uids), RangeError);
  CHECK_THROWS_AS(encode(1, 0, uids), RangeError);
}

TEST_CASE("decode inverts encode for every width up to 64") {
  UidSource uids;
  for (int y = 1; y <= 64; ++y) {
    for (int x = 1; x <= y; ++x) {
      Sequence seq = encode(x, y, uids);
      CHECK(decode_sealed(seq) == x);
      for (Card& c : seq) c.flip_up();
      CHECK(decode(seq) == x);
    }
  }
}

TEST_CASE("decode rejects malformed and hidden sequences") {
  UidSource uids;
  Sequence no_heart{make_club(uids), make_club(uids)};
  for (Card& c : no_heart) c.flip_up();
  CHECK_THROWS_AS(decode(no_heart), MalformedSequenceError);

  Sequence two_hearts{make_heart(uids), make_heart(uids)};
  for (Card& c : two_hearts) c.flip_up();
  CHECK_THROWS_AS(decode(two_hearts), MalformedSequenceError);

  Sequence hidden = encode(1, 2, uids);
  CHECK_THROWS_AS(decode(hidden), VisibilityError);
  CHECK(decode_sealed(hidden) == 1);
}

TEST_CASE("face access respects orientation") {
  UidSource uids;
  Card card = make_heart(uids);
  CHECK_THROWS_AS(card.face(), VisibilityError);
  CHECK(card.face_sealed().kind == Suit::Heart);
  card.flip_up();
  CHECK(card.face().kind == Suit::Heart);
  card.flip_down();
  CHECK_THROWS_AS(card.face(), VisibilityError);
}

TEST_CASE("face labels") {
  UidSource uids;
  CHECK(face_label(make_club(uids).face_sealed()) == "club");
  CHECK(face_label(make_heart(uids).face_sealed()) == "heart");
  CHECK(face_label(make_mark(7, uids).face_sealed()) == "7");
  CHECK_THROWS_AS(make_mark(0, uids), RangeError);
}
