#include <doctest.h>

#include "gwis/error.hpp"
#include "gwis/format.hpp"
#include "gwis/term.hpp"
#include "support/generators.hpp"

using namespace gwis;

namespace {

Term T(const char* s) { return parse_term(s); }

bool has(const std::vector<std::string>& v, const std::string& needle) {
  for (const auto& s : v)
    if (s.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("validate accepts a self-contracted pair inside one bracket") {
  CHECK(validate(T("<x mu mu>")).empty());
}

TEST_CASE("validate reports each free dummy") {
  auto v = validate(T("<x mu nu>"));
  REQUIRE(v.size() == 2);
  CHECK(has(v, "free dummy mu"));
  CHECK(has(v, "free dummy nu"));
}

TEST_CASE("validate reports an overpaired dummy") {
  auto v = validate(T("<x mu><mu mu nu><nu>_1"));
  REQUIRE(v.size() == 1);
  CHECK(has(v, "dummy mu occurs 3 times"));
}

TEST_CASE("validate reports repeated x, i, j and empty terms") {
  CHECK(has(validate(T("<x x>")), "label x occurs 2 times"));
  CHECK(has(validate(T("<i a><a i>")), "label i occurs 2 times"));
  CHECK(has(validate(Term{}), "no correlators"));
  Term empty_bracket{{Correlator{{}, 1}}};
  CHECK(has(validate(empty_bracket), "empty"));
}

TEST_CASE("canonicalize rejects invalid terms with the violation list") {
  try {
    canonicalize(T("<x mu>"));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.violations().size() == 1);
  }
}

TEST_CASE("canonicalize identifies dummy renaming plus reordering") {
  Term a = T("<x a b><j a b><i^1>_2");
  Term b = T("<j mu nu><x nu mu><i^1>_2");
  CHECK(canonicalize(a) == canonicalize(b));
  CHECK(print_term(canonicalize(a), Format::plain) == "<x d1 d2><j d1 d2><i^1>_2");
}

TEST_CASE("canonical dummy names follow the d1 < d2 < ... order") {
  Term c = canonicalize(T("<x mu nu><mu^1 nu>_2"));
  CHECK(print_term(c, Format::plain) == "<x d1 d2><d1^1 d2>_2");
  CHECK(is_canonical(c));
  CHECK_FALSE(is_canonical(T("<x mu nu><mu^1 nu>_2")));
}

TEST_CASE("equal distinguishes where the genus sits") {
  CHECK_FALSE(equal(T("<x mu nu nu><mu a a>_1"), T("<x mu nu nu>_1<mu a a>")));
}

TEST_CASE("equal distinguishes psi-powers") { CHECK_FALSE(equal(T("<x^3>_3"), T("<x>_3"))); }

TEST_CASE("equal is invariant under swapping two dummy names") {
  CHECK(equal(T("<x mu nu><mu a a>_1<nu>_1"), T("<x nu mu><nu a a>_1<mu>_1")));
}

TEST_CASE("swap_ij relabels half-edges") {
  Term t = T("<x i mu><j b b><mu^1>_2");
  CHECK(swap_ij(t) == canonicalize(T("<x j a><i b b><a^1>_2")));
  CHECK(swap_ij(swap_ij(t)) == canonicalize(t));
  Term plain = T("<x mu mu>");
  CHECK(swap_ij(plain) == canonicalize(plain));
}

TEST_CASE("canonicalize caps the exhaustive search") {
  Term big = T("<x a a b b c c d d e e f f g g h h k k>");
  CHECK_THROWS_AS(canonicalize(big), Error);
  Term ok = T("<x a a b b c c d d><e e f f g g h h>");
  CHECK(is_canonical(canonicalize(ok)));
}

TEST_CASE("canonical form agrees with a brute-force isomorphism oracle") {
  std::mt19937_64 rng(7);
  int isomorphic_pairs = 0;
  for (int n = 0; n < 3000; ++n) {
    Term a = testing::random_term(rng);
    Term b = testing::shuffle_term(testing::rename_dummies(a, rng), rng);
    if (n % 3 == 1) {
      // Near miss: bump one psi-power or one genus of the disguised copy.
      auto& c = b.correlators[static_cast<std::size_t>(rng() % b.correlators.size())];
      if (rng() % 2)
        ++c.genus;
      else
        ++c.insertions[static_cast<std::size_t>(rng() % c.insertions.size())].psi;
    } else if (n % 3 == 2) {
      b = testing::random_term(rng);
    }
    bool oracle = testing::isomorphic(a, b);
    isomorphic_pairs += oracle;
    REQUIRE(equal(a, b) == oracle);
  }
  CHECK(isomorphic_pairs >= 1000);
}
