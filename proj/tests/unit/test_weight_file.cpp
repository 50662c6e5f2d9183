#include <string>

#include "doctest.h"

#include "bngap/weight_file.hpp"
#include "bngap/witness.hpp"

using namespace bngap;

TEST_CASE("minimal parse") {
  const auto wf = parse_weight_file("n 2\nT 1 2 1.0\n");
  CHECK(wf.n == 2);
  REQUIRE(wf.transpositions.size() == 1);
  CHECK(wf.transpositions.at({1, 2}) == 1.0);
  CHECK(wf.diagonals.empty());
}

TEST_CASE("comments, blanks, ordering, accumulation") {
  const std::string text =
      "# weights for a small chain\n"
      "\n"
      "n 3\n"
      "D 110 0.25   # flip of {1,2}\n"
      "T 1 2 0.5\n"
      "T 1 2 0.25\n"
      "D 110 0.25\n"
      "  T 2 3 1 \n";
  const auto wf = parse_weight_file(text);
  CHECK(wf.n == 3);
  CHECK(wf.transpositions.at({1, 2}) == 0.75);
  CHECK(wf.transpositions.at({2, 3}) == 1.0);
  CHECK(wf.diagonals.at(0b011u) == 0.5);
}

TEST_CASE("formatting is canonical and bit exact") {
  WeightFile wf;
  wf.n = 4;
  wf.transpositions[{1, 3}] = 1.0 / 3.0;
  wf.transpositions[{1, 2}] = 0.1;
  wf.diagonals[0b1010u] = 1e-17;
  wf.diagonals[0b0001u] = 12345.678901234567;

  const auto text = format_weight_file(wf, {"round trip case"});
  CHECK(text.find("# round trip case\n") == 0);
  // T lines in index order, D lines in mask order, after the header
  const auto n_pos = text.find("\nn 4\n");
  const auto t12 = text.find("T 1 2 ");
  const auto t13 = text.find("T 1 3 ");
  const auto d1 = text.find("D 1000 ");
  const auto d2 = text.find("D 0101 ");
  REQUIRE(n_pos != std::string::npos);
  REQUIRE(t12 != std::string::npos);
  REQUIRE(t13 != std::string::npos);
  REQUIRE(d1 != std::string::npos);
  REQUIRE(d2 != std::string::npos);
  CHECK(n_pos < t12);
  CHECK(t12 < t13);
  CHECK(t13 < d1);
  CHECK(d1 < d2);

  const auto back = parse_weight_file(text);
  CHECK(back.n == wf.n);
  CHECK(back.transpositions == wf.transpositions);
  CHECK(back.diagonals == wf.diagonals);  // exact doubles via 17 digits
}

TEST_CASE("witness weights round trip through the file format") {
  const auto wit = witness_vnk(3, 2);
  const auto wf = to_weight_file(wit);
  CHECK(wf.n == 3);
  CHECK(wf.transpositions.size() == 3);
  CHECK(wf.diagonals.size() == 2);
  CHECK(wf.diagonals.count(0b100u) == 1);
  CHECK(wf.diagonals.count(0b111u) == 1);

  const auto reparsed = parse_weight_file(format_weight_file(wf));
  CHECK(reparsed.transpositions == wf.transpositions);
  CHECK(reparsed.diagonals == wf.diagonals);

  // the parsed element matches the one built without the file detour
  const auto direct = wit.weight_element();
  const auto via_file = to_element(reparsed);
  CHECK(direct.term_count() == via_file.term_count());
  for (const auto& [g, w] : direct.terms()) CHECK(via_file.weight(g) == w);
  CHECK(via_file.symmetric_checked());
}

TEST_CASE("parse errors carry their line number") {
  CHECK_THROWS_WITH(parse_weight_file(""), "missing n header");
  CHECK_THROWS_WITH(parse_weight_file("# only a comment\n"),
                    "missing n header");
  CHECK_THROWS_WITH(parse_weight_file("n 2\nn 3\n"),
                    "duplicate n header at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n\n"), "malformed n header at line 1");
  CHECK_THROWS_WITH(parse_weight_file("n 2 3\n"),
                    "malformed n header at line 1");
  CHECK_THROWS_WITH(parse_weight_file("n x\n"),
                    "malformed integer at line 1");
  CHECK_THROWS_WITH(parse_weight_file("n 0\n"), "n out of range at line 1");
  CHECK_THROWS_WITH(parse_weight_file("n 21\n"), "n out of range at line 1");
  CHECK_THROWS_WITH(parse_weight_file("T 1 2 1\nn 2\n"),
                    "weight line before n header at line 1");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 1 2\n"),
                    "malformed transposition line at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 1 2 3 4\n"),
                    "malformed transposition line at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 0 2 1\n"),
                    "transposition index out of range at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 2 2 1\n"),
                    "transposition index out of range at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 3 1 1\n"),
                    "transposition index out of range at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 1 4 1\n"),
                    "transposition index out of range at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 1.5 2 1\n"),
                    "malformed integer at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nD 10 1\n"),
                    "bitstring length mismatch at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nD 1a1 1\n"),
                    "malformed bitstring at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nD 101\n"),
                    "malformed diagonal line at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 1 2 abc\n"),
                    "malformed weight at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 1 2 inf\n"),
                    "malformed weight at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nT 1 2 -1\n"),
                    "negative weight at line 2");
  CHECK_THROWS_WITH(parse_weight_file("n 3\nX 1\n"),
                    "unknown directive at line 2");
}
