#include <doctest.h>

#include "trimult/serialize.hpp"

using namespace trimult;
using nlohmann::json;

TEST_CASE("solutions round trip through JSON") {
  const auto spec = make_spec(Multiplier(7));
  for (const Solution& s : sequence(spec, 30)) {
    const json j = to_json(s);
    CHECK(j.at("t").is_string());
    CHECK(solution_from_json(json::parse(j.dump())) == s);
  }
  const Solution big = sequence(spec, 60).back();
  CHECK(json::parse(to_json(big).dump()).at("T_xi").get<std::string>() == big.T_xi.str());
}

TEST_CASE("residue sets round trip through JSON") {
  const ResidueSet rs = observed_residues(make_spec(Multiplier(105)));
  const json j = to_json(rs);
  CHECK(j.at("upsilon") == rs.upsilon());
  CHECK(j.at("pairs").size() == rs.mu.size() / 2);
  const ResidueSet back = residue_set_from_json(json::parse(j.dump()));
  CHECK(back.k.value() == 105);
  CHECK(back.mu == rs.mu);
}

TEST_CASE("spec carries the derived constants") {
  const json j = to_json(make_spec(Multiplier(7)));
  CHECK(j.at("r") == 2);
  CHECK(j.at("kappa") == "7");
  CHECK(j.at("two_kappa_plus_3") == "17");
  CHECK(j.at("gamma") == "10");
  CHECK(j.at("seeds").size() == 4);
}

TEST_CASE("classification report fields") {
  const json j = to_json(classify(observed_residues(make_spec(Multiplier(60)))));
  CHECK(j.at("verdict") == "exact");
  CHECK(j.at("predicted") == json({0, 15, 44, 59}));
  CHECK(j.at("superseded").size() == 2);
  CHECK(j.at("superseded")[0].at("source") == "published");
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_row({"1", "E21,E54", ""}) == "1,\"E21,E54\",\n");
  CHECK(join({0, 4, 9}) == "0 4 9");
  CHECK(join({}, ",").empty());
}
