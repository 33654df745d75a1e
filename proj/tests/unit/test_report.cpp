#include <doctest.h>

#include "sg/bounds.hpp"
#include "sg/graphs.hpp"
#include "sg/report.hpp"
#include "sg/schemes.hpp"

using namespace sg;

TEST_SUITE("report") {

TEST_CASE("numbers are rounded to 12 significant digits") {
  CHECK(format_number(1.2) == "1.2");
  CHECK(format_number(4.0 / 3.0) == "1.33333333333");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(49.5) == "49.5");
  CHECK(round_sig(1.0 + 1e-15) == 1.0);
  CHECK(round_sig(-1e-300 * 1e-300) == 0.0);
  CHECK_FALSE(std::signbit(round_sig(-0.0)));
  const nlohmann::json j = round_sig(6.0 / 5.0 * (1 + 1e-14));
  CHECK(j.dump() == "1.2");
}

TEST_CASE("CSV quoting") {
  CHECK(csv_line({"a", "b"}) == "a,b");
  CHECK(csv_line({"x,y", "say \"hi\"", ""}) == "\"x,y\",\"say \"\"hi\"\"\",");
}

TEST_CASE("batch rows follow the header") {
  const Graph g = petersen_graph();
  const Graph g2 = distance_graphs(g)[1];
  const auto r = compute_bounds(g, &g2, "petersen", "dist2");
  const auto row = batch_csv_row(3, r, "ok");
  REQUIRE(row.size() == batch_csv_header().size());
  CHECK(csv_line(row) == "3,petersen,10,15,30,ok,12.5,1.2,15,60,0.75,closed-form,45,0,equality");
  CHECK(csv_line(batch_csv_header()) ==
        "index,graph,n,edges1,edges2,status,eta,eta_dual,eta_product,gamma,gamma_dual,"
        "gamma_dual_method,gamma_product,gap,classification");
}

TEST_CASE("JSON documents") {
  const auto s = scheme_from_drg(paley_graph(9)).scheme;
  const auto j = scheme_json(s);
  CHECK(j["P"].dump() == "[[1.0,4.0,4.0],[1.0,1.0,-2.0],[1.0,-2.0,1.0]]");
  CHECK(j["orthogonality_ok"] == true);
  const auto b = bounds_json(compute_bounds(petersen_graph(), nullptr, "petersen"));
  CHECK(b["eta"].dump() == "12.5");
  CHECK(b["eta_dual"].dump() == "1.2");
  CHECK(b["available"] == true);
  CHECK(tolerances_json().contains("certificate"));
}

}
