#include "doctest.h"
#include "moy/genseries.hpp"
#include "moy/homfly.hpp"
#include "moy/io.hpp"

using namespace moy;

TEST_CASE("polynomials survive a JSON round trip") {
  const QLaurent p = qbinom(7, 3) - QLaurent::monomial(-5, Integer("123456789012345678901234567890"));
  CHECK(qlaurent_from_json(Json::parse(to_json(p).dump())) == p);
  const QALaurent a = QALaurent::monomial(3, -2, 5) + QALaurent::monomial(0, 4, -1);
  CHECK(qalaurent_from_json(to_json(a)) == a);
}

TEST_CASE("tables survive a JSON round trip") {
  const PlanarDiagram d = builtin("tetrahedron");
  const EvalTable t = generating_series_n(d, 3);
  CHECK(qlaurent_table_from_json(Json::parse(table_to_json(t).dump())) == t);

  const DiagramAlgebras alg(builtin("theta"));
  const HomflySeries f = homfly_series(alg, 2, 8);
  CHECK(rseries_table_from_json(table_to_json(f.table)) == f.table);
}

TEST_CASE("tables are listed by total flow") {
  const EvalTable t = eval_table(builtin("theta"), 2);
  const auto order = display_order(t);
  for (std::size_t i = 1; i < order.size(); ++i) CHECK(order[i - 1].total() <= order[i].total());
  CHECK(order.front().is_zero());
}

TEST_CASE("cycle report") {
  const Json j = cycles_to_json(all_cycles(builtin("theta")));
  CHECK(j["cycles"].size() == 3);
  CHECK(j["cycles"][1]["rot"] == 1);
  CHECK(j["pairing_halves"][1][2] == -j["pairing_halves"][2][1].get<int>());
}
